#pragma once

#include <string>
#include <vector>

namespace fmcob {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckLine {
    CheckStatus status;
    std::string identity;  // e.g. "transform.involution"
    std::string model;     // model name or "-"
    std::string witness;   // offending element / extra info, "-" if none
};

/// Ordered list of identity-check outcomes. Rendering is byte-deterministic:
/// line order is insertion order and every field is canonical text.
struct Report {
    std::vector<CheckLine> lines;

    void add(CheckStatus st, std::string identity, std::string model,
             std::string witness = "-");
    void pass(std::string identity, std::string model, std::string witness = "-");
    void fail(std::string identity, std::string model, std::string witness = "-");
    void check(bool ok, const std::string& identity, const std::string& model,
               const std::string& witness = "-");
    void append(const Report& other);

    bool all_pass() const;  // no Fail lines (Skip does not fail)
    int fail_count() const;

    std::string text() const;  // "PASS <identity> <model> <witness>" per line
    std::string tsv() const;   // status\tidentity\tmodel\twitness per line
};

}  // namespace fmcob
