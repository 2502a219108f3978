#include "fmcob/report.hpp"

#include <sstream>

namespace fmcob {

namespace {
const char* status_word(CheckStatus st) {
    switch (st) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "SKIP";
    }
}
}  // namespace

void Report::add(CheckStatus st, std::string identity, std::string model,
                 std::string witness) {
    if (witness.empty()) witness = "-";
    if (model.empty()) model = "-";
    lines.push_back({st, std::move(identity), std::move(model), std::move(witness)});
}

void Report::pass(std::string identity, std::string model, std::string witness) {
    add(CheckStatus::Pass, std::move(identity), std::move(model), std::move(witness));
}

void Report::fail(std::string identity, std::string model, std::string witness) {
    add(CheckStatus::Fail, std::move(identity), std::move(model), std::move(witness));
}

void Report::check(bool ok, const std::string& identity, const std::string& model,
                   const std::string& witness) {
    add(ok ? CheckStatus::Pass : CheckStatus::Fail, identity, model, witness);
}

void Report::append(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

bool Report::all_pass() const { return fail_count() == 0; }

int Report::fail_count() const {
    int n = 0;
    for (const auto& l : lines)
        if (l.status == CheckStatus::Fail) ++n;
    return n;
}

std::string Report::text() const {
    std::ostringstream out;
    for (const auto& l : lines) {
        out << status_word(l.status) << ' ' << l.identity << ' ' << l.model;
        if (l.witness != "-") out << ' ' << l.witness;
        out << '\n';
    }
    return out.str();
}

std::string Report::tsv() const {
    std::ostringstream out;
    for (const auto& l : lines)
        out << status_word(l.status) << '\t' << l.identity << '\t' << l.model << '\t'
            << l.witness << '\n';
    return out.str();
}

}  // namespace fmcob
