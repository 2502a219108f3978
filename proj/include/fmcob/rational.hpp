#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fmcob {

/// Exact rational scalar. All engine arithmetic is exact; there is no
/// floating point anywhere in the library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonical textual form: "n" for integers, "n/d" otherwise, '-' on the numerator.
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parse "n" or "n/d" (optional leading '-'). Throws std::invalid_argument.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(mpz_class(text, 10), 1);
            r.canonicalize();
            return r;
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("malformed rational");
        Rat r(mpz_class(num, 10), mpz_class(den, 10));
        if (sgn(r.get_den()) == 0)
            throw std::invalid_argument("rational with zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
}

}  // namespace fmcob
