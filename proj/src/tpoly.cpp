#include <fmcob/tpoly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fmcob {

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::var(int i) {
    if (i < 1) throw std::invalid_argument("t-variable index must be >= 1");
    std::vector<unsigned> e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return Monomial(std::move(e));
}

namespace {
void collect_monomials(int var, int remaining, std::vector<unsigned>& exps,
                       std::vector<Monomial>& out) {
    if (var > remaining) {
        out.push_back(Monomial(exps));
        return;
    }
    for (int e = 0; e * var <= remaining; ++e) {
        exps[var - 1] = static_cast<unsigned>(e);
        collect_monomials(var + 1, remaining - e * var, exps, out);
    }
    exps[var - 1] = 0;
}
}  // namespace

std::vector<Monomial> Monomial::all_up_to_weight(int maxw) {
    if (maxw < 0) return {};
    std::vector<unsigned> exps(static_cast<std::size_t>(std::max(maxw, 1)), 0);
    std::vector<Monomial> out;
    collect_monomials(1, maxw, exps, out);
    std::sort(out.begin(), out.end());
    return out;
}

int Monomial::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        w += static_cast<int>(i + 1) * static_cast<int>(exps_[i]);
    return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<unsigned> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (std::size_t i = 0; i < o.exps_.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return exps_ < o.exps_;
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 't' << (i + 1);
        if (exps_[i] > 1) out << '^' << exps_[i];
    }
    return out.str();
}

TPoly::TPoly(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
}

TPoly TPoly::constant(const Rat& c, int order) {
    TPoly p(order);
    p.add_term(Monomial(), c);
    return p;
}

TPoly TPoly::var(int i, int order) {
    TPoly p(order);
    p.add_term(Monomial::var(i), 1);
    return p;
}

Rat TPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool TPoly::is_homogeneous(int weight) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != weight) return false;
    return true;
}

int TPoly::max_weight() const {
    int w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

int TPoly::min_weight() const {
    if (terms_.empty()) return 0;
    int w = order_;
    for (const auto& [m, c] : terms_) w = std::min(w, m.weight());
    return w;
}

TPoly& TPoly::add_term(const Monomial& m, const Rat& c) {
    if (fmcob::is_zero(c) || m.weight() > order_) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (fmcob::is_zero(it->second)) terms_.erase(it);
    }
    return *this;
}

void TPoly::check_order(const TPoly& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("mismatched truncation orders");
}

TPoly TPoly::operator+(const TPoly& o) const {
    check_order(o);
    TPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
    check_order(o);
    TPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r(order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
    check_order(o);
    TPoly r(order_);
    for (const auto& [m1, c1] : terms_) {
        int w1 = m1.weight();
        for (const auto& [m2, c2] : o.terms_) {
            if (w1 + m2.weight() > order_) continue;
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    return r;
}

TPoly TPoly::operator*(const Rat& c) const {
    TPoly r(order_);
    if (fmcob::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool TPoly::operator==(const TPoly& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
}

std::string TPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << '-';
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (m.trivial()) {
            out << fmcob::to_string(a);
        } else if (a == 1) {
            out << m.to_string();
        } else {
            out << fmcob::to_string(a) << '*' << m.to_string();
        }
    }
    return out.str();
}

namespace {

// Minimal tokenizer for TPoly text: terms separated by top-level +/-,
// factors separated by '*', each factor a rational literal or tN[^k].
struct TermScanner {
    const std::string& s;
    std::size_t pos = 0;

    explicit TermScanner(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

}  // namespace

TPoly TPoly::parse(const std::string& text, int order) {
    TPoly result(order);
    TermScanner sc(text);
    if (sc.done()) throw std::invalid_argument("empty t-polynomial literal");
    bool any = false;
    while (!sc.done()) {
        int sign = 1;
        sc.skip_ws();
        if (sc.s[sc.pos] == '+' || sc.s[sc.pos] == '-') {
            if (sc.s[sc.pos] == '-') sign = -1;
            ++sc.pos;
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' in t-polynomial at position " +
                                        std::to_string(sc.pos));
        }
        // one term: factors joined by '*'
        Rat coeff = sign;
        Monomial mono;
        bool term_done = false;
        while (!term_done) {
            sc.skip_ws();
            if (sc.pos >= sc.s.size())
                throw std::invalid_argument("truncated term in t-polynomial");
            char c = sc.s[sc.pos];
            if (c == 't' && sc.pos + 1 < sc.s.size() &&
                std::isdigit(static_cast<unsigned char>(sc.s[sc.pos + 1]))) {
                ++sc.pos;
                std::size_t start = sc.pos;
                while (sc.pos < sc.s.size() &&
                       std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
                    ++sc.pos;
                int idx = std::stoi(sc.s.substr(start, sc.pos - start));
                unsigned exp = 1;
                if (sc.pos < sc.s.size() && sc.s[sc.pos] == '^') {
                    ++sc.pos;
                    std::size_t es = sc.pos;
                    while (sc.pos < sc.s.size() &&
                           std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
                        ++sc.pos;
                    if (es == sc.pos)
                        throw std::invalid_argument("missing exponent in t-polynomial");
                    exp = static_cast<unsigned>(std::stoul(sc.s.substr(es, sc.pos - es)));
                }
                Monomial f = Monomial::var(idx);
                for (unsigned k = 0; k < exp; ++k) mono = mono * f;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = sc.pos;
                while (sc.pos < sc.s.size() &&
                       (std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])) ||
                        sc.s[sc.pos] == '/'))
                    ++sc.pos;
                coeff *= parse_rational(sc.s.substr(start, sc.pos - start));
            } else {
                throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                            "' in t-polynomial at position " +
                                            std::to_string(sc.pos));
            }
            sc.skip_ws();
            if (sc.pos < sc.s.size() && sc.s[sc.pos] == '*') {
                ++sc.pos;
            } else {
                term_done = true;
            }
        }
        result.add_term(mono, coeff);
        any = true;
    }
    return result;
}

}  // namespace fmcob
