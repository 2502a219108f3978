#include "fmcob/model_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fmcob {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

/// Splits a linear-combination string into signed (rational, name) terms;
/// name "" marks a bare scalar term.
struct LincombScanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_rational_token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }

    std::string read_name_token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        return s.substr(start, pos - start);
    }
};

struct LincombTerm {
    Rat coeff;
    std::string name;  // empty for a bare scalar
};

std::vector<LincombTerm> parse_lincomb_terms(const std::string& text) {
    LincombScanner sc{text};
    std::vector<LincombTerm> out;
    bool first = true;
    while (!sc.done()) {
        Rat sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++sc.pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' before '" +
                                        text.substr(sc.pos) + "'");
        }
        first = false;
        c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string tok = sc.read_rational_token();
            Rat q = Rat(sign * parse_rational(tok));
            if (sc.peek() == '*') {
                ++sc.pos;
                const std::string nm = sc.read_name_token();
                if (nm.empty())
                    throw std::invalid_argument("expected a class name after '" + tok +
                                                "*'");
                out.push_back({q, nm});
            } else {
                out.push_back({q, ""});
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            out.push_back({sign, sc.read_name_token()});
        } else {
            throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                        "' in linear combination");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty linear combination");
    return out;
}

enum class Section { Header, Basis, Mult, Fourier, Degree, Star, Diagonal };

struct Loader {
    std::string where;
    int lineno = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(where + ":" + std::to_string(lineno) + ": " + msg);
    }

    std::string name;
    std::optional<int> g;
    std::optional<bool> selfdual;
    std::vector<BasisElement> basis;
    std::map<std::string, int> index;
    std::map<std::pair<int, int>, ModelElement> products;
    std::map<std::pair<int, int>, ModelElement> star;
    std::map<std::pair<int, int>, Rat> diagonal;
    std::map<int, ModelElement> fourier;
    std::map<int, Rat> degree;
    bool saw_fourier = false, saw_star = false, saw_diagonal = false;

    int resolve(const std::string& nm) const {
        auto it = index.find(nm);
        if (it == index.end()) fail("unknown basis class '" + nm + "'");
        return it->second;
    }

    ModelElement element(const std::vector<LincombTerm>& terms) const {
        ModelElement out;
        for (const auto& t : terms) {
            if (t.name.empty()) {
                if (sgn(t.coeff) != 0)
                    fail("a bare scalar in a linear combination must be 0");
                continue;
            }
            out.add_coord(resolve(t.name), t.coeff);
        }
        return out;
    }

    /// "a * b" -> index pair; flip points at the Koszul normalization.
    std::pair<std::pair<int, int>, bool> pair_lhs(const std::string& lhs) const {
        std::istringstream in(lhs);
        std::string a, star_tok, b, extra;
        in >> a >> star_tok >> b;
        if (star_tok != "*" || a.empty() || b.empty() || (in >> extra))
            fail("expected 'name * name' on the left-hand side");
        int i = resolve(a), j = resolve(b);
        if (i <= j) return {{i, j}, false};
        return {{j, i}, true};
    }

    int parity(int i) const { return ((basis[i].s % 2) + 2) % 2; }

    void handle(Section sec, const std::string& line) {
        const std::size_t eq = line.find('=');
        switch (sec) {
            case Section::Header: {
                if (eq == std::string::npos) fail("expected 'key = value'");
                const std::string key = trim(line.substr(0, eq));
                const std::string val = trim(line.substr(eq + 1));
                if (key == "name") {
                    name = val;
                } else if (key == "g") {
                    if (g) fail("duplicate 'g'");
                    try {
                        g = std::stoi(val);
                    } catch (const std::exception&) {
                        fail("bad integer '" + val + "'");
                    }
                } else if (key == "selfdual") {
                    if (selfdual) fail("duplicate 'selfdual'");
                    if (val == "true")
                        selfdual = true;
                    else if (val == "false")
                        selfdual = false;
                    else
                        fail("selfdual must be 'true' or 'false'");
                } else {
                    fail("unknown header key '" + key + "'");
                }
                break;
            }
            case Section::Basis: {
                std::istringstream in(line);
                std::string nm;
                int p = 0, s = 0;
                if (!(in >> nm >> p >> s)) fail("expected 'name p s'");
                std::string extra;
                if (in >> extra) fail("trailing tokens after 'name p s'");
                if (!is_identifier(nm)) fail("bad class name '" + nm + "'");
                if (index.count(nm)) fail("duplicate basis class '" + nm + "'");
                index[nm] = static_cast<int>(basis.size());
                basis.push_back({nm, p, s});
                break;
            }
            case Section::Mult:
            case Section::Star: {
                if (eq == std::string::npos) fail("expected 'a * b = ...'");
                auto [key, flipped] = pair_lhs(trim(line.substr(0, eq)));
                ModelElement v;
                try {
                    v = element(parse_lincomb_terms(trim(line.substr(eq + 1))));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (flipped && parity(key.first) && parity(key.second)) v = -v;
                auto& table = sec == Section::Mult ? products : star;
                if (!table.emplace(key, v).second)
                    fail("duplicate product for this pair of classes");
                break;
            }
            case Section::Fourier: {
                if (eq == std::string::npos) fail("expected 'F(a) = ...'");
                std::string lhs = trim(line.substr(0, eq));
                if (lhs.size() < 4 || lhs.substr(0, 2) != "F(" || lhs.back() != ')')
                    fail("expected 'F(a) = ...'");
                const int i = resolve(trim(lhs.substr(2, lhs.size() - 3)));
                ModelElement v;
                try {
                    v = element(parse_lincomb_terms(trim(line.substr(eq + 1))));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (!fourier.emplace(i, v).second)
                    fail("duplicate transform line for '" + basis[i].name + "'");
                break;
            }
            case Section::Degree: {
                if (eq == std::string::npos) fail("expected 'deg(a) = rational'");
                std::string lhs = trim(line.substr(0, eq));
                if (lhs.size() < 6 || lhs.substr(0, 4) != "deg(" || lhs.back() != ')')
                    fail("expected 'deg(a) = rational'");
                const int i = resolve(trim(lhs.substr(4, lhs.size() - 5)));
                Rat q;
                try {
                    q = parse_rational(trim(line.substr(eq + 1)));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (!degree.emplace(i, q).second)
                    fail("duplicate degree line for '" + basis[i].name + "'");
                break;
            }
            case Section::Diagonal: {
                if (eq == std::string::npos) fail("expected 'a * b = rational'");
                auto [key, flipped] = pair_lhs(trim(line.substr(0, eq)));
                Rat q;
                try {
                    q = parse_rational(trim(line.substr(eq + 1)));
                } catch (const std::invalid_argument& e) {
                    fail(e.what());
                }
                if (flipped && parity(key.first) && parity(key.second)) q = -q;
                if (!diagonal.emplace(key, q).second)
                    fail("duplicate diagonal coefficient for this pair");
                break;
            }
        }
    }
};

}  // namespace

ModelPtr load_model_stream(std::istream& in, const std::string& display_name, bool force) {
    Loader ld;
    ld.where = display_name;
    Section sec = Section::Header;
    std::string raw;
    while (std::getline(in, raw)) {
        ++ld.lineno;
        const std::size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[basis]")
                sec = Section::Basis;
            else if (line == "[mult]")
                sec = Section::Mult;
            else if (line == "[fourier]")
                sec = (ld.saw_fourier = true, Section::Fourier);
            else if (line == "[degree]")
                sec = Section::Degree;
            else if (line == "[star]")
                sec = (ld.saw_star = true, Section::Star);
            else if (line == "[diagonal]")
                sec = (ld.saw_diagonal = true, Section::Diagonal);
            else
                ld.fail("unknown section " + line);
            continue;
        }
        ld.handle(sec, line);
    }

    ld.lineno = 0;  // end-of-file diagnostics
    if (!ld.g) ld.fail("missing 'g = <int>' header");
    if (ld.basis.empty()) ld.fail("missing [basis] section");
    if (ld.saw_fourier && static_cast<int>(ld.fourier.size()) != static_cast<int>(ld.basis.size())) {
        std::string missing;
        for (std::size_t i = 0; i < ld.basis.size(); ++i)
            if (!ld.fourier.count(static_cast<int>(i)))
                missing += (missing.empty() ? "" : ", ") + ld.basis[i].name;
        ld.fail("[fourier] must cover every basis class; missing: " + missing);
    }

    BeauvilleAlgebra::Data d;
    d.name = ld.name.empty() ? display_name : ld.name;
    d.g = *ld.g;
    d.selfdual = ld.selfdual.value_or(false);
    d.basis = ld.basis;
    d.products = std::move(ld.products);
    if (ld.saw_fourier) {
        d.fourier.resize(ld.basis.size());
        for (const auto& [i, v] : ld.fourier) d.fourier[i] = v;
    }
    if (!ld.degree.empty()) {
        d.degree.assign(ld.basis.size(), Rat(0));
        for (const auto& [i, q] : ld.degree) d.degree[i] = q;
    }
    d.has_declared_star = ld.saw_star;
    d.declared_star = std::move(ld.star);
    d.has_declared_diagonal = ld.saw_diagonal;
    d.declared_diagonal = std::move(ld.diagonal);

    ModelPtr m;
    try {
        m = std::make_shared<const BeauvilleAlgebra>(std::move(d));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(display_name + ": " + e.what());
    }
    if (!force) {
        Report rep = m->validate();
        if (!rep.all_pass()) {
            std::string msg = display_name + ": model failed validation";
            for (const auto& ln : rep.lines)
                if (ln.status == CheckStatus::Fail)
                    msg += "\n  FAIL " + ln.identity +
                           (ln.witness.empty() || ln.witness == "-" ? "" : " [" + ln.witness + "]");
            throw std::runtime_error(msg);
        }
    }
    return m;
}

ModelPtr load_model(const std::string& path, bool force) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
    std::string stem = path;
    const std::size_t slash = stem.find_last_of("/\\");
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    const std::size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return load_model_stream(in, stem.empty() ? path : stem, force);
}

std::string model_to_text(const BeauvilleAlgebra& m) {
    std::ostringstream out;
    out << "name = " << m.name() << "\n";
    out << "g = " << m.g() << "\n";
    out << "selfdual = " << (m.selfdual() ? "true" : "false") << "\n";
    out << "\n[basis]\n";
    for (int i = 0; i < m.dim(); ++i) {
        const BasisElement& b = m.basis(i);
        out << b.name << " " << b.p << " " << b.s << "\n";
    }
    out << "\n[mult]\n";
    for (int i = 0; i < m.dim(); ++i) {
        if (i == m.unit_index()) continue;
        for (int j = i; j < m.dim(); ++j) {
            if (j == m.unit_index()) continue;
            const ModelElement& v = m.basis_product(i, j);
            if (v.is_zero()) continue;
            out << m.basis(i).name << " * " << m.basis(j).name << " = " << m.format(v)
                << "\n";
        }
    }
    if (m.has_fourier()) {
        out << "\n[fourier]\n";
        for (int i = 0; i < m.dim(); ++i)
            out << "F(" << m.basis(i).name << ") = " << m.format(m.basis_fourier(i))
                << "\n";
    }
    out << "\n[degree]\n";
    for (int i = 0; i < m.dim(); ++i)
        if (sgn(m.basis_degree(i)) != 0)
            out << "deg(" << m.basis(i).name << ") = " << to_string(m.basis_degree(i))
                << "\n";
    if (m.has_declared_star()) {
        out << "\n[star]\n";
        for (const auto& [key, v] : m.declared_star())
            if (!v.is_zero())
                out << m.basis(key.first).name << " * " << m.basis(key.second).name
                    << " = " << m.format(v) << "\n";
    }
    if (m.has_declared_diagonal()) {
        out << "\n[diagonal]\n";
        for (const auto& [key, q] : m.declared_diagonal())
            if (sgn(q) != 0)
                out << m.basis(key.first).name << " * " << m.basis(key.second).name
                    << " = " << to_string(q) << "\n";
    }
    return out.str();
}

void save_model(const BeauvilleAlgebra& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << model_to_text(m);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace fmcob
