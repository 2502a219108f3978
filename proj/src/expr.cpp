#include "fmcob/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace fmcob {

namespace {

struct Parser {
    const std::string& text;
    const ModelPtr& model;
    int order;
    std::size_t pos = 0;

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw std::invalid_argument("expression error at position " +
                                    std::to_string(at + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    unsigned long read_uint() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail(start, "expected a number");
        const std::string digits = text.substr(start, pos - start);
        try {
            return std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail(start, "number '" + digits + "' is too large");
        }
    }

    std::string read_name() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail(start, "expected a class name");
        ++pos;
        while (pos < text.size()) {
            const char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')
                ++pos;
            else
                break;
        }
        return text.substr(start, pos - start);
    }

    OmegaClass scalar(const Rat& q) const {
        return OmegaClass::from_element(model, order, model->unit().scaled(q));
    }

    OmegaClass parse_atom() {
        skip_ws();
        const std::size_t start = pos;
        const char c = peek();
        if (c == '(') {
            ++pos;
            OmegaClass inner = parse_expr();
            if (!eat(')')) fail(pos, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned long num = read_uint();
            Rat q(static_cast<unsigned long>(num));
            if (peek() == '/') {
                ++pos;
                const std::size_t dpos = pos;
                const unsigned long den = read_uint();
                if (den == 0) fail(dpos, "zero denominator");
                q /= Rat(static_cast<unsigned long>(den));
            }
            return scalar(q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name = read_name();
            const int idx = model->index_of(name);
            if (idx >= 0)
                return OmegaClass::from_element(model, order, model->e(idx));
            if (name.size() >= 2 && name[0] == 't' && name[1] != '0') {
                bool digits = true;
                for (std::size_t k = 1; k < name.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
                if (digits) {
                    int var;
                    try {
                        var = std::stoi(name.substr(1));
                    } catch (const std::out_of_range&) {
                        fail(start, "coefficient variable index too large");
                    }
                    return OmegaClass::from_element(model, order, model->unit(),
                                                    Monomial::var(var));
                }
            }
            fail(start, "unknown class name '" + name + "' on model '" +
                            model->name() + "'");
        }
        if (c == '\0') fail(start, "unexpected end of expression");
        fail(start, std::string("unexpected character '") + c + "'");
    }

    OmegaClass parse_factor() {
        OmegaClass base = parse_atom();
        if (eat('^')) {
            const std::size_t epos = pos;
            const unsigned long e = read_uint();
            if (e > 64) fail(epos, "exponent larger than 64");
            OmegaClass acc = OmegaClass::unit(model, order);
            for (unsigned long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    OmegaClass parse_term() {
        OmegaClass acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    OmegaClass parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        OmegaClass acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

OmegaClass parse_class_expr(const std::string& text, const ModelPtr& model, int order) {
    if (!model) throw std::invalid_argument("expression needs a model");
    Parser p{text, model, order};
    OmegaClass out = p.parse_expr();
    if (!p.at_end())
        p.fail(p.pos, std::string("unexpected character '") + p.text[p.pos] + "'");
    return out;
}

}  // namespace fmcob
