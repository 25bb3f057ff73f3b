#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "polyhom/field.hpp"
#include "polyhom/multipoly.hpp"
#include "polyhom/unipoly.hpp"

namespace polyhom {

// Text grammar for polynomials: integer or a/b coefficients, variables
// x1..xn (psi = x1 and phi = x2 when n = 2; t for univariate data),
// operators + - * ^.  Example: "3*psi^2*phi - phi^3".

namespace detail {

inline std::map<std::string, int> variable_table(int nvars) {
    std::map<std::string, int> t;
    for (int i = 0; i < nvars; ++i) t["x" + std::to_string(i + 1)] = i;
    if (nvars == 2) {
        t["psi"] = 0;
        t["phi"] = 1;
    }
    if (nvars == 1) t["t"] = 0;
    return t;
}

class PolyLexer {
public:
    PolyLexer(const std::string& s) : s_(s), i_(0) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eof() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    char get() {
        skip_ws();
        if (i_ >= s_.size()) fail("unexpected end of input");
        return s_[i_++];
    }
    std::string number() {
        skip_ws();
        std::string out;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) out += s_[i_++];
        if (out.empty()) fail("expected a number");
        return out;
    }
    std::string name() {
        skip_ws();
        std::string out;
        if (i_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i_])))
            fail("expected a variable name");
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) out += s_[i_++];
        return out;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i_) +
                                    ": " + msg);
    }

private:
    const std::string& s_;
    std::size_t i_;
};

}  // namespace detail

template <class F>
MultiPoly<F> parse_poly(const F& k, int nvars, const std::string& text) {
    const auto vars = detail::variable_table(nvars);
    detail::PolyLexer lex(text);
    MultiPoly<F> result = MultiPoly<F>::zero(nvars);
    if (lex.eof()) lex.fail("empty polynomial");

    bool first = true;
    while (!lex.eof()) {
        bool negative = false;
        char c = lex.peek();
        if (c == '+' || c == '-') {
            lex.get();
            negative = (c == '-');
        } else if (!first) {
            lex.fail("expected + or - between terms");
        }
        // one term: factors joined by '*'
        auto coeff = k.one();
        Monomial mono = Monomial::one(nvars);
        bool more = true;
        while (more) {
            char f = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                BigInt num(lex.number());
                BigInt den(1);
                if (lex.peek() == '/') {
                    lex.get();
                    den = BigInt(lex.number());
                    if (den == 0) lex.fail("zero denominator");
                }
                coeff = k.mul(coeff, k.from_fraction(num, den));
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                const std::string nm = lex.name();
                auto it = vars.find(nm);
                if (it == vars.end()) lex.fail("unknown variable \"" + nm + "\"");
                int exp = 1;
                if (lex.peek() == '^') {
                    lex.get();
                    exp = std::stoi(lex.number());
                }
                mono.e[static_cast<std::size_t>(it->second)] += exp;
            } else {
                lex.fail("expected a coefficient or variable");
            }
            if (lex.peek() == '*') {
                lex.get();
            } else {
                more = false;
            }
        }
        if (negative) coeff = k.neg(coeff);
        mp_add_term(k, result, mono, coeff);
        first = false;
    }
    return result;
}

template <class F>
UniPoly<F> parse_unipoly(const F& k, const std::string& text) {
    const auto mp = parse_poly(k, 1, text);
    UniPoly<F> out;
    for (const auto& [m, c] : mp.terms) {
        const std::size_t d = static_cast<std::size_t>(m.e[0]);
        if (out.c.size() < d + 1) out.c.resize(d + 1, k.zero());
        out.c[d] = c;
    }
    out.trim(k);
    return out;
}

namespace detail {

inline std::string var_name(int nvars, int i) {
    if (nvars == 2) return i == 0 ? "psi" : "phi";
    if (nvars == 1) return "t";
    return "x" + std::to_string(i + 1);
}

template <class F>
bool coeff_is_negative(const F&, const typename F::Elem&) {
    return false;  // prime-field residues are canonical
}
inline bool coeff_is_negative(const Rationals&, const BigRat& e) { return e < 0; }

}  // namespace detail

/// Canonical text form: terms in descending monomial order, explicit '*',
/// exponents omitted when 1.
template <class F>
std::string poly_to_string(const F& k, const MultiPoly<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        auto coeff = c;
        bool neg = detail::coeff_is_negative(k, coeff);
        if (neg) coeff = k.neg(coeff);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (int i = 0; i < m.nvars(); ++i) {
            const int e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += detail::var_name(m.nvars(), i);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += k.to_string(coeff);
        } else if (k.is_one(coeff)) {
            out += vars;
        } else {
            out += k.to_string(coeff) + "*" + vars;
        }
    }
    return out;
}

template <class F>
std::string unipoly_to_string(const F& k, const UniPoly<F>& p) {
    MultiPoly<F> mp = MultiPoly<F>::zero(1);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        mp_add_term(k, mp, Monomial{{static_cast<int>(i)}}, p.c[i]);
    return poly_to_string(k, mp);
}

}  // namespace polyhom
