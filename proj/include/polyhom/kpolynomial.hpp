#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhom {

/// Laurent polynomial over the integers in the variable q: the class of a
/// graded module in the graded Grothendieck group (Hilbert numerator).
struct KPolynomial {
    std::map<int, long long> c;  // exponent -> nonzero coefficient

    static KPolynomial zero() { return {}; }
    static KPolynomial one() { return monomial(0, 1); }
    static KPolynomial monomial(int exp, long long coeff) {
        KPolynomial p;
        if (coeff != 0) p.c[exp] = coeff;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long long coeff(int exp) const {
        auto it = c.find(exp);
        return it == c.end() ? 0 : it->second;
    }

    void add_term(int exp, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = c.emplace(exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) c.erase(it);
        }
    }

    bool operator==(const KPolynomial& o) const { return c == o.c; }
    bool operator!=(const KPolynomial& o) const { return !(*this == o); }
};

inline KPolynomial kp_add(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r = a;
    for (const auto& [e, v] : b.c) r.add_term(e, v);
    return r;
}

inline KPolynomial kp_sub(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r = a;
    for (const auto& [e, v] : b.c) r.add_term(e, -v);
    return r;
}

inline KPolynomial kp_mul(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r;
    for (const auto& [ea, va] : a.c)
        for (const auto& [eb, vb] : b.c) r.add_term(ea + eb, va * vb);
    return r;
}

inline KPolynomial kp_scale(long long s, const KPolynomial& a) {
    KPolynomial r;
    for (const auto& [e, v] : a.c) r.add_term(e, s * v);
    return r;
}

/// Multiplication by q^k.
inline KPolynomial kp_shift(const KPolynomial& a, int k) {
    KPolynomial r;
    for (const auto& [e, v] : a.c) r.c[e + k] = v;
    return r;
}

inline long long kp_eval_at_one(const KPolynomial& a) {
    long long s = 0;
    for (const auto& [e, v] : a.c) s += v;
    return s;
}

/// 1 - q.
inline KPolynomial kp_one_minus_q() {
    KPolynomial p;
    p.c[0] = 1;
    p.c[1] = -1;
    return p;
}

/// Exact quotient a / (1-q), or nullopt when (1-q) does not divide a.
inline std::optional<KPolynomial> kp_div_one_minus_q(const KPolynomial& a) {
    if (a.is_zero()) return KPolynomial::zero();
    // m - q*m = a  =>  m_e = a_e + m_{e-1}
    const int lo = a.c.begin()->first;
    const int hi = a.c.rbegin()->first;
    KPolynomial m;
    long long carry = 0;
    for (int e = lo; e <= hi; ++e) {
        carry += a.coeff(e);
        m.add_term(e, carry);
    }
    if (carry != 0) return std::nullopt;  // remainder: series does not terminate
    return m;
}

/// Coefficients of a(q) / (1-q)^nvars as a power series, degrees 0..bound.
/// Negative-degree contributions are rejected by the caller's data (all
/// supports here are nonnegative).
inline std::vector<long long> kp_series_coeffs(const KPolynomial& a, int nvars, int bound) {
    // 1/(1-q)^n = sum_j C(j+n-1, n-1) q^j
    std::vector<long long> out(static_cast<std::size_t>(bound) + 1, 0);
    auto binom = [](long long n, long long r) {
        if (r < 0 || r > n) return 0LL;
        long long acc = 1;
        for (long long i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
        return acc;
    };
    for (const auto& [e, v] : a.c) {
        for (int m = std::max(e, 0); m <= bound; ++m) {
            const long long j = m - e;
            out[static_cast<std::size_t>(m)] +=
                v * (nvars == 0 ? (j == 0 ? 1 : 0) : binom(j + nvars - 1, nvars - 1));
        }
    }
    return out;
}

/// Top exponent of the exact quotient a/(1-q)^nvars when that quotient is a
/// polynomial (finite-dimensional total space); nullopt when a = 0.
/// Throws when the division is not exact.
inline std::optional<int> kp_finite_top_degree(const KPolynomial& a, int nvars) {
    KPolynomial h = a;
    for (int i = 0; i < nvars; ++i) {
        auto q = kp_div_one_minus_q(h);
        if (!q) throw std::domain_error("kp_finite_top_degree: module is not finite dimensional");
        h = *q;
    }
    if (h.is_zero()) return std::nullopt;
    return h.c.rbegin()->first;
}

inline std::string kp_to_string(const KPolynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, v] : a.c) {
        long long av = v < 0 ? -v : v;
        if (first) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (e != 0) {
            mono = "q";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += std::to_string(av);
        else if (av == 1) out += mono;
        else out += std::to_string(av) + "*" + mono;
    }
    return out;
}

}  // namespace polyhom
