#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhom {

/// Exponent vector of a monomial in x1..xn.
struct Monomial {
    std::vector<int> e;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m = one(nvars);
        m.e.at(static_cast<std::size_t>(i)) = exp;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int deg() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const { return deg() == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& a) {
    for (std::size_t i = 0; i < d.e.size(); ++i)
        if (d.e[i] > a.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& d) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= d.e[i];
        if (r.e[i] < 0) throw std::domain_error("mono_div: not divisible");
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
    return r;
}

/// Graded reverse lexicographic comparison: returns <0, 0, >0 as a <, =, > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    const int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

/// Strict ordering functor putting the grevlex-largest monomial first.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

/// Term of a module vector: a monomial sitting at a generator position.
struct TermPos {
    int pos = 0;
    Monomial mon;
};

/// Position-over-term order, positions compared by generator index ascending
/// (lower index dominates), grevlex on monomials within a position.
inline int term_cmp(const TermPos& a, const TermPos& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return grevlex_cmp(a.mon, b.mon);
}

/// All monomials in nvars variables of total degree exactly d, in descending
/// grevlex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(nvars);
    // enumerate recursively, then sort for a canonical order
    std::vector<int> stack(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            stack[static_cast<std::size_t>(var)] = rem;
            out.push_back(Monomial{stack});
            return;
        }
        for (int e = rem; e >= 0; --e) {
            stack[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, rem - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{{}});
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return grevlex_cmp(x, y) > 0; });
    return out;
}

}  // namespace polyhom
