#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhom/field.hpp"
#include "polyhom/monomial.hpp"

namespace polyhom {

/// Sparse multivariate polynomial; terms keyed by monomial in descending
/// grevlex order so begin() is the leading term. Zero coefficients are never
/// stored.
template <class F>
struct MultiPoly {
    using Elem = typename F::Elem;
    using TermMap = std::map<Monomial, Elem, GrevlexGreater>;

    int nvars = 0;
    TermMap terms;

    static MultiPoly zero(int nvars) { return MultiPoly{nvars, {}}; }
    static MultiPoly constant(const F& k, int nvars, const Elem& e) {
        MultiPoly p = zero(nvars);
        if (!k.is_zero(e)) p.terms.emplace(Monomial::one(nvars), e);
        return p;
    }
    static MultiPoly one(const F& k, int nvars) { return constant(k, nvars, k.one()); }
    static MultiPoly variable(const F& k, int nvars, int i) {
        MultiPoly p = zero(nvars);
        p.terms.emplace(Monomial::var(nvars, i), k.one());
        return p;
    }
    static MultiPoly term(const F& k, int nvars, const Monomial& m, const Elem& e) {
        MultiPoly p = zero(nvars);
        if (!k.is_zero(e)) p.terms.emplace(m, e);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    const Monomial& lead_mon() const { return terms.begin()->first; }
    const Elem& lead_coeff() const { return terms.begin()->second; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m.deg());
        return d;
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        const int d = terms.begin()->first.deg();
        for (const auto& [m, c] : terms)
            if (m.deg() != d) return false;
        return true;
    }
};

template <class F>
void mp_add_term(const F& k, MultiPoly<F>& p, const Monomial& m, const typename F::Elem& c) {
    if (k.is_zero(c)) return;
    auto it = p.terms.find(m);
    if (it == p.terms.end()) {
        p.terms.emplace(m, c);
    } else {
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) p.terms.erase(it);
    }
}

template <class F>
MultiPoly<F> mp_add(const F& k, const MultiPoly<F>& a, const MultiPoly<F>& b) {
    MultiPoly<F> r = a;
    for (const auto& [m, c] : b.terms) mp_add_term(k, r, m, c);
    return r;
}

template <class F>
MultiPoly<F> mp_neg(const F& k, const MultiPoly<F>& a) {
    MultiPoly<F> r = a;
    for (auto& [m, c] : r.terms) c = k.neg(c);
    return r;
}

template <class F>
MultiPoly<F> mp_sub(const F& k, const MultiPoly<F>& a, const MultiPoly<F>& b) {
    MultiPoly<F> r = a;
    for (const auto& [m, c] : b.terms) mp_add_term(k, r, m, k.neg(c));
    return r;
}

template <class F>
MultiPoly<F> mp_scale(const F& k, const typename F::Elem& s, const MultiPoly<F>& a) {
    MultiPoly<F> r = MultiPoly<F>::zero(a.nvars);
    if (k.is_zero(s)) return r;
    for (const auto& [m, c] : a.terms) r.terms.emplace(m, k.mul(s, c));
    return r;
}

/// a * (c * m) for a single term.
template <class F>
MultiPoly<F> mp_mul_term(const F& k, const MultiPoly<F>& a, const Monomial& m,
                         const typename F::Elem& c) {
    MultiPoly<F> r = MultiPoly<F>::zero(a.nvars);
    if (k.is_zero(c)) return r;
    for (const auto& [am, ac] : a.terms) r.terms.emplace(mono_mul(am, m), k.mul(ac, c));
    return r;
}

template <class F>
MultiPoly<F> mp_mul(const F& k, const MultiPoly<F>& a, const MultiPoly<F>& b) {
    MultiPoly<F> r = MultiPoly<F>::zero(a.nvars);
    for (const auto& [m, c] : b.terms) {
        auto part = mp_mul_term(k, a, m, c);
        r = mp_add(k, r, part);
    }
    return r;
}

template <class F>
bool mp_eq(const F& k, const MultiPoly<F>& a, const MultiPoly<F>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib)
        if (ia->first != ib->first || !k.eq(ia->second, ib->second)) return false;
    return true;
}

/// Maps variables of a into a larger variable set: var i -> var image[i].
template <class F>
MultiPoly<F> mp_rename_vars(const MultiPoly<F>& a, int new_nvars, const std::vector<int>& image) {
    MultiPoly<F> r = MultiPoly<F>::zero(new_nvars);
    for (const auto& [m, c] : a.terms) {
        Monomial nm = Monomial::one(new_nvars);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            nm.e[static_cast<std::size_t>(image[i])] += m.e[i];
        r.terms.emplace(nm, c);
    }
    return r;
}

/// Vector in a free module: one polynomial per generator position.
template <class F>
using ModuleVec = std::vector<MultiPoly<F>>;

template <class F>
bool mv_is_zero(const ModuleVec<F>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

template <class F>
ModuleVec<F> mv_zero(int nvars, std::size_t rank) {
    return ModuleVec<F>(rank, MultiPoly<F>::zero(nvars));
}

template <class F>
ModuleVec<F> mv_add(const F& k, const ModuleVec<F>& a, const ModuleVec<F>& b) {
    ModuleVec<F> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mp_add(k, r[i], b[i]);
    return r;
}

template <class F>
ModuleVec<F> mv_sub(const F& k, const ModuleVec<F>& a, const ModuleVec<F>& b) {
    ModuleVec<F> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mp_sub(k, r[i], b[i]);
    return r;
}

template <class F>
ModuleVec<F> mv_neg(const F& k, const ModuleVec<F>& a) {
    ModuleVec<F> r = a;
    for (auto& p : r) p = mp_neg(k, p);
    return r;
}

template <class F>
ModuleVec<F> mv_mul_term(const F& k, const ModuleVec<F>& a, const Monomial& m,
                         const typename F::Elem& c) {
    ModuleVec<F> r = a;
    for (auto& p : r) p = mp_mul_term(k, p, m, c);
    return r;
}

template <class F>
ModuleVec<F> mv_scale(const F& k, const typename F::Elem& s, const ModuleVec<F>& a) {
    ModuleVec<F> r = a;
    for (auto& p : r) p = mp_scale(k, s, p);
    return r;
}

template <class F>
ModuleVec<F> mv_mul_poly(const F& k, const ModuleVec<F>& a, const MultiPoly<F>& q) {
    ModuleVec<F> r = mv_zero<F>(q.nvars, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mp_mul(k, a[i], q);
    return r;
}

template <class F>
bool mv_eq(const F& k, const ModuleVec<F>& a, const ModuleVec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!mp_eq(k, a[i], b[i])) return false;
    return true;
}

/// Rescales a vector by a unit to a canonical small representative: over Q a
/// primitive integer vector, over a prime field a monic-leading one. The
/// submodule it generates is unchanged.
template <class F>
void mv_normalize_generator(const F& k, ModuleVec<F>& v) {
    if constexpr (std::is_same_v<F, Rationals>) {
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& p : v)
            for (const auto& [m, c] : p.terms) {
                num_gcd =
                    boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
                den_lcm =
                    boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
            }
        if (num_gcd == 0) return;
        const BigRat s(den_lcm, num_gcd);
        for (auto& p : v) p = mp_scale(k, s, p);
    } else {
        for (const auto& p : v) {
            if (p.is_zero()) continue;
            const auto s = k.inv(p.lead_coeff());
            if (!k.is_one(s))
                for (auto& q : v) q = mp_scale(k, s, q);
            return;
        }
    }
}

/// Leading term under the position-over-term order. Requires v nonzero.
template <class F>
TermPos mv_lead(const ModuleVec<F>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return TermPos{static_cast<int>(i), v[i].lead_mon()};
    throw std::domain_error("mv_lead: zero vector");
}

template <class F>
const typename F::Elem& mv_lead_coeff(const ModuleVec<F>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return p.lead_coeff();
    throw std::domain_error("mv_lead_coeff: zero vector");
}

/// Homogeneous degree of v with respect to generator shifts; nullopt when v is
/// zero; throws when v is not homogeneous.
template <class F>
std::optional<int> mv_degree(const ModuleVec<F>& v, const std::vector<int>& shifts) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (const auto& [m, c] : v[i].terms) {
            const int d = m.deg() + shifts[i];
            if (!deg) deg = d;
            else if (*deg != d) throw std::invalid_argument("mv_degree: not homogeneous");
        }
    }
    return deg;
}

template <class F>
bool mv_is_homogeneous(const ModuleVec<F>& v, const std::vector<int>& shifts) {
    try {
        (void)mv_degree<F>(v, shifts);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace polyhom
