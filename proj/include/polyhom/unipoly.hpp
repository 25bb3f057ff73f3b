#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyhom/field.hpp"

namespace polyhom {

/// Univariate polynomial over an exact field, dense coefficients, c[i] = coeff of t^i.
/// Normal form: no trailing zero coefficients; the zero polynomial has empty c.
template <class F>
struct UniPoly {
    using Elem = typename F::Elem;
    std::vector<Elem> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(const F& k, const Elem& e) {
        UniPoly p;
        if (!k.is_zero(e)) p.c.push_back(e);
        return p;
    }
    static UniPoly one(const F& k) { return constant(k, k.one()); }
    static UniPoly t_power(const F& k, std::size_t n) {
        UniPoly p;
        p.c.assign(n + 1, k.zero());
        p.c[n] = k.one();
        return p;
    }

    void trim(const F& k) {
        while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    }
    const Elem& lead(const F&) const { return c.back(); }
};

template <class F>
bool up_eq(const F& k, const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!k.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class F>
UniPoly<F> up_add(const F& k, const UniPoly<F>& a, const UniPoly<F>& b) {
    UniPoly<F> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
    r.trim(k);
    return r;
}

template <class F>
UniPoly<F> up_neg(const F& k, const UniPoly<F>& a) {
    UniPoly<F> r = a;
    for (auto& e : r.c) e = k.neg(e);
    return r;
}

template <class F>
UniPoly<F> up_sub(const F& k, const UniPoly<F>& a, const UniPoly<F>& b) {
    return up_add(k, a, up_neg(k, b));
}

template <class F>
UniPoly<F> up_scale(const F& k, const typename F::Elem& s, const UniPoly<F>& a) {
    if (k.is_zero(s)) return UniPoly<F>::zero();
    UniPoly<F> r = a;
    for (auto& e : r.c) e = k.mul(s, e);
    r.trim(k);
    return r;
}

template <class F>
UniPoly<F> up_mul(const F& k, const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<F>::zero();
    UniPoly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (k.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    r.trim(k);
    return r;
}

/// Euclidean division a = q*b + r with deg r < deg b. Requires b nonzero.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> up_divmod(const F& k, const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("up_divmod: division by zero");
    UniPoly<F> q, r = a;
    const auto binv = k.inv(b.lead(k));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const auto coef = k.mul(r.lead(k), binv);
        if (q.c.size() < shift + 1) q.c.resize(shift + 1, k.zero());
        q.c[shift] = k.add(q.c[shift], coef);
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[i + shift] = k.sub(r.c[i + shift], k.mul(coef, b.c[i]));
        r.trim(k);
    }
    q.trim(k);
    return {q, r};
}

template <class F>
bool up_divides(const F& k, const UniPoly<F>& d, const UniPoly<F>& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return up_divmod(k, a, d).second.is_zero();
}

template <class F>
UniPoly<F> up_monic(const F& k, const UniPoly<F>& a) {
    if (a.is_zero()) return a;
    return up_scale(k, k.inv(a.lead(k)), a);
}

template <class F>
typename F::Elem up_eval(const F& k, const UniPoly<F>& a, const typename F::Elem& x) {
    auto acc = k.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a.c[i]);
    return acc;
}

/// True iff a is a unit times a power of t (a single nonzero term).
template <class F>
bool up_is_term(const F& k, const UniPoly<F>& a) {
    if (a.is_zero()) return false;
    for (std::size_t i = 0; i + 1 < a.c.size(); ++i)
        if (!k.is_zero(a.c[i])) return false;
    return true;
}

/// Matrix over k[t], row-major.
template <class F>
struct UniPolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<UniPoly<F>> a;

    UniPolyMatrix() = default;
    UniPolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static UniPolyMatrix identity(const F& k, std::size_t n) {
        UniPolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly<F>::one(k);
        return m;
    }

    UniPoly<F>& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const UniPoly<F>& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
UniPolyMatrix<F> up_mat_mul(const F& k, const UniPolyMatrix<F>& x, const UniPolyMatrix<F>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("up_mat_mul: shape mismatch");
    UniPolyMatrix<F> out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            if (x.at(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) = up_add(k, out.at(i, j), up_mul(k, x.at(i, l), y.at(l, j)));
        }
    return out;
}

template <class F>
bool up_mat_eq(const F& k, const UniPolyMatrix<F>& x, const UniPolyMatrix<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!up_eq(k, x.a[i], y.a[i])) return false;
    return true;
}

/// Determinant by cofactor expansion; intended for the small matrices in tests.
template <class F>
UniPoly<F> up_det(const F& k, const UniPolyMatrix<F>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("up_det: not square");
    const std::size_t n = m.rows;
    if (n == 0) return UniPoly<F>::one(k);
    if (n == 1) return m.at(0, 0);
    UniPoly<F> acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        UniPolyMatrix<F> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        auto term = up_mul(k, m.at(0, j), up_det(k, minor));
        acc = (j % 2 == 0) ? up_add(k, acc, term) : up_sub(k, acc, term);
    }
    return acc;
}

template <class F>
struct SnfResult {
    UniPolyMatrix<F> u, d, v;
    typename F::Elem det_u, det_v;

    /// Monic nonzero diagonal divisors, in chain order.
    std::vector<UniPoly<F>> divisors(const F&) const {
        std::vector<UniPoly<F>> out;
        for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
            if (!d.at(i, i).is_zero()) out.push_back(d.at(i, i));
        return out;
    }
};

/// Smith normal form over k[t]: u*m*v = d, u and v invertible (tracked unit
/// determinants), d diagonal with monic entries satisfying d_i | d_{i+1},
/// zeros last. Pivot selection: minimal degree, ties broken row-major.
template <class F>
SnfResult<F> snf_unipoly(const F& k, const UniPolyMatrix<F>& input) {
    SnfResult<F> res;
    res.d = input;
    res.u = UniPolyMatrix<F>::identity(k, input.rows);
    res.v = UniPolyMatrix<F>::identity(k, input.cols);
    res.det_u = k.one();
    res.det_v = k.one();
    UniPolyMatrix<F>&m = res.d, &u = res.u, &v = res.v;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        res.det_u = k.neg(res.det_u);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        res.det_v = k.neg(res.det_v);
    };
    // row_i -= q * row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const UniPoly<F>& q) {
        for (std::size_t c = 0; c < m.cols; ++c)
            m.at(i, c) = up_sub(k, m.at(i, c), up_mul(k, q, m.at(j, c)));
        for (std::size_t c = 0; c < u.cols; ++c)
            u.at(i, c) = up_sub(k, u.at(i, c), up_mul(k, q, u.at(j, c)));
    };
    // col_i -= q * col_j
    auto col_sub = [&](std::size_t i, std::size_t j, const UniPoly<F>& q) {
        for (std::size_t r = 0; r < m.rows; ++r)
            m.at(r, i) = up_sub(k, m.at(r, i), up_mul(k, q, m.at(r, j)));
        for (std::size_t r = 0; r < v.rows; ++r)
            v.at(r, i) = up_sub(k, v.at(r, i), up_mul(k, q, v.at(r, j)));
    };
    auto row_add = [&](std::size_t i, std::size_t j) {  // row_i += row_j
        for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = up_add(k, m.at(i, c), m.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = up_add(k, u.at(i, c), u.at(j, c));
    };

    // over Q, rescale working rows/columns to primitive integer content so
    // coefficients stay small; the scalings are units tracked in the
    // determinants
    auto content_of = [&](auto get, std::size_t count) -> typename F::Elem {
        if constexpr (std::is_same_v<F, Rationals>) {
            BigInt num_gcd = 0, den_lcm = 1;
            for (std::size_t c = 0; c < count; ++c)
                for (const auto& coeff : get(c).c) {
                    if (coeff == 0) continue;
                    num_gcd = boost::multiprecision::gcd(
                        num_gcd, boost::multiprecision::numerator(coeff));
                    den_lcm = boost::multiprecision::lcm(
                        den_lcm, boost::multiprecision::denominator(coeff));
                }
            if (num_gcd == 0) return k.one();
            return BigRat(den_lcm, num_gcd);
        } else {
            (void)get;
            (void)count;
            return k.one();
        }
    };
    auto renormalize_from = [&](std::size_t kk) {
        if constexpr (!std::is_same_v<F, Rationals>) return;
        for (std::size_t i = kk; i < m.rows; ++i) {
            const auto s = content_of([&](std::size_t c) -> const UniPoly<F>& {
                return m.at(i, c);
            }, m.cols);
            if (k.is_one(s)) continue;
            for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = up_scale(k, s, m.at(i, c));
            for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = up_scale(k, s, u.at(i, c));
            res.det_u = k.mul(res.det_u, s);
        }
        for (std::size_t j = kk; j < m.cols; ++j) {
            const auto s = content_of([&](std::size_t r) -> const UniPoly<F>& {
                return m.at(r, j);
            }, m.rows);
            if (k.is_one(s)) continue;
            for (std::size_t r = 0; r < m.rows; ++r) m.at(r, j) = up_scale(k, s, m.at(r, j));
            for (std::size_t r = 0; r < v.rows; ++r) v.at(r, j) = up_scale(k, s, v.at(r, j));
            res.det_v = k.mul(res.det_v, s);
        }
    };

    const std::size_t steps = std::min(m.rows, m.cols);
    for (std::size_t kk = 0; kk < steps; ++kk) {
        renormalize_from(kk);
        for (;;) {
            // minimal-degree nonzero pivot in the trailing submatrix, ties row-major
            std::size_t pr = m.rows, pc = m.cols;
            int best = -1;
            for (std::size_t i = kk; i < m.rows; ++i)
                for (std::size_t j = kk; j < m.cols; ++j) {
                    const auto& e = m.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        pr = i;
                        pc = j;
                    }
                }
            if (best < 0) { pr = m.rows; }
            if (pr == m.rows) goto done;  // submatrix is zero
            swap_rows(kk, pr);
            swap_cols(kk, pc);

            bool clean = true;
            for (std::size_t i = kk + 1; i < m.rows; ++i) {
                if (m.at(i, kk).is_zero()) continue;
                auto [q, r] = up_divmod(k, m.at(i, kk), m.at(kk, kk));
                row_sub(i, kk, q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = kk + 1; j < m.cols; ++j) {
                if (m.at(kk, j).is_zero()) continue;
                auto [q, r] = up_divmod(k, m.at(kk, j), m.at(kk, kk));
                col_sub(j, kk, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;  // smaller-degree remainders became new pivot candidates

            // pivot must divide the rest of the submatrix for the divisor chain
            bool fixed = false;
            for (std::size_t i = kk + 1; i < m.rows && !fixed; ++i)
                for (std::size_t j = kk + 1; j < m.cols && !fixed; ++j)
                    if (!up_divides(k, m.at(kk, kk), m.at(i, j))) {
                        row_add(kk, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        // normalize the pivot to monic
        const auto& piv = m.at(kk, kk);
        if (!piv.is_zero() && !k.is_one(piv.lead(k))) {
            const auto s = k.inv(piv.lead(k));
            for (std::size_t c = 0; c < m.cols; ++c) m.at(kk, c) = up_scale(k, s, m.at(kk, c));
            for (std::size_t c = 0; c < u.cols; ++c) u.at(kk, c) = up_scale(k, s, u.at(kk, c));
            res.det_u = k.mul(res.det_u, s);
        }
    }
done:
    return res;
}

/// Solves A x = v over k[t]; returns std::nullopt when no solution exists.
template <class F>
std::optional<std::vector<UniPoly<F>>> up_solve(const F& k, const UniPolyMatrix<F>& A,
                                                const std::vector<UniPoly<F>>& v) {
    if (v.size() != A.rows) throw std::invalid_argument("up_solve: length mismatch");
    const auto s = snf_unipoly(k, A);
    // w = U v
    std::vector<UniPoly<F>> w(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.rows; ++j)
            w[i] = up_add(k, w[i], up_mul(k, s.u.at(i, j), v[j]));
    std::vector<UniPoly<F>> y(A.cols);
    const std::size_t mn = std::min(A.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        if (i < mn && !s.d.at(i, i).is_zero()) {
            auto [q, r] = up_divmod(k, w[i], s.d.at(i, i));
            if (!r.is_zero()) return std::nullopt;
            y[i] = q;
        } else if (!w[i].is_zero()) {
            return std::nullopt;
        }
    }
    // x = V y
    std::vector<UniPoly<F>> x(A.cols);
    for (std::size_t i = 0; i < A.cols; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            x[i] = up_add(k, x[i], up_mul(k, s.v.at(i, j), y[j]));
    return x;
}

/// Rescales a generator vector by a unit to a canonical small representative:
/// over Q a primitive integer vector, over a prime field a monic-leading one.
/// The generated submodule is unchanged.
template <class F>
void normalize_generator(const F& k, std::vector<UniPoly<F>>& v) {
    if constexpr (std::is_same_v<F, Rationals>) {
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& p : v)
            for (const auto& c : p.c) {
                if (c == 0) continue;
                num_gcd = boost::multiprecision::gcd(num_gcd,
                                                     boost::multiprecision::numerator(c));
                den_lcm = boost::multiprecision::lcm(den_lcm,
                                                     boost::multiprecision::denominator(c));
            }
        if (num_gcd == 0) return;
        const BigRat s(den_lcm, num_gcd);
        for (auto& p : v) p = up_scale(k, s, p);
    } else {
        for (const auto& p : v)
            for (const auto& c : p.c) {
                if (k.is_zero(c)) continue;
                const auto s = k.inv(c);
                for (auto& q : v) q = up_scale(k, s, q);
                return;
            }
    }
}

/// k[t]-module kernel of A: columns generate {x : A x = 0} (they are the
/// trailing columns of V in the Smith normal form, unit-rescaled).
template <class F>
std::vector<std::vector<UniPoly<F>>> up_kernel(const F& k, const UniPolyMatrix<F>& A) {
    const auto s = snf_unipoly(k, A);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(A.rows, A.cols); ++i)
        if (!s.d.at(i, i).is_zero()) ++rank;
    std::vector<std::vector<UniPoly<F>>> out;
    for (std::size_t j = rank; j < A.cols; ++j) {
        std::vector<UniPoly<F>> col(A.cols);
        for (std::size_t i = 0; i < A.cols; ++i) col[i] = s.v.at(i, j);
        normalize_generator(k, col);
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace polyhom
