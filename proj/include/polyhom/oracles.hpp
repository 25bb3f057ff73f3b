#pragma once

// Independent brute-force oracles used by the test and verification suites.
// These deliberately avoid the Groebner-basis and rref code paths they are
// used to check: ranks come from fraction-free (Bareiss) elimination and all
// graded dimensions from direct monomial enumeration per degree.

#include <vector>

#include "polyhom/graded_module.hpp"
#include "polyhom/koszul.hpp"
#include "polyhom/matrix.hpp"

namespace polyhom::oracle {

/// Rank by fraction-free Gaussian elimination (Bareiss).
template <class F>
std::size_t bareiss_rank(const F& k, Matrix<F> m) {
    std::size_t rank = 0;
    auto prev = k.one();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && k.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        for (std::size_t i = row + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j)
                m.at(i, j) = k.div(
                    k.sub(k.mul(m.at(row, col), m.at(i, j)), k.mul(m.at(i, col), m.at(row, j))),
                    prev);
            m.at(i, col) = k.zero();
        }
        prev = m.at(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

namespace detail {

/// Degreewise data of a presentation: coordinates, an echelon basis of the
/// relation slice, and the induced quotient basis, per degree.
template <class F>
struct DegreeData {
    std::vector<std::pair<int, Monomial>> pairs;
    std::vector<std::vector<typename F::Elem>> echelon;  // reduced rows
    std::vector<std::size_t> pivots;                     // pivot column per row
    std::vector<std::size_t> basis;                      // non-pivot coordinates
};

template <class F>
std::size_t find_pair(const DegreeData<F>& dd, int gen, const Monomial& m) {
    for (std::size_t i = 0; i < dd.pairs.size(); ++i)
        if (dd.pairs[i].first == gen && dd.pairs[i].second == m) return i;
    throw std::logic_error("oracle: pair not found");
}

template <class F>
void echelon_insert(const F& k, DegreeData<F>& dd, std::vector<typename F::Elem> row) {
    for (std::size_t r = 0; r < dd.echelon.size(); ++r) {
        const std::size_t p = dd.pivots[r];
        if (k.is_zero(row[p])) continue;
        const auto f = row[p];
        for (std::size_t c = 0; c < row.size(); ++c)
            row[c] = k.sub(row[c], k.mul(f, dd.echelon[r][c]));
    }
    std::size_t p = 0;
    while (p < row.size() && k.is_zero(row[p])) ++p;
    if (p == row.size()) return;
    const auto inv = k.inv(row[p]);
    for (auto& e : row) e = k.mul(inv, e);
    for (std::size_t r = 0; r < dd.echelon.size(); ++r) {
        if (k.is_zero(dd.echelon[r][p])) continue;
        const auto f = dd.echelon[r][p];
        for (std::size_t c = 0; c < row.size(); ++c)
            dd.echelon[r][c] = k.sub(dd.echelon[r][c], k.mul(f, row[c]));
    }
    dd.echelon.push_back(std::move(row));
    dd.pivots.push_back(p);
}

template <class F>
DegreeData<F> degree_data(const GradedPresentation<F>& x, int m) {
    const auto& k = x.field();
    DegreeData<F> dd;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        const int rem = m - x.gens()[j];
        if (rem < 0) continue;
        for (const auto& mono : monomials_of_degree(x.nvars(), rem))
            dd.pairs.emplace_back(static_cast<int>(j), mono);
    }
    for (const auto& rel : x.rels()) {
        const int rem = m - rel.degree;
        if (rem < 0) continue;
        for (const auto& mono : monomials_of_degree(x.nvars(), rem)) {
            std::vector<typename F::Elem> row(dd.pairs.size(), k.zero());
            for (std::size_t j = 0; j < rel.entries.size(); ++j)
                for (const auto& [em, ec] : rel.entries[j].terms)
                    row[find_pair(dd, static_cast<int>(j), mono_mul(em, mono))] = ec;
            echelon_insert(k, dd, std::move(row));
        }
    }
    std::vector<bool> is_piv(dd.pairs.size(), false);
    for (auto p : dd.pivots) is_piv[p] = true;
    for (std::size_t c = 0; c < dd.pairs.size(); ++c)
        if (!is_piv[c]) dd.basis.push_back(c);
    return dd;
}

template <class F>
std::vector<typename F::Elem> reduce_coords(const F& k, const DegreeData<F>& dd,
                                            std::vector<typename F::Elem> v) {
    for (std::size_t r = 0; r < dd.echelon.size(); ++r) {
        const std::size_t p = dd.pivots[r];
        if (k.is_zero(v[p])) continue;
        const auto f = v[p];
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = k.sub(v[c], k.mul(f, dd.echelon[r][c]));
    }
    std::vector<typename F::Elem> out;
    out.reserve(dd.basis.size());
    for (auto c : dd.basis) out.push_back(v[c]);
    return out;
}

/// Multiplication by variable v from the degree-m quotient basis to the
/// degree-(m+1) quotient basis.
template <class F>
Matrix<F> mult_matrix(const GradedPresentation<F>& x, const DegreeData<F>& lo,
                      const DegreeData<F>& hi, int var) {
    const auto& k = x.field();
    Matrix<F> out = Matrix<F>::zero(k, hi.basis.size(), lo.basis.size());
    for (std::size_t c = 0; c < lo.basis.size(); ++c) {
        const auto& [gen, mono] = lo.pairs[lo.basis[c]];
        std::vector<typename F::Elem> v(hi.pairs.size(), k.zero());
        v[find_pair(hi, gen, mono_mul(mono, Monomial::var(x.nvars(), var)))] = k.one();
        const auto coords = reduce_coords(k, hi, std::move(v));
        for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
    }
    return out;
}

}  // namespace detail

/// dim of the degree-m piece, by monomial enumeration and elimination.
template <class F>
long long piece_dim_brute(const GradedPresentation<F>& x, int m) {
    return static_cast<long long>(detail::degree_data(x, m).basis.size());
}

/// Piece dimensions for degrees 0..bound.
template <class F>
std::vector<long long> dims_brute(const GradedPresentation<F>& x, int bound) {
    std::vector<long long> out;
    for (int m = 0; m <= bound; ++m) out.push_back(piece_dim_brute(x, m));
    return out;
}

/// dim T_i(x)_m for degrees m = 0..bound, computed from degreewise boundary
/// matrices of the Koszul complex (rank-nullity only, no presentations).
template <class F>
std::vector<long long> koszul_dims_brute(const GradedPresentation<F>& x, int i, int bound) {
    const auto& k = x.field();
    const int n = x.nvars();
    if (i < 0 || i > n) throw std::out_of_range("koszul_dims_brute: index");
    // degree data of x for every degree we may touch
    std::vector<detail::DegreeData<F>> data;
    for (int m = 0; m <= bound + 1; ++m) data.push_back(detail::degree_data(x, m));
    auto piece_dim_at = [&](int m) -> long long {
        if (m < 0) return 0;
        return static_cast<long long>(data[static_cast<std::size_t>(m)].basis.size());
    };

    // boundary d_k of the complex at total degree m, blockwise over masks
    auto boundary_at = [&](int kk, int m) -> Matrix<F> {
        const auto src_masks = polyhom::detail::koszul_masks(n, kk);
        const auto tgt_masks = polyhom::detail::koszul_masks(n, kk - 1);
        std::vector<long long> src_off(src_masks.size() + 1, 0), tgt_off(tgt_masks.size() + 1, 0);
        for (std::size_t c = 0; c < src_masks.size(); ++c)
            src_off[c + 1] = src_off[c] + piece_dim_at(m - kk);
        for (std::size_t c = 0; c < tgt_masks.size(); ++c)
            tgt_off[c + 1] = tgt_off[c] + piece_dim_at(m - kk + 1);
        Matrix<F> out = Matrix<F>::zero(k, static_cast<std::size_t>(tgt_off.back()),
                                        static_cast<std::size_t>(src_off.back()));
        if (m - kk < 0) return out;
        for (std::size_t sc = 0; sc < src_masks.size(); ++sc) {
            const unsigned mask = src_masks[sc];
            for (int j = 1; j <= n; ++j) {
                if (!(mask & (1u << (j - 1)))) continue;
                const unsigned t = mask & ~(1u << (j - 1));
                std::size_t tc = 0;
                while (tgt_masks[tc] != t) ++tc;
                int above = 0;
                for (int u = j + 1; u <= n; ++u)
                    if (mask & (1u << (u - 1))) ++above;
                const auto& lo = data[static_cast<std::size_t>(m - kk)];
                const auto& hi = data[static_cast<std::size_t>(m - kk + 1)];
                Matrix<F> block = detail::mult_matrix(x, lo, hi, j - 1);
                for (std::size_t r = 0; r < block.rows; ++r)
                    for (std::size_t c = 0; c < block.cols; ++c) {
                        auto v = block.at(r, c);
                        if (above % 2 == 1) v = k.neg(v);
                        out.at(static_cast<std::size_t>(tgt_off[tc]) + r,
                               static_cast<std::size_t>(src_off[sc]) + c) = v;
                    }
            }
        }
        return out;
    };

    std::vector<long long> out;
    for (int m = 0; m <= bound; ++m) {
        long long dim_term = 0;
        for (std::size_t c = 0; c < polyhom::detail::koszul_masks(n, i).size(); ++c)
            dim_term += piece_dim_at(m - i);
        long long rank_di = 0, rank_dnext = 0;
        if (i >= 1) rank_di = static_cast<long long>(bareiss_rank(k, boundary_at(i, m)));
        if (i + 1 <= n) rank_dnext = static_cast<long long>(bareiss_rank(k, boundary_at(i + 1, m)));
        out.push_back(dim_term - rank_di - rank_dnext);
    }
    return out;
}

}  // namespace polyhom::oracle
