#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhom/graded_module.hpp"

namespace polyhom {

/// Koszul complex of x: terms[k] is the direct sum of copies x(-k) indexed by
/// 0/1 multi-indices with k ones; boundaries[i] is d_{i+1}: terms[i+1] ->
/// terms[i] with signed variable multiplications.
template <class F>
struct KoszulComplexRep {
    std::vector<GradedPresentation<F>> terms;
    std::vector<GradedMorphism<F>> boundaries;
};

namespace detail {

inline std::vector<unsigned> koszul_masks(int nvars, int k) {
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask)
        if (__builtin_popcount(mask) == k) out.push_back(mask);
    return out;
}

}  // namespace detail

template <class F>
KoszulComplexRep<F> koszul_complex(const GradedPresentation<F>& x) {
    const auto& k = x.field();
    const int n = x.nvars();
    if (n < 1) throw std::invalid_argument("koszul_complex: needs at least one variable");
    KoszulComplexRep<F> rep;
    std::vector<std::vector<unsigned>> masks;
    for (int kk = 0; kk <= n; ++kk) {
        masks.push_back(detail::koszul_masks(n, kk));
        GradedPresentation<F> term = zero_presentation(k, n);
        const GradedPresentation<F> shifted = shift_down(x, kk);
        for (std::size_t c = 0; c < masks.back().size(); ++c)
            term = (c == 0) ? shifted : direct_sum(term, shifted);
        if (masks.back().empty()) term = zero_presentation(k, n);
        rep.terms.push_back(std::move(term));
    }
    const std::size_t r = x.rank();
    for (int kk = 1; kk <= n; ++kk) {
        const auto& src_masks = masks[static_cast<std::size_t>(kk)];
        const auto& tgt_masks = masks[static_cast<std::size_t>(kk - 1)];
        const std::size_t rows = tgt_masks.size() * r, cols = src_masks.size() * r;
        std::vector<MultiPoly<F>> mat(rows * cols, MultiPoly<F>::zero(n));
        for (std::size_t sc = 0; sc < src_masks.size(); ++sc) {
            const unsigned m = src_masks[sc];
            for (int j = 1; j <= n; ++j) {
                if (!(m & (1u << (j - 1)))) continue;
                const unsigned t = m & ~(1u << (j - 1));
                std::size_t tc = 0;
                while (tgt_masks[tc] != t) ++tc;
                // sign: parity of the number of chosen indices above j
                int above = 0;
                for (int u = j + 1; u <= n; ++u)
                    if (m & (1u << (u - 1))) ++above;
                const bool negate = (above % 2) == 1;
                auto entry = MultiPoly<F>::variable(k, n, j - 1);
                if (negate) entry = mp_neg(k, entry);
                for (std::size_t d = 0; d < r; ++d)
                    mat[(tc * r + d) * cols + (sc * r + d)] = entry;
            }
        }
        rep.boundaries.emplace_back(rep.terms[static_cast<std::size_t>(kk)],
                                    rep.terms[static_cast<std::size_t>(kk - 1)], std::move(mat));
    }
    // d compose d must vanish identically
    for (std::size_t i = 0; i + 1 < rep.boundaries.size(); ++i) {
        const auto dd = compose(rep.boundaries[i], rep.boundaries[i + 1]);
        for (const auto& p : dd.matrix())
            if (!p.is_zero()) throw std::logic_error("koszul_complex: d(d(x)) != 0");
    }
    return rep;
}

/// Expresses v as a combination of the submodule's generators modulo the
/// ambient relations; nullopt when v is not in the submodule.
template <class F>
std::optional<ModuleVec<F>> lift_through_submodule(const SubmodulePresentation<F>& sub,
                                                   const ModuleVec<F>& v) {
    const auto& x = sub.inclusion.target();
    const auto& k = x.field();
    const std::size_t ncols = sub.module.rank();
    std::vector<ModuleVec<F>> inputs;
    for (std::size_t j = 0; j < ncols; ++j) inputs.push_back(sub.inclusion.column(j));
    for (const auto& r : x.rels()) inputs.push_back(r.entries);
    const GroebnerBasis<F> gb = buchberger(k, inputs, x.ambient());
    std::vector<MultiPoly<F>> q;
    const ModuleVec<F> rem = normal_form_with_quotients(k, v, gb, &q);
    if (!mv_is_zero(rem)) return std::nullopt;
    ModuleVec<F> w = mv_zero<F>(x.nvars(), inputs.size());
    for (std::size_t t = 0; t < gb.elems.size(); ++t)
        if (!q[t].is_zero()) w = mv_add(k, w, mv_mul_poly(k, gb.expr[t], q[t]));
    return ModuleVec<F>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ncols));
}

/// T_i(x) = H_i(Kos(x)) as a minimalized presentation.
template <class F>
GradedPresentation<F> koszul_homology(const GradedPresentation<F>& x, int i) {
    const auto& k = x.field();
    const int n = x.nvars();
    if (i < 0 || i > n) throw std::out_of_range("koszul_homology: index out of range");
    if (x.rank() == 0) return zero_presentation(k, n);
    if (i == 0) return minimalize(t0_presentation(x));
    const auto rep = koszul_complex(x);
    const auto ker = kernel(rep.boundaries[static_cast<std::size_t>(i - 1)]);
    if (i == n) return minimalize(ker.module);
    const auto& dnext = rep.boundaries[static_cast<std::size_t>(i)];
    std::vector<Relation<F>> rels = ker.module.rels();
    for (std::size_t j = 0; j < dnext.source().rank(); ++j) {
        const ModuleVec<F> col = dnext.column(j);
        if (mv_is_zero(col)) continue;
        auto coords = lift_through_submodule(ker, col);
        if (!coords) throw std::logic_error("koszul_homology: boundary image escapes the kernel");
        if (mv_is_zero(*coords)) continue;
        const auto d = mv_degree<F>(*coords, ker.module.gens());
        rels.push_back(Relation<F>{*d, std::move(*coords)});
    }
    GradedPresentation<F> hom(k, n, ker.module.gens(), std::move(rels));
    return minimalize(hom);
}

/// Torsion free: T_i(x) = 0 for every i > 0.
template <class F>
bool is_torsion_free(const GradedPresentation<F>& x) {
    for (int i = 1; i <= x.nvars(); ++i)
        if (!is_zero_module(koszul_homology(x, i))) return false;
    return true;
}

/// The canonical epimorphism F[n](T_0(x)_p)(-p) ->> F_p x / F_{p-1} x.
template <class F>
GradedMorphism<F> alpha_p(const GradedPresentation<F>& x, int p) {
    const auto& k = x.field();
    const auto t0 = t0_presentation(x);
    const auto pb = piece(t0, p);
    const GradedPresentation<F> src = free_object(k, static_cast<int>(pb.dim), x.nvars(), p);
    const GradedPresentation<F> quot = filtration_graded_piece(x, p);
    // quotient generators follow the x-generators of degree <= p, in order
    std::vector<std::size_t> row_of_gen(x.rank(), SIZE_MAX);
    {
        std::size_t row = 0;
        for (std::size_t j = 0; j < x.rank(); ++j)
            if (x.gens()[j] <= p) row_of_gen[j] = row++;
    }
    std::vector<MultiPoly<F>> mat(quot.rank() * pb.dim, MultiPoly<F>::zero(x.nvars()));
    for (std::size_t c = 0; c < pb.dim; ++c) {
        const auto& [gen, mono] = pb.basis[c];
        const std::size_t row = row_of_gen[static_cast<std::size_t>(gen)];
        mat[row * pb.dim + c] = MultiPoly<F>::term(k, x.nvars(), mono, k.one());
    }
    return GradedMorphism<F>(src, quot, std::move(mat));
}

}  // namespace polyhom
