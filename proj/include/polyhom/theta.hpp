#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polyhom/endo_module.hpp"
#include "polyhom/graded_module.hpp"
#include "polyhom/koszul.hpp"

namespace polyhom {

// The dehomogenization functor from two-variable graded presentations to
// k[t]-modules: psi goes to 1 and phi goes to t. It computes the colimit
// along psi on finite data.

namespace detail {

template <class F>
UniPoly<F> dehomogenize_poly(const F& k, const MultiPoly<F>& p) {
    UniPoly<F> out;
    for (const auto& [m, c] : p.terms) {
        const std::size_t b = static_cast<std::size_t>(m.e[1]);
        if (out.c.size() < b + 1) out.c.resize(b + 1, k.zero());
        out.c[b] = k.add(out.c[b], c);
    }
    out.trim(k);
    return out;
}

}  // namespace detail

template <class F>
EndoModule<F> theta(const GradedPresentation<F>& x) {
    if (x.nvars() != 2) throw std::invalid_argument("theta: needs exactly two variables");
    const auto& k = x.field();
    std::vector<EndoVec<F>> rels;
    for (const auto& rel : x.rels()) {
        EndoVec<F> col(x.rank());
        bool nonzero = false;
        for (std::size_t j = 0; j < x.rank(); ++j) {
            col[j] = detail::dehomogenize_poly(k, rel.entries[j]);
            nonzero |= !col[j].is_zero();
        }
        if (nonzero) rels.push_back(std::move(col));
    }
    return EndoModule<F>(k, x.rank(), std::move(rels));
}

template <class F>
EndoMorphism<F> theta_morphism(const GradedMorphism<F>& f) {
    const auto& k = f.source().field();
    EndoModule<F> src = theta(f.source());
    EndoModule<F> tgt = theta(f.target());
    UniPolyMatrix<F> mat(tgt.rank(), src.rank());
    for (std::size_t i = 0; i < tgt.rank(); ++i)
        for (std::size_t j = 0; j < src.rank(); ++j)
            mat.at(i, j) = detail::dehomogenize_poly(k, f.at(i, j));
    return EndoMorphism<F>(std::move(src), std::move(tgt), std::move(mat));
}

/// Witness that psi^index annihilates the module.
template <class F>
struct NilCertificate {
    GradedPresentation<F> module;
    std::size_t index = 0;
};

/// Complete nilpotence test: theta(x) = 0 iff x is psi-nilpotent; on success
/// the least annihilating power is found by incrementing the exponent.
template <class F>
std::optional<NilCertificate<F>> is_psi_nilpotent(const GradedPresentation<F>& x) {
    if (x.nvars() != 2) throw std::invalid_argument("is_psi_nilpotent: needs two variables");
    const auto& k = x.field();
    if (!endo_is_zero(theta(x))) return std::nullopt;
    for (std::size_t n = 0;; ++n) {
        bool all_in = true;
        for (std::size_t j = 0; j < x.rank() && all_in; ++j) {
            ModuleVec<F> v = mv_zero<F>(2, x.rank());
            v[j] = MultiPoly<F>::term(k, 2, Monomial::var(2, 0, static_cast<int>(n)), k.one());
            all_in = in_submodule(k, v, x.rel_gb());
        }
        if (all_in) return NilCertificate<F>{x, n};
        if (n > 4096) throw std::logic_error("is_psi_nilpotent: no certificate found");
    }
}

/// The psi-torsion submodule: the union of the ascending kernels of psi^n.
/// The stabilization index is found first through numerators alone --
/// ker(psi^n) has class N(x) - q^(-n) (N(x) - N(x/im psi^n)), and the chain
/// has stabilized exactly when consecutive classes agree -- and only then is
/// the one kernel presentation extracted.
template <class F>
SubmodulePresentation<F> psi_torsion(const GradedPresentation<F>& x) {
    if (x.nvars() != 2) throw std::invalid_argument("psi_torsion: needs two variables");
    const auto& k = x.field();
    const KPolynomial nx = kpoly(x);

    auto kernel_numerator = [&](std::size_t n) {
        std::vector<Relation<F>> rels = x.rels();
        for (std::size_t j = 0; j < x.rank(); ++j) {
            ModuleVec<F> col = mv_zero<F>(2, x.rank());
            col[j] = MultiPoly<F>::term(k, 2, Monomial::var(2, 0, static_cast<int>(n)), k.one());
            rels.push_back(Relation<F>{x.gens()[j] + static_cast<int>(n), std::move(col)});
        }
        const GradedPresentation<F> quot(k, 2, x.gens(), std::move(rels));
        const KPolynomial n_image = kp_sub(nx, kpoly(quot));
        return kp_sub(nx, kp_shift(n_image, -static_cast<int>(n)));
    };

    std::size_t stable_n = 1;
    KPolynomial current = kernel_numerator(1);
    for (std::size_t n = 2;; ++n) {
        const KPolynomial next = kernel_numerator(n);
        if (next == current) break;
        current = next;
        stable_n = n;
        if (n > 4096) throw std::logic_error("psi_torsion: kernel chain did not stabilize");
    }

    std::vector<ModuleVec<F>> inputs;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        ModuleVec<F> v = mv_zero<F>(2, x.rank());
        v[j] = MultiPoly<F>::term(k, 2, Monomial::var(2, 0, static_cast<int>(stable_n)), k.one());
        inputs.push_back(std::move(v));
    }
    for (const auto& r : x.rels()) inputs.push_back(r.entries);
    const auto syz = syzygies_of_inputs(k, inputs, x.ambient());
    std::vector<ModuleVec<F>> vecs;
    for (const auto& z : syz.generators) {
        ModuleVec<F> head(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(x.rank()));
        if (!mv_is_zero(head)) vecs.push_back(std::move(head));
    }
    SubmodulePresentation<F> torsion = pruned_submodule_from_vectors(x, vecs);
    if (kpoly(torsion.module) != current)
        throw std::logic_error("psi_torsion: presentation disagrees with the numerator route");
    return torsion;
}

/// The psi-free quotient z = x / (psi-torsion), with injective psi maps.
template <class F>
GradedPresentation<F> psi_free_quotient(const GradedPresentation<F>& x) {
    return cokernel(psi_torsion(x).inclusion);
}

/// (a[phi](-m), 0, phi): a_dim generators in degree m with psi acting as zero.
template <class F>
GradedPresentation<F> embed_nil(const F& k, int a_dim, int m) {
    std::vector<int> gens(static_cast<std::size_t>(a_dim), m);
    std::vector<Relation<F>> rels;
    for (int j = 0; j < a_dim; ++j) {
        ModuleVec<F> col = mv_zero<F>(2, static_cast<std::size_t>(a_dim));
        col[static_cast<std::size_t>(j)] = MultiPoly<F>::variable(k, 2, 0);
        rels.push_back(Relation<F>{m + 1, std::move(col)});
    }
    return GradedPresentation<F>(k, 2, std::move(gens), std::move(rels));
}

/// Sends a one-variable object (x, psi^1) to (x, 0, psi^1): the single
/// variable becomes phi and psi acts as zero.
template <class F>
GradedPresentation<F> gr1_to_nil2(const GradedPresentation<F>& x) {
    if (x.nvars() != 1) throw std::invalid_argument("gr1_to_nil2: needs one variable");
    const auto& k = x.field();
    std::vector<Relation<F>> rels;
    for (const auto& r : x.rels()) {
        ModuleVec<F> col;
        for (const auto& p : r.entries) col.push_back(mp_rename_vars(p, 2, {1}));
        rels.push_back(Relation<F>{r.degree, std::move(col)});
    }
    for (std::size_t j = 0; j < x.rank(); ++j) {
        ModuleVec<F> col = mv_zero<F>(2, x.rank());
        col[j] = MultiPoly<F>::variable(k, 2, 0);
        rels.push_back(Relation<F>{x.gens()[j] + 1, std::move(col)});
    }
    return GradedPresentation<F>(k, 2, x.gens(), std::move(rels));
}

namespace detail {

/// Projection of a two-variable presentation with psi annihilating every
/// generator onto its one-variable (phi) presentation.
template <class F>
GradedPresentation<F> project_to_gr1(const GradedPresentation<F>& q) {
    const auto& k = q.field();
    for (std::size_t j = 0; j < q.rank(); ++j) {
        ModuleVec<F> v = mv_zero<F>(2, q.rank());
        v[j] = MultiPoly<F>::variable(k, 2, 0);
        if (!in_submodule(k, v, q.rel_gb()))
            throw std::logic_error("project_to_gr1: psi does not annihilate the generators");
    }
    std::vector<Relation<F>> rels;
    for (const auto& r : q.rels()) {
        ModuleVec<F> col;
        bool nonzero = false;
        for (const auto& p : r.entries) {
            MultiPoly<F> out = MultiPoly<F>::zero(1);
            for (const auto& [m, c] : p.terms) {
                if (m.e[0] > 0) continue;  // psi-multiples vanish in the quotient
                mp_add_term(k, out, Monomial{{m.e[1]}}, c);
            }
            nonzero |= !out.is_zero();
            col.push_back(std::move(out));
        }
        if (nonzero) rels.push_back(Relation<F>{r.degree, std::move(col)});
    }
    return GradedPresentation<F>(k, 1, q.gens(), std::move(rels));
}

}  // namespace detail

/// The dévissage factors of a nilpotent object: the subquotients
/// im(psi^k)/im(psi^{k+1}) for k below the certificate index, each presented
/// as a one-variable object.
template <class F>
std::vector<GradedPresentation<F>> nil_filtration_factors(const GradedPresentation<F>& x) {
    const auto cert = is_psi_nilpotent(x);
    if (!cert) throw std::invalid_argument("nil_filtration_factors: module is not psi-nilpotent");
    const auto& k = x.field();
    std::vector<GradedPresentation<F>> out;

    auto image_submodule = [&](std::size_t power) {
        std::vector<ModuleVec<F>> vecs;
        for (std::size_t j = 0; j < x.rank(); ++j) {
            ModuleVec<F> v = mv_zero<F>(2, x.rank());
            v[j] = MultiPoly<F>::term(k, 2, Monomial::var(2, 0, static_cast<int>(power)), k.one());
            vecs.push_back(std::move(v));
        }
        return submodule_from_vectors(x, vecs);
    };

    for (std::size_t kk = 0; kk < cert->index; ++kk) {
        const auto sk = image_submodule(kk);
        const auto sk1 = image_submodule(kk + 1);
        std::vector<Relation<F>> rels = sk.module.rels();
        for (std::size_t j = 0; j < sk1.module.rank(); ++j) {
            const ModuleVec<F> gen = sk1.inclusion.column(j);
            auto coords = lift_through_submodule(sk, gen);
            if (!coords)
                throw std::logic_error("nil_filtration_factors: im(psi^{k+1}) escapes im(psi^k)");
            if (mv_is_zero(*coords)) continue;
            const auto d = mv_degree<F>(*coords, sk.module.gens());
            rels.push_back(Relation<F>{*d, std::move(*coords)});
        }
        GradedPresentation<F> quotient(k, 2, sk.module.gens(), std::move(rels));
        out.push_back(minimalize(detail::project_to_gr1(quotient)));
    }
    return out;
}

/// Bounded-search preimage for a morphism a[t] -> theta(y): homogenize with
/// psi at degree shift k. Returns the shift and the graded lift, whose theta
/// re-verifies against the input.
template <class F>
struct FullnessLift {
    std::size_t shift_k = 0;
    GradedMorphism<F> lift;
};

template <class F>
std::optional<FullnessLift<F>> fullness_lift(const F& k, std::size_t a_dim,
                                             const GradedPresentation<F>& y,
                                             const UniPolyMatrix<F>& map_to_theta_y,
                                             std::size_t max_shift) {
    if (map_to_theta_y.rows != y.rank() || map_to_theta_y.cols != a_dim)
        throw std::invalid_argument("fullness_lift: matrix shape mismatch");
    for (std::size_t shift = 0; shift <= max_shift; ++shift) {
        bool feasible = true;
        std::vector<MultiPoly<F>> mat(y.rank() * a_dim, MultiPoly<F>::zero(2));
        for (std::size_t i = 0; i < y.rank() && feasible; ++i)
            for (std::size_t j = 0; j < a_dim && feasible; ++j) {
                const auto& w = map_to_theta_y.at(i, j);
                MultiPoly<F> entry = MultiPoly<F>::zero(2);
                for (std::size_t b = 0; b < w.c.size(); ++b) {
                    if (k.is_zero(w.c[b])) continue;
                    const int a_exp = static_cast<int>(shift) - y.gens()[i] - static_cast<int>(b);
                    if (a_exp < 0) {
                        feasible = false;
                        break;
                    }
                    Monomial mono{{a_exp, static_cast<int>(b)}};
                    mp_add_term(k, entry, mono, w.c[b]);
                }
                mat[i * a_dim + j] = std::move(entry);
            }
        if (!feasible) continue;
        const GradedPresentation<F> src =
            free_object(k, static_cast<int>(a_dim), 2, static_cast<int>(shift));
        GradedMorphism<F> u(src, y, std::move(mat));
        // re-verify: theta of the lift equals the input modulo target relations
        const EndoMorphism<F> tu = theta_morphism(u);
        SubmoduleRep<F> zero_span(tu.target(), {});
        bool equal = true;
        for (std::size_t j = 0; j < a_dim && equal; ++j) {
            EndoVec<F> diff(y.rank());
            for (std::size_t i = 0; i < y.rank(); ++i)
                diff[i] = up_sub(k, tu.matrix().at(i, j), map_to_theta_y.at(i, j));
            equal = submodule_contains(zero_span, diff);
        }
        if (equal) return FullnessLift<F>{shift, std::move(u)};
    }
    return std::nullopt;
}

}  // namespace polyhom
