#pragma once

// Seeded random instance generators for the property suites. Everything is
// driven by SplitMix64 so runs are reproducible from the seed alone.

#include <vector>

#include "polyhom/endo_module.hpp"
#include "polyhom/k0.hpp"
#include "polyhom/rng.hpp"

namespace polyhom {

struct GenConfig {
    int nvars = 2;
    int max_gens = 6;
    int max_degree = 6;
};

template <class F>
typename F::Elem random_elem(const F& k, SplitMix64& rng, bool nonzero = false) {
    for (;;) {
        const auto e = k.from_int(rng.range(-6, 6));
        if (!nonzero || !k.is_zero(e)) return e;
    }
}

template <class F>
MultiPoly<F> random_homogeneous(const F& k, SplitMix64& rng, int nvars, int d,
                                unsigned density_pct = 60) {
    MultiPoly<F> p = MultiPoly<F>::zero(nvars);
    for (const auto& mono : monomials_of_degree(nvars, d))
        if (rng.chance(density_pct)) mp_add_term(k, p, mono, random_elem(k, rng));
    return p;
}

template <class F>
GradedPresentation<F> random_presentation(const F& k, SplitMix64& rng, const GenConfig& cfg) {
    const int ngens = static_cast<int>(rng.range(1, std::min(cfg.max_gens, 4)));
    std::vector<int> gens;
    for (int j = 0; j < ngens; ++j) gens.push_back(static_cast<int>(rng.range(0, 3)));
    const int nrels = static_cast<int>(rng.range(0, ngens + 1));
    std::vector<Relation<F>> rels;
    for (int r = 0; r < nrels; ++r) {
        int dmin = gens[0];
        for (int d : gens) dmin = std::min(dmin, d);
        const int e = static_cast<int>(rng.range(dmin + 1, std::min(cfg.max_degree, dmin + 4)));
        ModuleVec<F> col = mv_zero<F>(cfg.nvars, gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const int rem = e - gens[j];
            if (rem < 0) continue;
            col[j] = random_homogeneous(k, rng, cfg.nvars, rem, 45);
        }
        if (!mv_is_zero(col)) rels.push_back(Relation<F>{e, std::move(col)});
    }
    return GradedPresentation<F>(k, cfg.nvars, std::move(gens), std::move(rels));
}

template <class F>
std::vector<ModuleVec<F>> random_submodule_vectors(const F& k, SplitMix64& rng,
                                                   const GradedPresentation<F>& x, int count,
                                                   int max_degree) {
    std::vector<ModuleVec<F>> out;
    for (int c = 0; c < count; ++c) {
        int dmin = 0;
        for (int d : x.gens()) dmin = std::min(dmin == 0 ? d : dmin, d);
        const int e = static_cast<int>(rng.range(dmin, max_degree));
        ModuleVec<F> v = mv_zero<F>(x.nvars(), x.rank());
        for (std::size_t j = 0; j < x.rank(); ++j) {
            const int rem = e - x.gens()[j];
            if (rem < 0) continue;
            v[j] = random_homogeneous(k, rng, x.nvars(), rem, 40);
        }
        if (!mv_is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

/// A certified-by-construction short exact sequence: random middle, random
/// submodule, cokernel quotient.
template <class F>
ShortExactSequence<F> random_ses(const F& k, SplitMix64& rng, const GenConfig& cfg) {
    const GradedPresentation<F> middle = random_presentation(k, rng, cfg);
    const auto vecs = random_submodule_vectors(k, rng, middle,
                                               static_cast<int>(rng.range(1, 2)), cfg.max_degree);
    return ses_from_submodule(middle, vecs);
}

/// Random psi-nilpotent object: a random presentation with psi powers killing
/// every generator.
template <class F>
GradedPresentation<F> random_nilpotent(const F& k, SplitMix64& rng, const GenConfig& cfg) {
    const GradedPresentation<F> base = random_presentation(k, rng, cfg);
    std::vector<Relation<F>> rels = base.rels();
    for (std::size_t j = 0; j < base.rank(); ++j) {
        const int c = static_cast<int>(rng.range(1, 2));
        ModuleVec<F> col = mv_zero<F>(2, base.rank());
        col[j] = MultiPoly<F>::term(k, 2, Monomial::var(2, 0, c), k.one());
        rels.push_back(Relation<F>{base.gens()[j] + c, std::move(col)});
    }
    return GradedPresentation<F>(k, 2, base.gens(), std::move(rels));
}

template <class F>
UniPoly<F> random_unipoly(const F& k, SplitMix64& rng, int max_deg) {
    UniPoly<F> p;
    const int d = static_cast<int>(rng.range(-1, max_deg));
    if (d >= 0) {
        p.c.assign(static_cast<std::size_t>(d) + 1, k.zero());
        for (auto& e : p.c) e = random_elem(k, rng);
        p.c.back() = random_elem(k, rng, true);
    }
    return p;
}

template <class F>
EndoModule<F> random_endo(const F& k, SplitMix64& rng, std::size_t max_rank = 3,
                          int max_deg = 2) {
    const std::size_t gens = static_cast<std::size_t>(rng.range(1, static_cast<long long>(max_rank)));
    const int nrels = static_cast<int>(rng.range(0, 3));
    std::vector<EndoVec<F>> rels;
    for (int c = 0; c < nrels; ++c) {
        EndoVec<F> col(gens);
        bool nonzero = false;
        for (auto& e : col) {
            e = random_unipoly(k, rng, max_deg);
            nonzero |= !e.is_zero();
        }
        if (nonzero) rels.push_back(std::move(col));
    }
    return EndoModule<F>(k, gens, std::move(rels));
}

/// Random graded k[t]-module: homogeneous single-term relation columns over
/// generators with degrees. Half of the instances are forced t-nilpotent.
template <class F>
EndoModule<F> random_graded_endo(const F& k, SplitMix64& rng, std::vector<int>& degrees_out) {
    const std::size_t gens = static_cast<std::size_t>(rng.range(1, 3));
    degrees_out.clear();
    for (std::size_t j = 0; j < gens; ++j)
        degrees_out.push_back(static_cast<int>(rng.range(0, 2)));
    std::vector<EndoVec<F>> rels;
    const int nrels = static_cast<int>(rng.range(0, 2));
    for (int c = 0; c < nrels; ++c) {
        const int e = static_cast<int>(rng.range(1, 4));
        EndoVec<F> col(gens);
        bool nonzero = false;
        for (std::size_t j = 0; j < gens; ++j) {
            const int exp = e - degrees_out[j];
            if (exp < 0 || rng.chance(40)) continue;
            UniPoly<F> term;
            term.c.assign(static_cast<std::size_t>(exp) + 1, k.zero());
            term.c.back() = random_elem(k, rng, true);
            col[j] = std::move(term);
            nonzero = true;
        }
        if (nonzero) rels.push_back(std::move(col));
    }
    if (rng.chance(50)) {
        // force t-nilpotence: a t-power kills each generator
        for (std::size_t j = 0; j < gens; ++j) {
            EndoVec<F> col(gens);
            col[j] = UniPoly<F>::t_power(k, static_cast<std::size_t>(rng.range(1, 3)));
            rels.push_back(std::move(col));
        }
    }
    return EndoModule<F>(k, gens, std::move(rels));
}

}  // namespace polyhom
