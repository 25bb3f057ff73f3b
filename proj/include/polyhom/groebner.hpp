#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "polyhom/field.hpp"
#include "polyhom/kpolynomial.hpp"
#include "polyhom/monomial.hpp"
#include "polyhom/multipoly.hpp"

namespace polyhom {

/// Graded free module over k[x1..xn]: generator j sits in degree shifts[j].
struct FreeGradedModule {
    int nvars = 0;
    std::vector<int> shifts;

    std::size_t rank() const { return shifts.size(); }
    bool operator==(const FreeGradedModule& o) const {
        return nvars == o.nvars && shifts == o.shifts;
    }
    bool operator!=(const FreeGradedModule& o) const { return !(*this == o); }
};

/// Auto-reduced Groebner basis of a graded submodule, under the
/// position-over-term grevlex order. Elements are monic. Each element also
/// carries its expression in the original input generators, which drives
/// syzygy computations for arbitrary generating sets.
template <class F>
struct GroebnerBasis {
    FreeGradedModule ambient;
    std::vector<ModuleVec<F>> elems;
    std::vector<TermPos> leads;
    std::vector<int> degrees;  // homogeneous degree of each element

    std::vector<int> input_degrees;      // degrees of the original generators
    std::vector<ModuleVec<F>> expr;      // elems[i] = sum_l expr[i][l] * input[l]

    static constexpr const char* order_tag = "POT-grevlex";
};

namespace detail {

template <class F>
void validate_ambient_vector(const ModuleVec<F>& v, const FreeGradedModule& ambient,
                             const char* who) {
    if (v.size() != ambient.rank())
        throw std::invalid_argument(std::string(who) + ": ambient rank mismatch");
    for (const auto& p : v)
        if (p.nvars != ambient.nvars)
            throw std::invalid_argument(std::string(who) + ": ambient variable count mismatch");
}

}  // namespace detail

/// Division with remainder by the basis elements; when quotients is non-null
/// it receives, per basis element, the polynomial factor used.
template <class F>
ModuleVec<F> normal_form_with_quotients(const F& k, const ModuleVec<F>& input,
                                        const GroebnerBasis<F>& gb,
                                        std::vector<MultiPoly<F>>* quotients) {
    detail::validate_ambient_vector(input, gb.ambient, "normal_form");
    if (quotients) quotients->assign(gb.elems.size(), MultiPoly<F>::zero(gb.ambient.nvars));
    ModuleVec<F> work = input;
    ModuleVec<F> rem = mv_zero<F>(gb.ambient.nvars, gb.ambient.rank());
    while (!mv_is_zero(work)) {
        const TermPos lt = mv_lead(work);
        const auto lc = work[static_cast<std::size_t>(lt.pos)].lead_coeff();
        bool reduced = false;
        for (std::size_t i = 0; i < gb.elems.size(); ++i) {
            const TermPos& gl = gb.leads[i];
            if (gl.pos != lt.pos || !mono_divides(gl.mon, lt.mon)) continue;
            const Monomial q = mono_div(lt.mon, gl.mon);
            // basis elements are monic, so the cofactor coefficient is lc
            work = mv_sub(k, work, mv_mul_term(k, gb.elems[i], q, lc));
            if (quotients) mp_add_term(k, (*quotients)[i], q, lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            mp_add_term(k, rem[static_cast<std::size_t>(lt.pos)], lt.mon, lc);
            mp_add_term(k, work[static_cast<std::size_t>(lt.pos)], lt.mon, k.neg(lc));
        }
    }
    return rem;
}

template <class F>
ModuleVec<F> normal_form(const F& k, const ModuleVec<F>& v, const GroebnerBasis<F>& gb) {
    return normal_form_with_quotients<F>(k, v, gb, nullptr);
}

template <class F>
bool in_submodule(const F& k, const ModuleVec<F>& v, const GroebnerBasis<F>& gb) {
    return mv_is_zero(normal_form(k, v, gb));
}

/// Buchberger's algorithm on homogeneous module generators. Throws on
/// non-homogeneous input. The returned basis is auto-reduced and monic, sorted
/// by descending lead term.
template <class F>
GroebnerBasis<F> buchberger(const F& k, const std::vector<ModuleVec<F>>& generators,
                            const FreeGradedModule& ambient) {
    GroebnerBasis<F> gb;
    gb.ambient = ambient;
    for (const auto& g : generators) {
        detail::validate_ambient_vector(g, ambient, "buchberger");
        if (!mv_is_homogeneous<F>(g, ambient.shifts))
            throw std::invalid_argument("buchberger: non-homogeneous generator");
        gb.input_degrees.push_back(mv_degree<F>(g, ambient.shifts).value_or(0));
    }

    const std::size_t nin = generators.size();
    auto push_elem = [&](ModuleVec<F> v, ModuleVec<F> ex) {
        const auto lc = mv_lead_coeff(v);
        if (!k.is_one(lc)) {
            const auto s = k.inv(lc);
            v = mv_scale(k, s, v);
            ex = mv_scale(k, s, ex);
        }
        gb.leads.push_back(mv_lead(v));
        gb.degrees.push_back(*mv_degree<F>(v, ambient.shifts));
        gb.elems.push_back(std::move(v));
        gb.expr.push_back(std::move(ex));
    };

    for (std::size_t l = 0; l < nin; ++l) {
        if (mv_is_zero(generators[l])) continue;
        ModuleVec<F> ex = mv_zero<F>(ambient.nvars, nin);
        ex[l] = MultiPoly<F>::one(k, ambient.nvars);
        push_elem(generators[l], std::move(ex));
    }

    // pending S-pairs ordered by lcm degree, then indices
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (gb.leads[i].pos != gb.leads[j].pos) continue;
            const Monomial u = mono_lcm(gb.leads[i].mon, gb.leads[j].mon);
            pairs.emplace(u.deg(), i, j);
        }
    };
    for (std::size_t j = 0; j < gb.elems.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        const auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const Monomial u = mono_lcm(gb.leads[i].mon, gb.leads[j].mon);
        const Monomial a = mono_div(u, gb.leads[i].mon);
        const Monomial b = mono_div(u, gb.leads[j].mon);
        ModuleVec<F> s = mv_sub(k, mv_mul_term(k, gb.elems[i], a, k.one()),
                                mv_mul_term(k, gb.elems[j], b, k.one()));
        ModuleVec<F> sx = mv_sub(k, mv_mul_term(k, gb.expr[i], a, k.one()),
                                 mv_mul_term(k, gb.expr[j], b, k.one()));
        std::vector<MultiPoly<F>> q;
        const ModuleVec<F> rem = normal_form_with_quotients(k, s, gb, &q);
        if (mv_is_zero(rem)) continue;
        for (std::size_t t = 0; t < gb.elems.size(); ++t)
            if (!q[t].is_zero()) sx = mv_sub(k, sx, mv_mul_poly(k, gb.expr[t], q[t]));
        push_elem(rem, std::move(sx));
        add_pairs_for(gb.elems.size() - 1);
    }

    // auto-reduction: drop elements whose lead is divisible by another lead,
    // then tail-reduce every survivor against the rest
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gb.elems.size(); ++i) {
            GroebnerBasis<F> others;
            others.ambient = gb.ambient;
            for (std::size_t t = 0; t < gb.elems.size(); ++t) {
                if (t == i) continue;
                others.elems.push_back(gb.elems[t]);
                others.leads.push_back(gb.leads[t]);
            }
            std::vector<MultiPoly<F>> q;
            others.expr.assign(others.elems.size(), ModuleVec<F>{});  // unused here
            const ModuleVec<F> red = normal_form_with_quotients(k, gb.elems[i], others, &q);
            if (mv_eq(k, red, gb.elems[i])) continue;
            changed = true;
            ModuleVec<F> ex = gb.expr[i];
            std::size_t qi = 0;
            for (std::size_t t = 0; t < gb.elems.size(); ++t) {
                if (t == i) continue;
                if (!q[qi].is_zero()) ex = mv_sub(k, ex, mv_mul_poly(k, gb.expr[t], q[qi]));
                ++qi;
            }
            if (mv_is_zero(red)) {
                gb.elems.erase(gb.elems.begin() + static_cast<std::ptrdiff_t>(i));
                gb.leads.erase(gb.leads.begin() + static_cast<std::ptrdiff_t>(i));
                gb.degrees.erase(gb.degrees.begin() + static_cast<std::ptrdiff_t>(i));
                gb.expr.erase(gb.expr.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                const auto lc = mv_lead_coeff(red);
                const auto s = k.is_one(lc) ? k.one() : k.inv(lc);
                gb.elems[i] = k.is_one(lc) ? red : mv_scale(k, s, red);
                gb.expr[i] = k.is_one(lc) ? ex : mv_scale(k, s, ex);
                gb.leads[i] = mv_lead(gb.elems[i]);
                gb.degrees[i] = *mv_degree<F>(gb.elems[i], ambient.shifts);
            }
            break;
        }
    }

    // canonical order: descending lead terms
    std::vector<std::size_t> idx(gb.elems.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return term_cmp(gb.leads[x], gb.leads[y]) > 0;
    });
    GroebnerBasis<F> out;
    out.ambient = gb.ambient;
    out.input_degrees = gb.input_degrees;
    for (auto i : idx) {
        out.elems.push_back(gb.elems[i]);
        out.leads.push_back(gb.leads[i]);
        out.degrees.push_back(gb.degrees[i]);
        out.expr.push_back(gb.expr[i]);
    }
    return out;
}

template <class F>
struct SyzygyResult {
    FreeGradedModule free;  // one generator per basis/input element
    std::vector<ModuleVec<F>> generators;
};

/// Schreyer syzygies of the (auto-reduced) basis elements: one relation per
/// same-position S-pair, obtained from its division to zero.
template <class F>
SyzygyResult<F> syzygies(const F& k, const GroebnerBasis<F>& gb) {
    SyzygyResult<F> out;
    out.free = FreeGradedModule{gb.ambient.nvars, gb.degrees};
    const std::size_t n = gb.elems.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (gb.leads[i].pos != gb.leads[j].pos) continue;
            const Monomial u = mono_lcm(gb.leads[i].mon, gb.leads[j].mon);
            const Monomial a = mono_div(u, gb.leads[i].mon);
            const Monomial b = mono_div(u, gb.leads[j].mon);
            ModuleVec<F> s = mv_sub(k, mv_mul_term(k, gb.elems[i], a, k.one()),
                                    mv_mul_term(k, gb.elems[j], b, k.one()));
            std::vector<MultiPoly<F>> q;
            const ModuleVec<F> rem = normal_form_with_quotients(k, s, gb, &q);
            if (!mv_is_zero(rem))
                throw std::logic_error("syzygies: S-vector did not reduce to zero");
            ModuleVec<F> z = mv_zero<F>(gb.ambient.nvars, n);
            mp_add_term(k, z[i], a, k.one());
            mp_add_term(k, z[j], b, k.neg(k.one()));
            for (std::size_t t = 0; t < n; ++t)
                if (!q[t].is_zero()) z[t] = mp_sub(k, z[t], q[t]);
            if (!mv_is_zero(z)) out.generators.push_back(std::move(z));
        }
    return out;
}

/// Generators of the full syzygy module of an arbitrary homogeneous
/// generating set: Schreyer syzygies pushed through the basis expressions,
/// plus the conversion relations input_l - sum quotients * basis.
template <class F>
SyzygyResult<F> syzygies_of_inputs(const F& k, const std::vector<ModuleVec<F>>& inputs,
                                   const FreeGradedModule& ambient) {
    const GroebnerBasis<F> gb = buchberger(k, inputs, ambient);
    SyzygyResult<F> out;
    out.free = FreeGradedModule{ambient.nvars, gb.input_degrees};
    const std::size_t nin = inputs.size();

    const SyzygyResult<F> sch = syzygies(k, gb);
    for (const auto& z : sch.generators) {
        ModuleVec<F> w = mv_zero<F>(ambient.nvars, nin);
        for (std::size_t t = 0; t < gb.elems.size(); ++t)
            if (!z[t].is_zero()) w = mv_add(k, w, mv_mul_poly(k, gb.expr[t], z[t]));
        if (!mv_is_zero(w)) out.generators.push_back(std::move(w));
    }
    for (std::size_t l = 0; l < nin; ++l) {
        std::vector<MultiPoly<F>> q;
        const ModuleVec<F> rem = normal_form_with_quotients(k, inputs[l], gb, &q);
        if (!mv_is_zero(rem))
            throw std::logic_error("syzygies_of_inputs: input not in its own submodule");
        ModuleVec<F> w = mv_zero<F>(ambient.nvars, nin);
        w[l] = MultiPoly<F>::one(k, ambient.nvars);
        for (std::size_t t = 0; t < gb.elems.size(); ++t)
            if (!q[t].is_zero()) w = mv_sub(k, w, mv_mul_poly(k, gb.expr[t], q[t]));
        if (!mv_is_zero(w)) out.generators.push_back(std::move(w));
    }
    return out;
}

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(gens[j], gens[i]) &&
                !(gens[i] == gens[j] && j > i))
                redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

/// Numerator of the Hilbert series of k[x]/(monomial ideal), via the colon
/// recursion N(I + (m)) = N(I) - q^deg(m) N(I : m).
inline KPolynomial mono_ideal_numerator(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return KPolynomial::one();
    if (gens.size() == 1 && gens[0].is_one()) return KPolynomial::zero();
    const Monomial m = gens.back();
    gens.pop_back();
    const KPolynomial without = mono_ideal_numerator(gens);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(mono_div(g, mono_gcd(g, m)));
    const KPolynomial with_colon = mono_ideal_numerator(std::move(colon));
    return kp_sub(without, kp_mul(KPolynomial::monomial(m.deg(), 1), with_colon));
}

}  // namespace detail

/// Hilbert numerator N(q) of (ambient free module)/(submodule): the Hilbert
/// series equals N(q)/(1-q)^nvars. Computed from the lead-term module.
template <class F>
KPolynomial hilbert_numerator(const F&, const GroebnerBasis<F>& gb) {
    KPolynomial total = KPolynomial::zero();
    for (std::size_t pos = 0; pos < gb.ambient.rank(); ++pos) {
        std::vector<Monomial> leads;
        for (std::size_t i = 0; i < gb.elems.size(); ++i)
            if (gb.leads[i].pos == static_cast<int>(pos)) leads.push_back(gb.leads[i].mon);
        const KPolynomial npos = detail::mono_ideal_numerator(std::move(leads));
        total = kp_add(total, kp_shift(npos, gb.ambient.shifts[pos]));
    }
    return total;
}

}  // namespace polyhom
