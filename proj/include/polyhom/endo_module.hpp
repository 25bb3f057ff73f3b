#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "polyhom/field.hpp"
#include "polyhom/unipoly.hpp"

namespace polyhom {

/// Raised when a bounded search (Artin-Rees) exhausts its bound: the theorem
/// guarantees existence of the index, not a bound for it.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
using EndoVec = std::vector<UniPoly<F>>;

/// Finitely presented k[t]-module in Smith-reduced form: r generators,
/// relation columns, and the cached SNF invariants (free rank and the chain of
/// monic torsion divisors).
template <class F>
class EndoModule {
public:
    EndoModule(F field, std::size_t gens, std::vector<EndoVec<F>> rels)
        : field_(std::move(field)), gens_(gens), rels_(std::move(rels)) {
        for (const auto& col : rels_)
            if (col.size() != gens_)
                throw std::invalid_argument("EndoModule: relation column length mismatch");
        const auto s = snf_unipoly(field_, rel_matrix());
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i) {
            const auto& e = s.d.at(i, i);
            if (e.is_zero()) continue;
            ++nonzero;
            if (e.degree() > 0) torsion_.push_back(e);
        }
        free_rank_ = gens_ - nonzero;
    }

    const F& field() const { return field_; }
    std::size_t rank() const { return gens_; }
    const std::vector<EndoVec<F>>& rels() const { return rels_; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<UniPoly<F>>& torsion() const { return torsion_; }

    UniPolyMatrix<F> rel_matrix() const {
        UniPolyMatrix<F> m(gens_, rels_.size());
        for (std::size_t c = 0; c < rels_.size(); ++c)
            for (std::size_t r = 0; r < gens_; ++r) m.at(r, c) = rels_[c][r];
        return m;
    }

private:
    F field_;
    std::size_t gens_;
    std::vector<EndoVec<F>> rels_;
    std::size_t free_rank_ = 0;
    std::vector<UniPoly<F>> torsion_;
};

template <class F>
bool endo_eq(const EndoModule<F>& a, const EndoModule<F>& b) {
    const auto& k = a.field();
    if (a.field().spec() != b.field().spec() || a.rank() != b.rank() ||
        a.rels().size() != b.rels().size())
        return false;
    for (std::size_t c = 0; c < a.rels().size(); ++c)
        for (std::size_t r = 0; r < a.rank(); ++r)
            if (!up_eq(k, a.rels()[c][r], b.rels()[c][r])) return false;
    return true;
}

/// Same SNF invariants: free rank plus the divisor chain.
template <class F>
bool endo_iso_invariants_eq(const EndoModule<F>& a, const EndoModule<F>& b) {
    const auto& k = a.field();
    if (a.free_rank() != b.free_rank() || a.torsion().size() != b.torsion().size()) return false;
    for (std::size_t i = 0; i < a.torsion().size(); ++i)
        if (!up_eq(k, a.torsion()[i], b.torsion()[i])) return false;
    return true;
}

template <class F>
bool endo_is_zero(const EndoModule<F>& m) {
    return m.free_rank() == 0 && m.torsion().empty();
}

/// a[t]: the free k[t]-module of rank a_dim.
template <class F>
EndoModule<F> poly_object(const F& k, std::size_t a_dim) {
    return EndoModule<F>(k, a_dim, {});
}

/// The class of m in K_0 of the polynomial category: the SNF free rank.
template <class F>
std::size_t rank_class(const EndoModule<F>& m) {
    return m.free_rank();
}

/// Least n with m t^n = 0, when m is t-power torsion; absent otherwise.
template <class F>
std::optional<std::size_t> nilpotency_index(const EndoModule<F>& m) {
    const auto& k = m.field();
    if (m.free_rank() != 0) return std::nullopt;
    std::size_t idx = 0;
    for (const auto& d : m.torsion()) {
        if (!up_is_term(k, d)) return std::nullopt;  // divisor not a power of t
        idx = std::max(idx, static_cast<std::size_t>(d.degree()));
    }
    return idx;
}

/// Checks the split exact sequence a[t] --(1-t)--> a[t] --(eval at 1)--> a:
/// multiplication by (1-t) I is injective and its cokernel is a copies of k
/// with t acting as the identity.
template <class F>
bool split_sequence_check(const F& k, std::size_t a_dim) {
    UniPolyMatrix<F> m(a_dim, a_dim);
    const UniPoly<F> one_minus_t = up_sub(k, UniPoly<F>::one(k), UniPoly<F>::t_power(k, 1));
    for (std::size_t i = 0; i < a_dim; ++i) m.at(i, i) = one_minus_t;
    const auto s = snf_unipoly(k, m);
    const UniPoly<F> t_minus_one = up_monic(k, one_minus_t);
    for (std::size_t i = 0; i < a_dim; ++i) {
        // injectivity (no zero divisor entries) and cokernel k[t]/(t-1) per
        // generator, on which t acts as 1
        if (!up_eq(k, s.d.at(i, i), t_minus_one)) return false;
    }
    // cokernel dimension over k equals a_dim: sum of divisor degrees
    std::size_t dim = 0;
    for (std::size_t i = 0; i < a_dim; ++i) dim += static_cast<std::size_t>(s.d.at(i, i).degree());
    return dim == a_dim;
}

// ---------------------------------------------------------------------------
// submodules

/// Submodule of an ambient module, given by generator vectors (well defined
/// modulo the ambient relations).
template <class F>
struct SubmoduleRep {
    EndoModule<F> ambient;
    std::vector<EndoVec<F>> gens;

    SubmoduleRep(EndoModule<F> amb, std::vector<EndoVec<F>> g)
        : ambient(std::move(amb)), gens(std::move(g)) {
        for (const auto& v : gens)
            if (v.size() != ambient.rank())
                throw std::invalid_argument("SubmoduleRep: generator length mismatch");
    }
};

/// The whole module as a submodule of itself.
template <class F>
SubmoduleRep<F> full_submodule(const EndoModule<F>& m) {
    const auto& k = m.field();
    std::vector<EndoVec<F>> gens;
    for (std::size_t j = 0; j < m.rank(); ++j) {
        EndoVec<F> e(m.rank());
        e[j] = UniPoly<F>::one(k);
        gens.push_back(std::move(e));
    }
    return SubmoduleRep<F>(m, std::move(gens));
}

namespace detail {

/// Columns spanning the submodule upstairs in k[t]^r: generators plus ambient
/// relations.
template <class F>
UniPolyMatrix<F> span_matrix(const SubmoduleRep<F>& s) {
    const std::size_t r = s.ambient.rank();
    UniPolyMatrix<F> m(r, s.gens.size() + s.ambient.rels().size());
    std::size_t c = 0;
    for (const auto& g : s.gens) {
        for (std::size_t i = 0; i < r; ++i) m.at(i, c) = g[i];
        ++c;
    }
    for (const auto& rel : s.ambient.rels()) {
        for (std::size_t i = 0; i < r; ++i) m.at(i, c) = rel[i];
        ++c;
    }
    return m;
}

}  // namespace detail

template <class F>
bool submodule_contains(const SubmoduleRep<F>& s, const EndoVec<F>& v) {
    return up_solve(s.ambient.field(), detail::span_matrix(s), v).has_value();
}

template <class F>
bool submodule_subset(const SubmoduleRep<F>& a, const SubmoduleRep<F>& b) {
    for (const auto& g : a.gens)
        if (!submodule_contains(b, g)) return false;
    return true;
}

/// Equality by mutual membership of generators.
template <class F>
bool submodule_eq(const SubmoduleRep<F>& a, const SubmoduleRep<F>& b) {
    return submodule_subset(a, b) && submodule_subset(b, a);
}

/// Submodule generated by t^n * (generators of x).
template <class F>
SubmoduleRep<F> t_power_image(const EndoModule<F>& x, std::size_t n) {
    const auto& k = x.field();
    const auto tn = UniPoly<F>::t_power(k, n);
    std::vector<EndoVec<F>> gens;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        EndoVec<F> e(x.rank());
        e[j] = tn;
        gens.push_back(std::move(e));
    }
    return SubmoduleRep<F>(x, std::move(gens));
}

/// t * s, inside the same ambient.
template <class F>
SubmoduleRep<F> t_scale(const SubmoduleRep<F>& s, std::size_t n = 1) {
    const auto& k = s.ambient.field();
    const auto tn = UniPoly<F>::t_power(k, n);
    std::vector<EndoVec<F>> gens;
    for (const auto& g : s.gens) {
        EndoVec<F> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = up_mul(k, tn, g[i]);
        gens.push_back(std::move(v));
    }
    return SubmoduleRep<F>(s.ambient, std::move(gens));
}

/// Intersection of two submodules of the same ambient, via the kernel of the
/// difference map over the PID k[t].
template <class F>
SubmoduleRep<F> intersect(const SubmoduleRep<F>& a, const SubmoduleRep<F>& b) {
    if (!endo_eq(a.ambient, b.ambient))
        throw std::invalid_argument("intersect: ambient mismatch");
    const auto& k = a.ambient.field();
    const std::size_t r = a.ambient.rank();
    const auto ma = detail::span_matrix(a);
    const auto mb = detail::span_matrix(b);
    UniPolyMatrix<F> stacked(r, ma.cols + mb.cols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < ma.cols; ++c) stacked.at(i, c) = ma.at(i, c);
        for (std::size_t c = 0; c < mb.cols; ++c)
            stacked.at(i, ma.cols + c) = up_neg(k, mb.at(i, c));
    }
    std::vector<EndoVec<F>> gens;
    for (const auto& w : up_kernel(k, stacked)) {
        EndoVec<F> v(r);
        bool nonzero = false;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = 0; c < ma.cols; ++c)
                v[i] = up_add(k, v[i], up_mul(k, ma.at(i, c), w[c]));
            nonzero |= !v[i].is_zero();
        }
        if (!nonzero) continue;
        normalize_generator(k, v);
        gens.push_back(std::move(v));
    }
    return SubmoduleRep<F>(a.ambient, std::move(gens));
}

/// Presentation of a submodule as an abstract module: its generators with all
/// their relations modulo the ambient ones.
template <class F>
EndoModule<F> submodule_presentation(const SubmoduleRep<F>& s) {
    const auto& k = s.ambient.field();
    const auto m = detail::span_matrix(s);
    std::vector<EndoVec<F>> rels;
    for (const auto& w : up_kernel(k, m)) {
        EndoVec<F> head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.gens.size()));
        bool nonzero = false;
        for (const auto& e : head) nonzero |= !e.is_zero();
        if (!nonzero) continue;
        normalize_generator(k, head);
        rels.push_back(std::move(head));
    }
    return EndoModule<F>(k, s.gens.size(), std::move(rels));
}

// ---------------------------------------------------------------------------
// t-filtrations

/// Rule for extending a listed filtration beyond its last stage.
template <class F>
struct StandardRule {
    SubmoduleRep<F> y;  // stages are im(t^n) intersect y
};
struct ExplicitOnly {};

template <class F>
using ExtensionRule = std::variant<StandardRule<F>, ExplicitOnly>;

/// Descending t-filtration x_0 >= x_1 >= ... >= x_B with t x_n contained in
/// x_{n+1}; x_0 is the whole module.
template <class F>
struct TFiltrationRep {
    EndoModule<F> ambient;
    std::vector<SubmoduleRep<F>> stages;
    ExtensionRule<F> rule;

    TFiltrationRep(EndoModule<F> amb, std::vector<SubmoduleRep<F>> st, ExtensionRule<F> r)
        : ambient(std::move(amb)), stages(std::move(st)), rule(std::move(r)) {
        if (stages.empty()) throw std::invalid_argument("TFiltrationRep: no stages");
        for (const auto& s : stages)
            if (!endo_eq(s.ambient, ambient))
                throw std::invalid_argument("TFiltrationRep: stage ambient mismatch");
        if (!submodule_eq(stages[0], full_submodule(ambient)))
            throw std::invalid_argument("TFiltrationRep: x_0 must be the whole module");
        for (std::size_t n = 0; n + 1 < stages.size(); ++n) {
            if (!submodule_subset(stages[n + 1], stages[n]))
                throw std::invalid_argument("TFiltrationRep: stages not descending");
            if (!submodule_subset(t_scale(stages[n]), stages[n + 1]))
                throw std::invalid_argument("TFiltrationRep: t x_n not contained in x_{n+1}");
        }
    }
};

/// The standard t-stable filtration {im(t^n) intersect y} up to the given
/// bound.
template <class F>
TFiltrationRep<F> standard_filtration(const EndoModule<F>& x, const SubmoduleRep<F>& y,
                                      std::size_t bound) {
    std::vector<SubmoduleRep<F>> stages;
    for (std::size_t n = 0; n <= bound; ++n)
        stages.push_back(intersect(t_power_image(x, n), y));
    return TFiltrationRep<F>(x, std::move(stages), StandardRule<F>{y});
}

/// Least n_0 with t x_n = x_{n+1} for all listed n >= n_0; absent when no such
/// index exists within the listed bound. For the standard rule the answer is
/// re-certified one stage beyond the list.
template <class F>
std::optional<std::size_t> stability_index(const TFiltrationRep<F>& f) {
    const std::size_t B = f.stages.size() - 1;
    std::vector<bool> ok(B, false);
    for (std::size_t n = 0; n < B; ++n)
        ok[n] = submodule_eq(t_scale(f.stages[n]), f.stages[n + 1]);
    std::optional<std::size_t> n0;
    for (std::size_t start = 0; start <= B; ++start) {
        bool all = true;
        for (std::size_t n = start; n < B; ++n) all &= ok[n];
        if (all) {
            n0 = start;
            break;
        }
    }
    if (!n0) return std::nullopt;
    if (*n0 == B && B > 0) return std::nullopt;  // nothing verified at the tail
    if (const auto* std_rule = std::get_if<StandardRule<F>>(&f.rule)) {
        const auto next = intersect(t_power_image(f.ambient, B + 1), std_rule->y);
        if (!submodule_eq(t_scale(f.stages[B]), next)) return std::nullopt;
    }
    return n0;
}

/// Abstract Artin-Rees index: least n_0 <= bound with
/// im(t^n) intersect y = t^(n-n_0) (im(t^(n_0)) intersect y) for every n in
/// [n_0, bound]. Throws BoundExceeded when no index within the bound works.
template <class F>
std::size_t artin_rees_index(const EndoModule<F>& x, const SubmoduleRep<F>& y,
                             std::size_t bound) {
    if (!endo_eq(y.ambient, x)) throw std::invalid_argument("artin_rees_index: ambient mismatch");
    if (bound < 1) throw std::invalid_argument("artin_rees_index: bound must be positive");
    std::vector<SubmoduleRep<F>> inter;
    for (std::size_t n = 0; n <= bound; ++n)
        inter.push_back(intersect(t_power_image(x, n), y));
    // candidates stop at bound - 1: the window [n0, bound] must contain at
    // least one non-trivial step, otherwise the bound certifies nothing
    for (std::size_t n0 = 0; n0 < bound; ++n0) {
        bool all = true;
        for (std::size_t n = n0; n <= bound && all; ++n)
            all = submodule_eq(inter[n], t_scale(inter[n0], n - n0));
        if (all) return n0;
    }
    throw BoundExceeded("artin_rees_index: no index within bound " + std::to_string(bound));
}

// ---------------------------------------------------------------------------
// graded k[t]-modules

/// Validates that the module is graded with the given generator degrees
/// (t raises degree by 1): every relation column must be homogeneous.
template <class F>
void validate_grading(const EndoModule<F>& m, const std::vector<int>& gen_degrees) {
    const auto& k = m.field();
    if (gen_degrees.size() != m.rank())
        throw std::invalid_argument("grading inconsistent: degree list length mismatch");
    for (const auto& col : m.rels()) {
        std::optional<int> degree;
        for (std::size_t j = 0; j < col.size(); ++j) {
            const auto& p = col[j];
            if (p.is_zero()) continue;
            if (!up_is_term(k, p))
                throw std::invalid_argument("grading inconsistent: entry not homogeneous");
            const int d = p.degree() + gen_degrees[j];
            if (!degree) degree = d;
            else if (*degree != d)
                throw std::invalid_argument("grading inconsistent: mixed degrees in a column");
        }
    }
}

/// Lemma hypothesis probe: is 1 - t surjective on the graded module m?
template <class F>
bool one_minus_t_surjective(const EndoModule<F>& m, const std::vector<int>& gen_degrees) {
    const auto& k = m.field();
    validate_grading(m, gen_degrees);
    const UniPoly<F> one_minus_t = up_sub(k, UniPoly<F>::one(k), UniPoly<F>::t_power(k, 1));
    std::vector<EndoVec<F>> rels = m.rels();
    for (std::size_t j = 0; j < m.rank(); ++j) {
        EndoVec<F> col(m.rank());
        col[j] = one_minus_t;
        rels.push_back(std::move(col));
    }
    return endo_is_zero(EndoModule<F>(k, m.rank(), std::move(rels)));
}

// ---------------------------------------------------------------------------
// morphisms of k[t]-modules

template <class F>
class EndoMorphism {
public:
    EndoMorphism(EndoModule<F> source, EndoModule<F> target, UniPolyMatrix<F> matrix)
        : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
        if (mat_.rows != tgt_.rank() || mat_.cols != src_.rank())
            throw std::invalid_argument("EndoMorphism: matrix shape mismatch");
        const auto& k = src_.field();
        const auto span = detail::span_matrix(target_relation_span());
        for (const auto& rel : src_.rels()) {
            EndoVec<F> img = apply(rel);
            if (!up_solve(k, span, img).has_value())
                throw std::invalid_argument("EndoMorphism: ill-defined (relations not preserved)");
        }
    }

    const EndoModule<F>& source() const { return src_; }
    const EndoModule<F>& target() const { return tgt_; }
    const UniPolyMatrix<F>& matrix() const { return mat_; }

    EndoVec<F> apply(const EndoVec<F>& v) const {
        const auto& k = src_.field();
        EndoVec<F> out(tgt_.rank());
        for (std::size_t i = 0; i < tgt_.rank(); ++i)
            for (std::size_t j = 0; j < src_.rank(); ++j)
                out[i] = up_add(k, out[i], up_mul(k, mat_.at(i, j), v[j]));
        return out;
    }

    EndoVec<F> column(std::size_t j) const {
        EndoVec<F> col(tgt_.rank());
        for (std::size_t i = 0; i < tgt_.rank(); ++i) col[i] = mat_.at(i, j);
        return col;
    }

private:
    SubmoduleRep<F> target_relation_span() const { return SubmoduleRep<F>(tgt_, {}); }

    EndoModule<F> src_, tgt_;
    UniPolyMatrix<F> mat_;
};

template <class F>
EndoMorphism<F> endo_identity(const EndoModule<F>& m) {
    return EndoMorphism<F>(m, m, UniPolyMatrix<F>::identity(m.field(), m.rank()));
}

template <class F>
struct EndoSubmodulePresentation {
    EndoModule<F> module;
    EndoMorphism<F> inclusion;
};

/// Kernel of f: the preimage of the target relations, presented abstractly
/// with its inclusion into the source.
template <class F>
EndoSubmodulePresentation<F> endo_kernel(const EndoMorphism<F>& f) {
    const auto& k = f.source().field();
    const std::size_t rs = f.source().rank(), rt = f.target().rank();
    UniPolyMatrix<F> stacked(rt, rs + f.target().rels().size());
    for (std::size_t j = 0; j < rs; ++j)
        for (std::size_t i = 0; i < rt; ++i) stacked.at(i, j) = f.matrix().at(i, j);
    for (std::size_t c = 0; c < f.target().rels().size(); ++c)
        for (std::size_t i = 0; i < rt; ++i)
            stacked.at(i, rs + c) = f.target().rels()[c][i];
    std::vector<EndoVec<F>> vecs;
    for (const auto& w : up_kernel(k, stacked)) {
        EndoVec<F> head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rs));
        bool nonzero = false;
        for (const auto& e : head) nonzero |= !e.is_zero();
        if (!nonzero) continue;
        normalize_generator(k, head);
        vecs.push_back(std::move(head));
    }
    SubmoduleRep<F> sub(f.source(), vecs);
    EndoModule<F> mod = submodule_presentation(sub);
    UniPolyMatrix<F> incl(rs, vecs.size());
    for (std::size_t c = 0; c < vecs.size(); ++c)
        for (std::size_t i = 0; i < rs; ++i) incl.at(i, c) = vecs[c][i];
    EndoMorphism<F> inclusion(mod, f.source(), std::move(incl));
    return EndoSubmodulePresentation<F>{std::move(mod), std::move(inclusion)};
}

template <class F>
EndoModule<F> endo_cokernel(const EndoMorphism<F>& f) {
    std::vector<EndoVec<F>> rels = f.target().rels();
    for (std::size_t j = 0; j < f.source().rank(); ++j) rels.push_back(f.column(j));
    return EndoModule<F>(f.source().field(), f.target().rank(), std::move(rels));
}

template <class F>
EndoMorphism<F> endo_compose(const EndoMorphism<F>& g, const EndoMorphism<F>& f) {
    const auto& k = f.source().field();
    return EndoMorphism<F>(f.source(), g.target(), up_mat_mul(k, g.matrix(), f.matrix()));
}

template <class F>
bool endo_is_zero_morphism(const EndoMorphism<F>& f) {
    SubmoduleRep<F> zero_span(f.target(), {});
    for (std::size_t j = 0; j < f.source().rank(); ++j)
        if (!submodule_contains(zero_span, f.column(j))) return false;
    return true;
}

template <class F>
bool endo_is_iso(const EndoMorphism<F>& f) {
    return endo_is_zero(endo_kernel(f).module) && endo_is_zero(endo_cokernel(f));
}

}  // namespace polyhom
