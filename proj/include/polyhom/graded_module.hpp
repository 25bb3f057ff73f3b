#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyhom/field.hpp"
#include "polyhom/groebner.hpp"
#include "polyhom/kpolynomial.hpp"
#include "polyhom/matrix.hpp"
#include "polyhom/multipoly.hpp"

namespace polyhom {

/// Homogeneous relation column of declared degree e: entry j is zero or
/// homogeneous of degree e - d_j.
template <class F>
struct Relation {
    int degree = 0;
    ModuleVec<F> entries;
};

namespace detail {
template <class F>
struct GbCache {
    std::once_flag flag;
    std::optional<GroebnerBasis<F>> gb;
};
}  // namespace detail

/// Finitely presented graded module over k[x1..xn]: generators in degrees
/// d_1..d_r and homogeneous relation columns. Immutable after construction.
template <class F>
class GradedPresentation {
public:
    GradedPresentation(F field, int nvars, std::vector<int> gens, std::vector<Relation<F>> rels)
        : field_(std::move(field)),
          nvars_(nvars),
          gens_(std::move(gens)),
          rels_(std::move(rels)),
          cache_(std::make_shared<detail::GbCache<F>>()) {
        if (nvars_ < 0) throw std::invalid_argument("GradedPresentation: negative nvars");
        for (int d : gens_)
            if (d < 0) throw std::invalid_argument("GradedPresentation: negative generator degree");
        for (const auto& rel : rels_) {
            if (rel.entries.size() != gens_.size())
                throw std::invalid_argument("GradedPresentation: relation length mismatch");
            for (std::size_t j = 0; j < rel.entries.size(); ++j) {
                const auto& p = rel.entries[j];
                if (p.nvars != nvars_)
                    throw std::invalid_argument("GradedPresentation: relation nvars mismatch");
                if (p.is_zero()) continue;
                const int want = rel.degree - gens_[j];
                if (!p.is_homogeneous() || p.degree() != want)
                    throw std::invalid_argument(
                        "GradedPresentation: relation entry not homogeneous of forced degree");
            }
        }
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<int>& gens() const { return gens_; }
    const std::vector<Relation<F>>& rels() const { return rels_; }
    std::size_t rank() const { return gens_.size(); }

    FreeGradedModule ambient() const { return FreeGradedModule{nvars_, gens_}; }

    std::vector<ModuleVec<F>> relation_vectors() const {
        std::vector<ModuleVec<F>> out;
        out.reserve(rels_.size());
        for (const auto& r : rels_) out.push_back(r.entries);
        return out;
    }

    /// Groebner basis of the relation submodule; computed once, shared between
    /// copies, safe under concurrent first access.
    const GroebnerBasis<F>& rel_gb() const {
        std::call_once(cache_->flag, [this] {
            cache_->gb = buchberger(field_, relation_vectors(), ambient());
        });
        return *cache_->gb;
    }

private:
    F field_;
    int nvars_;
    std::vector<int> gens_;
    std::vector<Relation<F>> rels_;
    std::shared_ptr<detail::GbCache<F>> cache_;
};

template <class F>
GradedPresentation<F> zero_presentation(const F& k, int nvars) {
    return GradedPresentation<F>(k, nvars, {}, {});
}

/// The free graded object F[n](a)(-k) for a of dimension a_dim: a_dim
/// generators in degree shift_k, no relations.
template <class F>
GradedPresentation<F> free_object(const F& k, int a_dim, int nvars, int shift_k) {
    return GradedPresentation<F>(k, nvars, std::vector<int>(static_cast<std::size_t>(a_dim), shift_k), {});
}

/// Raises every generator and relation degree by k: piece(result, m) is
/// piece(x, m-k). Only the non-positive shift (-k) is supported.
template <class F>
GradedPresentation<F> shift_down(const GradedPresentation<F>& x, int k) {
    if (k < 0) throw std::invalid_argument("shift_down: negative shift amount");
    std::vector<int> gens = x.gens();
    for (auto& d : gens) d += k;
    std::vector<Relation<F>> rels = x.rels();
    for (auto& r : rels) r.degree += k;
    return GradedPresentation<F>(x.field(), x.nvars(), std::move(gens), std::move(rels));
}

template <class F>
bool presentation_eq(const GradedPresentation<F>& a, const GradedPresentation<F>& b) {
    const auto& k = a.field();
    if (a.field().spec() != b.field().spec() || a.nvars() != b.nvars() || a.gens() != b.gens() ||
        a.rels().size() != b.rels().size())
        return false;
    for (std::size_t i = 0; i < a.rels().size(); ++i) {
        if (a.rels()[i].degree != b.rels()[i].degree) return false;
        if (!mv_eq(k, a.rels()[i].entries, b.rels()[i].entries)) return false;
    }
    return true;
}

/// Complete zero test: every generator class lies in the relation submodule.
template <class F>
bool is_zero_module(const GradedPresentation<F>& x) {
    const auto& k = x.field();
    for (std::size_t j = 0; j < x.rank(); ++j) {
        ModuleVec<F> ej = mv_zero<F>(x.nvars(), x.rank());
        ej[j] = MultiPoly<F>::one(k, x.nvars());
        if (!in_submodule(k, ej, x.rel_gb())) return false;
    }
    return true;
}

/// Hilbert numerator N(q) of x, with Hilbert series N(q)/(1-q)^nvars.
template <class F>
KPolynomial kpoly(const GradedPresentation<F>& x) {
    return hilbert_numerator(x.field(), x.rel_gb());
}

/// Degree-0 morphism between graded presentations, given by a matrix of
/// homogeneous polynomials (rows: target generators, columns: source
/// generators). Construction verifies well-definedness: source relations must
/// land in the target relation submodule.
template <class F>
class GradedMorphism {
public:
    GradedMorphism(GradedPresentation<F> source, GradedPresentation<F> target,
                   std::vector<MultiPoly<F>> matrix)
        : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
        if (src_.field().spec() != tgt_.field().spec() || src_.nvars() != tgt_.nvars())
            throw std::invalid_argument("GradedMorphism: ambient mismatch");
        if (mat_.size() != src_.rank() * tgt_.rank())
            throw std::invalid_argument("GradedMorphism: matrix shape mismatch");
        const auto& k = src_.field();
        for (std::size_t i = 0; i < tgt_.rank(); ++i)
            for (std::size_t j = 0; j < src_.rank(); ++j) {
                const auto& p = at(i, j);
                if (p.nvars != src_.nvars())
                    throw std::invalid_argument("GradedMorphism: entry nvars mismatch");
                if (p.is_zero()) continue;
                const int want = src_.gens()[j] - tgt_.gens()[i];
                if (want < 0 || !p.is_homogeneous() || p.degree() != want)
                    throw std::invalid_argument(
                        "GradedMorphism: entry not homogeneous of forced degree");
            }
        for (const auto& rel : src_.rels()) {
            const ModuleVec<F> image = apply(rel.entries);
            if (!in_submodule(k, image, tgt_.rel_gb()))
                throw std::invalid_argument("GradedMorphism: ill-defined (relations not preserved)");
        }
    }

    const GradedPresentation<F>& source() const { return src_; }
    const GradedPresentation<F>& target() const { return tgt_; }
    const MultiPoly<F>& at(std::size_t i, std::size_t j) const { return mat_[i * src_.rank() + j]; }
    const std::vector<MultiPoly<F>>& matrix() const { return mat_; }

    ModuleVec<F> column(std::size_t j) const {
        ModuleVec<F> col = mv_zero<F>(src_.nvars(), tgt_.rank());
        for (std::size_t i = 0; i < tgt_.rank(); ++i) col[i] = at(i, j);
        return col;
    }

    ModuleVec<F> apply(const ModuleVec<F>& v) const {
        const auto& k = src_.field();
        ModuleVec<F> out = mv_zero<F>(src_.nvars(), tgt_.rank());
        for (std::size_t j = 0; j < src_.rank(); ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < tgt_.rank(); ++i) {
                if (at(i, j).is_zero()) continue;
                out[i] = mp_add(k, out[i], mp_mul(k, at(i, j), v[j]));
            }
        }
        return out;
    }

private:
    GradedPresentation<F> src_, tgt_;
    std::vector<MultiPoly<F>> mat_;
};

template <class F>
GradedMorphism<F> identity_morphism(const GradedPresentation<F>& x) {
    const auto& k = x.field();
    std::vector<MultiPoly<F>> mat(x.rank() * x.rank(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t i = 0; i < x.rank(); ++i)
        mat[i * x.rank() + i] = MultiPoly<F>::one(k, x.nvars());
    return GradedMorphism<F>(x, x, std::move(mat));
}

template <class F>
GradedMorphism<F> zero_morphism(const GradedPresentation<F>& src,
                                const GradedPresentation<F>& tgt) {
    return GradedMorphism<F>(src, tgt,
                             std::vector<MultiPoly<F>>(src.rank() * tgt.rank(),
                                                       MultiPoly<F>::zero(src.nvars())));
}

/// g after f.
template <class F>
GradedMorphism<F> compose(const GradedMorphism<F>& g, const GradedMorphism<F>& f) {
    if (!presentation_eq(g.source(), f.target()))
        throw std::invalid_argument("compose: middle object mismatch");
    const auto& k = f.source().field();
    const std::size_t rows = g.target().rank(), mid = g.source().rank(), cols = f.source().rank();
    std::vector<MultiPoly<F>> mat(rows * cols, MultiPoly<F>::zero(f.source().nvars()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            auto acc = MultiPoly<F>::zero(f.source().nvars());
            for (std::size_t l = 0; l < mid; ++l)
                acc = mp_add(k, acc, mp_mul(k, g.at(i, l), f.at(l, j)));
            mat[i * cols + j] = std::move(acc);
        }
    return GradedMorphism<F>(f.source(), g.target(), std::move(mat));
}

/// True iff every column lies in the target relation submodule.
template <class F>
bool is_zero_morphism(const GradedMorphism<F>& f) {
    const auto& k = f.source().field();
    for (std::size_t j = 0; j < f.source().rank(); ++j)
        if (!in_submodule(k, f.column(j), f.target().rel_gb())) return false;
    return true;
}

/// Multiplication by x_i as a degree-0 morphism x(-1) -> x.
template <class F>
GradedMorphism<F> var_morphism(const GradedPresentation<F>& x, int i) {
    if (i < 0 || i >= x.nvars()) throw std::out_of_range("var_morphism: variable index");
    const auto& k = x.field();
    const GradedPresentation<F> src = shift_down(x, 1);
    std::vector<MultiPoly<F>> mat(x.rank() * x.rank(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t d = 0; d < x.rank(); ++d)
        mat[d * x.rank() + d] = MultiPoly<F>::variable(k, x.nvars(), i);
    return GradedMorphism<F>(src, x, std::move(mat));
}

/// Multiplication by x_i^n as a degree-0 morphism x(-n) -> x.
template <class F>
GradedMorphism<F> var_power_morphism(const GradedPresentation<F>& x, int i, int n) {
    if (i < 0 || i >= x.nvars()) throw std::out_of_range("var_power_morphism: variable index");
    const auto& k = x.field();
    const GradedPresentation<F> src = shift_down(x, n);
    std::vector<MultiPoly<F>> mat(x.rank() * x.rank(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t d = 0; d < x.rank(); ++d)
        mat[d * x.rank() + d] =
            MultiPoly<F>::term(k, x.nvars(), Monomial::var(x.nvars(), i, n), k.one());
    return GradedMorphism<F>(src, x, std::move(mat));
}

// ---------------------------------------------------------------------------
// degreewise pieces

/// Exact basis of the degree-m component: monomial-generator pairs modulo the
/// degree-m slice of the relation submodule.
struct GradedPieceBasis {
    int degree = 0;
    std::vector<std::pair<int, Monomial>> basis;  // (generator index, monomial)
    std::size_t dim = 0;
};

namespace detail {

/// Row-echelon data of the degree-m relation slice of a presentation.
template <class F>
struct DegreeSlice {
    std::vector<std::pair<int, Monomial>> pairs;  // coordinates, gen-major order
    Matrix<F> rel_rref;                           // echelon rows spanning the slice
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot;
    std::vector<std::size_t> basis_cols;  // non-pivot coordinates = quotient basis

    std::size_t pair_index(int gen, const Monomial& m) const {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == gen && pairs[i].second == m) return i;
        throw std::logic_error("DegreeSlice: pair not found");
    }
};

template <class F>
DegreeSlice<F> degree_slice(const GradedPresentation<F>& x, int m) {
    const auto& k = x.field();
    DegreeSlice<F> s;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        const int rem = m - x.gens()[j];
        if (rem < 0) continue;
        for (const auto& mono : monomials_of_degree(x.nvars(), rem))
            s.pairs.emplace_back(static_cast<int>(j), mono);
    }
    // relation multiples of degree m, as row vectors over the pairs
    std::vector<std::vector<typename F::Elem>> rows;
    for (const auto& rel : x.rels()) {
        const int rem = m - rel.degree;
        if (rem < 0) continue;
        for (const auto& mono : monomials_of_degree(x.nvars(), rem)) {
            std::vector<typename F::Elem> row(s.pairs.size(), k.zero());
            bool nonzero = false;
            for (std::size_t j = 0; j < rel.entries.size(); ++j) {
                for (const auto& [em, ec] : rel.entries[j].terms) {
                    const Monomial prod = mono_mul(em, mono);
                    row[s.pair_index(static_cast<int>(j), prod)] = ec;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    Matrix<F> mat(rows.size(), s.pairs.size(), k.zero());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < s.pairs.size(); ++c) mat.at(r, c) = rows[r][c];
    auto rr = rref(k, mat);
    s.rel_rref = std::move(rr.reduced);
    s.pivot_cols = std::move(rr.pivot_cols);
    s.is_pivot.assign(s.pairs.size(), false);
    for (auto c : s.pivot_cols) s.is_pivot[c] = true;
    for (std::size_t c = 0; c < s.pairs.size(); ++c)
        if (!s.is_pivot[c]) s.basis_cols.push_back(c);
    return s;
}

/// Reduces a coordinate vector modulo the slice rows and reads off quotient
/// coordinates on the non-pivot basis.
template <class F>
std::vector<typename F::Elem> slice_reduce(const F& k, const DegreeSlice<F>& s,
                                           std::vector<typename F::Elem> v) {
    for (std::size_t r = 0; r < s.pivot_cols.size(); ++r) {
        const std::size_t p = s.pivot_cols[r];
        if (k.is_zero(v[p])) continue;
        const auto f = v[p];
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = k.sub(v[c], k.mul(f, s.rel_rref.at(r, c)));
    }
    std::vector<typename F::Elem> out;
    out.reserve(s.basis_cols.size());
    for (auto c : s.basis_cols) out.push_back(v[c]);
    return out;
}

}  // namespace detail

template <class F>
GradedPieceBasis piece(const GradedPresentation<F>& x, int m) {
    const auto s = detail::degree_slice(x, m);
    GradedPieceBasis out;
    out.degree = m;
    for (auto c : s.basis_cols) out.basis.push_back(s.pairs[c]);
    out.dim = out.basis.size();
    return out;
}

/// Matrix of multiplication by x_i from the degree-m basis to the degree-(m+1)
/// basis.
template <class F>
Matrix<F> psi_map(const GradedPresentation<F>& x, int i, int m) {
    if (i < 0 || i >= x.nvars()) throw std::out_of_range("psi_map: variable index");
    const auto& k = x.field();
    const auto lo = detail::degree_slice(x, m);
    const auto hi = detail::degree_slice(x, m + 1);
    Matrix<F> out = Matrix<F>::zero(k, hi.basis_cols.size(), lo.basis_cols.size());
    for (std::size_t c = 0; c < lo.basis_cols.size(); ++c) {
        const auto& [gen, mono] = lo.pairs[lo.basis_cols[c]];
        std::vector<typename F::Elem> v(hi.pairs.size(), k.zero());
        v[hi.pair_index(gen, mono_mul(mono, Monomial::var(x.nvars(), i)))] = k.one();
        const auto coords = detail::slice_reduce(k, hi, std::move(v));
        for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
    }
    return out;
}

// ---------------------------------------------------------------------------
// kernels, cokernels, submodules

template <class F>
struct SubmodulePresentation {
    GradedPresentation<F> module;
    GradedMorphism<F> inclusion;
};

/// Presents the submodule of x generated by the given homogeneous vectors
/// (zero vectors dropped, generator order preserved), together with its
/// inclusion into x.
template <class F>
SubmodulePresentation<F> submodule_from_vectors(const GradedPresentation<F>& x,
                                                const std::vector<ModuleVec<F>>& vectors) {
    const auto& k = x.field();
    std::vector<ModuleVec<F>> gens_vecs;
    for (const auto& v : vectors) {
        detail::validate_ambient_vector(v, x.ambient(), "submodule_from_vectors");
        if (mv_is_zero(v)) continue;
        ModuleVec<F> w = v;
        mv_normalize_generator(k, w);
        gens_vecs.push_back(std::move(w));
    }
    std::vector<int> gen_degrees;
    for (const auto& v : gens_vecs) {
        auto d = mv_degree<F>(v, x.gens());
        gen_degrees.push_back(*d);
    }
    std::vector<ModuleVec<F>> inputs = gens_vecs;
    for (const auto& r : x.rels()) inputs.push_back(r.entries);
    const auto syz = syzygies_of_inputs(k, inputs, x.ambient());
    std::vector<Relation<F>> rels;
    for (const auto& z : syz.generators) {
        ModuleVec<F> head(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(gens_vecs.size()));
        if (mv_is_zero(head)) continue;
        mv_normalize_generator(k, head);
        const auto d = mv_degree<F>(head, gen_degrees);
        rels.push_back(Relation<F>{*d, std::move(head)});
    }
    GradedPresentation<F> sub(k, x.nvars(), gen_degrees, std::move(rels));
    std::vector<MultiPoly<F>> mat(x.rank() * gens_vecs.size(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t j = 0; j < gens_vecs.size(); ++j)
        for (std::size_t i = 0; i < x.rank(); ++i) mat[i * gens_vecs.size() + j] = gens_vecs[j][i];
    GradedMorphism<F> incl(sub, x, std::move(mat));
    return SubmodulePresentation<F>{std::move(sub), std::move(incl)};
}

/// As submodule_from_vectors, but prunes generators lying in the span of the
/// lower-degree ones first. Generator order is NOT preserved; use only where
/// no caller relies on positions.
template <class F>
SubmodulePresentation<F> pruned_submodule_from_vectors(const GradedPresentation<F>& x,
                                                       const std::vector<ModuleVec<F>>& vectors) {
    const auto& k = x.field();
    std::vector<ModuleVec<F>> candidates;
    for (const auto& v : vectors) {
        detail::validate_ambient_vector(v, x.ambient(), "pruned_submodule_from_vectors");
        if (mv_is_zero(v)) continue;
        ModuleVec<F> w = v;
        mv_normalize_generator(k, w);
        candidates.push_back(std::move(w));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const ModuleVec<F>& a, const ModuleVec<F>& b) {
                         return *mv_degree<F>(a, x.gens()) < *mv_degree<F>(b, x.gens());
                     });
    std::vector<ModuleVec<F>> kept;
    std::vector<ModuleVec<F>> span = x.relation_vectors();
    GroebnerBasis<F> gb = buchberger(k, span, x.ambient());
    for (auto& v : candidates) {
        if (in_submodule(k, v, gb)) continue;
        span.push_back(v);
        kept.push_back(std::move(v));
        gb = buchberger(k, span, x.ambient());
    }
    return submodule_from_vectors(x, kept);
}

/// Kernel of a morphism, via syzygies of [matrix columns | target relations];
/// the returned inclusion maps into the source.
template <class F>
SubmodulePresentation<F> kernel(const GradedMorphism<F>& f) {
    const auto& k = f.source().field();
    std::vector<ModuleVec<F>> inputs;
    for (std::size_t j = 0; j < f.source().rank(); ++j) inputs.push_back(f.column(j));
    for (const auto& r : f.target().rels()) inputs.push_back(r.entries);
    const auto syz = syzygies_of_inputs(k, inputs, f.target().ambient());
    std::vector<ModuleVec<F>> vecs;
    for (const auto& z : syz.generators) {
        ModuleVec<F> head(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(f.source().rank()));
        bool dup = false;
        for (const auto& w : vecs)
            if (mv_eq(k, w, head)) { dup = true; break; }
        if (!mv_is_zero(head) && !dup) vecs.push_back(std::move(head));
    }
    return pruned_submodule_from_vectors(f.source(), vecs);
}

/// Cokernel: target generators with the morphism columns adjoined as
/// relations.
template <class F>
GradedPresentation<F> cokernel(const GradedMorphism<F>& f) {
    std::vector<Relation<F>> rels = f.target().rels();
    for (std::size_t j = 0; j < f.source().rank(); ++j) {
        ModuleVec<F> col = f.column(j);
        if (mv_is_zero(col)) continue;
        rels.push_back(Relation<F>{f.source().gens()[j], std::move(col)});
    }
    return GradedPresentation<F>(f.source().field(), f.source().nvars(), f.target().gens(),
                                 std::move(rels));
}

template <class F>
GradedPresentation<F> direct_sum(const GradedPresentation<F>& x, const GradedPresentation<F>& y) {
    if (x.field().spec() != y.field().spec() || x.nvars() != y.nvars())
        throw std::invalid_argument("direct_sum: ambient mismatch");
    const auto& k = x.field();
    std::vector<int> gens = x.gens();
    gens.insert(gens.end(), y.gens().begin(), y.gens().end());
    std::vector<Relation<F>> rels;
    for (const auto& r : x.rels()) {
        ModuleVec<F> e = r.entries;
        e.resize(gens.size(), MultiPoly<F>::zero(x.nvars()));
        rels.push_back(Relation<F>{r.degree, std::move(e)});
    }
    for (const auto& r : y.rels()) {
        ModuleVec<F> e = mv_zero<F>(x.nvars(), x.rank());
        e.insert(e.end(), r.entries.begin(), r.entries.end());
        rels.push_back(Relation<F>{r.degree, std::move(e)});
    }
    return GradedPresentation<F>(k, x.nvars(), std::move(gens), std::move(rels));
}

/// Inclusion of the left summand into x (+) y.
template <class F>
GradedMorphism<F> sum_inclusion_left(const GradedPresentation<F>& x,
                                     const GradedPresentation<F>& y) {
    const auto& k = x.field();
    const GradedPresentation<F> s = direct_sum(x, y);
    std::vector<MultiPoly<F>> mat(s.rank() * x.rank(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t j = 0; j < x.rank(); ++j) mat[j * x.rank() + j] = MultiPoly<F>::one(k, x.nvars());
    return GradedMorphism<F>(x, s, std::move(mat));
}

/// Projection of x (+) y onto the right summand.
template <class F>
GradedMorphism<F> sum_projection_right(const GradedPresentation<F>& x,
                                       const GradedPresentation<F>& y) {
    const auto& k = x.field();
    const GradedPresentation<F> s = direct_sum(x, y);
    std::vector<MultiPoly<F>> mat(y.rank() * s.rank(), MultiPoly<F>::zero(x.nvars()));
    for (std::size_t j = 0; j < y.rank(); ++j)
        mat[j * s.rank() + (x.rank() + j)] = MultiPoly<F>::one(k, x.nvars());
    return GradedMorphism<F>(s, y, std::move(mat));
}

/// Discards generators that admit a unit-coefficient degree-0 relation entry,
/// substituting them into the remaining relations.
template <class F>
GradedPresentation<F> minimalize(const GradedPresentation<F>& x) {
    const auto& k = x.field();
    std::vector<int> gens = x.gens();
    std::vector<Relation<F>> rels = x.rels();
    for (;;) {
        std::size_t rel_idx = rels.size(), gen_idx = 0;
        for (std::size_t r = 0; r < rels.size() && rel_idx == rels.size(); ++r)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const auto& p = rels[r].entries[j];
                if (p.is_zero() || rels[r].degree != gens[j]) continue;
                // degree-0 entry with invertible coefficient
                rel_idx = r;
                gen_idx = j;
                break;
            }
        if (rel_idx == rels.size()) break;
        const Relation<F> used = rels[rel_idx];
        const auto c = used.entries[gen_idx].lead_coeff();
        const auto cinv = k.inv(c);
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(rel_idx));
        std::vector<Relation<F>> next;
        for (const auto& r : rels) {
            ModuleVec<F> e(gens.size() - 1, MultiPoly<F>::zero(x.nvars()));
            const MultiPoly<F> factor = mp_scale(k, cinv, r.entries[gen_idx]);
            std::size_t out_j = 0;
            bool nonzero = false;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (j == gen_idx) continue;
                e[out_j] = mp_sub(k, r.entries[j], mp_mul(k, factor, used.entries[j]));
                if (!e[out_j].is_zero()) nonzero = true;
                ++out_j;
            }
            if (nonzero) next.push_back(Relation<F>{r.degree, std::move(e)});
        }
        rels = std::move(next);
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gen_idx));
    }
    // drop zero columns
    std::vector<Relation<F>> cleaned;
    for (auto& r : rels)
        if (!mv_is_zero(r.entries)) cleaned.push_back(std::move(r));
    return GradedPresentation<F>(k, x.nvars(), std::move(gens), std::move(cleaned));
}

// ---------------------------------------------------------------------------
// canonical filtration and degree

/// x / (x1,..,xn)x: the zeroth Koszul homology as a presentation.
template <class F>
GradedPresentation<F> t0_presentation(const GradedPresentation<F>& x) {
    const auto& k = x.field();
    std::vector<Relation<F>> rels = x.rels();
    for (int i = 0; i < x.nvars(); ++i)
        for (std::size_t j = 0; j < x.rank(); ++j) {
            ModuleVec<F> col = mv_zero<F>(x.nvars(), x.rank());
            col[j] = MultiPoly<F>::variable(k, x.nvars(), i);
            rels.push_back(Relation<F>{x.gens()[j] + 1, std::move(col)});
        }
    return GradedPresentation<F>(k, x.nvars(), x.gens(), std::move(rels));
}

/// Minimal m with F_m x = x: the top degree of T_0(x). nullopt for the zero
/// module.
template <class F>
std::optional<int> degree_of(const GradedPresentation<F>& x) {
    const KPolynomial n = kpoly(t0_presentation(x));
    return kp_finite_top_degree(n, x.nvars());
}

/// Least m such that the canonical morphism from generators of degree <= m is
/// onto; 0 for the zero module.
template <class F>
int canonical_epi_bound(const GradedPresentation<F>& x) {
    return degree_of(x).value_or(0);
}

/// F_p x: for p >= 0 the submodule generated by all pieces of degree <= p
/// (equivalently by the generator classes of degree <= p); F_{-1} x = 0.
template <class F>
SubmodulePresentation<F> canonical_filtration(const GradedPresentation<F>& x, int p) {
    const auto& k = x.field();
    if (p < 0) {
        GradedPresentation<F> zero = zero_presentation(k, x.nvars());
        return SubmodulePresentation<F>{zero, zero_morphism(zero, x)};
    }
    std::vector<ModuleVec<F>> vecs;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        if (x.gens()[j] > p) continue;
        ModuleVec<F> ej = mv_zero<F>(x.nvars(), x.rank());
        ej[j] = MultiPoly<F>::one(k, x.nvars());
        vecs.push_back(std::move(ej));
    }
    return submodule_from_vectors(x, vecs);
}

/// The quotient F_p x / F_{p-1} x with its generator classes aligned to the
/// generators of F_p x.
template <class F>
GradedPresentation<F> filtration_graded_piece(const GradedPresentation<F>& x, int p) {
    const auto& k = x.field();
    const auto fp = canonical_filtration(x, p);
    if (p == 0) return fp.module;
    // generators of F_{p-1} are a subset of those of F_p; map them by matching
    // generator index in x
    std::vector<std::size_t> lower, upper;
    for (std::size_t j = 0; j < x.rank(); ++j) {
        if (x.gens()[j] <= p - 1) lower.push_back(j);
        if (x.gens()[j] <= p) upper.push_back(j);
    }
    std::vector<Relation<F>> rels = fp.module.rels();
    for (std::size_t l = 0; l < lower.size(); ++l) {
        std::size_t pos = 0;
        while (upper[pos] != lower[l]) ++pos;
        ModuleVec<F> col = mv_zero<F>(x.nvars(), fp.module.rank());
        col[pos] = MultiPoly<F>::one(k, x.nvars());
        rels.push_back(Relation<F>{fp.module.gens()[pos], std::move(col)});
    }
    return GradedPresentation<F>(k, x.nvars(), fp.module.gens(), std::move(rels));
}

}  // namespace polyhom
