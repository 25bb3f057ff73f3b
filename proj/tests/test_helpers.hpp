#pragma once

#include <string>
#include <vector>

#include "polyhom/graded_module.hpp"
#include "polyhom/poly_text.hpp"

namespace polyhom::testing {

/// Cyclic module k[x1..xn]/(rels), generator in degree 0.
template <class F>
GradedPresentation<F> cyclic(const F& k, int nvars, const std::vector<std::string>& rel_strs) {
    std::vector<Relation<F>> rels;
    for (const auto& s : rel_strs) {
        auto p = parse_poly(k, nvars, s);
        rels.push_back(Relation<F>{p.degree(), ModuleVec<F>{p}});
    }
    return GradedPresentation<F>(k, nvars, {0}, std::move(rels));
}

template <class F>
std::vector<long long> piece_dims(const GradedPresentation<F>& x, int bound) {
    std::vector<long long> out;
    for (int m = 0; m <= bound; ++m) out.push_back(static_cast<long long>(piece(x, m).dim));
    return out;
}

}  // namespace polyhom::testing
