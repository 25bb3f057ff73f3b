#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyhom/endo_module.hpp"
#include "polyhom/graded_module.hpp"
#include "polyhom/poly_text.hpp"

namespace polyhom {

using Json = nlohmann::json;

// Canonical JSON formats. Polynomials are serialized through the text
// grammar with terms in the monomial order, so serialization is
// deterministic; nlohmann::json keeps object keys sorted.

template <class F>
Json to_json(const F& k, const GradedPresentation<F>& x) {
    Json j;
    j["field"] = k.spec().to_string();
    j["nvars"] = x.nvars();
    j["gens"] = x.gens();
    Json rels = Json::array();
    for (const auto& r : x.rels()) {
        Json entry;
        entry["degree"] = r.degree;
        Json entries = Json::array();
        for (const auto& p : r.entries) entries.push_back(poly_to_string(k, p));
        entry["entries"] = entries;
        rels.push_back(entry);
    }
    j["rels"] = rels;
    return j;
}

template <class F>
GradedPresentation<F> graded_presentation_from_json(const F& k, const Json& j) {
    const int nvars = j.at("nvars").get<int>();
    const std::vector<int> gens = j.at("gens").get<std::vector<int>>();
    std::vector<Relation<F>> rels;
    for (const auto& r : j.at("rels")) {
        Relation<F> rel;
        rel.degree = r.at("degree").get<int>();
        for (const auto& s : r.at("entries"))
            rel.entries.push_back(parse_poly(k, nvars, s.get<std::string>()));
        rels.push_back(std::move(rel));
    }
    return GradedPresentation<F>(k, nvars, gens, std::move(rels));
}

template <class F>
Json to_json(const F& k, const GradedMorphism<F>& f) {
    Json j;
    j["source"] = to_json(k, f.source());
    j["target"] = to_json(k, f.target());
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.target().rank(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < f.source().rank(); ++jj)
            row.push_back(poly_to_string(k, f.at(i, jj)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

template <class F>
GradedMorphism<F> graded_morphism_from_json(const F& k, const Json& j) {
    GradedPresentation<F> src = graded_presentation_from_json(k, j.at("source"));
    GradedPresentation<F> tgt = graded_presentation_from_json(k, j.at("target"));
    std::vector<MultiPoly<F>> mat;
    for (const auto& row : j.at("matrix"))
        for (const auto& s : row) mat.push_back(parse_poly(k, src.nvars(), s.get<std::string>()));
    return GradedMorphism<F>(std::move(src), std::move(tgt), std::move(mat));
}

template <class F>
Json to_json(const F& k, const EndoModule<F>& m) {
    Json j;
    j["field"] = k.spec().to_string();
    j["gens"] = m.rank();
    Json rels = Json::array();
    for (const auto& col : m.rels()) {
        Json c = Json::array();
        for (const auto& p : col) c.push_back(unipoly_to_string(k, p));
        rels.push_back(c);
    }
    j["rels"] = rels;
    return j;
}

template <class F>
EndoModule<F> endo_module_from_json(const F& k, const Json& j) {
    const std::size_t gens = j.at("gens").get<std::size_t>();
    std::vector<EndoVec<F>> rels;
    for (const auto& col : j.at("rels")) {
        EndoVec<F> c;
        for (const auto& s : col) c.push_back(parse_unipoly(k, s.get<std::string>()));
        rels.push_back(std::move(c));
    }
    return EndoModule<F>(k, gens, std::move(rels));
}

template <class F>
Json to_json(const F& k, const SubmoduleRep<F>& s) {
    Json j;
    j["ambient"] = to_json(k, s.ambient);
    Json gens = Json::array();
    for (const auto& v : s.gens) {
        Json g = Json::array();
        for (const auto& p : v) g.push_back(unipoly_to_string(k, p));
        gens.push_back(g);
    }
    j["generators"] = gens;
    return j;
}

template <class F>
SubmoduleRep<F> submodule_from_json(const F& k, const Json& j) {
    EndoModule<F> ambient = endo_module_from_json(k, j.at("ambient"));
    std::vector<EndoVec<F>> gens;
    for (const auto& g : j.at("generators")) {
        EndoVec<F> v;
        for (const auto& s : g) v.push_back(parse_unipoly(k, s.get<std::string>()));
        gens.push_back(std::move(v));
    }
    return SubmoduleRep<F>(std::move(ambient), std::move(gens));
}

template <class F>
Json to_json(const F& k, const TFiltrationRep<F>& f) {
    Json j;
    j["ambient"] = to_json(k, f.ambient);
    Json stages = Json::array();
    for (const auto& s : f.stages) {
        Json gens = Json::array();
        for (const auto& v : s.gens) {
            Json g = Json::array();
            for (const auto& p : v) g.push_back(unipoly_to_string(k, p));
            gens.push_back(g);
        }
        stages.push_back(gens);
    }
    j["stages"] = stages;
    if (const auto* std_rule = std::get_if<StandardRule<F>>(&f.rule)) {
        Json y = Json::array();
        for (const auto& v : std_rule->y.gens) {
            Json g = Json::array();
            for (const auto& p : v) g.push_back(unipoly_to_string(k, p));
            y.push_back(g);
        }
        j["extension_rule"] = Json{{"kind", "standard"}, {"y", y}};
    } else {
        j["extension_rule"] = Json{{"kind", "explicit"}};
    }
    return j;
}

template <class F>
TFiltrationRep<F> filtration_from_json(const F& k, const Json& j) {
    EndoModule<F> ambient = endo_module_from_json(k, j.at("ambient"));
    auto parse_vecs = [&](const Json& arr) {
        std::vector<EndoVec<F>> out;
        for (const auto& g : arr) {
            EndoVec<F> v;
            for (const auto& s : g) v.push_back(parse_unipoly(k, s.get<std::string>()));
            out.push_back(std::move(v));
        }
        return out;
    };
    std::vector<SubmoduleRep<F>> stages;
    for (const auto& s : j.at("stages")) stages.emplace_back(ambient, parse_vecs(s));
    ExtensionRule<F> rule = ExplicitOnly{};
    const auto& er = j.at("extension_rule");
    if (er.at("kind").get<std::string>() == "standard")
        rule = StandardRule<F>{SubmoduleRep<F>(ambient, parse_vecs(er.at("y")))};
    return TFiltrationRep<F>(std::move(ambient), std::move(stages), std::move(rule));
}

inline FieldSpec field_of_json(const Json& j) {
    return FieldSpec::parse(j.at("field").get<std::string>());
}

}  // namespace polyhom
