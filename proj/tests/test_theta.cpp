#include <catch2/catch_amalgamated.hpp>

#include "polyhom/k0.hpp"
#include "polyhom/oracles.hpp"
#include "polyhom/theta.hpp"
#include "test_helpers.hpp"

using namespace polyhom;
using polyhom::testing::cyclic;
using polyhom::testing::piece_dims;

using FP = PrimeField;
static const FP k(32003);

TEST_CASE("theta on free modules gives a[t]") {
    for (int a = 1; a <= 3; ++a)
        for (int shift = 0; shift <= 3; ++shift) {
            auto m = theta(free_object(k, a, 2, shift));
            REQUIRE(rank_class(m) == static_cast<std::size_t>(a));
            REQUIRE(m.torsion().empty());
        }
}

TEST_CASE("theta worked examples") {
    // psi^2 dehomogenizes to the unit relation: the zero module
    REQUIRE(endo_is_zero(theta(cyclic(k, 2, {"psi^2"}))));
    // phi^2 becomes t^2
    auto m = theta(cyclic(k, 2, {"phi^2"}));
    REQUIRE(rank_class(m) == 0);
    REQUIRE(m.torsion().size() == 1);
    REQUIRE(up_eq(k, m.torsion()[0], parse_unipoly(k, "t^2")));
    // needs two variables
    REQUIRE_THROWS_AS(theta(free_object(k, 1, 1, 0)), std::invalid_argument);
}

TEST_CASE("theta is invariant under shifts") {
    auto x = cyclic(k, 2, {"psi*phi^2", "phi^4"});
    for (int shift = 1; shift <= 3; ++shift)
        REQUIRE(endo_iso_invariants_eq(theta(x), theta(shift_down(x, shift))));
}

TEST_CASE("is_psi_nilpotent") {
    SECTION("psi kills the cyclic generator at once") {
        auto cert = is_psi_nilpotent(cyclic(k, 2, {"psi"}));
        REQUIRE(cert);
        REQUIRE(cert->index == 1);
    }
    SECTION("k[psi,phi]/(psi^3, phi*psi) has index 3") {
        auto cert = is_psi_nilpotent(cyclic(k, 2, {"psi^3", "phi*psi"}));
        REQUIRE(cert);
        REQUIRE(cert->index == 3);
    }
    SECTION("free module is not nilpotent") {
        REQUIRE(!is_psi_nilpotent(free_object(k, 2, 2, 0)));
    }
    SECTION("zero module has index 0") {
        auto cert = is_psi_nilpotent(zero_presentation(k, 2));
        REQUIRE(cert);
        REQUIRE(cert->index == 0);
    }
}

TEST_CASE("psi_torsion") {
    SECTION("free module has no psi-torsion") {
        auto t = psi_torsion(free_object(k, 1, 2, 0));
        REQUIRE(is_zero_module(t.module));
    }
    SECTION("the phi-line inside k[psi,phi]/(psi*phi)") {
        auto x = cyclic(k, 2, {"psi*phi"});
        auto t = psi_torsion(x);
        REQUIRE(piece_dims(t.module, 6) == std::vector<long long>{0, 1, 1, 1, 1, 1, 1});
        // the torsion submodule is nilpotent
        REQUIRE(is_psi_nilpotent(t.module));
    }
    SECTION("nilpotent module is its own psi-torsion") {
        auto x = cyclic(k, 2, {"psi^2"});
        auto t = psi_torsion(x);
        REQUIRE(kpoly(t.module) == kpoly(x));
        REQUIRE(is_zero_module(cokernel(t.inclusion)));
    }
}

TEST_CASE("psi_free_quotient") {
    SECTION("free module is untouched") {
        auto f = free_object(k, 1, 2, 0);
        auto z = psi_free_quotient(f);
        REQUIRE(kpoly(z) == kpoly(f));
    }
    SECTION("nilpotent module collapses to zero") {
        REQUIRE(is_zero_module(psi_free_quotient(cyclic(k, 2, {"psi^2"}))));
    }
    SECTION("k[psi,phi]/(psi*phi) becomes the psi-line") {
        auto z = psi_free_quotient(cyclic(k, 2, {"psi*phi"}));
        REQUIRE(piece_dims(z, 5) == std::vector<long long>{1, 1, 1, 1, 1, 1});
        // no psi-torsion left: a complete check
        REQUIRE(is_zero_module(psi_torsion(z).module));
    }
    SECTION("torsion sequence: numerators add and theta becomes an iso") {
        for (const auto& x :
             {cyclic(k, 2, {"psi*phi"}), cyclic(k, 2, {"psi^2*phi"}),
              direct_sum(cyclic(k, 2, {"psi^2"}), free_object(k, 1, 2, 1))}) {
            auto t = psi_torsion(x);
            auto z = cokernel(t.inclusion);
            REQUIRE(kp_add(kpoly(t.module), kpoly(z)) == kpoly(x));
            // theta of the quotient map is an isomorphism: equal SNF invariants
            REQUIRE(endo_iso_invariants_eq(theta(x), theta(z)));
            // and psi acts injectively on the quotient degreewise
            for (int m = 0; m <= 6; ++m) {
                auto a = psi_map(z, 0, m);
                auto r = rref(k, a);
                REQUIRE(r.rank == a.cols);
            }
        }
    }
}

TEST_CASE("embed_nil") {
    SECTION("(1, 0) is k[psi,phi]/(psi)") {
        auto e = embed_nil(k, 1, 0);
        KPolynomial expect;
        expect.add_term(0, 1);
        expect.add_term(1, -1);
        REQUIRE(kpoly(e) == expect);
        REQUIRE(piece_dims(e, 4) == std::vector<long long>{1, 1, 1, 1, 1});
        auto cert = is_psi_nilpotent(e);
        REQUIRE(cert);
        REQUIRE(cert->index == 1);
    }
    SECTION("(2, 3) has numerator 2q^3(1-q)") {
        auto e = embed_nil(k, 2, 3);
        KPolynomial expect;
        expect.add_term(3, 2);
        expect.add_term(4, -2);
        REQUIRE(kpoly(e) == expect);
    }
    SECTION("(0, m) is zero") {
        REQUIRE(is_zero_module(embed_nil(k, 0, 5)));
    }
}

TEST_CASE("gr1_to_nil2") {
    SECTION("free one-variable object") {
        auto x = free_object(k, 1, 1, 0);
        auto y = gr1_to_nil2(x);
        REQUIRE(presentation_eq(y, embed_nil(k, 1, 0)));
    }
    SECTION("k[s]/(s^2) becomes k[psi,phi]/(psi, phi^2)") {
        auto x = testing::cyclic(k, 1, {"x1^2"});
        auto y = gr1_to_nil2(x);
        REQUIRE(piece_dims(y, 4) == std::vector<long long>{1, 1, 0, 0, 0});
        KPolynomial expect;  // (1-q)(1+q) = 1 - q^2 times (1-q): dims 1,1 over 2 vars
        expect.add_term(0, 1);
        expect.add_term(1, 1);
        expect.add_term(2, -1);
        expect.add_term(3, -1);
        // dims 1,1,0,0,...: numerator = (1 + q)(1-q)^2 = 1 - q - q^2 + q^3
        KPolynomial expect2;
        expect2.add_term(0, 1);
        expect2.add_term(1, -1);
        expect2.add_term(2, -1);
        expect2.add_term(3, 1);
        REQUIRE(kpoly(y) == expect2);
        auto cert = is_psi_nilpotent(y);
        REQUIRE(cert);
        REQUIRE(cert->index == 1);
    }
    SECTION("zero is zero") {
        REQUIRE(is_zero_module(gr1_to_nil2(zero_presentation(k, 1))));
    }
}

TEST_CASE("nil_filtration_factors") {
    SECTION("embed_nil(1, 0): a single free factor") {
        auto fs = nil_filtration_factors(embed_nil(k, 1, 0));
        REQUIRE(fs.size() == 1);
        REQUIRE(fs[0].nvars() == 1);
        REQUIRE(piece_dims(fs[0], 4) == std::vector<long long>{1, 1, 1, 1, 1});
    }
    SECTION("k[psi,phi]/(psi^2): two line factors") {
        auto x = cyclic(k, 2, {"psi^2"});
        auto fs = nil_filtration_factors(x);
        REQUIRE(fs.size() == 2);
        // im(1)/im(psi) and im(psi)/im(psi^2) are phi-lines in degrees 0 and 1
        REQUIRE(piece_dims(fs[0], 4) == std::vector<long long>{1, 1, 1, 1, 1});
        REQUIRE(piece_dims(fs[1], 4) == std::vector<long long>{0, 1, 1, 1, 1});
        // classes add up
        KPolynomial total;
        for (const auto& f : fs) total = kp_add(total, kpoly(gr1_to_nil2(f)));
        REQUIRE(total == kpoly(x));
    }
    SECTION("zero module: empty list") {
        REQUIRE(nil_filtration_factors(zero_presentation(k, 2)).empty());
    }
    SECTION("non-nilpotent input is rejected") {
        REQUIRE_THROWS_AS(nil_filtration_factors(free_object(k, 1, 2, 0)),
                          std::invalid_argument);
    }
}

TEST_CASE("theta exactness on sequences") {
    // x(-1) --psi--> x ->> coker for x = k[psi,phi]/(phi^3)
    auto x = cyclic(k, 2, {"phi^3"});
    auto f = var_morphism(x, 0);
    auto quot = cokernel(f);
    std::vector<MultiPoly<FP>> id{MultiPoly<FP>::one(k, 2)};
    GradedMorphism<FP> proj(x, quot, id);
    auto ker = kernel(f);
    REQUIRE(is_zero_module(ker.module));  // psi regular on k[psi,phi]/(phi^3)
    ShortExactSequence<FP> s{shift_down(x, 1), x, quot, f, proj};
    REQUIRE(certify_exact(s));
    auto ts = theta_ses(s);
    REQUIRE(endo_certify_exact(ts));
    REQUIRE(endo_check_rank_additivity(ts));
}

TEST_CASE("fullness lift on a catalog of psi-free targets") {
    // targets: free modules and psi-free quotients
    const std::vector<GradedPresentation<FP>> catalog = {
        free_object(k, 1, 2, 0),
        free_object(k, 2, 2, 1),
        psi_free_quotient(cyclic(k, 2, {"psi*phi"})),  // the psi-line
    };
    for (const auto& y : catalog) {
        // a morphism a[t] -> theta(y) with a = 1: send the generator to
        // t * (first generator) + (second, when present)
        const auto ty = theta(y);
        UniPolyMatrix<FP> map(ty.rank(), 1);
        map.at(0, 0) = parse_unipoly(k, "t");
        if (ty.rank() > 1) map.at(1, 0) = parse_unipoly(k, "1 + t^2");
        auto lift = fullness_lift(k, 1, y, map, 16);
        REQUIRE(lift);
        // the found graded morphism maps x[psi,phi](-k) into y and its theta
        // equals the input (checked inside fullness_lift; sanity-check shape)
        REQUIRE(lift->lift.source().gens() ==
                std::vector<int>(1, static_cast<int>(lift->shift_k)));
    }
}
