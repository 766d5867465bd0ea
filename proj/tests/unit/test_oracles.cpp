#include <doctest.h>

#include "../helpers.hpp"
#include "jacring/oracles.hpp"

using namespace jacring;
using jacring::testing::fermat_hypersurface;
using jacring::testing::fermat_poly;

TEST_CASE("Fermat Jacobian ring dimensions by inclusion-exclusion") {
    // quartic surface in P^3: socle degree 4(4-2) = 8, Poincare polynomial
    // ((1-t^3)/(1-t))^4
    CHECK(fermat_jacobian_dim(3, 4, 0) == 1);
    CHECK(fermat_jacobian_dim(3, 4, 4) == 19);
    CHECK(fermat_jacobian_dim(3, 4, 8) == 1);
    CHECK(fermat_jacobian_dim(3, 4, 9) == 0);
    CHECK(fermat_jacobian_dim(3, 4, -1) == 0);
}

TEST_CASE("Griffiths hodge numbers of classical hypersurfaces") {
    // quartic K3: h^{2,0} = 1, h^{1,1}_prim = 19
    CHECK(griffiths_hypersurface(3, 4, 0) == 1);
    CHECK(griffiths_hypersurface(3, 4, 1) == 19);
    CHECK(griffiths_hypersurface(3, 4, 2) == 1);
    // quintic threefold: 1, 101, 101, 1
    CHECK(griffiths_hypersurface(4, 5, 0) == 1);
    CHECK(griffiths_hypersurface(4, 5, 1) == 101);
    CHECK(griffiths_hypersurface(4, 5, 2) == 101);
    CHECK(griffiths_hypersurface(4, 5, 3) == 1);
    // plane cubic: h^{1,0} = h^{0,1} = 1
    CHECK(griffiths_hypersurface(2, 3, 0) == 1);
    CHECK(griffiths_hypersurface(2, 3, 1) == 1);
}

TEST_CASE("direct elimination agrees with inclusion-exclusion on Fermat") {
    for (int d : {3, 4}) {
        HomogPoly f = fermat_poly(2, d);
        for (int t = 0; t <= 2 * (d - 2); ++t)
            CHECK(classical_jacobian_dim(f, t) == fermat_jacobian_dim(2, d, t));
    }
}

TEST_CASE("punctured curve log Hodge numbers") {
    // quartic curve (g = 3) minus a line section (4 points)
    auto h = punctured_curve_log_hodge(4, {1});
    CHECK(h.genus == 3);
    CHECK(h.punctures == 4);
    CHECK(h.h10_log == 6);  // g + N - 1
    CHECK(h.h01 == 3);
    // cubic minus a conic section: N = 6
    auto h2 = punctured_curve_log_hodge(3, {2});
    CHECK(h2.genus == 1);
    CHECK(h2.punctures == 6);
    CHECK(h2.h10_log == 6);
}

TEST_CASE("hodge check matches Griffiths on the Fermat quartic surface") {
    Ring ring(fermat_hypersurface(3, 4));
    auto preds = hodge_check(ring, 0);
    REQUIRE(preds.size() == 3);
    for (const auto& p : preds) {
        CHECK(p.source == "Griffiths");
        REQUIRE(p.oracle_dim.has_value());
        CHECK(p.predicted_dim == *p.oracle_dim);
        CHECK(p.verdict == Verdict::Pass);
    }
    CHECK(preds[0].predicted_dim == 1);
    CHECK(preds[1].predicted_dim == 19);
    CHECK(preds[2].predicted_dim == 1);
}

TEST_CASE("hodge check matches the punctured-curve oracle") {
    Instance inst = random_instance(2, {4}, {1}, FieldSpec::rationals(), 31);
    Ring ring(inst);
    auto preds = hodge_check(ring, 0);
    REQUIRE(preds.size() == 2);
    CHECK(preds[0].source == "PuncturedCurve");
    CHECK(preds[0].verdict == Verdict::Pass);
    CHECK(*preds[0].oracle_dim == 6);  // g + N - 1 for d=4, e=(1)
    CHECK(preds[1].verdict == Verdict::Pass);
    CHECK(*preds[1].oracle_dim == 3);  // g
}

TEST_CASE("hodge check reports OBSERVED when no oracle applies") {
    Instance inst = random_instance(3, {2, 2}, {}, FieldSpec::rationals(), 8);
    Ring ring(inst);
    for (const auto& p : hodge_check(ring, 0)) {
        CHECK(p.source == "None");
        CHECK(p.verdict == Verdict::Observed);
    }
}
