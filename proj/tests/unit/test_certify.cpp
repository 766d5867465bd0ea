#include <doctest.h>

#include "../helpers.hpp"
#include "jacring/certify.hpp"
#include "jacring/errors.hpp"

using namespace jacring;
using jacring::testing::elliptic_plus_line;
using jacring::testing::fermat_hypersurface;
using jacring::testing::fermat_poly;

TEST_CASE("smooth Fermat hypersurfaces certify") {
    auto rep = certify_transversality(fermat_hypersurface(2, 3));
    CHECK(rep.status == TransversalityReport::Status::Certified);
    CHECK(rep.checked_subsets.size() == 1);
    CHECK(rep.checked_subsets[0].passed);
}

TEST_CASE("curve plus transversal line certifies, including the pair subset") {
    auto rep = certify_transversality(elliptic_plus_line());
    CHECK(rep.status == TransversalityReport::Status::Certified);
    // subsets: {F}, {G}, {F, G}
    CHECK(rep.checked_subsets.size() == 3);
    for (const auto& s : rep.checked_subsets) CHECK(s.passed);
}

TEST_CASE("a singular instance is refuted by a finite-field witness") {
    Instance inst;
    inst.n = 2;
    inst.d = {3};
    HomogPoly f(3, 3);  // X_0^2 X_1: singular along X_0 = 0
    f.add_term({2, 1, 0}, 1);
    inst.F = {f};
    inst.field = FieldSpec::rationals();
    inst.validate();
    auto rep = certify_transversality(inst);
    CHECK(rep.status == TransversalityReport::Status::FailedWitness);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness_prime >= 5);
}

TEST_CASE("tangent divisor fails the pair-subset check") {
    // conic F = X_0 X_2 - X_1^2 with the tangent line G = X_0
    Instance inst;
    inst.n = 2;
    inst.d = {2};
    inst.e = {1};
    HomogPoly f(3, 2);
    f.add_term({1, 0, 1}, 1);
    f.add_term({0, 2, 0}, -1);
    inst.F = {f};
    HomogPoly g(3, 1);
    g.add_term({1, 0, 0}, 1);
    inst.G = {g};
    inst.field = FieldSpec::rationals();
    inst.validate();
    auto rep = certify_transversality(inst);
    CHECK(rep.status == TransversalityReport::Status::FailedWitness);
}

TEST_CASE("witness scan finds the singular point directly") {
    Instance inst;
    inst.n = 2;
    inst.d = {3};
    HomogPoly f(3, 3);  // nodal cubic X_2 X_1^2 - X_0^3 - X_0^2 X_2
    f.add_term({0, 2, 1}, 1);
    f.add_term({3, 0, 0}, -1);
    f.add_term({2, 0, 1}, -1);
    inst.F = {f};
    inst.field = FieldSpec::rationals();
    inst.validate();
    auto w = find_singular_witness(inst, 7);
    REQUIRE(w.has_value());
    // the node sits at (0 : 0 : 1)
    CHECK(*w == std::vector<uint64_t>{0, 0, 1});
}

TEST_CASE("random certified instance generation is reproducible") {
    Instance a = random_certified_instance(2, {3}, {1}, FieldSpec::rationals(), 17);
    Instance b = random_certified_instance(2, {3}, {1}, FieldSpec::rationals(), 17);
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(certify_transversality(a).status == TransversalityReport::Status::Certified);
}

TEST_CASE("generation budget exhaustion throws") {
    CHECK_THROWS_AS((void)random_certified_instance(2, {3}, {1}, FieldSpec::rationals(), 17,
                                                    /*retries=*/0),
                    GenerationBudgetExhausted);
}
