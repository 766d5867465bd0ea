#include <doctest.h>

#include "../helpers.hpp"
#include "jacring/poly.hpp"

using namespace jacring;
using jacring::testing::fermat_poly;

TEST_CASE("monomial basis sizes are binomial coefficients") {
    CHECK(monomial_basis(2, 3).size() == 10);  // C(5,2)
    CHECK(monomial_basis(3, 2).size() == 10);  // C(5,3)
    CHECK(monomial_basis(4, 0).size() == 1);
    CHECK(monomial_basis(2, -1).size() == 0);
}

TEST_CASE("monomial basis is graded lex descending in X_0") {
    const auto& b = monomial_basis(2, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.list.front() == Monomial{2, 0, 0});
    CHECK(b.list.back() == Monomial{0, 0, 2});
    // lookup is consistent with enumeration
    for (int i = 0; i < b.size(); ++i) CHECK(b.index(b.list[i]) == i);
    CHECK(b.index({1, 1, 1}) == -1);
}

TEST_CASE("monomial ops") {
    CHECK(degree({1, 2, 0}) == 3);
    CHECK(mono_mul({1, 0, 2}, {0, 3, 1}) == Monomial{1, 3, 3});
    CHECK(mono_key({1, 2, 3}) != mono_key({3, 2, 1}));
}

TEST_CASE("derivative, product and Euler identity") {
    HomogPoly f = fermat_poly(2, 3);  // X0^3 + X1^3 + X2^3
    HomogPoly d0 = partial_derivative(f, 0);
    CHECK(d0.deg == 2);
    CHECK(d0.terms.size() == 1);
    CHECK(d0.terms.at({2, 0, 0}) == 3);

    HomogPoly prod = multiply(f, f);
    CHECK(prod.deg == 6);
    CHECK(prod.terms.at({3, 3, 0}) == 2);
    CHECK(euler_identity(f));
    CHECK(euler_identity(prod));
}

TEST_CASE("add cancels and drops zero terms") {
    HomogPoly f = fermat_poly(2, 2);
    HomogPoly g = scale(f, -1);
    CHECK(add(f, g).is_zero());
}

TEST_CASE("random polynomials are seed-deterministic and Euler-compatible") {
    HomogPoly a = random_homog(3, 4, FieldSpec::rationals(), (uint64_t)99);
    HomogPoly b = random_homog(3, 4, FieldSpec::rationals(), (uint64_t)99);
    HomogPoly c = random_homog(3, 4, FieldSpec::rationals(), (uint64_t)100);
    CHECK(a.terms == b.terms);
    CHECK(a.terms != c.terms);
    CHECK(euler_identity(a));
    // coefficient bounds over Q
    for (const auto& [m, v] : a.terms) {
        CHECK(v != 0);
        CHECK(abs(v) <= 10);
    }
    // residue range over F_p
    HomogPoly fp_poly = random_homog(2, 3, FieldSpec::prime_field(101), (uint64_t)5);
    for (const auto& [m, v] : fp_poly.terms) {
        CHECK(v.get_den() == 1);
        CHECK(v >= 0);
        CHECK(v < 101);
    }
}

TEST_CASE("Euler identity on many random polynomials") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        for (int n = 1; n <= 3; ++n)
            CHECK(euler_identity(random_homog(n, 2 + (int)(seed % 4), FieldSpec::rationals(),
                                              seed * 131 + n)));
    }
}
