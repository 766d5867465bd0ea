#include <doctest.h>

#include "../helpers.hpp"
#include "jacring/errors.hpp"
#include "jacring/logforms.hpp"

using namespace jacring;

TEST_CASE("wedge of words: sign and vanishing") {
    auto [w1, s1] = wedge_words({1, 3}, {2});
    CHECK(w1 == DlogWord{1, 2, 3});
    CHECK(s1 == -1);  // one transposition to sort (1,3,2)
    auto [w2, s2] = wedge_words({1}, {2});
    CHECK(s2 == 1);
    auto [w3, s3] = wedge_words({1, 2}, {2});
    CHECK(s3 == 0);  // repeated index
}

TEST_CASE("omega is the alternating boundary-style sum") {
    std::vector<int> e = {2, 3, 5};
    DlogElement w = omega_form(e, {1, 2, 3});
    // e_1 [2,3] - e_2 [1,3] + e_3 [1,2]
    CHECK(w.degree == 2);
    REQUIRE(w.words.size() == 3);
    CHECK(w.words.at({2, 3}) == 2);
    CHECK(w.words.at({1, 3}) == -3);
    CHECK(w.words.at({1, 2}) == 5);

    CHECK_THROWS_AS((void)omega_form(e, {2, 1}), BadIndexList);
    CHECK_THROWS_AS((void)omega_form(e, {1, 4}), BadIndexList);
}

TEST_CASE("residue extracts word coefficients") {
    std::vector<int> e = {2, 3, 5};
    DlogElement w = omega_form(e, {1, 2, 3});
    CHECK(residue({1, 3}, w) == -3);
    CHECK(residue({2, 3}, w) == 2);
    CHECK_THROWS_AS((void)residue({1}, w), DegreeMismatch);
}

TEST_CASE("omega spans have dimension C(s-1, q)") {
    for (int s = 1; s <= 5; ++s) {
        std::vector<int> e(s);
        for (int j = 0; j < s; ++j) e[j] = j + 1;
        for (int q = 0; q < s; ++q) {
            long long expect = 1;
            for (int i = 0; i < q; ++i) expect = expect * (s - 1 - i) / (i + 1);
            CHECK(wedge_space_dim(e, q) == expect);
        }
    }
}

TEST_CASE("index set J enumerates m-subsets of {1..s-1}") {
    auto j = index_set_J(4, 2);  // 2-subsets of {1,2,3}
    REQUIRE(j.size() == 3);
    CHECK(j[0] == DlogWord{1, 2});
    CHECK(j[2] == DlogWord{2, 3});
    CHECK(index_set_J(3, 0).size() == 1);  // the empty word
}

TEST_CASE("residue matrix is the identity for all small shapes") {
    for (int m = 1; m <= 3; ++m) {
        for (int s = m + 1; s <= 6; ++s) {
            std::vector<int> e(s);
            for (int j = 0; j < s; ++j) e[j] = 1 + (j % 3);  // mixed divisor degrees
            auto rep = residue_matrix_check(e, m);
            CHECK(rep.identity);
            CHECK(rep.verdict == Verdict::Pass);
            long long expect = 1;
            for (int i = 0; i < m; ++i) expect = expect * (s - 1 - i) / (i + 1);
            CHECK(rep.j_size == expect);
        }
    }
}

TEST_CASE("residue matrix check through an instance") {
    Instance inst = random_instance(2, {3}, {1, 2, 1}, FieldSpec::rationals(), 9);
    auto rep = residue_matrix_check(inst);
    CHECK(rep.verdict == Verdict::Pass);
}
