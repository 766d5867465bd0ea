#include <doctest.h>

#include "../helpers.hpp"
#include "jacring/bigraded.hpp"
#include "jacring/errors.hpp"

using namespace jacring;
using jacring::testing::elliptic_plus_line;
using jacring::testing::fermat_hypersurface;

TEST_CASE("piece dimensions follow the block sum formula") {
    Instance inst = fermat_hypersurface(3, 4);  // r=1, s=0
    PieceTable table(inst);
    // A_0(l) = P^l
    CHECK(table.dim_piece({0, 0}) == 1);
    CHECK(table.dim_piece({0, 4}) == monomial_basis(3, 4).size());
    // A_1(l) = P^{4+l} mu
    CHECK(table.dim_piece({1, 0}) == monomial_basis(3, 4).size());
    // negative weight vanishes
    CHECK(table.dim_piece({-1, 3}) == 0);
}

TEST_CASE("pieces with mixed mu/lambda blocks") {
    Instance inst = elliptic_plus_line();  // n=2, d=(3), e=(1)
    PieceTable table(inst);
    // A_1(0) = P^3 mu + P^1 lambda: C(5,2) + 3 = 13
    CHECK(table.dim_piece({1, 0}) == 13);
    // A_2(0) = P^6 mu^2 + P^4 mu lambda + P^2 lambda^2: 28 + 15 + 6 = 49
    CHECK(table.dim_piece({2, 0}) == 49);
    // blocks sorted lex by (a, b), offsets consistent
    const auto& piece = table.piece({2, 0});
    REQUIRE(piece.blocks.size() == 3);
    CHECK(piece.blocks[0].w.a == std::vector<int>{0});
    CHECK(piece.blocks[0].w.b == std::vector<int>{2});
    CHECK(piece.blocks[2].w.a == std::vector<int>{2});
    int off = 0;
    for (const auto& b : piece.blocks) {
        CHECK(b.offset == off);
        off += b.size();
    }
    CHECK(off == piece.dim);
}

TEST_CASE("coordinate lookup and element coordinates round-trip") {
    Instance inst = elliptic_plus_line();
    PieceTable table(inst);
    AlgElement el;
    el.bd = {1, 0};
    HomogPoly g(3, 1);
    g.add_term({0, 1, 0}, mpq_class(5));
    el.add_part(WeightIndex{{0}, {1}}, g);
    auto coords = table.coordinates(el);
    REQUIRE((int)coords.size() == 13);
    int idx = table.piece({1, 0}).coordinate(WeightIndex{{0}, {1}}, {0, 1, 0});
    for (int i = 0; i < 13; ++i) CHECK(coords[i] == (i == idx ? mpq_class(5) : mpq_class(0)));

    CHECK_THROWS_AS((void)table.piece({1, 0}).coordinate(WeightIndex{{1}, {0}}, {0, 1, 0}),
                    BidegreeMismatch);
}

TEST_CASE("multiplication matrix implements ring multiplication") {
    Instance inst = fermat_hypersurface(2, 3);
    PieceTable table(inst);
    // multiply by X_0^2 mu: A_0(2) -> A_1(1)
    AlgElement g;
    g.bd = {1, -1};
    HomogPoly x0sq(3, 2);
    x0sq.add_term({2, 0, 0}, 1);
    g.add_part(WeightIndex{{1}, {}}, x0sq);
    SparseLinearMap m = multiplication_matrix(table, g, {0, 2});
    m.validate();
    CHECK(m.cols == table.dim_piece({0, 2}));
    CHECK(m.rows == table.dim_piece({1, 1}));
    // column of X_1^2 should hit exactly X_0^2 X_1^2 mu
    int src = table.piece({0, 2}).coordinate(WeightIndex{{0}, {}}, {0, 2, 0});
    int dst = table.piece({1, 1}).coordinate(WeightIndex{{1}, {}}, {2, 2, 0});
    int hits = 0;
    for (const auto& e : m.entries)
        if (e.col == src) {
            ++hits;
            CHECK(e.row == dst);
            CHECK(e.v == 1);
        }
    CHECK(hits == 1);
}

TEST_CASE("multiplication into a negative-weight target is the zero map") {
    Instance inst = fermat_hypersurface(2, 3);
    PieceTable table(inst);
    AlgElement g = AlgElement::one(inst);
    SparseLinearMap m = multiplication_matrix(table, g, {-1, 5});
    CHECK(m.cols == 0);
}
