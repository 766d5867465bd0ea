#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jacring/instance.hpp"
#include "jacring/linalg.hpp"
#include "jacring/poly.hpp"

namespace jacring {

// Index of one direct summand P^(a.d + b.e + l) mu^a lambda^b of A_q(l).
struct WeightIndex {
    std::vector<int> a;  // mu exponents, length r
    std::vector<int> b;  // lambda exponents, length s

    int weight() const;
    auto operator<=>(const WeightIndex&) const = default;
};

struct BiDegree {
    int q = 0;   // mu/lambda weight
    int l = 0;   // polynomial degree twist
    auto operator<=>(const BiDegree&) const = default;
    std::string str() const { return "(" + std::to_string(q) + "," + std::to_string(l) + ")"; }
};

// Monomial-times-mu^a lambda^b basis of one piece A_q(l). Blocks are sorted
// lex by (a, b); inside a block monomials follow the graded-lex order.
struct GradedPieceBasis {
    struct Block {
        WeightIndex w;
        int poly_deg = 0;     // a.d + b.e + l; block empty when negative
        int offset = 0;       // first coordinate of this block
        const MonomialBasis* monos = nullptr;
        int size() const { return poly_deg < 0 ? 0 : monos->size(); }
    };

    BiDegree bd;
    std::vector<Block> blocks;
    int dim = 0;

    int block_index(const WeightIndex& w) const;  // -1 when absent
    // coordinate of (w, monomial); throws BidegreeMismatch when absent
    int coordinate(const WeightIndex& w, const Monomial& m) const;

  private:
    friend class PieceTable;
    std::map<WeightIndex, int> by_weight_;
};

// Element of A stored piece-local: weight-indexed polynomial parts.
struct AlgElement {
    BiDegree bd;
    std::map<WeightIndex, HomogPoly> parts;

    static AlgElement one(const Instance& inst);  // 1 in A_0(0)
    void add_part(const WeightIndex& w, const HomogPoly& f);
};

// Piece bases of a fixed instance, cached and safe for concurrent use.
class PieceTable {
  public:
    explicit PieceTable(const Instance& inst) : inst_(inst) {}

    const Instance& instance() const { return inst_; }
    const GradedPieceBasis& piece(BiDegree bd) const;
    long long dim_piece(BiDegree bd) const { return piece(bd).dim; }

    // coordinates of el over piece(el.bd)
    std::vector<mpq_class> coordinates(const AlgElement& el) const;

  private:
    const Instance& inst_;
    mutable std::mutex mu_;
    mutable std::map<BiDegree, std::unique_ptr<GradedPieceBasis>> cache_;
};

// Matrix of multiplication by g from A_q(l) into A_{q+p}(l+m), columns
// indexed by the source basis.
SparseLinearMap multiplication_matrix(const PieceTable& table, const AlgElement& g,
                                      BiDegree source);

}  // namespace jacring
