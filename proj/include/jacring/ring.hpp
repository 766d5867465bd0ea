#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "jacring/bigraded.hpp"

namespace jacring {

// Generators of the Jacobian ideal J(F, G):
//   theta_k = sum_i dF_i/dX_k mu_i + sum_j dG_j/dX_k lambda_j   in A_1(-1),
//   F_i                                                          in A_0(d_i),
//   G_j lambda_j                                                 in A_1(0).
struct JacobianGenerators {
    std::vector<AlgElement> theta;    // n + 1 elements
    std::vector<AlgElement> f_gens;   // r elements
    std::vector<AlgElement> glambda;  // s elements
};

// B_q(l) presented on the ambient basis of A_q(l): reduced echelon rows of
// the ideal image plus the non-pivot (representative) coordinates.
struct QuotientPiece {
    BiDegree bd;
    int ambient_dim = 0;
    long long ideal_rank = 0;
    std::vector<int> representatives;  // ambient indices, ascending
    Rref ideal_rref;
    FieldSpec field;

    long long dim() const { return (long long)representatives.size(); }
    // representative coordinates of an ambient coordinate vector
    std::vector<mpq_class> reduce(std::vector<mpq_class> ambient) const;
    // column k of the projector: reduce(e_k); cached on first use
    const std::vector<std::vector<mpq_class>>& projector_columns() const;

  private:
    mutable std::mutex mu_;
    mutable std::vector<std::vector<mpq_class>> proj_cols_;
};

struct TraceInfo {
    BiDegree bd;                    // (n - r, 2(d - n - 1) + e)
    int representative = 0;         // ambient index carrying the socle class
    std::shared_ptr<const QuotientPiece> top;
    // trace of each ambient basis vector of the top piece
    std::vector<mpq_class> tau_of_basis;
};

// The Jacobian ring of one instance: piece cache, quotient cache, trace.
class Ring {
  public:
    explicit Ring(Instance inst);

    const Instance& instance() const { return inst_; }
    const PieceTable& pieces() const { return table_; }
    long long dim_piece(BiDegree bd) const { return table_.dim_piece(bd); }

    const JacobianGenerators& generators() const { return gens_; }

    // Horizontal concatenation of multiplication matrices by all ideal
    // generators into A_q(l); its image is J cap A_q(l).
    SparseLinearMap ideal_piece_map(BiDegree bd) const;

    // Exact quotient presentation (RREF over the instance field); cached.
    std::shared_ptr<const QuotientPiece> quotient(BiDegree bd) const;

    // dim B_q(l) by rank only (multi-modular fast path over Q).
    long long dim_B(BiDegree bd, const RankOptions& opt = {}) const;

    // representative coordinates of an element of A
    std::vector<mpq_class> reduce(const AlgElement& el) const;

    // sum_k X_k theta_k == sum_i d_i F_i mu_i + sum_j e_j G_j lambda_j
    bool euler_identity_check() const;

    BiDegree top_bidegree() const;
    // throws TraceUndefined unless the top piece is one-dimensional
    const TraceInfo& trace() const;

  private:
    Instance inst_;
    PieceTable table_;
    JacobianGenerators gens_;
    mutable std::mutex mu_;
    mutable std::map<BiDegree, std::shared_ptr<const QuotientPiece>> quotients_;
    mutable std::shared_ptr<TraceInfo> trace_;
};

JacobianGenerators jacobian_generators(const Instance& inst);

}  // namespace jacring
