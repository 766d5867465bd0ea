#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jacring/field.hpp"

namespace jacring {

// Sparse matrix tagged with the graded pieces it maps between. Immutable
// after construction in practice; builders guarantee well-formedness,
// validate() re-checks it in tests.
struct SparseLinearMap {
    struct Entry {
        int row = 0, col = 0;
        mpq_class v;
    };

    int rows = 0, cols = 0;
    std::vector<Entry> entries;
    FieldSpec field;
    std::string domain_tag, codomain_tag;

    void validate() const;  // throws InconsistentDimensions on malformed input
    SparseLinearMap transpose() const;
};

struct RankResult {
    enum class Method { Exact, MultiModular };
    long long rank = 0;
    Method method = Method::Exact;
    std::vector<uint64_t> primes;  // primes used in multi-modular mode
    int agreement = 0;             // count of agreeing primes
};

struct RankOptions {
    enum class Method { Auto, MultiModular, ExactRational };
    Method method = Method::Auto;
    int primes = 2;
    uint64_t seed = 0x6a637261;  // prime stream seed; fixed for reproducibility
    std::optional<long long> max_cells;  // overrides the global budget
};

// Budget on rows*cols, overridable via JACRING_MAX_MATRIX_CELLS.
long long matrix_cell_budget();

// Over F_p: rank mod p. Over Q: multi-modular by default (2 random primes in
// [2^40, 2^62), escalating to 4 then to exact fraction-free elimination on
// disagreement), or exact when requested.
RankResult rank(const SparseLinearMap& m, const RankOptions& opt = {});

// Kernel basis over the map's own field (Q or one fixed prime).
std::vector<std::vector<mpq_class>> kernel_basis(const SparseLinearMap& m,
                                                 const RankOptions& opt = {});

// Basis of the column span, as codomain vectors.
std::vector<std::vector<mpq_class>> image_basis(const SparseLinearMap& m,
                                                const RankOptions& opt = {});

// Indices whose coordinate classes form a basis of ambient/<image>: the
// non-pivot columns, in ambient order, of the row-reduced image.
std::vector<int> quotient_representatives(int ambient_dim,
                                          const std::vector<std::vector<mpq_class>>& image,
                                          const FieldSpec& field);

// Reduced row echelon form over the given field. Rows are the nonzero rows
// of the RREF; pivots[i] is the pivot column of rows[i], strictly increasing.
struct Rref {
    int ambient = 0;
    std::vector<int> pivots;
    std::vector<std::vector<mpq_class>> rows;

    long long rank() const { return (long long)pivots.size(); }
    std::vector<int> non_pivots() const;
    // Reduces v modulo the row span; v is modified in place.
    void reduce_in_place(std::vector<mpq_class>& v, const FieldOps& ops) const;
};

// vectors are rows; RREF over Q or F_p depending on field.
Rref rref_of_rows(const std::vector<std::vector<mpq_class>>& rows, int ambient,
                  const FieldSpec& field);
Rref rref_of_map_columns(const SparseLinearMap& m);  // RREF of the column span

// Exact rank of an integer/rational matrix by fraction-free (Bareiss)
// elimination; rows are scaled integer-free first.
long long exact_rational_rank(const SparseLinearMap& m);

// Rank mod a single prime (dense elimination).
long long rank_mod_prime(const SparseLinearMap& m, uint64_t p);

}  // namespace jacring
