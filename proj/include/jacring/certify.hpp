#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacring/checks.hpp"

namespace jacring {

// Probabilistic-to-certified transversality of the defining hypersurfaces.
// Certified is sound: every subset check is a positive rank certificate.
struct TransversalityReport {
    enum class Status { Certified, Unknown, FailedWitness };
    Status status = Status::Unknown;
    struct SubsetResult {
        std::vector<int> subset;  // 0-based indices into F_1..F_r,G_1..G_s
        bool passed = false;
        int degree_used = -1;  // degree at which irrelevance was established
    };
    std::vector<SubsetResult> checked_subsets;
    int degree_cap_used = 0;
    std::optional<std::vector<uint64_t>> witness;  // singular point mod p, if found
    uint64_t witness_prime = 0;

    std::string status_str() const;
};

// For each subset T of the r+s hypersurfaces with |T| <= n, verifies that the
// ideal of the T-equations plus the |T|x|T| Jacobian minors contains P^D for
// some D <= degree_cap (empty singular locus); for |T| = n+1, that the
// equations alone are irrelevant. degree_cap = 0 picks the Macaulay-style
// default, sum of generator degrees minus n.
TransversalityReport certify_transversality(const Instance& inst, int degree_cap = 0);

// Scans F_p-points of each subset intersection for a Jacobian rank drop; a
// hit refutes transversality mod p.
std::optional<std::vector<uint64_t>> find_singular_witness(const Instance& inst, uint64_t p,
                                                           long long budget = 200000);

// Draw-certify-retry loop; throws GenerationBudgetExhausted.
Instance random_certified_instance(int n, const std::vector<int>& d, const std::vector<int>& e,
                                   const FieldSpec& field, uint64_t seed, int retries = 32,
                                   int degree_cap = 0);

}  // namespace jacring
