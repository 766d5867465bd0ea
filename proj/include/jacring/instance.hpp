#pragma once

#include <string>
#include <vector>

#include "jacring/field.hpp"
#include "jacring/poly.hpp"

namespace jacring {

// Defining data of an open complete intersection: X = {F_1 = .. = F_r = 0}
// in P^n minus the union of the hypersurface sections G_j = 0.
struct Instance {
    int n = 0;
    std::vector<int> d;        // degrees of the F_i
    std::vector<int> e;        // degrees of the G_j
    std::vector<HomogPoly> F;
    std::vector<HomogPoly> G;
    FieldSpec field;

    int r() const { return (int)d.size(); }
    int s() const { return (int)e.size(); }
    int d_total() const;
    int e_total() const;
    int d_max() const;
    int e_max() const;
    // min over all d_i and e_j
    int delta_min() const;
    // dimension of X = n - r
    int m() const { return n - r(); }

    void validate() const;  // throws SchemaError on violated invariants
};

// JSON (de)serialization per the instance file schema.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// FNV-1a hash of the canonicalized instance document, as fixed-width hex.
std::string instance_digest(const Instance& inst);

// Seed-deterministic random instance with the given shape.
Instance random_instance(int n, const std::vector<int>& d, const std::vector<int>& e,
                         const FieldSpec& field, uint64_t seed);

}  // namespace jacring
