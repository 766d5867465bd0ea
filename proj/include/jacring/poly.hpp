#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "jacring/field.hpp"

namespace jacring {

// Exponent vector of a monomial in X_0..X_n. Fixed variable count per context.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Packs exponents into a uint64 key (8 bits per variable, up to 8 variables).
uint64_t mono_key(const Monomial& m);

// All degree-l monomials in n+1 variables, graded lex with X_0 > ... > X_n,
// plus an index for constant-time lookup. Empty for l < 0.
struct MonomialBasis {
    int nvars = 0;
    int deg = 0;
    std::vector<Monomial> list;

    int size() const { return (int)list.size(); }
    // index of a monomial in this basis; -1 when absent
    int index(const Monomial& m) const;

  private:
    friend const MonomialBasis& monomial_basis(int n, int l);
    std::map<uint64_t, int> by_key_;
};

// n = variable count minus one; cached, thread-safe.
const MonomialBasis& monomial_basis(int n, int l);

// Homogeneous polynomial with exact coefficients. Over a prime field the
// coefficients are integer residues; reduction happens in linear algebra.
struct HomogPoly {
    int nvars = 0;  // n + 1
    int deg = 0;
    std::map<Monomial, mpq_class> terms;  // no zero coefficients stored

    HomogPoly() = default;
    HomogPoly(int nvars_, int deg_) : nvars(nvars_), deg(deg_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const mpq_class& c);
};

HomogPoly partial_derivative(const HomogPoly& f, int var);
HomogPoly multiply(const HomogPoly& f, const HomogPoly& g);
HomogPoly add(const HomogPoly& f, const HomogPoly& g);
HomogPoly scale(const HomogPoly& f, const mpq_class& c);

// Seed-deterministic random homogeneous polynomial. Over Q coefficients are
// uniform in [-10, 10] \ {0}; over F_p uniform in [0, p).
HomogPoly random_homog(int n, int l, const FieldSpec& field, std::mt19937_64& rng);
HomogPoly random_homog(int n, int l, const FieldSpec& field, uint64_t seed);

// Euler's relation: sum_k X_k df/dX_k == deg(f) * f.
bool euler_identity(const HomogPoly& f);

}  // namespace jacring
