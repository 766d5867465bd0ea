#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace jacring {

// Coefficient field of an instance: the rationals, or a prime field with
// p < 2^62 so products fit in unsigned 128-bit intermediates.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    uint64_t p = 0;  // modulus when kind == PrimeField

    static FieldSpec rationals() { return {Kind::Rationals, 0}; }
    static FieldSpec prime_field(uint64_t p);

    bool is_rational() const { return kind == Kind::Rationals; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

namespace fp {

uint64_t add(uint64_t a, uint64_t b, uint64_t p);
uint64_t sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);

bool is_prime(uint64_t n);

// Random prime in [2^40, 2^62), suitable for multi-modular rank.
uint64_t random_prime(std::mt19937_64& rng);

// Residue of a rational mod p. Requires p not to divide the denominator.
// Returns false (and leaves out untouched) when it does.
bool residue(const mpq_class& x, uint64_t p, uint64_t& out);

}  // namespace fp

// Scalar arithmetic in a FieldSpec-tagged field, with values carried as
// mpq_class. Over F_p values are integer residues in [0, p).
struct FieldOps {
    FieldSpec fs;

    explicit FieldOps(FieldSpec f) : fs(f) {}

    mpq_class norm(const mpq_class& x) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return norm(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return norm(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return norm(a * b); }
    mpq_class neg(const mpq_class& a) const { return norm(-a); }
    mpq_class inv(const mpq_class& a) const;
    bool is_zero(const mpq_class& a) const { return norm(a) == 0; }
};

}  // namespace jacring
