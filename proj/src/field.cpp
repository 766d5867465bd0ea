#include "jacring/field.hpp"

#include <stdexcept>

#include "jacring/errors.hpp"

namespace jacring {

FieldSpec FieldSpec::prime_field(uint64_t p) {
    if (p < 2 || p >= (uint64_t(1) << 62) || !fp::is_prime(p))
        throw std::invalid_argument("prime field modulus must be a prime < 2^62, got " +
                                    std::to_string(p));
    return {Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

namespace fp {

uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;  // no overflow: a, b < 2^62
    return s >= p ? s - p : s;
}

uint64_t sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)a * b % p);
}

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2, p);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for n < 2^64 with these witnesses
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t random_prime(std::mt19937_64& rng) {
    const uint64_t lo = uint64_t(1) << 40, hi = uint64_t(1) << 62;
    for (;;) {
        uint64_t c = lo + rng() % (hi - lo);
        c |= 1;
        if (is_prime(c)) return c;
    }
}

bool residue(const mpq_class& x, uint64_t p, uint64_t& out) {
    mpz_class pp;
    mpz_set_ui(pp.get_mpz_t(), p);
    mpz_class dm = x.get_den() % pp;
    if (dm == 0) return false;
    mpz_class nm = x.get_num() % pp;
    if (nm < 0) nm += pp;
    uint64_t n = mpz_get_ui(nm.get_mpz_t());
    uint64_t d = mpz_get_ui(dm.get_mpz_t());
    out = mul(n, inv(d, p), p);
    return true;
}

}  // namespace fp

static mpq_class from_u64(uint64_t v) {
    mpz_class z;
    mpz_set_ui(z.get_mpz_t(), v);
    return mpq_class(z);
}

mpq_class FieldOps::norm(const mpq_class& x) const {
    if (fs.is_rational()) return x;
    uint64_t r;
    if (!fp::residue(x, fs.p, r))
        throw std::domain_error("denominator divisible by field characteristic");
    return from_u64(r);
}

mpq_class FieldOps::inv(const mpq_class& a) const {
    if (fs.is_rational()) {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    uint64_t r;
    if (!fp::residue(a, fs.p, r)) throw std::domain_error("bad residue");
    return from_u64(fp::inv(r, fs.p));
}

}  // namespace jacring
