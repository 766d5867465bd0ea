#include "jacring/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "jacring/errors.hpp"

namespace jacring {

void SparseLinearMap::validate() const {
    if (rows < 0 || cols < 0) throw InconsistentDimensions("negative matrix dimensions");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : entries) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw InconsistentDimensions("entry index out of range");
        if (e.v == 0) throw InconsistentDimensions("explicit zero entry");
        if (!seen.emplace(e.row, e.col).second)
            throw InconsistentDimensions("duplicate (row, col) entry");
    }
}

SparseLinearMap SparseLinearMap::transpose() const {
    SparseLinearMap t;
    t.rows = cols;
    t.cols = rows;
    t.field = field;
    t.domain_tag = codomain_tag;
    t.codomain_tag = domain_tag;
    t.entries.reserve(entries.size());
    for (const auto& e : entries) t.entries.push_back({e.col, e.row, e.v});
    return t;
}

long long matrix_cell_budget() {
    if (const char* env = std::getenv("JACRING_MAX_MATRIX_CELLS")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 64'000'000;
}

namespace {

void check_budget(const SparseLinearMap& m, const RankOptions& opt) {
    long long budget = opt.max_cells.value_or(matrix_cell_budget());
    if ((long long)m.rows * (long long)m.cols > budget)
        throw DimensionOverflow("matrix of " + std::to_string((long long)m.rows * m.cols) +
                                " cells exceeds budget " + std::to_string(budget));
}

// Dense elimination mod p. Returns rank only (forward elimination).
long long fp_rank(const SparseLinearMap& m, uint64_t p) {
    std::vector<std::vector<uint64_t>> a(m.rows, std::vector<uint64_t>(m.cols, 0));
    for (const auto& e : m.entries) {
        uint64_t r;
        if (!fp::residue(e.v, p, r)) throw std::domain_error("denominator divisible by p");
        a[e.row][e.col] = r;
    }
    long long rank = 0;
    int rr = 0;
    for (int c = 0; c < m.cols && rr < m.rows; ++c) {
        int piv = -1;
        for (int i = rr; i < m.rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rr], a[piv]);
        uint64_t inv = fp::inv(a[rr][c], p);
        for (int i = rr + 1; i < m.rows; ++i) {
            if (!a[i][c]) continue;
            uint64_t f = fp::mul(a[i][c], inv, p);
            const auto& pr = a[rr];
            auto& ri = a[i];
            ri[c] = 0;
            for (int j = c + 1; j < m.cols; ++j)
                if (pr[j]) ri[j] = fp::sub(ri[j], fp::mul(f, pr[j], p), p);
        }
        ++rank;
        ++rr;
    }
    return rank;
}

// Fraction-free (Bareiss) forward elimination on an integer matrix.
long long bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    if (a.empty()) return 0;
    int rows = (int)a.size(), cols = (int)a[0].size();
    mpz_class prev(1);
    long long rank = 0;
    int rr = 0;
    for (int c = 0; c < cols && rr < rows; ++c) {
        int piv = -1;
        // Markowitz-style tie-break: among candidate pivot rows prefer the
        // sparsest to bound intermediate swell.
        size_t best = SIZE_MAX;
        for (int i = rr; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            size_t nz = 0;
            for (int j = c; j < cols; ++j)
                if (a[i][j] != 0) ++nz;
            if (nz < best) {
                best = nz;
                piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rr], a[piv]);
        for (int i = rr + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[rr][c] * a[i][j] - a[i][c] * a[rr][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rr][c];
        ++rank;
        ++rr;
    }
    return rank;
}

std::vector<std::vector<mpz_class>> to_integer_rows(const SparseLinearMap& m) {
    std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (const auto& e : m.entries) a[e.row][e.col] = e.v;
    std::vector<std::vector<mpz_class>> z(m.rows, std::vector<mpz_class>(m.cols, 0));
    for (int i = 0; i < m.rows; ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < m.cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        for (int j = 0; j < m.cols; ++j) {
            mpq_class v = a[i][j] * mpq_class(lcm);
            z[i][j] = v.get_num();  // denominator is 1 after scaling
        }
    }
    return z;
}

}  // namespace

long long rank_mod_prime(const SparseLinearMap& m, uint64_t p) {
    return fp_rank(m, p);
}

long long exact_rational_rank(const SparseLinearMap& m) {
    return bareiss_rank(to_integer_rows(m));
}

RankResult rank(const SparseLinearMap& m, const RankOptions& opt) {
    check_budget(m, opt);
    RankResult res;
    if (!m.field.is_rational()) {
        res.rank = fp_rank(m, m.field.p);
        res.method = RankResult::Method::Exact;
        return res;
    }
    if (opt.method == RankOptions::Method::ExactRational) {
        res.rank = exact_rational_rank(m);
        res.method = RankResult::Method::Exact;
        return res;
    }
    // multi-modular with escalation
    std::mt19937_64 rng(opt.seed);
    for (int round_primes : {std::max(2, opt.primes), std::max(4, 2 * opt.primes)}) {
        std::vector<uint64_t> primes;
        std::vector<long long> ranks;
        while ((int)primes.size() < round_primes) {
            uint64_t p = fp::random_prime(rng);
            try {
                long long r = fp_rank(m, p);
                primes.push_back(p);
                ranks.push_back(r);
            } catch (const std::domain_error&) {
                // p divides a denominator; draw another prime
            }
        }
        long long mx = *std::max_element(ranks.begin(), ranks.end());
        if (std::all_of(ranks.begin(), ranks.end(), [&](long long r) { return r == mx; })) {
            res.rank = mx;
            res.method = RankResult::Method::MultiModular;
            res.primes = primes;
            res.agreement = (int)primes.size();
            return res;
        }
    }
    res.rank = exact_rational_rank(m);
    res.method = RankResult::Method::Exact;
    return res;
}

std::vector<int> Rref::non_pivots() const {
    std::vector<int> out;
    size_t k = 0;
    for (int c = 0; c < ambient; ++c) {
        if (k < pivots.size() && pivots[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

void Rref::reduce_in_place(std::vector<mpq_class>& v, const FieldOps& ops) const {
    if ((int)v.size() != ambient) throw InconsistentDimensions("vector/ambient mismatch");
    for (size_t i = 0; i < pivots.size(); ++i) {
        mpq_class c = ops.norm(v[pivots[i]]);
        if (c == 0) continue;
        const auto& row = rows[i];
        for (int j = pivots[i]; j < ambient; ++j)
            if (row[j] != 0) v[j] = ops.sub(v[j], ops.mul(c, row[j]));
    }
}

Rref rref_of_rows(const std::vector<std::vector<mpq_class>>& rows_in, int ambient,
                  const FieldSpec& field) {
    FieldOps ops(field);
    std::vector<std::vector<mpq_class>> a;
    a.reserve(rows_in.size());
    for (const auto& r : rows_in) {
        if ((int)r.size() != ambient) throw InconsistentDimensions("row length mismatch");
        std::vector<mpq_class> n(ambient);
        for (int j = 0; j < ambient; ++j) n[j] = ops.norm(r[j]);
        a.push_back(std::move(n));
    }
    Rref out;
    out.ambient = ambient;
    int rr = 0;
    int rows_n = (int)a.size();
    for (int c = 0; c < ambient && rr < rows_n; ++c) {
        int piv = -1;
        size_t best = SIZE_MAX;
        for (int i = rr; i < rows_n; ++i) {
            if (a[i][c] == 0) continue;
            size_t nz = 0;
            for (int j = c; j < ambient; ++j)
                if (a[i][j] != 0) ++nz;
            if (nz < best) {
                best = nz;
                piv = i;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rr], a[piv]);
        mpq_class inv = ops.inv(a[rr][c]);
        for (int j = c; j < ambient; ++j)
            if (a[rr][j] != 0) a[rr][j] = ops.mul(a[rr][j], inv);
        for (int i = 0; i < rows_n; ++i) {
            if (i == rr || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (int j = c; j < ambient; ++j)
                if (a[rr][j] != 0) a[i][j] = ops.sub(a[i][j], ops.mul(f, a[rr][j]));
        }
        out.pivots.push_back(c);
        ++rr;
    }
    out.rows.assign(a.begin(), a.begin() + rr);
    return out;
}

Rref rref_of_map_columns(const SparseLinearMap& m) {
    std::vector<std::vector<mpq_class>> cols(m.cols, std::vector<mpq_class>(m.rows, 0));
    for (const auto& e : m.entries) cols[e.col][e.row] = e.v;
    return rref_of_rows(cols, m.rows, m.field);
}

std::vector<std::vector<mpq_class>> kernel_basis(const SparseLinearMap& m,
                                                 const RankOptions& opt) {
    check_budget(m, opt);
    std::vector<std::vector<mpq_class>> rows(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (const auto& e : m.entries) rows[e.row][e.col] = e.v;
    Rref r = rref_of_rows(rows, m.cols, m.field);
    FieldOps ops(m.field);
    std::vector<std::vector<mpq_class>> out;
    for (int f : r.non_pivots()) {
        std::vector<mpq_class> v(m.cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = ops.neg(r.rows[i][f]);
        out.push_back(std::move(v));
    }
    // rank-nullity, verified exactly on every call
    if ((long long)out.size() + r.rank() != m.cols)
        throw InconsistentDimensions("rank-nullity violation");
    return out;
}

std::vector<std::vector<mpq_class>> image_basis(const SparseLinearMap& m,
                                                const RankOptions& opt) {
    check_budget(m, opt);
    Rref r = rref_of_map_columns(m);
    return r.rows;
}

std::vector<int> quotient_representatives(int ambient_dim,
                                          const std::vector<std::vector<mpq_class>>& image,
                                          const FieldSpec& field) {
    for (const auto& v : image)
        if ((int)v.size() != ambient_dim)
            throw InconsistentDimensions("image vector outside ambient space");
    Rref r = rref_of_rows(image, ambient_dim, field);
    return r.non_pivots();
}

}  // namespace jacring
