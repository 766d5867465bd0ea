#include "jacring/certify.hpp"

#include <algorithm>
#include <functional>

#include "jacring/errors.hpp"

namespace jacring {

namespace {

std::vector<const HomogPoly*> all_hypersurfaces(const Instance& inst) {
    std::vector<const HomogPoly*> h;
    for (const auto& f : inst.F) h.push_back(&f);
    for (const auto& g : inst.G) h.push_back(&g);
    return h;
}

// determinant of a square polynomial matrix by Laplace expansion
HomogPoly poly_det(const std::vector<std::vector<HomogPoly>>& a) {
    size_t k = a.size();
    if (k == 1) return a[0][0];
    int deg = 0;
    for (size_t i = 0; i < k; ++i) deg += a[i][i].deg;
    HomogPoly acc(a[0][0].nvars, deg);
    for (size_t c = 0; c < k; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<HomogPoly>> minor;
        for (size_t i = 1; i < k; ++i) {
            std::vector<HomogPoly> row;
            for (size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        HomogPoly term = multiply(a[0][c], poly_det(minor));
        acc = add(acc, c % 2 == 0 ? term : scale(term, -1));
    }
    return acc;
}

// true when the ideal generated by gens contains all of P^D
bool contains_degree_piece(const Instance& inst, const std::vector<HomogPoly>& gens, int D) {
    const int n = inst.n;
    const auto& target = monomial_basis(n, D);
    SparseLinearMap m;
    m.rows = target.size();
    m.cols = 0;
    m.field = inst.field;
    m.domain_tag = "gens x complementary monomials";
    m.codomain_tag = "P^" + std::to_string(D);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const auto& src = monomial_basis(n, D - g.deg);
        for (const auto& sm : src.list) {
            for (const auto& [gm, c] : g.terms)
                m.entries.push_back({target.index(mono_mul(sm, gm)), m.cols, c});
            ++m.cols;
        }
    }
    if (m.cols == 0) return target.size() == 0;
    // full row rank mod a prime certifies full rank over Q
    return rank(m).rank == (long long)target.size();
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            gen(v + 1);
            cur.pop_back();
        }
    };
    gen(0);
}

}  // namespace

std::string TransversalityReport::status_str() const {
    switch (status) {
        case Status::Certified: return "Certified";
        case Status::Unknown: return "Unknown";
        case Status::FailedWitness: return "FailedWitness";
    }
    return "Unknown";
}

TransversalityReport certify_transversality(const Instance& inst, int degree_cap) {
    inst.validate();
    TransversalityReport rep;
    auto hyps = all_hypersurfaces(inst);
    const int count = (int)hyps.size(), n = inst.n;

    bool all_passed = true;
    for (int size = 1; size <= std::min(count, n + 1); ++size) {
        std::vector<std::vector<int>> subsets;
        subsets_of_size(count, size, subsets);
        for (const auto& T : subsets) {
            std::vector<HomogPoly> gens;
            for (int t : T) gens.push_back(*hyps[t]);
            if (size <= n) {
                // Jacobian matrix of the subset and its maximal minors
                std::vector<std::vector<HomogPoly>> jac;
                for (int t : T) {
                    std::vector<HomogPoly> row;
                    for (int k = 0; k <= n; ++k) row.push_back(partial_derivative(*hyps[t], k));
                    jac.push_back(std::move(row));
                }
                std::vector<std::vector<int>> col_sets;
                subsets_of_size(n + 1, size, col_sets);
                for (const auto& cols : col_sets) {
                    std::vector<std::vector<HomogPoly>> sq;
                    for (int i = 0; i < size; ++i) {
                        std::vector<HomogPoly> row;
                        for (int c : cols) row.push_back(jac[i][c]);
                        sq.push_back(std::move(row));
                    }
                    HomogPoly det = poly_det(sq);
                    if (!det.is_zero()) gens.push_back(std::move(det));
                }
            }
            int max_deg = 0, deg_sum = 0;
            for (const auto& g : gens) {
                max_deg = std::max(max_deg, g.deg);
                deg_sum += g.deg;
            }
            int cap = degree_cap > 0 ? degree_cap : std::max(max_deg, deg_sum - n);
            rep.degree_cap_used = std::max(rep.degree_cap_used, cap);

            TransversalityReport::SubsetResult sr;
            sr.subset = T;
            for (int D = max_deg; D <= cap; ++D) {
                if (contains_degree_piece(inst, gens, D)) {
                    sr.passed = true;
                    sr.degree_used = D;
                    break;
                }
            }
            if (!sr.passed) all_passed = false;
            rep.checked_subsets.push_back(std::move(sr));
        }
    }
    if (all_passed) {
        rep.status = TransversalityReport::Status::Certified;
        return rep;
    }
    // inconclusive; try to refute with a finite-field witness
    for (uint64_t p : {5, 7, 11}) {
        if (!inst.field.is_rational() && inst.field.p != p) continue;
        auto w = find_singular_witness(inst, p);
        if (w) {
            rep.status = TransversalityReport::Status::FailedWitness;
            rep.witness = w;
            rep.witness_prime = p;
            return rep;
        }
        if (!inst.field.is_rational()) break;
    }
    rep.status = TransversalityReport::Status::Unknown;
    return rep;
}

namespace {

uint64_t eval_mod(const HomogPoly& f, const std::vector<uint64_t>& x, uint64_t p) {
    uint64_t acc = 0;
    for (const auto& [m, c] : f.terms) {
        uint64_t cr;
        if (!fp::residue(c, p, cr)) throw std::domain_error("denominator divisible by p");
        uint64_t t = cr;
        for (size_t k = 0; k < m.size(); ++k)
            if (m[k]) t = fp::mul(t, fp::pow(x[k], m[k], p), p);
        acc = fp::add(acc, t, p);
    }
    return acc;
}

long long fp_matrix_rank(std::vector<std::vector<uint64_t>> a, uint64_t p) {
    if (a.empty()) return 0;
    int rows = (int)a.size(), cols = (int)a[0].size();
    long long rank = 0;
    int rr = 0;
    for (int c = 0; c < cols && rr < rows; ++c) {
        int piv = -1;
        for (int i = rr; i < rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rr], a[piv]);
        uint64_t inv = fp::inv(a[rr][c], p);
        for (int i = rr + 1; i < rows; ++i) {
            if (!a[i][c]) continue;
            uint64_t f = fp::mul(a[i][c], inv, p);
            for (int j = c; j < cols; ++j)
                a[i][j] = fp::sub(a[i][j], fp::mul(f, a[rr][j], p), p);
        }
        ++rank;
        ++rr;
    }
    return rank;
}

}  // namespace

std::optional<std::vector<uint64_t>> find_singular_witness(const Instance& inst, uint64_t p,
                                                           long long budget) {
    auto hyps = all_hypersurfaces(inst);
    const int count = (int)hyps.size(), n = inst.n;
    std::vector<std::vector<int>> subsets;
    for (int size = 1; size <= std::min(count, n + 1); ++size) subsets_of_size(count, size, subsets);

    // projective points: first nonzero coordinate normalized to 1
    std::vector<uint64_t> x(n + 1, 0);
    long long used = 0;
    std::function<std::optional<std::vector<uint64_t>>(int, int)> scan =
        [&](int pos, int lead) -> std::optional<std::vector<uint64_t>> {
        if (pos == n + 1) {
            if (++used > budget) return std::nullopt;
            std::vector<uint64_t> vals(count);
            for (int h = 0; h < count; ++h) vals[h] = eval_mod(*hyps[h], x, p);
            for (const auto& T : subsets) {
                bool on = true;
                for (int t : T)
                    if (vals[t]) {
                        on = false;
                        break;
                    }
                if (!on) continue;
                if ((int)T.size() == n + 1) return x;  // must have been empty
                std::vector<std::vector<uint64_t>> jac;
                for (int t : T) {
                    std::vector<uint64_t> row(n + 1);
                    for (int k = 0; k <= n; ++k)
                        row[k] = eval_mod(partial_derivative(*hyps[t], k), x, p);
                    jac.push_back(std::move(row));
                }
                if (fp_matrix_rank(jac, p) < (long long)T.size()) return x;
            }
            return std::nullopt;
        }
        if (pos < lead) {
            x[pos] = 0;
            return scan(pos + 1, lead);
        }
        if (pos == lead) {
            x[pos] = 1;
            return scan(pos + 1, lead);
        }
        for (uint64_t v = 0; v < p; ++v) {
            x[pos] = v;
            if (auto w = scan(pos + 1, lead)) return w;
            if (used > budget) return std::nullopt;
        }
        return std::nullopt;
    };
    for (int lead = 0; lead <= n; ++lead) {
        if (auto w = scan(0, lead)) return w;
        if (used > budget) break;
    }
    return std::nullopt;
}

Instance random_certified_instance(int n, const std::vector<int>& d, const std::vector<int>& e,
                                   const FieldSpec& field, uint64_t seed, int retries,
                                   int degree_cap) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        Instance inst;
        inst.n = n;
        inst.d = d;
        inst.e = e;
        inst.field = field;
        for (int deg : d) inst.F.push_back(random_homog(n, deg, field, rng));
        for (int deg : e) inst.G.push_back(random_homog(n, deg, field, rng));
        inst.validate();
        auto rep = certify_transversality(inst, degree_cap);
        if (rep.status == TransversalityReport::Status::Certified) return inst;
    }
    throw GenerationBudgetExhausted("no certified instance within " + std::to_string(retries) +
                                    " draws");
}

}  // namespace jacring
