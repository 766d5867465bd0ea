#include "jacring/oracles.hpp"

#include "jacring/linalg.hpp"

namespace jacring {

long long fermat_jacobian_dim(int n, int d, int t) {
    if (t < 0) return 0;
    // monomials of degree t in n+1 variables with every exponent <= d-2
    long long total = 0;
    for (int k = 0; k <= n + 1; ++k) {
        long long rem = (long long)t - (long long)k * (d - 1);
        if (rem < 0) break;
        long long ways = binomial(rem + n, n);
        total += (k % 2 == 0 ? 1 : -1) * binomial(n + 1, k) * ways;
    }
    return total;
}

long long griffiths_hypersurface(int n, int d, int q) {
    return fermat_jacobian_dim(n, d, (q + 1) * d - n - 1);
}

long long classical_jacobian_dim(const HomogPoly& f, int t) {
    const int n = f.nvars - 1;
    const auto& target = monomial_basis(n, t);
    if (t < 0) return 0;
    const auto& source = monomial_basis(n, t - (f.deg - 1));
    SparseLinearMap m;
    m.rows = target.size();
    m.cols = (n + 1) * source.size();
    m.field = FieldSpec::rationals();
    m.domain_tag = "partials x P^(t-d+1)";
    m.codomain_tag = "P^t";
    int col = 0;
    for (int k = 0; k <= n; ++k) {
        HomogPoly dk = partial_derivative(f, k);
        for (const auto& sm : source.list) {
            for (const auto& [fm, c] : dk.terms)
                m.entries.push_back({target.index(mono_mul(sm, fm)), col, c});
            ++col;
        }
    }
    return (long long)target.size() - rank(m).rank;
}

PuncturedCurveHodge punctured_curve_log_hodge(int d, const std::vector<int>& e) {
    PuncturedCurveHodge h;
    h.genus = (long long)(d - 1) * (d - 2) / 2;
    long long esum = 0;
    for (int x : e) esum += x;
    h.punctures = (long long)d * esum;
    h.h10_log = h.genus + h.punctures - 1;
    h.h01 = h.genus;
    return h;
}

std::vector<HodgePrediction> hodge_check(const Ring& ring, int l, const RankOptions& opt) {
    const Instance& inst = ring.instance();
    std::vector<HodgePrediction> out;
    const int base = inst.d_total() + inst.e_total() - inst.n - 1;
    for (int q = 0; q <= inst.m(); ++q) {
        HodgePrediction hp;
        hp.q = q;
        hp.l = l;
        hp.predicted_dim = ring.dim_B({q, base + l}, opt);
        if (l == 0 && inst.r() == 1 && inst.s() == 0) {
            hp.source = "Griffiths";
            // h^q(Omega^{n-r-q}) matches the classical piece at (q+1)d - n - 1
            hp.oracle_dim = griffiths_hypersurface(inst.n, inst.d[0], q);
        } else if (l == 0 && inst.n == 2 && inst.r() == 1 && inst.s() >= 1) {
            hp.source = "PuncturedCurve";
            PuncturedCurveHodge pc = punctured_curve_log_hodge(inst.d[0], inst.e);
            hp.oracle_dim = (q == 0) ? pc.h10_log : pc.h01;
        }
        if (hp.oracle_dim)
            hp.verdict = hp.predicted_dim == *hp.oracle_dim ? Verdict::Pass : Verdict::Fail;
        out.push_back(std::move(hp));
    }
    return out;
}

}  // namespace jacring
