#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacring/checks.hpp"

namespace jacring {

// Independent dimension oracles for Hodge-number predictions. Deliberately
// coded without the bigraded machinery so agreement is evidence.

// dim of the degree-t piece of k[X_0..X_n]/(X_0^{d-1},..,X_n^{d-1}), the
// Fermat Jacobian ring, by inclusion-exclusion. The primitive Hodge number
// h^{n-1-q,q}_prim of a smooth degree-d hypersurface is this at
// t = (q+1)d - n - 1.
long long fermat_jacobian_dim(int n, int d, int t);
long long griffiths_hypersurface(int n, int d, int q);

// Direct elimination in P/(dF/dX_0..dF/dX_n) at degree t; a second path for
// the classical (r=1, s=0) Jacobian ring, independent of the bigraded code.
long long classical_jacobian_dim(const HomogPoly& f, int t);

struct PuncturedCurveHodge {
    long long genus = 0;
    long long punctures = 0;
    long long h10_log = 0;  // g + N - 1
    long long h01 = 0;      // g
};

// Log-Hodge numbers of a smooth plane curve of degree d minus the points cut
// out by divisors of degrees e_j (N = d * sum e_j), from the classical
// residue sequence.
PuncturedCurveHodge punctured_curve_log_hodge(int d, const std::vector<int>& e);

struct HodgePrediction {
    int q = 0;
    int l = 0;
    long long predicted_dim = 0;  // dim B_q(d+e-n-1+l)
    std::optional<long long> oracle_dim;
    std::string source = "None";  // Griffiths | PuncturedCurve | None
    Verdict verdict = Verdict::Observed;
};

// Predictions dim B_q(d+e-n-1+l) for q in [0, n-r], compared against an
// oracle when one covers the instance (l = 0 only).
std::vector<HodgePrediction> hodge_check(const Ring& ring, int l,
                                         const RankOptions& opt = {});

}  // namespace jacring
