#pragma once

#include <chrono>

#include "jacring/instance.hpp"

namespace jacring::testing {

// sum_k X_k^d in n + 1 variables
inline HomogPoly fermat_poly(int n, int d) {
    HomogPoly f(n + 1, d);
    for (int k = 0; k <= n; ++k) {
        Monomial m(n + 1, 0);
        m[k] = d;
        f.add_term(m, 1);
    }
    return f;
}

inline Instance fermat_hypersurface(int n, int d) {
    Instance inst;
    inst.n = n;
    inst.d = {d};
    inst.F = {fermat_poly(n, d)};
    inst.field = FieldSpec::rationals();
    inst.validate();
    return inst;
}

// Fermat cubic curve in P^2 minus the line X_0 = 0.
inline Instance elliptic_plus_line() {
    Instance inst;
    inst.n = 2;
    inst.d = {3};
    inst.e = {1};
    inst.F = {fermat_poly(2, 3)};
    HomogPoly g(3, 1);
    g.add_term({1, 0, 0}, 1);
    inst.G = {g};
    inst.field = FieldSpec::rationals();
    inst.validate();
    return inst;
}

class Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

}  // namespace jacring::testing
