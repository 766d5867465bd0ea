#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacring/ring.hpp"

namespace jacring {

enum class Verdict { Pass, Fail, Observed, Unknown };
std::string verdict_str(Verdict v);

// Pairing B_p(d-n-1+l) x B_{n-r-p}(d+e-n-1-l) -> k via multiplication and
// the trace. Empty when p lies outside [0, n-r].
struct PairingMatrix {
    int p = 0, l = 0;
    long long left_dim = 0, right_dim = 0;
    SparseLinearMap matrix;  // left_dim x right_dim, entries tau(x_i y_j)
};

PairingMatrix pairing_matrix(const Ring& ring, int p, int l);

// The sufficient-condition case list for nondegeneracy of the pairing.
struct DualityCondition {
    enum class Kind { IsoI, IsoII, IsoIII, InjectiveOnly, NoGuarantee };
    Kind kind = Kind::NoGuarantee;
    bool guarantees_iso() const {
        return kind == Kind::IsoI || kind == Kind::IsoII || kind == Kind::IsoIII;
    }
    std::string str() const;
};

DualityCondition duality_condition_for(const Instance& inst, int p, int l);

struct DualityReport {
    int p = 0, l = 0;
    long long left_dim = 0, right_dim = 0, rank = 0;
    DualityCondition condition;
    Verdict verdict = Verdict::Observed;
};

DualityReport duality_check(const Ring& ring, int p, int l, const RankOptions& opt = {});

struct EtaKernelReport {
    long long domain_dim = 0, codomain_dim = 0, rank = 0;
    long long kernel_dim = 0;
    long long expected = 0;  // C(s-1, n-r)
    bool surjective = false;
    Verdict verdict = Verdict::Observed;
};

// Surjectivity and kernel of B_0(d+e-n-1) -> B_{n-r}(d-n-1)^*; requires
// n - r >= 1.
EtaKernelReport eta_kernel(const Ring& ring, const RankOptions& opt = {});

// Subspace V of B_1(0), given by independent vectors in representative
// coordinates.
struct Subspace {
    std::vector<std::vector<mpq_class>> basis;
    int ambient_dim = 0;
    int codim() const { return ambient_dim - (int)basis.size(); }
};

Subspace full_subspace(const Ring& ring);
// kernel of `codim` seed-deterministic random functionals on B_1(0)
Subspace random_subspace(const Ring& ring, int codim, uint64_t seed);
void validate_subspace(const Ring& ring, const Subspace& v);  // throws BadSubspace

// Matrices of multiplication by each V-basis vector, B_p(l) -> B_{p+1}(l),
// in representative coordinates.
std::vector<std::vector<std::vector<mpq_class>>> multiplication_by_subspace(
    const Ring& ring, const Subspace& v, BiDegree source);

// B_p(l) (x) wedge^{q+1} V -> B_{p+1}(l) (x) wedge^q V -> B_{p+2}(l) (x) wedge^{q-1} V
struct KoszulComplex {
    int p = 0, q = 0, l = 0;
    long long dims[3] = {0, 0, 0};
    SparseLinearMap first, second;
};

// Differential d(b (x) v_{i1}^...^v_{iq}) = sum_a (-1)^{a-1} (v_{ia} b) (x) (drop a);
// composition of the two maps is checked to vanish on construction.
KoszulComplex koszul_complex(const Ring& ring, const Subspace& v, int p, int q, int l);

struct KoszulCondition {
    enum class Kind { I, II, III, None };
    Kind kind = Kind::None;
    std::string str() const;
};

KoszulCondition koszul_condition_for(const Instance& inst, int codim, int p, int q, int l);

struct KoszulReport {
    int p = 0, q = 0, l = 0, codim = 0;
    long long rank_first = 0, kernel_second = 0, middle_homology = 0;
    KoszulCondition condition;
    Verdict verdict = Verdict::Observed;
};

KoszulReport koszul_exactness_check(const Ring& ring, const Subspace& v, int p, int q, int l,
                                    const RankOptions& opt = {});

struct MultKernelReport {
    int q = 0;
    long long kernel_dim = 0;
    std::optional<long long> expected;  // set when the degree condition holds
    bool condition_met = false;
    Verdict verdict = Verdict::Observed;
};

// Kernel of b |-> (v |-> v b) from B_q(d+e-n-1) into Hom(V, B_{q+1}(d+e-n-1)).
// Expected 0 for middle q, C(s-1, n-r) for q = 0, under the respective
// degree conditions with c = codim(V).
MultKernelReport multiplication_kernel(const Ring& ring, const Subspace& v, int q,
                                       const RankOptions& opt = {});

long long binomial(long long n, long long k);

}  // namespace jacring
