#include "jacring/checks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jacring/errors.hpp"

namespace jacring {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Observed: return "OBSERVED";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// (block, offset-within-block) of an ambient coordinate
std::pair<const GradedPieceBasis::Block*, int> locate(const GradedPieceBasis& basis, int idx) {
    for (const auto& blk : basis.blocks) {
        if (blk.size() == 0) continue;
        if (idx < blk.offset + blk.size()) return {&blk, idx - blk.offset};
    }
    throw InconsistentDimensions("ambient index outside basis");
}

WeightIndex weight_sum(const WeightIndex& x, const WeightIndex& y) {
    WeightIndex w = x;
    for (size_t i = 0; i < w.a.size(); ++i) w.a[i] += y.a[i];
    for (size_t i = 0; i < w.b.size(); ++i) w.b[i] += y.b[i];
    return w;
}

}  // namespace

PairingMatrix pairing_matrix(const Ring& ring, int p, int l) {
    const Instance& inst = ring.instance();
    PairingMatrix out;
    out.p = p;
    out.l = l;
    out.matrix.field = inst.field;
    if (p < 0 || p > inst.m()) return out;  // zero map by convention

    const int dt = inst.d_total(), et = inst.e_total();
    BiDegree left_bd{p, dt - inst.n - 1 + l};
    BiDegree right_bd{inst.m(), 0};
    right_bd.q = inst.m() - p;
    right_bd.l = dt + et - inst.n - 1 - l;

    const TraceInfo& tr = ring.trace();
    auto left = ring.quotient(left_bd);
    auto right = ring.quotient(right_bd);
    out.left_dim = left->dim();
    out.right_dim = right->dim();
    out.matrix.rows = (int)out.left_dim;
    out.matrix.cols = (int)out.right_dim;
    out.matrix.domain_tag = "B" + right_bd.str();
    out.matrix.codomain_tag = "B" + left_bd.str() + "*";

    const GradedPieceBasis& lb = ring.pieces().piece(left_bd);
    const GradedPieceBasis& rb = ring.pieces().piece(right_bd);
    const GradedPieceBasis& top = ring.pieces().piece(tr.bd);
    FieldOps ops(inst.field);

    for (size_t i = 0; i < left->representatives.size(); ++i) {
        auto [lblk, li] = locate(lb, left->representatives[i]);
        const Monomial& lm = lblk->monos->list[li];
        for (size_t j = 0; j < right->representatives.size(); ++j) {
            auto [rblk, ri] = locate(rb, right->representatives[j]);
            int idx = top.coordinate(weight_sum(lblk->w, rblk->w),
                                     mono_mul(lm, rblk->monos->list[ri]));
            mpq_class v = ops.norm(tr.tau_of_basis[idx]);
            if (v != 0) out.matrix.entries.push_back({(int)i, (int)j, v});
        }
    }
    return out;
}

std::string DualityCondition::str() const {
    switch (kind) {
        case Kind::IsoI: return "Iso(i)";
        case Kind::IsoII: return "Iso(ii)";
        case Kind::IsoIII: return "Iso(iii)";
        case Kind::InjectiveOnly: return "InjectiveOnly";
        case Kind::NoGuarantee: return "NoGuarantee";
    }
    return "NoGuarantee";
}

DualityCondition duality_condition_for(const Instance& inst, int p, int l) {
    const int m = inst.m(), s = inst.s(), r = inst.r();
    DualityCondition c;
    if (p < 0 || p > m) return c;
    if (s >= 1 && p < m && l < inst.e_max()) {
        c.kind = DualityCondition::Kind::IsoI;
    } else if (s >= 1 && 0 <= l && l <= inst.e_max() && r + s <= inst.n) {
        c.kind = DualityCondition::Kind::IsoII;
    } else if (s == 0 && l == 0 && (m >= 1 || (m == 0 && p == 0))) {
        c.kind = DualityCondition::Kind::IsoIII;
    } else if (s >= 1 && p == m && l < inst.e_max()) {
        c.kind = DualityCondition::Kind::InjectiveOnly;
    }
    return c;
}

DualityReport duality_check(const Ring& ring, int p, int l, const RankOptions& opt) {
    DualityReport rep;
    rep.p = p;
    rep.l = l;
    rep.condition = duality_condition_for(ring.instance(), p, l);
    PairingMatrix pm = pairing_matrix(ring, p, l);
    rep.left_dim = pm.left_dim;
    rep.right_dim = pm.right_dim;
    rep.rank = (pm.left_dim && pm.right_dim) ? rank(pm.matrix, opt).rank : 0;
    if (rep.condition.guarantees_iso()) {
        bool ok = rep.left_dim == rep.right_dim && rep.rank == rep.left_dim;
        rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    } else if (rep.condition.kind == DualityCondition::Kind::InjectiveOnly) {
        rep.verdict = rep.rank == rep.left_dim ? Verdict::Pass : Verdict::Fail;
    } else {
        rep.verdict = Verdict::Observed;
    }
    return rep;
}

EtaKernelReport eta_kernel(const Ring& ring, const RankOptions& opt) {
    const Instance& inst = ring.instance();
    if (inst.m() < 1) throw std::invalid_argument("eta kernel requires n - r >= 1");
    EtaKernelReport rep;
    PairingMatrix pm = pairing_matrix(ring, 0, inst.e_total());
    rep.domain_dim = pm.left_dim;
    rep.codomain_dim = pm.right_dim;
    rep.rank = (pm.left_dim && pm.right_dim) ? rank(pm.matrix, opt).rank : 0;
    rep.kernel_dim = rep.domain_dim - rep.rank;
    rep.expected = binomial(inst.s() - 1, inst.m());
    rep.surjective = rep.rank == rep.codomain_dim;
    rep.verdict =
        (rep.surjective && rep.kernel_dim == rep.expected) ? Verdict::Pass : Verdict::Fail;
    return rep;
}

Subspace full_subspace(const Ring& ring) {
    Subspace v;
    v.ambient_dim = (int)ring.quotient({1, 0})->dim();
    for (int i = 0; i < v.ambient_dim; ++i) {
        std::vector<mpq_class> e(v.ambient_dim, 0);
        e[i] = 1;
        v.basis.push_back(std::move(e));
    }
    return v;
}

Subspace random_subspace(const Ring& ring, int codim, uint64_t seed) {
    if (codim == 0) return full_subspace(ring);
    const Instance& inst = ring.instance();
    int dim = (int)ring.quotient({1, 0})->dim();
    if (codim < 0 || codim > dim) throw BadSubspace("codimension out of range");
    std::mt19937_64 rng(seed);
    SparseLinearMap f;
    f.rows = codim;
    f.cols = dim;
    f.field = inst.field;
    f.domain_tag = "B(1,0)";
    f.codomain_tag = "functionals";
    for (int i = 0; i < codim; ++i)
        for (int j = 0; j < dim; ++j) {
            mpq_class c;
            if (inst.field.is_rational()) {
                c = mpq_class(long(rng() % 21) - 10);
            } else {
                c = mpq_class(mpz_class(std::to_string(rng() % inst.field.p)));
            }
            if (c != 0) f.entries.push_back({i, j, c});
        }
    Subspace v;
    v.ambient_dim = dim;
    v.basis = kernel_basis(f);
    return v;
}

void validate_subspace(const Ring& ring, const Subspace& v) {
    int dim = (int)ring.quotient({1, 0})->dim();
    if (v.ambient_dim != dim) throw BadSubspace("subspace ambient is not B_1(0)");
    for (const auto& vec : v.basis)
        if ((int)vec.size() != dim) throw BadSubspace("basis vector length mismatch");
    Rref r = rref_of_rows(v.basis, dim, ring.instance().field);
    if (r.rank() != (long long)v.basis.size()) throw BadSubspace("basis vectors dependent");
}

std::vector<std::vector<std::vector<mpq_class>>> multiplication_by_subspace(
    const Ring& ring, const Subspace& v, BiDegree source) {
    const Instance& inst = ring.instance();
    FieldOps ops(inst.field);
    auto src = ring.quotient(source);
    BiDegree tgt_bd{source.q + 1, source.l};
    auto tgt = ring.quotient(tgt_bd);
    const GradedPieceBasis& src_basis = ring.pieces().piece(source);
    const GradedPieceBasis& one_basis = ring.pieces().piece({1, 0});
    const GradedPieceBasis& tgt_basis = ring.pieces().piece(tgt_bd);
    auto b1 = ring.quotient({1, 0});
    const auto& proj = tgt->projector_columns();

    std::vector<std::vector<std::vector<mpq_class>>> out;
    for (const auto& vec : v.basis) {
        std::vector<std::vector<mpq_class>> m(tgt->dim(),
                                              std::vector<mpq_class>(src->dim(), 0));
        // lift of vec: sum of representative basis elements of A_1(0)
        for (size_t t = 0; t < src->representatives.size(); ++t) {
            auto [sblk, si] = locate(src_basis, src->representatives[t]);
            const Monomial& sm = sblk->monos->list[si];
            for (size_t a = 0; a < b1->representatives.size(); ++a) {
                if (vec[a] == 0) continue;
                auto [vblk, vi] = locate(one_basis, b1->representatives[a]);
                int idx = tgt_basis.coordinate(weight_sum(sblk->w, vblk->w),
                                               mono_mul(sm, vblk->monos->list[vi]));
                const auto& col = proj[idx];
                for (size_t rr = 0; rr < col.size(); ++rr) {
                    if (col[rr] == 0) continue;
                    m[rr][t] = ops.add(m[rr][t], ops.mul(vec[a], col[rr]));
                }
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// differential B_p (x) wedge^{w} V -> B_{p+1} (x) wedge^{w-1} V given the
// per-vector multiplication matrices at level p
SparseLinearMap koszul_differential(
    const std::vector<std::vector<std::vector<mpq_class>>>& mult, long long src_bdim,
    long long tgt_bdim, int k, int w, const FieldSpec& field) {
    auto src_combs = combinations(k, w);
    auto tgt_combs = combinations(k, w - 1);
    std::map<std::vector<int>, int> tgt_index;
    for (int i = 0; i < (int)tgt_combs.size(); ++i) tgt_index[tgt_combs[i]] = i;

    FieldOps ops(field);
    SparseLinearMap d;
    d.rows = (int)(tgt_bdim * tgt_combs.size());
    d.cols = (int)(src_bdim * src_combs.size());
    d.field = field;

    for (int ci = 0; ci < (int)src_combs.size(); ++ci) {
        const auto& comb = src_combs[ci];
        for (int a = 0; a < w; ++a) {
            std::vector<int> rest = comb;
            rest.erase(rest.begin() + a);
            int ti = tgt_index.at(rest);
            int sign = (a % 2 == 0) ? 1 : -1;
            const auto& m = mult[comb[a]];
            for (long long col = 0; col < src_bdim; ++col)
                for (long long row = 0; row < tgt_bdim; ++row) {
                    if (m[row][col] == 0) continue;
                    mpq_class v = ops.norm(sign * m[row][col]);
                    if (v != 0)
                        d.entries.push_back({(int)(ti * tgt_bdim + row),
                                             (int)(ci * src_bdim + col), v});
                }
        }
    }
    return d;
}

void check_composition_zero(const SparseLinearMap& d1, const SparseLinearMap& d2,
                            const FieldSpec& field) {
    FieldOps ops(field);
    std::vector<std::vector<std::pair<int, mpq_class>>> d2cols(d2.cols);
    for (const auto& e : d2.entries) d2cols[e.col].emplace_back(e.row, e.v);
    std::vector<std::vector<std::pair<int, mpq_class>>> d1cols(d1.cols);
    for (const auto& e : d1.entries) d1cols[e.col].emplace_back(e.row, e.v);
    for (int c = 0; c < d1.cols; ++c) {
        std::map<int, mpq_class> acc;
        for (const auto& [mid, v1] : d1cols[c])
            for (const auto& [row, v2] : d2cols[mid]) acc[row] = ops.add(acc[row], ops.mul(v1, v2));
        for (const auto& [row, v] : acc)
            if (!ops.is_zero(v))
                throw InconsistentDimensions("Koszul differentials do not compose to zero");
    }
}

}  // namespace

KoszulComplex koszul_complex(const Ring& ring, const Subspace& v, int p, int q, int l) {
    if (q < 0) throw BadSubspace("koszul complex needs q >= 0");
    validate_subspace(ring, v);
    const FieldSpec& field = ring.instance().field;
    int k = (int)v.basis.size();

    long long b0 = ring.quotient({p, l})->dim();
    long long b1 = ring.quotient({p + 1, l})->dim();
    long long b2 = ring.quotient({p + 2, l})->dim();
    auto m0 = multiplication_by_subspace(ring, v, {p, l});
    auto m1 = multiplication_by_subspace(ring, v, {p + 1, l});

    KoszulComplex kc;
    kc.p = p;
    kc.q = q;
    kc.l = l;
    kc.dims[0] = b0 * binomial(k, q + 1);
    kc.dims[1] = b1 * binomial(k, q);
    kc.dims[2] = b2 * binomial(k, q - 1);
    kc.first = koszul_differential(m0, b0, b1, k, q + 1, field);
    kc.second = koszul_differential(m1, b1, b2, k, q, field);
    check_composition_zero(kc.first, kc.second, field);
    return kc;
}

std::string KoszulCondition::str() const {
    switch (kind) {
        case Kind::I: return "(i)";
        case Kind::II: return "(ii)";
        case Kind::III: return "(iii)";
        case Kind::None: return "none";
    }
    return "none";
}

KoszulCondition koszul_condition_for(const Instance& inst, int codim, int p, int q, int l) {
    KoszulCondition c;
    if (inst.s() < 1 || p < 0 || q < 0) return c;
    const int dm = inst.delta_min(), dt = inst.d_total();
    if (q == 0 && dm * p + l >= codim) {
        c.kind = KoszulCondition::Kind::I;
    } else if (q == 1 && dm * p + l >= 1 + codim && dm * (p + 1) + l >= inst.d_max() + codim) {
        c.kind = KoszulCondition::Kind::II;
    } else if (dm * (inst.r() + p) + l >= dt + q + codim && dt + inst.e_max() - inst.n - 1 > l &&
               l >= dt - inst.n - 1 &&
               (inst.r() + inst.s() <= inst.n + 2 || p <= inst.m() - q / 2)) {
        c.kind = KoszulCondition::Kind::III;
    }
    return c;
}

KoszulReport koszul_exactness_check(const Ring& ring, const Subspace& v, int p, int q, int l,
                                    const RankOptions& opt) {
    KoszulReport rep;
    rep.p = p;
    rep.q = q;
    rep.l = l;
    rep.codim = v.codim();
    rep.condition = koszul_condition_for(ring.instance(), rep.codim, p, q, l);
    KoszulComplex kc = koszul_complex(ring, v, p, q, l);
    rep.rank_first = kc.first.cols ? rank(kc.first, opt).rank : 0;
    long long rank_second = kc.second.cols ? rank(kc.second, opt).rank : 0;
    rep.kernel_second = kc.dims[1] - rank_second;
    rep.middle_homology = rep.kernel_second - rep.rank_first;
    if (rep.condition.kind != KoszulCondition::Kind::None)
        rep.verdict = rep.middle_homology == 0 ? Verdict::Pass : Verdict::Fail;
    else
        rep.verdict = Verdict::Observed;
    return rep;
}

MultKernelReport multiplication_kernel(const Ring& ring, const Subspace& v, int q,
                                       const RankOptions& opt) {
    const Instance& inst = ring.instance();
    const int m = inst.m();
    if (q < 0 || q > m) throw std::invalid_argument("need 0 <= q <= n - r");
    validate_subspace(ring, v);
    const int l0 = inst.d_total() + inst.e_total() - inst.n - 1;

    auto mult = multiplication_by_subspace(ring, v, {q, l0});
    long long bq = ring.quotient({q, l0})->dim();
    long long bq1 = ring.quotient({q + 1, l0})->dim();

    SparseLinearMap stacked;
    stacked.cols = (int)bq;
    stacked.rows = (int)(bq1 * mult.size());
    stacked.field = inst.field;
    stacked.domain_tag = "B(" + std::to_string(q) + "," + std::to_string(l0) + ")";
    stacked.codomain_tag = "Hom(V,B(q+1))";
    for (size_t i = 0; i < mult.size(); ++i)
        for (long long row = 0; row < bq1; ++row)
            for (long long col = 0; col < bq; ++col)
                if (mult[i][row][col] != 0)
                    stacked.entries.push_back(
                        {(int)(i * bq1 + row), (int)col, mult[i][row][col]});

    MultKernelReport rep;
    rep.q = q;
    rep.kernel_dim = bq - (stacked.rows ? rank(stacked, opt).rank : 0);

    const int c = v.codim(), dm = inst.delta_min(), dt = inst.d_total();
    if (q == 0) {
        rep.condition_met = dm * (m - 1) + dt >= inst.n + 1 + c;
        if (rep.condition_met) rep.expected = binomial(inst.s() - 1, m);
    } else if (q <= m - 1) {
        int p = m - q;
        rep.condition_met = dm * (p - 1) + dt >= inst.n + 1 + c;
        if (rep.condition_met) rep.expected = 0;
    }
    if (rep.condition_met)
        rep.verdict = rep.kernel_dim == *rep.expected ? Verdict::Pass : Verdict::Fail;
    else
        rep.verdict = Verdict::Observed;
    return rep;
}

}  // namespace jacring
