#include "jacring/ring.hpp"

#include "jacring/errors.hpp"

namespace jacring {

std::vector<mpq_class> QuotientPiece::reduce(std::vector<mpq_class> ambient) const {
    FieldOps ops(field);
    ideal_rref.reduce_in_place(ambient, ops);
    std::vector<mpq_class> out;
    out.reserve(representatives.size());
    for (int idx : representatives) out.push_back(ops.norm(ambient[idx]));
    return out;
}

const std::vector<std::vector<mpq_class>>& QuotientPiece::projector_columns() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (proj_cols_.empty() && ambient_dim > 0) {
        proj_cols_.resize(ambient_dim);
        FieldOps ops(field);
        // representative columns are unit vectors; pivot columns come from
        // the matching echelon row
        std::map<int, size_t> pivot_row;
        for (size_t i = 0; i < ideal_rref.pivots.size(); ++i)
            pivot_row[ideal_rref.pivots[i]] = i;
        std::map<int, size_t> rep_pos;
        for (size_t i = 0; i < representatives.size(); ++i) rep_pos[representatives[i]] = i;
        for (int k = 0; k < ambient_dim; ++k) {
            std::vector<mpq_class> col(representatives.size(), 0);
            auto rp = rep_pos.find(k);
            if (rp != rep_pos.end()) {
                col[rp->second] = 1;
            } else {
                const auto& row = ideal_rref.rows[pivot_row.at(k)];
                for (size_t i = 0; i < representatives.size(); ++i)
                    col[i] = ops.neg(row[representatives[i]]);
            }
            proj_cols_[k] = std::move(col);
        }
    }
    return proj_cols_;
}

JacobianGenerators jacobian_generators(const Instance& inst) {
    JacobianGenerators g;
    const int r = inst.r(), s = inst.s();
    auto unit_a = [&](int i) {
        std::vector<int> a(r, 0);
        a[i] = 1;
        return a;
    };
    auto unit_b = [&](int j) {
        std::vector<int> b(s, 0);
        b[j] = 1;
        return b;
    };
    const std::vector<int> zero_a(r, 0), zero_b(s, 0);

    for (int k = 0; k <= inst.n; ++k) {
        AlgElement th;
        th.bd = {1, -1};
        for (int i = 0; i < r; ++i)
            th.add_part(WeightIndex{unit_a(i), zero_b}, partial_derivative(inst.F[i], k));
        for (int j = 0; j < s; ++j)
            th.add_part(WeightIndex{zero_a, unit_b(j)}, partial_derivative(inst.G[j], k));
        g.theta.push_back(std::move(th));
    }
    for (int i = 0; i < r; ++i) {
        AlgElement f;
        f.bd = {0, inst.d[i]};
        f.add_part(WeightIndex{zero_a, zero_b}, inst.F[i]);
        g.f_gens.push_back(std::move(f));
    }
    for (int j = 0; j < s; ++j) {
        AlgElement gl;
        gl.bd = {1, 0};
        gl.add_part(WeightIndex{zero_a, unit_b(j)}, inst.G[j]);
        g.glambda.push_back(std::move(gl));
    }
    return g;
}

Ring::Ring(Instance inst)
    : inst_(std::move(inst)), table_(inst_), gens_(jacobian_generators(inst_)) {
    inst_.validate();
}

SparseLinearMap Ring::ideal_piece_map(BiDegree bd) const {
    const GradedPieceBasis& target = table_.piece(bd);
    SparseLinearMap out;
    out.rows = target.dim;
    out.cols = 0;
    out.field = inst_.field;
    out.domain_tag = "J-sources" + bd.str();
    out.codomain_tag = "A" + bd.str();

    auto append = [&](const AlgElement& gen, BiDegree src) {
        SparseLinearMap m = multiplication_matrix(table_, gen, src);
        for (auto& e : m.entries) out.entries.push_back({e.row, e.col + out.cols, e.v});
        out.cols += m.cols;
    };
    for (const auto& th : gens_.theta) append(th, {bd.q - 1, bd.l + 1});
    for (int i = 0; i < inst_.r(); ++i) append(gens_.f_gens[i], {bd.q, bd.l - inst_.d[i]});
    for (const auto& gl : gens_.glambda) append(gl, {bd.q - 1, bd.l});
    return out;
}

std::shared_ptr<const QuotientPiece> Ring::quotient(BiDegree bd) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = quotients_.find(bd);
        if (it != quotients_.end()) return it->second;
    }
    SparseLinearMap m = ideal_piece_map(bd);
    auto qp = std::make_shared<QuotientPiece>();
    qp->bd = bd;
    qp->ambient_dim = m.rows;
    qp->field = inst_.field;
    qp->ideal_rref = rref_of_map_columns(m);
    qp->ideal_rank = qp->ideal_rref.rank();
    qp->representatives = qp->ideal_rref.non_pivots();
    if ((long long)qp->representatives.size() + qp->ideal_rank != qp->ambient_dim)
        throw InconsistentDimensions("quotient dimension bookkeeping failed");
    std::lock_guard<std::mutex> lock(mu_);
    return quotients_.emplace(bd, std::move(qp)).first->second;
}

long long Ring::dim_B(BiDegree bd, const RankOptions& opt) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = quotients_.find(bd);
        if (it != quotients_.end()) return it->second->dim();
    }
    SparseLinearMap m = ideal_piece_map(bd);
    return (long long)m.rows - rank(m, opt).rank;
}

std::vector<mpq_class> Ring::reduce(const AlgElement& el) const {
    return quotient(el.bd)->reduce(table_.coordinates(el));
}

bool Ring::euler_identity_check() const {
    // sum_k X_k theta_k - sum_i d_i F_i mu_i - sum_j e_j G_j lambda_j == 0 in A_1(0)
    AlgElement acc;
    acc.bd = {1, 0};
    for (int k = 0; k <= inst_.n; ++k) {
        HomogPoly xk(inst_.n + 1, 1);
        Monomial m(inst_.n + 1, 0);
        m[k] = 1;
        xk.add_term(m, 1);
        for (const auto& [w, f] : gens_.theta[k].parts) acc.add_part(w, multiply(xk, f));
    }
    for (int i = 0; i < inst_.r(); ++i)
        for (const auto& [w, f] : gens_.f_gens[i].parts) {
            WeightIndex wi = w;
            wi.a[i] += 1;
            acc.add_part(wi, scale(f, -inst_.d[i]));
        }
    for (int j = 0; j < inst_.s(); ++j)
        for (const auto& [w, f] : gens_.glambda[j].parts) acc.add_part(w, scale(f, -inst_.e[j]));
    for (const auto& [w, f] : acc.parts)
        if (!f.is_zero()) return false;
    return true;
}

BiDegree Ring::top_bidegree() const {
    return {inst_.m(), 2 * (inst_.d_total() - inst_.n - 1) + inst_.e_total()};
}

const TraceInfo& Ring::trace() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (trace_) return *trace_;
    }
    auto info = std::make_shared<TraceInfo>();
    info->bd = top_bidegree();
    info->top = quotient(info->bd);
    if (info->top->dim() != 1) throw TraceUndefined(info->top->dim());
    info->representative = info->top->representatives[0];
    info->tau_of_basis.resize(info->top->ambient_dim);
    const auto& cols = info->top->projector_columns();
    for (int k = 0; k < info->top->ambient_dim; ++k) info->tau_of_basis[k] = cols[k][0];
    std::lock_guard<std::mutex> lock(mu_);
    if (!trace_) trace_ = std::move(info);
    return *trace_;
}

}  // namespace jacring
