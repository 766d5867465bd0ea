#include "jacring/bigraded.hpp"

#include <algorithm>

#include "jacring/errors.hpp"

namespace jacring {

int WeightIndex::weight() const {
    int w = 0;
    for (int x : a) w += x;
    for (int x : b) w += x;
    return w;
}

int GradedPieceBasis::block_index(const WeightIndex& w) const {
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? -1 : it->second;
}

int GradedPieceBasis::coordinate(const WeightIndex& w, const Monomial& m) const {
    int bi = block_index(w);
    if (bi < 0) throw BidegreeMismatch("no block for weight index in " + bd.str());
    const Block& blk = blocks[bi];
    if (blk.poly_deg < 0) throw BidegreeMismatch("empty block in " + bd.str());
    int mi = blk.monos->index(m);
    if (mi < 0) throw BidegreeMismatch("monomial outside block of " + bd.str());
    return blk.offset + mi;
}

AlgElement AlgElement::one(const Instance& inst) {
    AlgElement el;
    el.bd = {0, 0};
    HomogPoly c(inst.n + 1, 0);
    c.add_term(Monomial(inst.n + 1, 0), 1);
    el.add_part(WeightIndex{std::vector<int>(inst.r(), 0), std::vector<int>(inst.s(), 0)}, c);
    return el;
}

void AlgElement::add_part(const WeightIndex& w, const HomogPoly& f) {
    if (f.is_zero()) return;
    auto it = parts.find(w);
    if (it == parts.end())
        parts.emplace(w, f);
    else
        it->second = add(it->second, f);
}

namespace {

void compositions(int len, int total, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(len - 1, total - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const GradedPieceBasis& PieceTable::piece(BiDegree bd) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(bd);
    if (it != cache_.end()) return *it->second;

    auto basis = std::make_unique<GradedPieceBasis>();
    basis->bd = bd;
    if (bd.q >= 0) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> weights;
        for (int qa = 0; qa <= bd.q; ++qa) {
            std::vector<std::vector<int>> as, bs;
            std::vector<int> cur;
            compositions(inst_.r(), qa, cur, as);
            compositions(inst_.s(), bd.q - qa, cur, bs);
            for (const auto& a : as)
                for (const auto& b : bs) weights.emplace_back(a, b);
        }
        std::sort(weights.begin(), weights.end());
        int offset = 0;
        for (auto& [a, b] : weights) {
            GradedPieceBasis::Block blk;
            blk.w = WeightIndex{a, b};
            blk.poly_deg = bd.l;
            for (int i = 0; i < inst_.r(); ++i) blk.poly_deg += a[i] * inst_.d[i];
            for (int j = 0; j < inst_.s(); ++j) blk.poly_deg += b[j] * inst_.e[j];
            blk.offset = offset;
            blk.monos = &monomial_basis(inst_.n, blk.poly_deg);
            offset += blk.size();
            basis->by_weight_[blk.w] = (int)basis->blocks.size();
            basis->blocks.push_back(blk);
        }
        basis->dim = offset;
    }
    return *cache_.emplace(bd, std::move(basis)).first->second;
}

std::vector<mpq_class> PieceTable::coordinates(const AlgElement& el) const {
    const GradedPieceBasis& basis = piece(el.bd);
    std::vector<mpq_class> v(basis.dim, 0);
    for (const auto& [w, f] : el.parts) {
        if (w.weight() != el.bd.q)
            throw BidegreeMismatch("part weight does not match element bidegree");
        for (const auto& [m, c] : f.terms) v[basis.coordinate(w, m)] = c;
    }
    return v;
}

SparseLinearMap multiplication_matrix(const PieceTable& table, const AlgElement& g,
                                      BiDegree source) {
    const Instance& inst = table.instance();
    for (const auto& [w, f] : g.parts) {
        if (w.weight() != g.bd.q || (int)w.a.size() != inst.r() || (int)w.b.size() != inst.s())
            throw BidegreeMismatch("multiplier parts inconsistent with its bidegree");
    }
    BiDegree target{source.q + g.bd.q, source.l + g.bd.l};
    const GradedPieceBasis& src = table.piece(source);
    const GradedPieceBasis& dst = table.piece(target);

    SparseLinearMap m;
    m.rows = dst.dim;
    m.cols = src.dim;
    m.field = inst.field;
    m.domain_tag = "A" + source.str();
    m.codomain_tag = "A" + target.str();

    for (const auto& blk : src.blocks) {
        if (blk.size() == 0) continue;
        for (int j = 0; j < blk.size(); ++j) {
            int col = blk.offset + j;
            const Monomial& mono = blk.monos->list[j];
            for (const auto& [gw, gf] : g.parts) {
                WeightIndex tw;
                tw.a.resize(inst.r());
                tw.b.resize(inst.s());
                for (int i = 0; i < inst.r(); ++i) tw.a[i] = blk.w.a[i] + gw.a[i];
                for (int i = 0; i < inst.s(); ++i) tw.b[i] = blk.w.b[i] + gw.b[i];
                for (const auto& [gm, gc] : gf.terms) {
                    int row = dst.coordinate(tw, mono_mul(mono, gm));
                    m.entries.push_back({row, col, gc});
                }
            }
        }
    }
    return m;
}

}  // namespace jacring
