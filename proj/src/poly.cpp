#include "jacring/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace jacring {

int degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("variable count mismatch");
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

uint64_t mono_key(const Monomial& m) {
    if (m.size() > 8) throw std::invalid_argument("at most 8 variables supported");
    uint64_t k = 0;
    for (int e : m) {
        if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
        k = (k << 8) | uint64_t(e);
    }
    return k;
}

int MonomialBasis::index(const Monomial& m) const {
    auto it = by_key_.find(mono_key(m));
    return it == by_key_.end() ? -1 : it->second;
}

namespace {

void enumerate(int vars_left, int deg_left, Monomial& cur, std::vector<Monomial>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {  // X_0 > X_1 > ... : leading exponent descends
        cur.push_back(e);
        enumerate(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const MonomialBasis& monomial_basis(int n, int l) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, MonomialBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, l);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MonomialBasis b;
    b.nvars = n + 1;
    b.deg = l;
    if (l >= 0 && n >= 0) {
        Monomial cur;
        cur.reserve(n + 1);
        enumerate(n + 1, l, cur, b.list);
        for (int i = 0; i < (int)b.list.size(); ++i) b.by_key_[mono_key(b.list[i])] = i;
    }
    return cache.emplace(key, std::move(b)).first->second;
}

void HomogPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    if ((int)m.size() != nvars || degree(m) != deg)
        throw std::invalid_argument("term does not match polynomial degree");
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

HomogPoly partial_derivative(const HomogPoly& f, int var) {
    HomogPoly r(f.nvars, f.deg > 0 ? f.deg - 1 : 0);
    for (const auto& [m, c] : f.terms) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

HomogPoly multiply(const HomogPoly& f, const HomogPoly& g) {
    HomogPoly r(f.nvars, f.deg + g.deg);
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) r.add_term(mono_mul(mf, mg), cf * cg);
    return r;
}

HomogPoly add(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.deg != g.deg) throw std::invalid_argument("degree mismatch in add");
    HomogPoly r = f;
    for (const auto& [m, c] : g.terms) r.add_term(m, c);
    return r;
}

HomogPoly scale(const HomogPoly& f, const mpq_class& c) {
    HomogPoly r(f.nvars, f.deg);
    if (c == 0) return r;
    for (const auto& [m, cf] : f.terms) r.terms.emplace(m, cf * c);
    return r;
}

HomogPoly random_homog(int n, int l, const FieldSpec& field, std::mt19937_64& rng) {
    HomogPoly r(n + 1, l);
    const auto& basis = monomial_basis(n, l);
    for (const auto& m : basis.list) {
        if (field.is_rational()) {
            // uniform in [-10, 10] \ {0}
            long v = long(rng() % 20) - 10;
            if (v >= 0) v += 1;
            r.add_term(m, mpq_class(v));
        } else {
            uint64_t v = rng() % field.p;
            if (v) r.add_term(m, mpq_class(mpz_class(std::to_string(v))));
        }
    }
    return r;
}

HomogPoly random_homog(int n, int l, const FieldSpec& field, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_homog(n, l, field, rng);
}

bool euler_identity(const HomogPoly& f) {
    HomogPoly sum(f.nvars, f.deg);
    for (int k = 0; k < f.nvars; ++k) {
        HomogPoly xk(f.nvars, 1);
        Monomial m(f.nvars, 0);
        m[k] = 1;
        xk.add_term(m, 1);
        sum = add(sum, multiply(xk, partial_derivative(f, k)));
    }
    HomogPoly want = scale(f, f.deg);
    return sum.terms == want.terms;
}

}  // namespace jacring
