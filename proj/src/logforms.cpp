#include "jacring/logforms.hpp"

#include <algorithm>
#include <functional>

#include "jacring/errors.hpp"
#include "jacring/linalg.hpp"

namespace jacring {

void DlogElement::add(const DlogWord& w, const mpq_class& c) {
    if (c == 0) return;
    if ((int)w.size() != degree) throw DegreeMismatch("word length does not match degree");
    auto it = words.find(w);
    if (it == words.end()) {
        words.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) words.erase(it);
    }
}

std::pair<DlogWord, int> wedge_words(const DlogWord& x, const DlogWord& y) {
    DlogWord merged = x;
    merged.insert(merged.end(), y.begin(), y.end());
    // bubble to sorted order, counting transpositions
    int sign = 1;
    for (size_t i = 1; i < merged.size(); ++i)
        for (size_t j = i; j > 0 && merged[j - 1] >= merged[j]; --j) {
            if (merged[j - 1] == merged[j]) return {{}, 0};
            std::swap(merged[j - 1], merged[j]);
            sign = -sign;
        }
    return {merged, sign};
}

static void check_j_list(const std::vector<int>& e, const std::vector<int>& j_list) {
    int s = (int)e.size();
    for (size_t i = 0; i < j_list.size(); ++i) {
        if (j_list[i] < 1 || j_list[i] > s)
            throw BadIndexList("index outside {1..s}");
        if (i > 0 && j_list[i] <= j_list[i - 1])
            throw BadIndexList("index list must be strictly increasing");
    }
}

DlogElement omega_form(const std::vector<int>& e, const std::vector<int>& j_list) {
    check_j_list(e, j_list);
    if (j_list.empty()) throw BadIndexList("need at least one index");
    int q = (int)j_list.size() - 1;
    DlogElement el;
    el.degree = q;
    for (int nu = 0; nu <= q; ++nu) {
        DlogWord w;
        for (int i = 0; i <= q; ++i)
            if (i != nu) w.push_back(j_list[i]);
        int sign = (nu % 2 == 0) ? 1 : -1;
        el.add(w, mpq_class(sign * e[j_list[nu] - 1]));
    }
    return el;
}

long long wedge_space_dim(const std::vector<int>& e, int q) {
    int s = (int)e.size();
    if (q < 0 || q >= s) return 0;
    // span of all omega(j_1..j_{q+1}) inside the space of length-q words
    std::vector<DlogWord> words;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int start, int need) {
        if (need == 0) {
            words.push_back(cur);
            return;
        }
        for (int v = start; v <= s; ++v) {
            cur.push_back(v);
            gen(v + 1, need - 1);
            cur.pop_back();
        }
    };
    gen(1, q);
    std::map<DlogWord, int> word_index;
    for (int i = 0; i < (int)words.size(); ++i) word_index[words[i]] = i;

    std::vector<std::vector<mpq_class>> rows;
    cur.clear();
    std::function<void(int, int)> lists = [&](int start, int need) {
        if (need == 0) {
            DlogElement el = omega_form(e, cur);
            std::vector<mpq_class> row(words.size(), 0);
            for (const auto& [w, c] : el.words) row[word_index.at(w)] = c;
            rows.push_back(std::move(row));
            return;
        }
        for (int v = start; v <= s; ++v) {
            cur.push_back(v);
            lists(v + 1, need - 1);
            cur.pop_back();
        }
    };
    lists(1, q + 1);
    if (rows.empty()) return 0;
    return rref_of_rows(rows, (int)words.size(), FieldSpec::rationals()).rank();
}

mpq_class residue(const DlogWord& tau, const DlogElement& el) {
    if ((int)tau.size() != el.degree) throw DegreeMismatch("residue word length mismatch");
    auto it = el.words.find(tau);
    return it == el.words.end() ? mpq_class(0) : it->second;
}

std::vector<DlogWord> index_set_J(int s, int m) {
    std::vector<DlogWord> out;
    if (m < 0) return out;
    DlogWord cur;
    std::function<void(int, int)> gen = [&](int start, int need) {
        if (need == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= s - 1; ++v) {
            cur.push_back(v);
            gen(v + 1, need - 1);
            cur.pop_back();
        }
    };
    gen(1, m);
    return out;
}

ResidueCheckReport residue_matrix_check(const std::vector<int>& e, int m) {
    int s = (int)e.size();
    ResidueCheckReport rep;
    auto J = index_set_J(s, m);
    rep.j_size = (long long)J.size();
    rep.identity = true;
    if (J.empty()) {  // vacuous
        rep.verdict = Verdict::Pass;
        return rep;
    }
    mpq_class es(e[s - 1]);
    for (size_t si = 0; si < J.size(); ++si) {
        // expand the wedge of normalized factors [j] - (e_j/e_s) [s]
        DlogElement prod;
        prod.degree = 0;
        prod.add({}, 1);
        for (int j : J[si]) {
            DlogElement next;
            next.degree = prod.degree + 1;
            for (const auto& [w, c] : prod.words) {
                auto [w1, s1] = wedge_words(w, {j});
                if (s1) next.add(w1, c * s1);
                auto [w2, s2] = wedge_words(w, {s});
                if (s2) next.add(w2, c * s2 * mpq_class(-e[j - 1]) / es);
            }
            prod = std::move(next);
        }
        for (size_t ti = 0; ti < J.size(); ++ti) {
            mpq_class want = (si == ti) ? 1 : 0;
            if (residue(J[ti], prod) != want) rep.identity = false;
        }
    }
    rep.verdict = rep.identity ? Verdict::Pass : Verdict::Fail;
    return rep;
}

ResidueCheckReport residue_matrix_check(const Instance& inst) {
    return residue_matrix_check(inst.e, inst.m());
}

}  // namespace jacring
