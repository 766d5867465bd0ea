#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "jacring/checks.hpp"

namespace jacring {

// Strictly increasing index word from {1..s}; one abstract dlog factor per
// index. The calculus is purely formal: Def 1-4 and the residue identity are
// combinatorial statements in these symbols.
using DlogWord = std::vector<int>;

// homogeneous degree-q combination of length-q words
struct DlogElement {
    int degree = 0;
    std::map<DlogWord, mpq_class> words;

    void add(const DlogWord& w, const mpq_class& c);
};

// wedge of two sorted words: zero on repeated index, sign of the shuffle
// otherwise. Returns (sorted word, sign) with sign = 0 for zero.
std::pair<DlogWord, int> wedge_words(const DlogWord& x, const DlogWord& y);

// The alternating combination sum_nu (-1)^(nu-1) e_{j_nu} [word omitting j_nu]
// for a strictly increasing j_list of length q+1; degree q.
DlogElement omega_form(const std::vector<int>& e, const std::vector<int>& j_list);

// dim of the span of all omega(j_1..j_{q+1}); equals C(s-1, q).
long long wedge_space_dim(const std::vector<int>& e, int q);

// coefficient of the word tau in el; degrees must match
mpq_class residue(const DlogWord& tau, const DlogElement& el);

// index set J: all strictly increasing m-element words from {1..s-1}
std::vector<DlogWord> index_set_J(int s, int m);

struct ResidueCheckReport {
    long long j_size = 0;
    bool identity = false;
    Verdict verdict = Verdict::Pass;
};

// Residue matrix [Res_tau(omega(sigma))] over sigma, tau in J, where
// omega(sigma) is the expanded dlog product of the cross-ratio units
// g_j = G_j^{e_s}/G_s^{e_j}, each factor normalized to unit residue along
// its own divisor. Passes iff the matrix is exactly the identity.
ResidueCheckReport residue_matrix_check(const std::vector<int>& e, int m);
ResidueCheckReport residue_matrix_check(const Instance& inst);

}  // namespace jacring
