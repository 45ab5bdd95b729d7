#ifndef SATAKE_CONES_HPP
#define SATAKE_CONES_HPP

#include <vector>

#include "satake/roots.hpp"

namespace satake {

// Chain-of-chambers feasibility for a reduced word (i_1,...,i_l) of w0:
// points x_1,...,x_l with x_k in (s_{i_1}...s_{i_k})(C) and
// x_k - x_{k+1} in C, where C is the open dominant chamber of the dual
// space.  Points are reported in the coordinates v_j = <x, alpha_j>.
struct ChamberChainResult {
    bool feasible = false;
    Rat slack = 0;                 // maximized uniform margin (0 if infeasible)
    std::vector<QVec> witnesses;   // x_1..x_l when feasible
};

// Exact test via Fourier-Motzkin elimination with a single uniform slack
// variable; all strict inequalities are encoded as >= slack and the maximal
// slack is computed exactly.  Throws non_reduced_word if the input word is
// not reduced.
ChamberChainResult condition_A_check(const RootTables& tables, const WeylWord& word);

struct LineWordResult {
    WeylWord word;               // reduced word of w0 read off the chamber walk
    std::vector<QVec> witnesses; // one interior point per chamber after the first wall
};

// Walks the straight line from x to -y (x, y strictly dominant in
// v-coordinates) across the Weyl fan and returns the crossing word together
// with chamber-interior sample points.  Throws degenerate_line when the line
// meets a wall intersection (two walls crossed at the same instant), and
// bad_input when x or y is not strictly dominant.
LineWordResult chamber_word_from_line(const RootTables& tables, const QVec& x, const QVec& y);

// Exhaustive scan for tuples (nu_1,...,nu_l), nu_k in w_k(-Q_+) with
// coefficients bounded by `bound`, whose partial sums stay in Q_+ and whose
// total is zero.  Returns each tuple in fundamental-weight coordinates.
// For a word satisfying the chain condition only the zero tuple exists.
std::vector<std::vector<Weight>> lemma_condA_witness_scan(const RootTables& tables,
                                                          const WeylWord& word,
                                                          long bound);

}  // namespace satake

#endif
