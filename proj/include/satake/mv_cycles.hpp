#ifndef SATAKE_MV_CYCLES_HPP
#define SATAKE_MV_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "satake/paths.hpp"
#include "satake/roots.hpp"

namespace satake {

// All affine-coroot exits at one time: the path sits on each hyperplane at
// `time` and leaves its negative half-space immediately afterwards.
struct CrossingDatum {
    Rat time;  // in [0,1)
    std::vector<AffineCoroot> coroots;  // sorted (coroot, level), nonempty
};

// Per positive coroot and integer level, the exact exit events of the path,
// sorted by time.  Only finitely many times carry events; the constant path
// has none.
std::vector<CrossingDatum> crossings(const Path& p, const RootTables& tables);

// One token of a cycle's symbolic generator word: either a one-parameter
// element x[(beta^vee, level)](free param) or a lattice translation z^{wt}.
struct GeneratorToken {
    bool translation = false;
    AffineCoroot coroot{};  // when !translation
    Weight weight;          // when translation
};

// Symbolic label of the cycle attached to a tuple of integral paths: the
// tuple itself, its weight data, both dimension conventions, and the
// generator word read off the crossing events.
struct MVCycleLabel {
    std::vector<Path> paths;
    std::vector<Weight> nu;      // per-path endpoint weight
    std::vector<Weight> lambda;  // weight of a path's dominant orbit member
    Weight mu;                   // sum of the nu
    Int dim_attracting = 0;      // rho(|lambda| + mu): attracting-family dim
    Int dim_repelling = 0;       // rho(|lambda| - mu): repelling-family dim
    std::vector<std::vector<CrossingDatum>> crossings;  // per path
    std::vector<GeneratorToken> generator_word;
};

// Builds the full label.  Throws non_integral_path if some path fails the
// integrality test, budget_exceeded if that test runs out of budget.
MVCycleLabel cycle_label(const std::vector<Path>& paths, const RootTables& tables,
                         size_t budget);

// Number of free parameters in the generator word (one per x token).  The
// label's dimension is reported separately; no relation is asserted.
long generator_parameter_count(const MVCycleLabel& label);

std::string affine_coroot_to_string(const AffineCoroot& c, const RootTables& tables);
std::string generator_word_to_string(const MVCycleLabel& label, const RootTables& tables);

// Exact string data of color i along the concatenation of the label's paths:
// eps = -p and phi = q - p for p the minimum and q the endpoint pairing.
long label_eps(const MVCycleLabel& label, const RootTables& tables, int i);
long label_phi(const MVCycleLabel& label, const RootTables& tables, int i);

// mu_{i} closed form: nu - p alpha_i, the weight of the color-i top of the
// label's component under the one-color Levi.
Weight label_mu_color(const MVCycleLabel& label, const RootTables& tables, int i);

// Raising/lowering on labels, acting through the underlying path tuple with
// the fixed tensor selection rule read left to right.
std::optional<MVCycleLabel> label_e(const MVCycleLabel& label, const RootTables& tables,
                                    int i, size_t budget);
std::optional<MVCycleLabel> label_f(const MVCycleLabel& label, const RootTables& tables,
                                    int i, size_t budget);

// Order-reversal adapter: the label on the reversed path tuple.  The
// repelling-family factorization composes with this reversal; no other part
// of the code switches tensor conventions.
MVCycleLabel reversed_label(const MVCycleLabel& label, const RootTables& tables,
                            size_t budget);

// Weight-level necessary condition for a transition-matrix entry (zp, zpp)
// to be nonzero: every proper partial sum of zp's nu dominates zpp's.
// `admissible_strict` adds the refinement that the labels be equal or some
// partial-sum inequality strict.  Throws mismatched_data unless both labels
// share the lambda tuple and the total weight.
struct Triangularity {
    bool admissible = false;
    bool admissible_strict = false;
};
Triangularity triangularity_admissible(const MVCycleLabel& zp, const MVCycleLabel& zpp,
                                       const RootTables& tables);

// Semisimple rank 1: the repelling-family cycle for (mu, nu) exists iff
// nu = mu - p*alpha with 0 <= p <= <alpha^vee, mu>; it is an affine space
// of dimension p.
struct Rank1Cycle {
    long p = 0;
    long dim = 0;
};
std::optional<Rank1Cycle> rank1_cycle(const RootTables& tables, const Weight& mu,
                                      const Weight& nu);

}  // namespace satake

#endif
