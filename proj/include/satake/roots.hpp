#ifndef SATAKE_ROOTS_HPP
#define SATAKE_ROOTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

// Weights live in fundamental-weight coordinates throughout: the group is
// taken simply-connected, so the weight lattice is the Z-span of the
// fundamental weights and <alpha_i^vee, mu> is simply coords[i].
using Weight = QVec;

using WeylWord = std::vector<int>;  // 0-based simple indices

struct CartanDatum {
    int rank = 0;
    std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
    std::vector<std::string> labels;

    void validate() const;  // throws bad_input on malformed matrices
};

// Built-in named types: "A1", "A2", "A3", "D4" (D4: node 1 is the trivalent one,
// 0-based index 1, matching the Bourbaki numbering alpha_2 in 1-based terms).
CartanDatum named_cartan(const std::string& name);

// A pair (positive coroot, integer level).  `direction` indexes into
// RootTables::positive_coroots.
struct AffineCoroot {
    int direction = 0;
    long level = 0;
    auto operator<=>(const AffineCoroot&) const = default;
};

class RootTables {
public:
    CartanDatum datum;
    // Positive roots in fundamental-weight coordinates (integer entries).
    std::vector<Weight> positive_roots;
    // Positive coroots as pairing functionals against the fundamental
    // weights; this vector is also the expansion over simple coroots.
    std::vector<IVec> positive_coroots;
    // Expansion of each positive root over the simple roots.
    std::vector<IVec> positive_root_coeffs;

    int rank() const { return datum.rank; }
    int num_positive() const { return static_cast<int>(positive_roots.size()); }

    Weight simple_root(int i) const;           // alpha_i in fw coordinates
    Weight fundamental_weight(int i) const;    // unit vector
    Rat pairing(int coroot_index, const Weight& mu) const;

    // s_i(mu) = mu - <alpha_i^vee,mu> alpha_i
    Weight reflect(int i, const Weight& mu) const;

    // Expand an element of the root lattice over the simple roots.
    // Returns nullopt if the coordinates are not all integers.
    std::optional<IVec> root_coordinates(const Weight& mu) const;

    // Index of a positive root given in fw coordinates, or -1.
    int positive_root_index(const Weight& beta) const;

private:
    mutable std::map<Weight, int> root_index_;  // lazily built lookup
};

// Reflection closure of the simple (root, coroot) pairs.  Enumeration order:
// height of the root, then lexicographic on simple-root coefficients.
// Throws not_finite_type if the closure exceeds an internal bound.
RootTables build_root_system(const CartanDatum& datum);

// Half-sum over the positive coroots supported on J of the pairing with mu.
// J = all indices gives rho applied to mu.
Rat rho_eval(const RootTables& tables, const Weight& mu, const std::vector<int>& J);

// True iff lam - mu is a nonnegative-integer combination of {alpha_j : j in J}.
bool dominance_leq(const RootTables& tables, const Weight& mu, const Weight& lam,
                   const std::vector<int>& J);

// w = s_{i_1} ... s_{i_k} applied to mu (fold from the right).
Weight weyl_act(const RootTables& tables, const WeylWord& word, const Weight& mu);

// Length of the product via inversion counting; word is reduced iff its
// length equals the inversion count.
int weyl_length(const RootTables& tables, const WeylWord& word);
bool is_reduced(const RootTables& tables, const WeylWord& word);

// Canonical representative of the Weyl-group element: the lexicographically
// least reduced word, found by greedy left-descent search.
WeylWord lexmin_reduced_word(const RootTables& tables, const WeylWord& word);

// A reduced word for the longest element (lex-least).
WeylWord longest_word(const RootTables& tables);

bool is_dominant(const Weight& mu);
bool is_integral_weight(const Weight& mu);

// -w0(mu): highest weight of the dual V(mu)*.
Weight dual_highest_weight(const RootTables& tables, const Weight& mu);

Weight weight_from_string(const std::string& s, int rank);  // "w1+2*w2" or "0"
std::string weight_to_string(const Weight& mu);

}  // namespace satake

#endif
