#ifndef SATAKE_PATHS_HPP
#define SATAKE_PATHS_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "satake/roots.hpp"

namespace satake {

// A piecewise-linear path [0,1] -> Lambda_Q starting at 0, considered modulo
// reparameterization.  The canonical representative stores the sequence of
// displacement vectors of its maximal straight runs: no zero displacements,
// no consecutive positively-proportional displacements, and the time grid is
// uniform (segment k covers [k/m, (k+1)/m]).
class Path {
public:
    Path() = default;  // the constant path at 0

    // Canonicalizes an arbitrary (direction, duration) segment list.
    // Durations must be positive; they are interpreted modulo
    // reparameterization, so only direction*duration displacements matter.
    // The endpoint must be an integral weight.
    static Path from_segments(const std::vector<std::pair<QVec, Rat>>& segments);
    static Path from_displacements(std::vector<QVec> displacements);

    const std::vector<QVec>& displacements() const { return disp_; }
    int num_segments() const { return static_cast<int>(disp_.size()); }

    // Canonical (direction, duration) view: duration 1/m each.
    std::vector<std::pair<QVec, Rat>> segments() const;

    Weight endpoint() const;
    // Path value at breakpoint k (partial displacement sum), k = 0..m.
    QVec point_at_breakpoint(int k) const;

    bool operator==(const Path& o) const;
    bool operator<(const Path& o) const;  // lexicographic on displacements

private:
    std::vector<QVec> disp_;
};

// Exact string data of <alpha_i^vee, path(.)>.
struct StringStats {
    Rat min_value;        // p
    Rat endpoint_value;   // q = <alpha_i^vee, wt>
    Rat first_min_time;
    Rat last_min_time;
    bool integral_min = false;  // p is an integer
    long epsilon = 0;           // -p   (valid when integral_min)
    long phi = 0;               // q-p  (valid when integral_min)
};

enum class Integrality { yes, no, budget_exceeded };

Path straight_path(const Weight& lam);

// pi * eta traversed in order (pi first), modulo reparameterization.
Path concatenate(const Path& p1, const Path& p2);

StringStats path_stats(const Path& p, int i, const RootTables& tables);

// Raising/lowering root operators.  Require every encountered minimum to be
// an integer (they are on integral paths); otherwise a typed
// non_integral_path error is thrown.
std::optional<Path> e_op(const Path& p, int i, const RootTables& tables);
std::optional<Path> f_op(const Path& p, int i, const RootTables& tables);

// Semi-decision for path integrality: two exact sufficient conditions
// (monotone-dominant, and the two-lattice-point segment condition), then
// exploration of the operator closure up to `budget` paths checking that all
// local absolute minima of all simple-coroot pairings are integers.
Integrality is_integral(const Path& p, const RootTables& tables, size_t budget);

// Operator closure of an integral path (its crystal orbit), canonicalized
// and sorted.  Throws budget_exceeded if the orbit grows past `budget`.
std::set<Path> crystal_closure(const Path& p, const RootTables& tables, size_t budget);

// Dominant representative: raise with e-operators until every epsilon is 0.
Path dominant_in_orbit(const Path& p, const RootTables& tables);

// Orbit budget default, overridable via SATAKE_ORBIT_BUDGET.
size_t orbit_budget_default();

}  // namespace satake

#endif
