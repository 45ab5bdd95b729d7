#ifndef SATAKE_CRYSTAL_HPP
#define SATAKE_CRYSTAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/paths.hpp"
#include "satake/roots.hpp"

namespace satake {

struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const { return qvec_cmp(a, b) < 0; }
};

// Finite seminormal colored graph with a canonical node order: components
// are sorted by (highest weight, source payload), nodes inside a component
// by their lexicographically least lowering address from the source.  Two
// builds from the same inputs therefore number elements identically.
class CrystalGraph {
public:
    struct Node {
        Weight wt;
        std::vector<int> e, f;        // per color, -1 when undefined
        std::vector<long> eps, phi;   // string lengths per color
        WeylWord address;             // lex-least lowering address within the component
        int component = 0;
        std::optional<Path> path;     // set for path-model graphs
        std::vector<int> tuple;       // set for tensor products: factor element ids
    };

    struct ComponentInfo {
        int source = 0;               // the unique node without raising edges
        Weight highest;
        std::vector<int> members;     // in address order
    };

    int rank() const { return tables_.rank(); }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int x) const { return nodes_.at(x); }
    int e(int x, int i) const { return nodes_.at(x).e.at(i); }
    int f(int x, int i) const { return nodes_.at(x).f.at(i); }
    long eps(int x, int i) const { return nodes_.at(x).eps.at(i); }
    long phi(int x, int i) const { return nodes_.at(x).phi.at(i); }
    const Weight& wt(int x) const { return nodes_.at(x).wt; }

    int num_components() const { return static_cast<int>(components_.size()); }
    const ComponentInfo& component(int c) const { return components_.at(c); }

    const RootTables& tables() const { return tables_; }

    // Element id for a tensor tuple of factor element ids (tensor graphs only).
    int index_of_tuple(const std::vector<int>& tuple) const;

    friend CrystalGraph build_crystal_graph(const RootTables& tables,
                                            std::vector<Node> raw_nodes);

private:
    RootTables tables_;
    std::vector<Node> nodes_;
    std::vector<ComponentInfo> components_;
    std::map<std::vector<int>, int> tuple_index_;
};

// Connected highest-weight crystal realized on the operator closure of the
// straight path to `lam` (dominant integral).  Throws budget_exceeded if the
// closure grows past `budget`.
CrystalGraph b_lambda(const RootTables& tables, const Weight& lam, size_t budget);

// Left-associated tensor product of the given factors (all over the same
// root datum).  Factor element ids refer to each factor's canonical order.
CrystalGraph tensor_product(const RootTables& tables,
                            const std::vector<const CrystalGraph*>& factors);

// Highest weights with multiplicities; rejects non-seminormal graphs.
std::map<Weight, long, WeightLess> decompose(const CrystalGraph& g);

// Connected components after keeping only the colors in J.
struct LeviBranching {
    std::vector<int> source;                 // unique J-raising-free node per component
    std::vector<Weight> highest;             // its weight
    std::vector<std::vector<int>> members;
};
LeviBranching branch_to_levi(const CrystalGraph& g, const std::vector<int>& J);

// Weight of the J-highest element reachable from x by raising operators.
Weight mu_J(const CrystalGraph& g, int x, const std::vector<int>& J);

// Extremal element of weight w(lambda) in a connected highest-weight graph:
// the divided-power lowering string read off a reduced word of w.
int extremal_element(const CrystalGraph& blam, const WeylWord& word);

// The unique raising/lowering-exchanging bijection between a connected
// highest-weight graph and its dual partner (built for -w0 of the highest
// weight).  Entry x of the result is the partner element id.
std::vector<int> sigma_map(const CrystalGraph& blam, const CrystalGraph& bdual);

// Elements of weight zero killed by every raising operator (equivalently,
// trivial components of a tensor product).
std::vector<int> invariant_elements(const CrystalGraph& g);

// Cyclic rotation on invariants: carries an invariant of
// B(lam[0]) x ... x B(lam[n-1]) to the matching invariant of the tensor with
// the first factor moved last.  Matching is by the component of the common
// partial tensor B(lam[1]) x ... x B(lam[n-1]).
struct SatakeRotation {
    std::vector<Weight> rotated;  // (lam[1], ..., lam[n-1], lam[0])
    int index = 0;                // invariant element id in the rotated tensor
};
SatakeRotation rotate_satake(const RootTables& tables, const std::vector<Weight>& lambdas,
                             int invariant_index, size_t budget);

// Structural sanity of a finite seminormal crystal: mutually inverse edges,
// weight shifts, string lengths, phi - eps pairing.  Throws axiom_violation.
void verify_crystal_axioms(const CrystalGraph& g);

}  // namespace satake

#endif
