#include "satake/crystal.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace satake {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

long chain_length(const std::vector<CrystalGraph::Node>& nodes, int x, bool up, int i) {
    long len = 0;
    int cur = x;
    const size_t guard = nodes.size() + 1;
    while (true) {
        int next = up ? nodes[cur].e[i] : nodes[cur].f[i];
        if (next < 0) return len;
        cur = next;
        if (static_cast<size_t>(++len) > guard)
            throw Error(errc::axiom_violation, "operator chain does not terminate");
    }
}

}  // namespace

CrystalGraph build_crystal_graph(const RootTables& tables,
                                 std::vector<CrystalGraph::Node> raw_nodes) {
    const int n = static_cast<int>(raw_nodes.size());
    const int r = tables.rank();
    if (n == 0) throw Error(errc::bad_input, "empty crystal graph");

    for (auto& nd : raw_nodes) {
        nd.eps.assign(r, 0);
        nd.phi.assign(r, 0);
    }
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < r; ++i) {
            raw_nodes[x].eps[i] = chain_length(raw_nodes, x, true, i);
            raw_nodes[x].phi[i] = chain_length(raw_nodes, x, false, i);
        }

    UnionFind uf(n);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < r; ++i)
            if (raw_nodes[x].f[i] >= 0) uf.unite(x, raw_nodes[x].f[i]);

    std::map<int, std::vector<int>> groups;  // representative -> members
    for (int x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);

    struct BuiltComponent {
        int source;
        std::vector<int> order;  // raw ids in canonical address order
        std::vector<WeylWord> addresses;
    };
    std::vector<BuiltComponent> built;
    for (auto& [rep, members] : groups) {
        int source = -1;
        for (int x : members) {
            bool top = std::all_of(raw_nodes[x].e.begin(), raw_nodes[x].e.end(),
                                   [](int e) { return e < 0; });
            if (top) {
                if (source >= 0)
                    throw Error(errc::axiom_violation, "component with two raising-free nodes");
                source = x;
            }
        }
        if (source < 0)
            throw Error(errc::axiom_violation, "component without a raising-free node");

        BuiltComponent bc;
        bc.source = source;
        std::set<std::pair<WeylWord, int>> frontier{{WeylWord{}, source}};
        std::set<int> done;
        while (!frontier.empty()) {
            auto [addr, x] = *frontier.begin();
            frontier.erase(frontier.begin());
            if (!done.insert(x).second) continue;
            bc.order.push_back(x);
            bc.addresses.push_back(addr);
            for (int i = 0; i < r; ++i) {
                int y = raw_nodes[x].f[i];
                if (y >= 0 && !done.count(y)) {
                    WeylWord next = addr;
                    next.push_back(i);
                    frontier.insert({std::move(next), y});
                }
            }
        }
        if (bc.order.size() != members.size())
            throw Error(errc::axiom_violation, "component not reachable from its top node");
        built.push_back(std::move(bc));
    }

    // Canonical component order: highest weight descending, then source
    // payload (tuple or path) ascending.
    std::sort(built.begin(), built.end(), [&](const BuiltComponent& a, const BuiltComponent& b) {
        int c = qvec_cmp(raw_nodes[a.source].wt, raw_nodes[b.source].wt);
        if (c != 0) return c > 0;
        const auto& na = raw_nodes[a.source];
        const auto& nb = raw_nodes[b.source];
        if (na.tuple != nb.tuple) return na.tuple < nb.tuple;
        if (na.path && nb.path && !(*na.path == *nb.path)) return *na.path < *nb.path;
        throw Error(errc::internal, "indistinguishable component sources");
    });

    std::vector<int> perm(n, -1);  // raw id -> canonical id
    int next_id = 0;
    for (const auto& bc : built)
        for (int raw : bc.order) perm[raw] = next_id++;

    CrystalGraph g;
    g.tables_ = tables;
    g.nodes_.resize(n);
    for (int raw = 0; raw < n; ++raw) {
        CrystalGraph::Node nd = raw_nodes[raw];
        for (int i = 0; i < r; ++i) {
            if (nd.e[i] >= 0) nd.e[i] = perm[nd.e[i]];
            if (nd.f[i] >= 0) nd.f[i] = perm[nd.f[i]];
        }
        g.nodes_[perm[raw]] = std::move(nd);
    }
    for (int c = 0; c < static_cast<int>(built.size()); ++c) {
        CrystalGraph::ComponentInfo info;
        info.source = perm[built[c].source];
        info.highest = g.nodes_[info.source].wt;
        for (size_t k = 0; k < built[c].order.size(); ++k) {
            int id = perm[built[c].order[k]];
            info.members.push_back(id);
            g.nodes_[id].component = c;
            g.nodes_[id].address = built[c].addresses[k];
        }
        g.components_.push_back(std::move(info));
    }
    for (int x = 0; x < n; ++x)
        if (!g.nodes_[x].tuple.empty()) g.tuple_index_[g.nodes_[x].tuple] = x;
    return g;
}

int CrystalGraph::index_of_tuple(const std::vector<int>& tuple) const {
    auto it = tuple_index_.find(tuple);
    if (it == tuple_index_.end())
        throw Error(errc::bad_input, "tuple does not name a tensor element");
    return it->second;
}

CrystalGraph b_lambda(const RootTables& tables, const Weight& lam, size_t budget) {
    if (static_cast<int>(lam.size()) != tables.rank())
        throw Error(errc::bad_input, "weight has the wrong rank");
    if (!is_dominant(lam) || !is_integral_weight(lam))
        throw Error(errc::bad_input, "highest weight must be dominant and integral");

    std::set<Path> orbit = crystal_closure(straight_path(lam), tables, budget);
    std::map<Path, int> index;
    std::vector<Path> paths(orbit.begin(), orbit.end());
    for (int k = 0; k < static_cast<int>(paths.size()); ++k) index[paths[k]] = k;

    const int r = tables.rank();
    std::vector<CrystalGraph::Node> raw(paths.size());
    for (int k = 0; k < static_cast<int>(paths.size()); ++k) {
        auto& nd = raw[k];
        nd.path = paths[k];
        Weight end = paths[k].endpoint();
        nd.wt = end.empty() ? Weight(r, Rat(0)) : end;
        nd.e.assign(r, -1);
        nd.f.assign(r, -1);
        for (int i = 0; i < r; ++i) {
            if (auto up = e_op(paths[k], i, tables)) nd.e[i] = index.at(*up);
            if (auto down = f_op(paths[k], i, tables)) nd.f[i] = index.at(*down);
        }
    }
    CrystalGraph g = build_crystal_graph(tables, std::move(raw));
    if (g.num_components() != 1)
        throw Error(errc::internal, "path orbit split into several components");
    return g;
}

namespace {

// Position receiving the operator under the left-associated pairing rule.
// prefix_phi[k] is phi_i of the first k factors; eps_last(k) is eps_i of
// factor k alone.
int acting_position(const std::vector<long>& prefix_phi, const std::vector<long>& eps_factor,
                    bool lowering) {
    int L = static_cast<int>(eps_factor.size());
    while (L > 1) {
        long phi_prefix = prefix_phi[L - 1];
        long eps_last = eps_factor[L - 1];
        bool act_left = lowering ? (phi_prefix > eps_last) : (phi_prefix >= eps_last);
        if (!act_left) break;
        --L;
    }
    return L - 1;
}

}  // namespace

CrystalGraph tensor_product(const RootTables& tables,
                            const std::vector<const CrystalGraph*>& factors) {
    if (factors.empty()) throw Error(errc::bad_input, "tensor product needs at least one factor");
    const int r = tables.rank();
    for (const CrystalGraph* f : factors) {
        if (f->rank() != r) throw Error(errc::mismatched_data, "tensor factors over different data");
        if (f->tables().datum.cartan != tables.datum.cartan)
            throw Error(errc::mismatched_data, "tensor factors over different Cartan matrices");
    }
    const int n = static_cast<int>(factors.size());
    size_t total = 1;
    for (const CrystalGraph* f : factors) {
        total *= static_cast<size_t>(f->size());
        if (total > 5'000'000) throw Error(errc::budget_exceeded, "tensor product too large");
    }

    std::vector<size_t> stride(n, 1);
    for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * factors[k + 1]->size();

    auto decode = [&](size_t id) {
        std::vector<int> tup(n);
        for (int k = 0; k < n; ++k) {
            tup[k] = static_cast<int>(id / stride[k]);
            id %= stride[k];
        }
        return tup;
    };
    auto encode = [&](const std::vector<int>& tup) {
        size_t id = 0;
        for (int k = 0; k < n; ++k) id += stride[k] * static_cast<size_t>(tup[k]);
        return static_cast<int>(id);
    };

    std::vector<CrystalGraph::Node> raw(total);
    for (size_t id = 0; id < total; ++id) {
        auto tup = decode(id);
        auto& nd = raw[id];
        nd.tuple = tup;
        nd.wt = Weight(r, Rat(0));
        for (int k = 0; k < n; ++k) nd.wt = qvec_add(nd.wt, factors[k]->wt(tup[k]));
        nd.e.assign(r, -1);
        nd.f.assign(r, -1);

        for (int i = 0; i < r; ++i) {
            std::vector<long> eps_k(n), phi_k(n), wt_pair(n);
            for (int k = 0; k < n; ++k) {
                eps_k[k] = factors[k]->eps(tup[k], i);
                phi_k[k] = factors[k]->phi(tup[k], i);
                wt_pair[k] = to_long(factors[k]->wt(tup[k])[i]);
            }
            // Pairwise folds for the whole word and every prefix.
            std::vector<long> prefix_phi(n + 1, 0), prefix_eps(n + 1, 0), prefix_wt(n + 1, 0);
            prefix_phi[1] = phi_k[0];
            prefix_eps[1] = eps_k[0];
            prefix_wt[1] = wt_pair[0];
            for (int k = 1; k < n; ++k) {
                prefix_phi[k + 1] = std::max(phi_k[k], prefix_phi[k] + wt_pair[k]);
                prefix_eps[k + 1] = std::max(prefix_eps[k], eps_k[k] - prefix_wt[k]);
                prefix_wt[k + 1] = prefix_wt[k] + wt_pair[k];
            }

            if (prefix_eps[n] > 0) {
                int pos = acting_position(prefix_phi, eps_k, false);
                int up = factors[pos]->e(tup[pos], i);
                if (up < 0) throw Error(errc::internal, "raising selection hit an undefined edge");
                auto moved = tup;
                moved[pos] = up;
                nd.e[i] = encode(moved);
            }
            if (prefix_phi[n] > 0) {
                int pos = acting_position(prefix_phi, eps_k, true);
                int down = factors[pos]->f(tup[pos], i);
                if (down < 0) throw Error(errc::internal, "lowering selection hit an undefined edge");
                auto moved = tup;
                moved[pos] = down;
                nd.f[i] = encode(moved);
            }
        }
    }
    return build_crystal_graph(tables, std::move(raw));
}

std::map<Weight, long, WeightLess> decompose(const CrystalGraph& g) {
    std::map<Weight, long, WeightLess> out;
    for (int c = 0; c < g.num_components(); ++c) {
        const Weight& h = g.component(c).highest;
        if (!is_dominant(h))
            throw Error(errc::axiom_violation, "component top has a non-dominant weight");
        ++out[h];
    }
    return out;
}

LeviBranching branch_to_levi(const CrystalGraph& g, const std::vector<int>& J) {
    for (int j : J)
        if (j < 0 || j >= g.rank()) throw Error(errc::bad_input, "Levi color out of range");

    UnionFind uf(g.size());
    for (int x = 0; x < g.size(); ++x)
        for (int j : J)
            if (g.f(x, j) >= 0) uf.unite(x, g.f(x, j));

    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < g.size(); ++x) groups[uf.find(x)].push_back(x);

    LeviBranching out;
    for (auto& [rep, members] : groups) {
        int source = -1;
        for (int x : members) {
            bool top = std::all_of(J.begin(), J.end(), [&](int j) { return g.e(x, j) < 0; });
            if (top) {
                if (source >= 0)
                    throw Error(errc::axiom_violation, "Levi component with two top nodes");
                source = x;
            }
        }
        if (source < 0) throw Error(errc::axiom_violation, "Levi component without a top node");
        out.source.push_back(source);
        out.highest.push_back(g.wt(source));
        out.members.push_back(members);
    }
    return out;
}

Weight mu_J(const CrystalGraph& g, int x, const std::vector<int>& J) {
    for (int j : J)
        if (j < 0 || j >= g.rank()) throw Error(errc::bad_input, "Levi color out of range");
    int cur = x;
    int guard = g.size() + 1;
    while (guard-- > 0) {
        int move = -1;
        for (int j : J)
            if (g.e(cur, j) >= 0) { move = j; break; }
        if (move < 0) return g.wt(cur);
        cur = g.e(cur, move);
    }
    throw Error(errc::axiom_violation, "raising walk did not terminate");
}

int extremal_element(const CrystalGraph& blam, const WeylWord& word) {
    if (blam.num_components() != 1)
        throw Error(errc::bad_input, "extremal elements live in a connected graph");
    if (!is_reduced(blam.tables(), word))
        throw Error(errc::non_reduced_word, "extremal element requires a reduced word");

    int x = blam.component(0).source;
    Weight mu = blam.component(0).highest;
    for (size_t j = word.size(); j-- > 0;) {
        int i = word[j];
        if (!is_integer(mu[i]) || mu[i] < 0)
            throw Error(errc::internal, "negative lowering exponent in extremal descent");
        long steps = to_long(mu[i]);
        for (long s = 0; s < steps; ++s) {
            x = blam.f(x, i);
            if (x < 0) throw Error(errc::internal, "extremal descent fell off the graph");
        }
        mu = blam.tables().reflect(i, mu);
    }
    return x;
}

std::vector<int> sigma_map(const CrystalGraph& blam, const CrystalGraph& bdual) {
    if (blam.num_components() != 1 || bdual.num_components() != 1)
        throw Error(errc::bad_input, "the exchange bijection needs connected graphs");
    Weight expected = dual_highest_weight(blam.tables(), blam.component(0).highest);
    if (qvec_cmp(expected, bdual.component(0).highest) != 0)
        throw Error(errc::mismatched_data, "partner graph has the wrong highest weight");

    int lowest = -1;
    for (int x = 0; x < bdual.size(); ++x) {
        bool bottom = true;
        for (int i = 0; i < bdual.rank(); ++i)
            if (bdual.f(x, i) >= 0) { bottom = false; break; }
        if (bottom) {
            if (lowest >= 0) throw Error(errc::axiom_violation, "two lowering-free nodes");
            lowest = x;
        }
    }
    if (lowest < 0) throw Error(errc::axiom_violation, "no lowering-free node");

    std::vector<int> out(blam.size(), -1);
    for (int x = 0; x < blam.size(); ++x) {
        int y = lowest;
        for (int i : blam.node(x).address) {
            y = bdual.e(y, i);
            if (y < 0) throw Error(errc::internal, "address replay fell off the partner graph");
        }
        out[x] = y;
    }

    // The exchange property must hold on every edge.
    for (int x = 0; x < blam.size(); ++x) {
        Weight neg = qvec_scale(Rat(-1), blam.wt(x));
        if (qvec_cmp(neg, bdual.wt(out[x])) != 0)
            throw Error(errc::internal, "exchange bijection broke a weight");
        for (int i = 0; i < blam.rank(); ++i) {
            int y = blam.f(x, i);
            if (y >= 0 && bdual.e(out[x], i) != out[y])
                throw Error(errc::internal, "exchange bijection broke a lowering edge");
            int z = blam.e(x, i);
            if (z >= 0 && bdual.f(out[x], i) != out[z])
                throw Error(errc::internal, "exchange bijection broke a raising edge");
        }
    }
    return out;
}

std::vector<int> invariant_elements(const CrystalGraph& g) {
    std::vector<int> out;
    for (int x = 0; x < g.size(); ++x) {
        if (!qvec_is_zero(g.wt(x))) continue;
        bool flat = true;
        for (int i = 0; i < g.rank(); ++i)
            if (g.eps(x, i) != 0 || g.phi(x, i) != 0) { flat = false; break; }
        if (flat) out.push_back(x);
    }
    return out;
}

namespace {

std::once_flag rotation_self_test_flag;

// Sanity of the component-matching premise on the smallest nontrivial case:
// a rank-one square of the fundamental crystal.
void rotation_self_test() {
    RootTables a1 = build_root_system(named_cartan("A1"));
    CrystalGraph b = b_lambda(a1, {Rat(1)}, 1000);
    CrystalGraph t = tensor_product(a1, {&b, &b});
    auto inv = invariant_elements(t);
    if (inv.size() != 1)
        throw Error(errc::internal, "rotation self-test: expected a unique invariant");
    // The partial tensor is the factor itself: one component, so the rotated
    // invariant must again be the unique invariant of the same product.
    if (t.node(inv[0]).tuple.size() != 2)
        throw Error(errc::internal, "rotation self-test: bad tuple arity");
}

}  // namespace

SatakeRotation rotate_satake(const RootTables& tables, const std::vector<Weight>& lambdas,
                             int invariant_index, size_t budget) {
    std::call_once(rotation_self_test_flag, rotation_self_test);
    if (lambdas.empty()) throw Error(errc::bad_input, "rotation needs at least one factor");

    const int n = static_cast<int>(lambdas.size());
    std::vector<CrystalGraph> factors;
    factors.reserve(n);
    for (const Weight& lam : lambdas) factors.push_back(b_lambda(tables, lam, budget));

    std::vector<const CrystalGraph*> order1;
    for (const auto& f : factors) order1.push_back(&f);
    CrystalGraph t1 = tensor_product(tables, order1);

    auto inv1 = invariant_elements(t1);
    if (std::find(inv1.begin(), inv1.end(), invariant_index) == inv1.end())
        throw Error(errc::not_invariant, "element is not an invariant of the tensor product");

    SatakeRotation res;
    for (int k = 1; k < n; ++k) res.rotated.push_back(lambdas[k]);
    res.rotated.push_back(lambdas[0]);

    if (n == 1) {
        res.index = invariant_index;
        return res;
    }

    std::vector<const CrystalGraph*> partial(order1.begin() + 1, order1.end());
    CrystalGraph m = tensor_product(tables, partial);

    std::vector<int> mpart(t1.node(invariant_index).tuple.begin() + 1,
                           t1.node(invariant_index).tuple.end());
    // A single partial factor stores tuples of length one.
    int mid = m.index_of_tuple(mpart);
    int component = m.node(mid).component;

    std::vector<const CrystalGraph*> order2 = partial;
    order2.push_back(order1[0]);
    CrystalGraph t2 = tensor_product(tables, order2);

    auto inv2 = invariant_elements(t2);
    if (inv2.size() != inv1.size())
        throw Error(errc::internal, "invariant counts differ between the two orders");

    int match = -1;
    for (int y : inv2) {
        std::vector<int> prefix(t2.node(y).tuple.begin(), t2.node(y).tuple.end() - 1);
        if (m.node(m.index_of_tuple(prefix)).component == component) {
            if (match >= 0)
                throw Error(errc::internal, "two rotated invariants share the matching component");
            match = y;
        }
    }
    if (match < 0)
        throw Error(errc::internal, "no rotated invariant in the matching component");
    res.index = match;
    return res;
}

void verify_crystal_axioms(const CrystalGraph& g) {
    const int r = g.rank();
    for (int x = 0; x < g.size(); ++x) {
        for (int i = 0; i < r; ++i) {
            int up = g.e(x, i);
            if (up >= 0) {
                if (g.f(up, i) != x)
                    throw Error(errc::axiom_violation, "raising edge without inverse");
                Weight expect = qvec_add(g.wt(x), g.tables().simple_root(i));
                if (qvec_cmp(g.wt(up), expect) != 0)
                    throw Error(errc::axiom_violation, "raising edge breaks the weight shift");
            }
            if ((g.eps(x, i) == 0) != (up < 0))
                throw Error(errc::axiom_violation, "string length disagrees with raising edge");
            int down = g.f(x, i);
            if (down >= 0) {
                if (g.e(down, i) != x)
                    throw Error(errc::axiom_violation, "lowering edge without inverse");
                Weight expect = qvec_sub(g.wt(x), g.tables().simple_root(i));
                if (qvec_cmp(g.wt(down), expect) != 0)
                    throw Error(errc::axiom_violation, "lowering edge breaks the weight shift");
            }
            if ((g.phi(x, i) == 0) != (down < 0))
                throw Error(errc::axiom_violation, "string length disagrees with lowering edge");
            if (!is_integer(g.wt(x)[i]) ||
                g.phi(x, i) - g.eps(x, i) != to_long(g.wt(x)[i]))
                throw Error(errc::axiom_violation, "phi - eps does not match the weight pairing");
        }
    }
}

}  // namespace satake
