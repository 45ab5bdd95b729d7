#include "satake/mv_cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace satake {

std::vector<CrossingDatum> crossings(const Path& p, const RootTables& tables) {
    const int m = p.num_segments();
    if (m == 0) return {};
    std::map<Rat, std::set<AffineCoroot>> events;
    for (int c = 0; c < static_cast<int>(tables.positive_coroots.size()); ++c) {
        std::vector<Rat> b(m + 1);
        for (int k = 0; k <= m; ++k) b[k] = tables.pairing(c, p.point_at_breakpoint(k));
        for (int k = 0; k < m; ++k) {
            if (b[k + 1] <= b[k]) continue;  // not ascending: no exits here
            Rat t0 = Rat(k) / m;
            if (is_integer(b[k])) events[t0].insert({c, to_long(b[k])});
            Rat slope = b[k + 1] - b[k];
            for (Int lv = rat_floor(b[k]) + 1; Rat(lv) < b[k + 1]; ++lv) {
                Rat t = (Rat(k) + (Rat(lv) - b[k]) / slope) / m;
                events[t].insert({c, to_long(Rat(lv))});
            }
        }
    }
    std::vector<CrossingDatum> out;
    for (auto& [t, set] : events)
        out.push_back({t, std::vector<AffineCoroot>(set.begin(), set.end())});
    return out;
}

namespace {

Weight endpoint_weight(const Path& p, int rank) {
    Weight w = p.endpoint();
    return w.empty() ? Weight(rank, Rat(0)) : w;
}

Int exact_nonneg_dim(const RootTables& tables, const Weight& mu, const char* which) {
    std::vector<int> all(tables.rank());
    for (int i = 0; i < tables.rank(); ++i) all[i] = i;
    Rat v = rho_eval(tables, mu, all);
    if (!is_integer(v) || v < 0)
        throw Error(errc::internal, std::string("cycle dimension is not a nonnegative integer: ") + which);
    return v.get_num();
}

}  // namespace

MVCycleLabel cycle_label(const std::vector<Path>& paths, const RootTables& tables,
                         size_t budget) {
    if (paths.empty()) throw Error(errc::bad_input, "cycle label needs at least one path");
    const int r = tables.rank();

    MVCycleLabel label;
    label.paths = paths;
    label.mu = Weight(r, Rat(0));
    Weight total_lambda(r, Rat(0));
    for (const Path& p : paths) {
        switch (is_integral(p, tables, budget)) {
            case Integrality::yes: break;
            case Integrality::no:
                throw Error(errc::non_integral_path, "cycle label needs integral paths");
            case Integrality::budget_exceeded:
                throw Error(errc::budget_exceeded, "integrality test ran out of budget");
        }
        Weight nu = endpoint_weight(p, r);
        Weight lam = endpoint_weight(dominant_in_orbit(p, tables), r);
        label.nu.push_back(nu);
        label.lambda.push_back(lam);
        label.mu = qvec_add(label.mu, nu);
        total_lambda = qvec_add(total_lambda, lam);
        label.crossings.push_back(crossings(p, tables));
    }
    label.dim_attracting =
        exact_nonneg_dim(tables, qvec_add(total_lambda, label.mu), "attracting");
    label.dim_repelling =
        exact_nonneg_dim(tables, qvec_sub(total_lambda, label.mu), "repelling");

    for (size_t j = 0; j < paths.size(); ++j) {
        for (const CrossingDatum& cd : label.crossings[j])
            for (const AffineCoroot& ac : cd.coroots) {
                GeneratorToken tok;
                tok.coroot = ac;
                label.generator_word.push_back(tok);
            }
        GeneratorToken z;
        z.translation = true;
        z.weight = label.nu[j];
        label.generator_word.push_back(z);
    }
    return label;
}

long generator_parameter_count(const MVCycleLabel& label) {
    long n = 0;
    for (const GeneratorToken& t : label.generator_word)
        if (!t.translation) ++n;
    return n;
}

std::string affine_coroot_to_string(const AffineCoroot& c, const RootTables& tables) {
    const IVec& cor = tables.positive_coroots.at(c.direction);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < cor.size(); ++i) {
        if (cor[i] == 0) continue;
        if (!first) os << "+";
        if (cor[i] != 1) os << cor[i] << "*";
        os << "a" << (i + 1) << "v";
        first = false;
    }
    os << "," << c.level << ")";
    return os.str();
}

std::string generator_word_to_string(const MVCycleLabel& label, const RootTables& tables) {
    std::ostringstream os;
    bool first = true;
    for (const GeneratorToken& t : label.generator_word) {
        if (!first) os << " ";
        first = false;
        if (t.translation)
            os << "z^{" << weight_to_string(t.weight) << "}";
        else
            os << "x[" << affine_coroot_to_string(t.coroot, tables) << "](c)";
    }
    return os.str();
}

namespace {

Path concatenate_all(const std::vector<Path>& paths) {
    Path acc = paths.at(0);
    for (size_t j = 1; j < paths.size(); ++j) acc = concatenate(acc, paths[j]);
    return acc;
}

long integral_min(const StringStats& st) {
    if (!st.integral_min)
        throw Error(errc::non_integral_path, "string minimum is not an integer");
    return -st.epsilon;
}

// Factor receiving the operator under the left-associated selection rule.
int acting_position(const std::vector<Path>& paths, const RootTables& tables, int i,
                    bool lowering, bool& defined) {
    const int n = static_cast<int>(paths.size());
    std::vector<long> eps_k(n), phi_k(n), wt_pair(n);
    for (int k = 0; k < n; ++k) {
        StringStats st = path_stats(paths[k], i, tables);
        long p = integral_min(st);
        eps_k[k] = -p;
        phi_k[k] = st.phi;
        if (!is_integer(st.endpoint_value))
            throw Error(errc::non_integral_path, "endpoint pairing is not an integer");
        wt_pair[k] = to_long(st.endpoint_value);
    }
    std::vector<long> prefix_phi(n + 1, 0), prefix_eps(n + 1, 0), prefix_wt(n + 1, 0);
    prefix_phi[1] = phi_k[0];
    prefix_eps[1] = eps_k[0];
    prefix_wt[1] = wt_pair[0];
    for (int k = 1; k < n; ++k) {
        prefix_phi[k + 1] = std::max(phi_k[k], prefix_phi[k] + wt_pair[k]);
        prefix_eps[k + 1] = std::max(prefix_eps[k], eps_k[k] - prefix_wt[k]);
        prefix_wt[k + 1] = prefix_wt[k] + wt_pair[k];
    }
    defined = lowering ? prefix_phi[n] > 0 : prefix_eps[n] > 0;
    if (!defined) return -1;
    int L = n;
    while (L > 1) {
        bool act_left = lowering ? (prefix_phi[L - 1] > eps_k[L - 1])
                                 : (prefix_phi[L - 1] >= eps_k[L - 1]);
        if (!act_left) break;
        --L;
    }
    return L - 1;
}

}  // namespace

long label_eps(const MVCycleLabel& label, const RootTables& tables, int i) {
    Path concat = concatenate_all(label.paths);
    if (concat.num_segments() == 0) return 0;
    StringStats st = path_stats(concat, i, tables);
    integral_min(st);
    return st.epsilon;
}

long label_phi(const MVCycleLabel& label, const RootTables& tables, int i) {
    Path concat = concatenate_all(label.paths);
    if (concat.num_segments() == 0) return 0;
    StringStats st = path_stats(concat, i, tables);
    integral_min(st);
    return st.phi;
}

Weight label_mu_color(const MVCycleLabel& label, const RootTables& tables, int i) {
    long p = -label_eps(label, tables, i);
    return qvec_sub(label.mu, qvec_scale(Rat(p), tables.simple_root(i)));
}

std::optional<MVCycleLabel> label_e(const MVCycleLabel& label, const RootTables& tables,
                                    int i, size_t budget) {
    bool defined = false;
    int pos = acting_position(label.paths, tables, i, false, defined);
    if (!defined) return std::nullopt;
    auto up = e_op(label.paths[pos], i, tables);
    if (!up) throw Error(errc::internal, "raising selection hit an undefined edge");
    std::vector<Path> moved = label.paths;
    moved[pos] = *up;
    return cycle_label(moved, tables, budget);
}

std::optional<MVCycleLabel> label_f(const MVCycleLabel& label, const RootTables& tables,
                                    int i, size_t budget) {
    bool defined = false;
    int pos = acting_position(label.paths, tables, i, true, defined);
    if (!defined) return std::nullopt;
    auto down = f_op(label.paths[pos], i, tables);
    if (!down) throw Error(errc::internal, "lowering selection hit an undefined edge");
    std::vector<Path> moved = label.paths;
    moved[pos] = *down;
    return cycle_label(moved, tables, budget);
}

MVCycleLabel reversed_label(const MVCycleLabel& label, const RootTables& tables,
                            size_t budget) {
    std::vector<Path> rev(label.paths.rbegin(), label.paths.rend());
    return cycle_label(rev, tables, budget);
}

Triangularity triangularity_admissible(const MVCycleLabel& zp, const MVCycleLabel& zpp,
                                       const RootTables& tables) {
    const size_t n = zp.paths.size();
    if (zpp.paths.size() != n)
        throw Error(errc::mismatched_data, "labels have different tuple lengths");
    for (size_t j = 0; j < n; ++j)
        if (qvec_cmp(zp.lambda[j], zpp.lambda[j]) != 0)
            throw Error(errc::mismatched_data, "labels have different shape tuples");
    if (qvec_cmp(zp.mu, zpp.mu) != 0)
        throw Error(errc::mismatched_data, "labels have different total weights");

    std::vector<int> all(tables.rank());
    for (int i = 0; i < tables.rank(); ++i) all[i] = i;

    Triangularity res;
    res.admissible = true;
    bool some_strict = false;
    Weight sum_p(tables.rank(), Rat(0)), sum_pp(tables.rank(), Rat(0));
    for (size_t k = 0; k + 1 < n; ++k) {
        sum_p = qvec_add(sum_p, zp.nu[k]);
        sum_pp = qvec_add(sum_pp, zpp.nu[k]);
        if (!dominance_leq(tables, sum_pp, sum_p, all)) {
            res.admissible = false;
            break;
        }
        if (qvec_cmp(sum_p, sum_pp) != 0) some_strict = true;
    }
    bool equal = zp.paths == zpp.paths;
    res.admissible_strict = res.admissible && (equal || some_strict);
    return res;
}

std::optional<Rank1Cycle> rank1_cycle(const RootTables& tables, const Weight& mu,
                                      const Weight& nu) {
    if (tables.rank() != 1) throw Error(errc::bad_input, "rank-one data required");
    if (!is_dominant(mu) || !is_integral_weight(mu))
        throw Error(errc::bad_input, "first weight must be dominant integral");
    auto rc = tables.root_coordinates(qvec_sub(mu, nu));
    if (!rc) return std::nullopt;
    long p = (*rc)[0];
    long r = to_long(mu[0]);
    if (p < 0 || p > r) return std::nullopt;
    return Rank1Cycle{p, p};
}

}  // namespace satake
