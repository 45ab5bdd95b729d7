#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "satake/crystal.hpp"
#include "satake/dataset.hpp"
#include "satake/error.hpp"
#include "satake/groebner.hpp"
#include "satake/polymat.hpp"
#include "satake/worked_examples.hpp"

namespace satake {

namespace {

constexpr size_t kBudget = 200000;

using EpsVec = std::array<int, 4>;

// Parse expressions like "e1+e2", "-e1-e2", "e3-e2" into coordinates on the
// orthonormal basis.
EpsVec eps_parse(const std::string& s) {
    EpsVec v{0, 0, 0, 0};
    int sign = 1;
    size_t k = 0;
    while (k < s.size()) {
        if (s[k] == '+') { sign = 1; ++k; continue; }
        if (s[k] == '-') { sign = -1; ++k; continue; }
        if (s[k] == 'e' && k + 1 < s.size() && s[k + 1] >= '1' && s[k + 1] <= '4') {
            v[static_cast<size_t>(s[k + 1] - '1')] += sign;
            sign = 1;
            k += 2;
            continue;
        }
        throw Error(errc::parse_error, "bad coordinate expression: " + s);
    }
    return v;
}

int eps_dot(const EpsVec& a, const EpsVec& b) {
    int s = 0;
    for (size_t k = 0; k < 4; ++k) s += a[k] * b[k];
    return s;
}

// One-parameter subgroup attached to a (co)root +/-e_i +/-e_j in the
// eight-dimensional representation preserving the antidiagonal form.
PolyMatrix one_param(const EpsVec& root, const MPoly& a, const PolyRingPtr& ring) {
    int i = -1, j = -1;
    for (int k = 0; k < 4; ++k)
        if (root[static_cast<size_t>(k)] != 0) (i < 0 ? i : j) = k + 1;
    if (j < 0 || eps_dot(root, root) != 2)
        throw Error(errc::bad_input, "not a unit pair of coordinates");
    const int si = root[static_cast<size_t>(i - 1)], sj = root[static_cast<size_t>(j - 1)];
    PolyMatrix m = poly_identity(8, ring);
    auto put = [&](int r, int c, bool minus) {
        m.at(r - 1, c - 1) = m.at(r - 1, c - 1) + (minus ? a.scaled(Rat(-1)) : a);
    };
    if (si == 1 && sj == -1) {       // e_i - e_j
        put(i, j, false);
        put(9 - j, 9 - i, true);
    } else if (si == 1 && sj == 1) { // e_i + e_j
        put(i, 9 - j, false);
        put(j, 9 - i, true);
    } else if (si == -1 && sj == 1) { // e_j - e_i
        put(9 - i, 9 - j, false);
        put(j, i, true);
    } else {                          // -e_i - e_j
        put(9 - i, j, false);
        put(9 - j, i, true);
    }
    return m;
}

std::vector<EpsVec> all_unit_pairs() {
    std::vector<EpsVec> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    EpsVec v{0, 0, 0, 0};
                    v[static_cast<size_t>(i)] = si;
                    v[static_cast<size_t>(j)] = sj;
                    out.push_back(v);
                }
    return out;
}


RatMatrix antidiag_form(int n, const PolyRingPtr& ring) {
    RatMatrix j(n, n);
    for (int k = 0; k < n; ++k) j.at(k, n - 1 - k) = RatFunc(MPoly(ring, Rat(1)));
    return j;
}

RatMatrix rat_transpose(const RatMatrix& m) {
    RatMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

bool rat_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t k = 0; k < a.entries.size(); ++k)
        if (!(a.entries[k] - b.entries[k]).is_zero()) return false;
    return true;
}

// z to the power of a coordinate vector, acting diagonally: the first four
// basis vectors carry weights e_1..e_4, the last four their negatives in
// reverse order.
RatMatrix loop_torus(const EpsVec& alpha, const PolyRingPtr& ring, int zvar) {
    RatMatrix m(8, 8);
    MPoly z = MPoly::variable(ring, zvar);
    MPoly one(ring, Rat(1));
    auto zpow = [&](int c) {
        if (c == 0) return RatFunc(one);
        MPoly p = one;
        for (int k = 0; k < std::abs(c); ++k) p = p * z;
        return c > 0 ? RatFunc(p) : RatFunc(one, p);
    };
    for (int k = 0; k < 4; ++k) {
        m.at(k, k) = zpow(alpha[static_cast<size_t>(k)]);
        m.at(7 - k, 7 - k) = zpow(-alpha[static_cast<size_t>(k)]);
    }
    return m;
}

// Full ten-parameter chart factor: eight shear directions paired with the
// central root, one affine parameter, one loop parameter, then the torus part.
RatMatrix loop_chart_factor(const std::vector<EpsVec>& betas, const EpsVec& alpha,
                            const std::vector<MPoly>& tuple, const PolyRingPtr& ring,
                            int zvar) {
    if (betas.size() != 8 || tuple.size() != 10)
        throw Error(errc::bad_input, "need eight directions and ten parameters");
    PolyMatrix prod = poly_identity(8, ring);
    for (size_t k = 0; k < 8; ++k)
        prod = poly_mat_mul(prod, one_param(betas[k], tuple[k], ring));
    MPoly arg = tuple[8] + MPoly::variable(ring, zvar) * tuple[9];
    prod = poly_mat_mul(prod, one_param(alpha, arg, ring));
    return rat_mat_mul(rat_mat_from_poly(prod), loop_torus(alpha, ring, zvar));
}

// ---- dual numbers over the rational-function field ----

struct Dual {
    RatFunc v0, v1;  // value and first-order part; square of the order term is zero
};

Dual dual_add(const Dual& a, const Dual& b) { return {a.v0 + b.v0, a.v1 + b.v1}; }
Dual dual_mul(const Dual& a, const Dual& b) {
    return {a.v0 * b.v0, a.v0 * b.v1 + a.v1 * b.v0};
}
Dual dual_pow(const Dual& a, long n) {
    Dual out{RatFunc(), RatFunc()};
    bool first = true;
    for (long k = 0; k < n; ++k) out = first ? (first = false, a) : dual_mul(out, a);
    return out;
}
bool dual_is_zero(const Dual& a) { return a.v0.is_zero() && a.v1.is_zero(); }

Dual dual_eval(const MPoly& g, const std::vector<Dual>& images, const PolyRingPtr& out_ring) {
    Dual acc{RatFunc(), RatFunc()};
    for (const auto& [mono, coeff] : g.terms()) {
        Dual term{RatFunc(MPoly(out_ring, coeff)), RatFunc()};
        for (size_t v = 0; v < mono.size(); ++v)
            if (mono[v] > 0) term = dual_mul(term, dual_pow(images[v], mono[v]));
        acc = dual_add(acc, term);
    }
    return acc;
}


MPoly mono_poly(const PolyRingPtr& ring, const Monomial& m, const Rat& c) {
    return MPoly(ring, Rat(1)).times_monomial(m, c);
}

Weight key_weight(const Json& eps_fw, int p, int q) {
    Weight w(4, Rat(0));
    for (int part : {p, q}) {
        int idx = std::abs(part) - 1;
        int sgn = part > 0 ? 1 : -1;
        for (int k = 0; k < 4; ++k)
            w[static_cast<size_t>(k)] += Rat(sgn * eps_fw[idx][k].get<long>());
    }
    return w;
}

}  // namespace

VerificationReport d4_structures() {
    VerificationReport rep;
    rep.title = "d4 matrices";
    const Json data = load_data_file("d4.json");
    RootTables tables = build_root_system(named_cartan(data.at("cartan_type").get<std::string>()));
    const Json& eps_fw = data.at("epsilon_fw");

    // The orthonormal-coordinate table must express the simple roots.
    auto eps_row = [&](int i) {
        Weight w(4, Rat(0));
        for (int k = 0; k < 4; ++k) w[static_cast<size_t>(k)] = Rat(eps_fw[i][k].get<long>());
        return w;
    };
    const std::array<std::pair<EpsVec, int>, 4> simple = {{
        {{1, -1, 0, 0}, 0}, {{0, 1, -1, 0}, 1}, {{0, 0, 1, -1}, 2}, {{0, 0, 1, 1}, 3}}};
    bool eps_ok = true;
    for (const auto& [vec, i] : simple) {
        Weight sum(4, Rat(0));
        for (int k = 0; k < 4; ++k)
            if (vec[static_cast<size_t>(k)] != 0)
                for (int c = 0; c < 4; ++c)
                    sum[static_cast<size_t>(c)] +=
                        Rat(vec[static_cast<size_t>(k)]) * eps_row(k)[static_cast<size_t>(c)];
        Weight alpha = tables.simple_root(i);
        if (qvec_cmp(sum, alpha) != 0) eps_ok = false;
    }
    rep.add("coordinate_table_matches_simple_roots", eps_ok);

    // The second fundamental weight is the highest root.
    {
        Weight sum(4, Rat(0));
        const std::array<int, 4> coeff = {1, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            Weight alpha = tables.simple_root(i);
            for (int c = 0; c < 4; ++c)
                sum[static_cast<size_t>(c)] += Rat(coeff[static_cast<size_t>(i)]) * alpha[static_cast<size_t>(c)];
        }
        rep.add("highest_root_is_second_fundamental",
                qvec_cmp(sum, weight_from_string("w2", 4)) == 0);
    }

    const PolyRingPtr ring = make_ring({"z", "a1", "a2", "a3", "a4", "a5", "a6", "a7",
                                        "a8", "a9", "a10"});
    const int zvar = 0;
    const MPoly a = MPoly::variable(ring, 1);
    const std::vector<EpsVec> roots = all_unit_pairs();
    rep.add("root_count", roots.size() == 24);

    PolyMatrix id = poly_identity(8, ring);
    RatMatrix form = antidiag_form(8, ring);
    bool inv_ok = true, nil_ok = true, form_ok = true;
    for (const EpsVec& r : roots) {
        PolyMatrix x = one_param(r, a, ring);
        PolyMatrix xneg = one_param(r, a.scaled(Rat(-1)), ring);
        PolyMatrix prod = poly_mat_mul(x, xneg);
        PolyMatrix step = x;
        for (int k2 = 0; k2 < 8; ++k2) step.at(k2, k2) = step.at(k2, k2) - MPoly(ring, Rat(1));
        PolyMatrix sq = poly_mat_mul(step, step);
        for (int r2 = 0; r2 < 8; ++r2)
            for (int c2 = 0; c2 < 8; ++c2) {
                if (!(prod.at(r2, c2) - id.at(r2, c2)).is_zero()) inv_ok = false;
                if (!sq.at(r2, c2).is_zero()) nil_ok = false;
            }
        RatMatrix xr = rat_mat_from_poly(x);
        if (!rat_equal(rat_mat_mul(rat_mat_mul(rat_transpose(xr), form), xr), form))
            form_ok = false;
    }
    rep.add("one_parameter_inverses", inv_ok);
    rep.add("shear_steps_nilpotent", nil_ok);
    rep.add("antidiagonal_form_preserved", form_ok);

    // Each shipped direction row lists exactly the coroots pairing to one
    // with its central root.
    const Json& beta_tables = data.at("beta_tables");
    bool rows_ok = true;
    for (const auto& [alpha_str, row] : beta_tables.items()) {
        EpsVec alpha = eps_parse(alpha_str);
        std::set<EpsVec> listed, expected;
        for (const Json& s : row) listed.insert(eps_parse(s.get<std::string>()));
        for (const EpsVec& r : roots)
            if (eps_dot(r, alpha) == 1) expected.insert(r);
        if (row.size() != 8 || listed != expected) rows_ok = false;
    }
    rep.add("direction_rows_pair_to_one", rows_ok);

    // Chart factors: generic determinant one, form preserved, torus limit.
    bool det_ok = true, chart_form_ok = true, zero_limit_ok = true;
    for (const std::string& alpha_str :
         {std::string("e1+e2"), std::string("-e1-e2"), std::string("e2-e3"),
          std::string("e3-e2")}) {
        EpsVec alpha = eps_parse(alpha_str);
        std::vector<EpsVec> betas;
        for (const Json& s : beta_tables.at(alpha_str)) betas.push_back(eps_parse(s.get<std::string>()));
        std::vector<MPoly> tuple, zeros;
        for (int k = 0; k < 10; ++k) {
            tuple.push_back(MPoly::variable(ring, 1 + k));
            zeros.emplace_back(ring);
        }
        RatMatrix chi = loop_chart_factor(betas, alpha, tuple, ring, zvar);
        RatFunc det = rat_mat_det(chi);
        if (!(det - RatFunc(MPoly(ring, Rat(1)))).is_zero()) det_ok = false;
        if (!rat_equal(rat_mat_mul(rat_mat_mul(rat_transpose(chi), form), chi), form))
            chart_form_ok = false;
        RatMatrix at_zero = loop_chart_factor(betas, alpha, zeros, ring, zvar);
        if (!rat_equal(at_zero, loop_torus(alpha, ring, zvar))) zero_limit_ok = false;
    }
    rep.add("chart_factor_determinant_one", det_ok);
    rep.add("chart_factor_preserves_form", chart_form_ok);
    rep.add("chart_factor_torus_limit", zero_limit_ok);
    return rep;
}

VerificationReport d4_u_certificate() {
    VerificationReport rep;
    rep.title = "d4 certificate";
    const Json data = load_data_file("d4.json");
    std::vector<std::string> names;
    for (const Json& v : data.at("ideal_ring")) names.push_back(v.get<std::string>());
    const PolyRingPtr ring = make_ring(names);

    std::vector<MPoly> qg, pg;
    for (const Json& s : data.at("q_generators")) qg.push_back(MPoly::parse(ring, s.get<std::string>()));
    for (const Json& s : data.at("p_generators")) pg.push_back(MPoly::parse(ring, s.get<std::string>()));
    Ideal q{qg}, p{pg};
    MPoly f = MPoly::parse(ring, data.at("f").get<std::string>());

    rep.add("q_inside_p", ideal_contains(ring, p, q));
    rep.add("generator_count", qg.size() == 18);

    // Variable layout in the shipped ring.
    const int ax1 = ring->index_of("x1"), ax2 = ring->index_of("x2");
    auto avar = [&](int k) { return ring->index_of("a" + std::to_string(k)); };  // 1-based
    const int a_first = avar(1);

    // Scalar field for the solution: one coordinate plus the second tuple.
    std::vector<std::string> base_names = {"x"};
    for (int k = 1; k <= 10; ++k) base_names.push_back("b" + std::to_string(k));
    const PolyRingPtr base = make_ring(base_names);
    std::vector<MPoly> to_base(names.size(), MPoly(base));
    to_base[static_cast<size_t>(ax1)] = MPoly::variable(base, 0);
    to_base[static_cast<size_t>(ax2)] = MPoly::variable(base, 0);
    for (int k = 1; k <= 10; ++k)
        to_base[static_cast<size_t>(ring->index_of("b" + std::to_string(k)))] =
            MPoly::variable(base, k);
    // the a-variables must never reach the scalar field; poison them
    for (int k = 1; k <= 10; ++k)
        to_base[static_cast<size_t>(avar(k))] = MPoly(base);

    // Extract the shipped homogeneous linear block.
    const Json& lb = data.at("linear_block");
    const int first = lb.at("first_row").get<int>();
    const int rows = lb.at("rows").get<int>();
    const int unknowns = static_cast<int>(lb.at("unknowns").size());
    const int drop_row = lb.at("drop_term_in_row").get<int>();
    const MPoly dropped = MPoly::parse(ring, lb.at("dropped_term").get<std::string>());

    RatMatrix A(rows, unknowns);
    bool block_ok = true;
    for (int r = 0; r < rows; ++r) {
        const MPoly& g = qg.at(static_cast<size_t>(first + r));
        std::vector<MPoly> cols(static_cast<size_t>(unknowns), MPoly(ring));
        MPoly constant(ring);
        for (const auto& [mono, coeff] : g.terms()) {
            long adeg = 0;
            int apos = -1;
            for (int k = 1; k <= 10; ++k) {
                long e = mono[static_cast<size_t>(avar(k))];
                adeg += e;
                if (e > 0) apos = k;
            }
            Monomial rest = mono;
            MPoly term(ring);
            if (adeg == 0) {
                constant = constant + mono_poly(ring, mono, coeff);
                continue;
            }
            if (adeg != 1 || apos > unknowns) { block_ok = false; continue; }
            rest[static_cast<size_t>(avar(apos))] = 0;
            cols[static_cast<size_t>(apos - 1)] =
                cols[static_cast<size_t>(apos - 1)] + mono_poly(ring, rest, coeff);
        }
        if (first + r == drop_row) {
            if (!(constant - dropped).is_zero()) block_ok = false;
        } else if (!constant.is_zero()) {
            block_ok = false;
        }
        for (int c = 0; c < unknowns; ++c)
            A.at(r, c) = RatFunc(cols[static_cast<size_t>(c)].substituted(base, to_base));
    }
    rep.add("linear_block_extracted", block_ok,
            "seven rows, linear in the first eight parameters, lone offset term as shipped");

    std::vector<RatFunc> rhs(static_cast<size_t>(rows));
    LinSolveResult sol = linsolve_ratfunc(A, rhs);
    rep.add("solution_space_nontrivial", !sol.kernel.empty());
    rep.data["kernel_dimension"] = sol.kernel.size();
    if (sol.kernel.empty()) return rep;
    const std::vector<RatFunc>& c = sol.kernel.front();

    int nonzero_at = -1;
    for (int k = 0; k < unknowns; ++k)
        if (!c[static_cast<size_t>(k)].is_zero()) { nonzero_at = k; break; }
    rep.add("solution_coordinate_nonzero", nonzero_at >= 0);
    rep.data["nonzero_coordinate"] = nonzero_at + 1;

    // Order-one deformation images: both coordinates merge, the first tuple
    // moves at first order along the solution, the second tuple is scalar.
    std::vector<Dual> images(names.size(), Dual{RatFunc(), RatFunc()});
    images[static_cast<size_t>(ax1)] = {RatFunc(MPoly::variable(base, 0)), RatFunc()};
    images[static_cast<size_t>(ax2)] = {RatFunc(MPoly::variable(base, 0)), RatFunc()};
    for (int k = 1; k <= 10; ++k)
        images[static_cast<size_t>(ring->index_of("b" + std::to_string(k)))] = {
            RatFunc(MPoly::variable(base, k)), RatFunc()};
    for (int k = 1; k <= 8; ++k)
        images[static_cast<size_t>(avar(k))] = {RatFunc(), c[static_cast<size_t>(k - 1)]};

    bool all_zero = true;
    for (const MPoly& g : qg)
        if (!dual_is_zero(dual_eval(g, images, base))) all_zero = false;
    rep.add("deformation_kills_ideal", all_zero,
            "all eighteen generators map to zero at first order");

    Dual fd = dual_eval(f, images, base);
    rep.add("offset_maps_to_zero", dual_is_zero(fd));

    bool into_max = true;
    for (const MPoly& g : pg)
        if (!dual_eval(g, images, base).v0.is_zero()) into_max = false;
    rep.add("diagonal_ideal_into_maximal", into_max,
            "every generator of the diagonal ideal lands in the order ideal");

    Dual one = dual_eval(MPoly(ring, Rat(1)), images, base);
    rep.add("unit_stays_unit", !one.v0.is_zero() && one.v1.is_zero());

    // A deformation this shaped cannot kill a perturbed generator: doubling
    // one matched term must leave a first-order residue.
    bool control_ok = false;
    for (int r = 0; r < rows && !control_ok; ++r) {
        const MPoly& g = qg.at(static_cast<size_t>(first + r));
        MPoly matched(ring);
        for (const auto& [mono, coeff] : g.terms())
            if (mono[static_cast<size_t>(a_first + nonzero_at)] > 0)
                matched = matched + mono_poly(ring, mono, coeff);
        if (matched.is_zero()) continue;
        MPoly perturbed = g + matched;  // doubles the matched term
        if (!dual_is_zero(dual_eval(perturbed, images, base))) control_ok = true;
    }
    rep.add("perturbed_generator_detected", control_ok);

    rep.data["claimed_coefficient"] = 2;
    rep.data["certified_lower_bound"] = 2;
    rep.data["exact_value_certified"] = false;
    return rep;
}

VerificationReport d4_crystal_data() {
    VerificationReport rep;
    rep.title = "d4 crystal";
    const Json data = load_data_file("d4.json");
    RootTables tables = build_root_system(named_cartan(data.at("cartan_type").get<std::string>()));
    const Json& eps_fw = data.at("epsilon_fw");
    const Json& ac = data.at("adjoint_crystal");

    CrystalGraph g = b_lambda(tables, weight_from_string("w2", 4), kBudget);
    rep.add("adjoint_size", g.size() == 28);

    Weight zero(4, Rat(0));
    int zero_count = 0;
    for (int x = 0; x < g.size(); ++x)
        if (qvec_cmp(g.wt(x), zero) == 0) ++zero_count;
    rep.add("zero_weight_count", zero_count == 4);

    // Nonzero-weight keys match crystal nodes through their weights alone.
    std::map<std::vector<Rat>, int> node_by_weight;
    bool weight_unique = true;
    for (int x = 0; x < g.size(); ++x) {
        if (qvec_cmp(g.wt(x), zero) == 0) continue;
        if (!node_by_weight.emplace(g.wt(x), x).second) weight_unique = false;
    }
    std::map<std::pair<int, int>, int> key_to_node;
    std::vector<std::pair<int, int>> zero_keys;
    bool keys_ok = ac.at("vertices").size() == 28;
    for (const Json& v : ac.at("vertices")) {
        std::pair<int, int> key{v[0].get<int>(), v[1].get<int>()};
        Weight w = key_weight(eps_fw, key.first, key.second);
        if (qvec_cmp(w, zero) == 0) {
            zero_keys.push_back(key);
            continue;
        }
        auto it = node_by_weight.find(w);
        if (it == node_by_weight.end()) { keys_ok = false; continue; }
        key_to_node[key] = it->second;
    }
    rep.add("nonzero_weight_bijection",
            weight_unique && keys_ok && key_to_node.size() == 24 && zero_keys.size() == 4);

    // The four zero-weight keys are pinned by matching the full arrow set.
    std::set<std::array<int, 3>> graph_edges;
    for (int x = 0; x < g.size(); ++x)
        for (int i = 0; i < 4; ++i)
            if (g.f(x, i) >= 0) graph_edges.insert({i, x, g.f(x, i)});
    std::array<long, 4> per_color{0, 0, 0, 0};
    for (const Json& arrow : ac.at("arrows"))
        ++per_color[static_cast<size_t>(arrow[0].get<int>() - 1)];
    rep.add("arrow_counts", ac.at("arrows").size() == 40 && graph_edges.size() == 40 &&
                                per_color == std::array<long, 4>{10, 10, 10, 10});

    std::vector<int> zero_nodes;
    for (int x = 0; x < g.size(); ++x)
        if (qvec_cmp(g.wt(x), zero) == 0) zero_nodes.push_back(x);
    std::vector<int> perm = {0, 1, 2, 3};
    int matches = 0;
    std::sort(perm.begin(), perm.end());
    do {
        std::map<std::pair<int, int>, int> full = key_to_node;
        for (size_t k = 0; k < 4; ++k) full[zero_keys[k]] = zero_nodes[static_cast<size_t>(perm[k])];
        std::set<std::array<int, 3>> shipped;
        bool ok = true;
        for (const Json& arrow : ac.at("arrows")) {
            std::pair<int, int> from{arrow[1][0].get<int>(), arrow[1][1].get<int>()};
            std::pair<int, int> to{arrow[2][0].get<int>(), arrow[2][1].get<int>()};
            auto itf = full.find(from), itt = full.find(to);
            if (itf == full.end() || itt == full.end()) { ok = false; break; }
            shipped.insert({arrow[0].get<int>() - 1, itf->second, itt->second});
        }
        if (ok && shipped == graph_edges) ++matches;
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.add("arrow_set_match", matches == 1,
            "exactly one placement of the zero-weight keys reproduces every arrow");

    // The two designated elements exist in the doubled crystal, at weight
    // zero, and are distinct.
    CrystalGraph g2 = b_lambda(tables, weight_from_string("2*w2", 4), kBudget);
    rep.add("doubled_size", g2.size() == 300);
    int top = -1;
    for (int x = 0; x < g2.size(); ++x)
        if (qvec_cmp(g2.wt(x), weight_from_string("2*w2", 4)) == 0) top = x;
    auto chase = [&](const Json& ops) {
        int x = top;
        for (const Json& color : ops) {
            if (x < 0) return -1;
            x = g2.f(x, color.get<int>() - 1);
        }
        return x;
    };
    int e1 = chase(data.at("b1_ops"));
    int e2 = chase(data.at("b12_ops"));
    rep.add("operator_words_realized", top >= 0 && e1 >= 0 && e2 >= 0);
    rep.add("operator_words_weight_zero",
            e1 >= 0 && e2 >= 0 && qvec_cmp(g2.wt(e1), zero) == 0 && qvec_cmp(g2.wt(e2), zero) == 0);
    rep.add("operator_words_distinct", e1 >= 0 && e1 != e2);

    // Shipped product expansion: display-only consistency.
    const Json& ce = data.at("claimed_expansion");
    Weight lw = key_weight(eps_fw, ce.at("left")[0][0].get<int>(), ce.at("left")[0][1].get<int>());
    Weight rw = key_weight(eps_fw, ce.at("left")[1][0].get<int>(), ce.at("left")[1][1].get<int>());
    Weight lsum(4, Rat(0));
    for (int k = 0; k < 4; ++k) lsum[static_cast<size_t>(k)] = lw[static_cast<size_t>(k)] + rw[static_cast<size_t>(k)];
    bool terms_ok = ce.at("terms").size() == 9 && qvec_cmp(lsum, zero) == 0;
    int twos = 0;
    std::set<std::array<int, 4>> seen;
    bool has_diag = false;
    for (const Json& t : ce.at("terms")) {
        long coeff = t.at("coefficient").get<long>();
        const Json& pair = t.at("pair");
        std::array<int, 4> sig = {pair[0][0].get<int>(), pair[0][1].get<int>(),
                                  pair[1][0].get<int>(), pair[1][1].get<int>()};
        if (!seen.insert(sig).second) terms_ok = false;
        Weight w1 = key_weight(eps_fw, sig[0], sig[1]);
        Weight w2 = key_weight(eps_fw, sig[2], sig[3]);
        Weight s(4, Rat(0));
        for (int k = 0; k < 4; ++k) s[static_cast<size_t>(k)] = w1[static_cast<size_t>(k)] + w2[static_cast<size_t>(k)];
        if (qvec_cmp(s, zero) != 0) terms_ok = false;
        if (coeff == 2) {
            ++twos;
            if (qvec_cmp(w1, weight_from_string("w2", 4)) != 0) terms_ok = false;
        } else if (coeff != 1) {
            terms_ok = false;
        }
        if (sig[0] == ce.at("left")[0][0].get<int>() && sig[1] == ce.at("left")[0][1].get<int>() &&
            sig[2] == ce.at("left")[1][0].get<int>() && sig[3] == ce.at("left")[1][1].get<int>()) {
            if (coeff != 1) terms_ok = false;
            has_diag = true;
        }
    }
    rep.add("expansion_display_consistent", terms_ok && twos == 1 && has_diag,
            "nine weight-balanced terms, one doubled on the extreme pair, diagonal present");
    return rep;
}

namespace {

void merge_into(VerificationReport& all, const VerificationReport& part) {
    for (const CheckReport& c : part.checks)
        all.checks.push_back(CheckReport{part.title + ": " + c.name, c.pass, c.detail});
    for (const auto& [k, v] : part.data.items()) all.data[k] = v;
}

}  // namespace

VerificationReport verify_d4() {
    VerificationReport all;
    all.title = "d4 verification";
    merge_into(all, d4_structures());
    merge_into(all, d4_u_certificate());
    merge_into(all, d4_crystal_data());
    return all;
}

}  // namespace satake
