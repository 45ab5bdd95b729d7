#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "satake/crystal.hpp"
#include "satake/mv_cycles.hpp"
#include "satake/roots.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace satake;
using testutil::thrown_code;

namespace {

constexpr size_t kBudget = 100000;

Weight fw(const RootTables& t, int i) { return t.fundamental_weight(i); }

std::set<int> crossing_directions(const CrossingDatum& d) {
    std::set<int> out;
    for (const auto& c : d.coroots) {
        CHECK(c.level == 0);
        out.insert(c.direction);
    }
    return out;
}

}  // namespace

TEST_CASE("crossing data of straight and reflected paths") {
    auto t = build_root_system(named_cartan("A2"));
    int i_a1 = t.positive_root_index(t.simple_root(0));
    int i_a2 = t.positive_root_index(t.simple_root(1));
    int i_sum = t.positive_root_index(qvec_add(t.simple_root(0), t.simple_root(1)));

    auto cr = crossings(straight_path(fw(t, 0)), t);
    REQUIRE(cr.size() == 1);
    CHECK(cr[0].time == Rat(0));
    CHECK(crossing_directions(cr[0]) == std::set<int>({i_a1, i_sum}));

    auto cr2 = crossings(straight_path(weyl_act(t, {0}, fw(t, 0))), t);
    REQUIRE(cr2.size() == 1);
    CHECK(cr2[0].time == Rat(0));
    CHECK(crossing_directions(cr2[0]) == std::set<int>({i_a2}));

    CHECK(crossings(Path(), t).empty());
}

TEST_CASE("label data of single-path tuples") {
    auto t = build_root_system(named_cartan("A2"));
    auto label = cycle_label({straight_path(fw(t, 0))}, t, kBudget);
    CHECK(label.nu == std::vector<Weight>({fw(t, 0)}));
    CHECK(label.lambda == std::vector<Weight>({fw(t, 0)}));
    CHECK(label.mu == fw(t, 0));
    CHECK(label.dim_attracting == 2);
    CHECK(label.dim_repelling == 0);

    Path lowest = straight_path(weyl_act(t, longest_word(t), fw(t, 0)));
    auto low = cycle_label({lowest}, t, kBudget);
    CHECK(low.lambda == std::vector<Weight>({fw(t, 0)}));
    CHECK(low.mu == qvec_scale(Rat(-1), fw(t, 1)));
    CHECK(low.dim_attracting == 0);
    CHECK(low.dim_repelling == 2);
}

TEST_CASE("label data of a two-path tuple") {
    auto t = build_root_system(named_cartan("A2"));
    auto label = cycle_label({straight_path(fw(t, 0)), straight_path(fw(t, 1))}, t, kBudget);
    CHECK(label.mu == qvec_add(fw(t, 0), fw(t, 1)));
    CHECK(label.dim_attracting == 4);
    CHECK(label.dim_repelling == 0);
    CHECK(label.crossings.size() == 2);
}

TEST_CASE("generator words of dominant tuples stay at level zero") {
    auto t = build_root_system(named_cartan("A2"));
    auto label = cycle_label({straight_path(fw(t, 0)), straight_path(fw(t, 1))}, t, kBudget);

    long x_tokens = 0, z_tokens = 0;
    for (const auto& tok : label.generator_word) {
        if (tok.translation)
            ++z_tokens;
        else {
            CHECK(tok.coroot.level == 0);
            ++x_tokens;
        }
    }
    CHECK(z_tokens == 2);
    CHECK(generator_parameter_count(label) == x_tokens);
    CHECK(label.generator_word.back().translation);
    CHECK(!generator_word_to_string(label, t).empty());
}

TEST_CASE("label string data matches the concatenated path") {
    auto t = build_root_system(named_cartan("A2"));
    Path p1 = straight_path(fw(t, 0));
    Path p2 = *f_op(straight_path(fw(t, 1)), 1, t);
    auto label = cycle_label({p1, p2}, t, kBudget);
    Path cat = concatenate(p1, p2);
    for (int i = 0; i < t.rank(); ++i) {
        auto s = path_stats(cat, i, t);
        CHECK(label_eps(label, t, i) == s.epsilon);
        CHECK(label_phi(label, t, i) == s.phi);
    }
}

TEST_CASE("color-source weight closed form") {
    auto t = build_root_system(named_cartan("A2"));
    auto flipped = cycle_label({straight_path(weyl_act(t, {0}, fw(t, 0)))}, t, kBudget);
    CHECK(label_mu_color(flipped, t, 0) == fw(t, 0));

    auto dom = cycle_label({straight_path(qvec_add(fw(t, 0), fw(t, 1)))}, t, kBudget);
    for (int i = 0; i < t.rank(); ++i) {
        CHECK(label_mu_color(dom, t, i) == qvec_add(fw(t, 0), fw(t, 1)));
        CHECK(label_eps(dom, t, i) == 0);
    }
}

TEST_CASE("labels agree with the tensor graph elementwise") {
    auto t = build_root_system(named_cartan("A2"));
    auto b1 = b_lambda(t, fw(t, 0), kBudget);
    auto b2 = b_lambda(t, fw(t, 1), kBudget);
    auto prod = tensor_product(t, {&b1, &b2});
    for (int x = 0; x < prod.size(); ++x) {
        const auto& tup = prod.node(x).tuple;
        REQUIRE(tup.size() == 2);
        REQUIRE(b1.node(tup[0]).path.has_value());
        REQUIRE(b2.node(tup[1]).path.has_value());
        auto label = cycle_label({*b1.node(tup[0]).path, *b2.node(tup[1]).path}, t, kBudget);
        CHECK(label.mu == prod.wt(x));
        for (int i = 0; i < t.rank(); ++i) {
            CHECK(label_eps(label, t, i) == prod.eps(x, i));
            CHECK(label_phi(label, t, i) == prod.phi(x, i));
            CHECK(label_mu_color(label, t, i) == mu_J(prod, x, {i}));
        }
    }
}

TEST_CASE("label operators act through the paths") {
    auto t = build_root_system(named_cartan("A2"));
    auto label = cycle_label({straight_path(fw(t, 0)), straight_path(fw(t, 1))}, t, kBudget);

    for (int i = 0; i < t.rank(); ++i) {
        auto lowered = label_f(label, t, i, kBudget);
        CHECK(lowered.has_value() == (label_phi(label, t, i) > 0));
        if (!lowered) continue;
        CHECK(lowered->mu == qvec_sub(label.mu, t.simple_root(i)));
        // Raising after lowering returns to the original tuple.
        auto back = label_e(*lowered, t, i, kBudget);
        REQUIRE(back.has_value());
        CHECK(back->paths == label.paths);
        // The color source weight is unchanged along the string.
        CHECK(label_mu_color(*lowered, t, i) == label_mu_color(label, t, i));
    }
}

TEST_CASE("order reversal is an involution preserving the total data") {
    auto t = build_root_system(named_cartan("A2"));
    Path p1 = straight_path(fw(t, 0));
    Path p2 = *f_op(straight_path(fw(t, 1)), 1, t);
    auto label = cycle_label({p1, p2}, t, kBudget);
    auto rev = reversed_label(label, t, kBudget);
    CHECK(rev.paths == std::vector<Path>({p2, p1}));
    CHECK(rev.mu == label.mu);
    CHECK(rev.dim_attracting == label.dim_attracting);
    auto back = reversed_label(rev, t, kBudget);
    CHECK(back.paths == label.paths);
}

TEST_CASE("partial-sum admissibility over rank one") {
    auto t = build_root_system(named_cartan("A1"));
    Path top = straight_path(fw(t, 0));
    Path bot = *f_op(top, 0, t);
    auto zp = cycle_label({top, bot}, t, kBudget);
    auto zpp = cycle_label({bot, top}, t, kBudget);

    auto fwd = triangularity_admissible(zp, zpp, t);
    CHECK(fwd.admissible);
    CHECK(fwd.admissible_strict);
    auto bwd = triangularity_admissible(zpp, zp, t);
    CHECK_FALSE(bwd.admissible);

    auto diag = triangularity_admissible(zp, zp, t);
    CHECK(diag.admissible);
    CHECK(diag.admissible_strict);
}

TEST_CASE("single-path admissibility is vacuous except for strictness") {
    auto t = build_root_system(named_cartan("A2"));
    auto b = b_lambda(t, qvec_add(fw(t, 0), fw(t, 1)), kBudget);
    std::vector<Path> zero_paths;
    for (int x = 0; x < b.size(); ++x)
        if (qvec_is_zero(b.wt(x))) zero_paths.push_back(*b.node(x).path);
    REQUIRE(zero_paths.size() == 2);

    auto za = cycle_label({zero_paths[0]}, t, kBudget);
    auto zb = cycle_label({zero_paths[1]}, t, kBudget);
    auto r = triangularity_admissible(za, zb, t);
    CHECK(r.admissible);
    CHECK_FALSE(r.admissible_strict);
    auto d = triangularity_admissible(za, za, t);
    CHECK(d.admissible);
    CHECK(d.admissible_strict);
}

TEST_CASE("admissibility requires matching frame data") {
    auto t = build_root_system(named_cartan("A2"));
    auto z1 = cycle_label({straight_path(fw(t, 0))}, t, kBudget);
    auto z2 = cycle_label({straight_path(fw(t, 1))}, t, kBudget);
    CHECK(thrown_code([&] { triangularity_admissible(z1, z2, t); }) == errc::mismatched_data);

    auto z3 = cycle_label({*f_op(straight_path(fw(t, 0)), 0, t)}, t, kBudget);
    CHECK(thrown_code([&] { triangularity_admissible(z1, z3, t); }) == errc::mismatched_data);
}

TEST_CASE("rank-one cycle descriptors") {
    auto t = build_root_system(named_cartan("A1"));
    Weight alpha = t.simple_root(0);
    auto full = rank1_cycle(t, alpha, qvec_scale(Rat(-1), alpha));
    REQUIRE(full.has_value());
    CHECK(full->p == 2);
    CHECK(full->dim == 2);

    auto point = rank1_cycle(t, alpha, alpha);
    REQUIRE(point.has_value());
    CHECK(point->p == 0);
    CHECK(point->dim == 0);

    CHECK_FALSE(rank1_cycle(t, alpha, qvec_scale(Rat(-2), alpha)).has_value());
    CHECK_FALSE(rank1_cycle(t, alpha, fw(t, 0)).has_value());
}

TEST_CASE("labels require integral paths") {
    auto t = build_root_system(named_cartan("A1"));
    Path bad = Path::from_segments({{qvec_scale(Rat(-1), t.simple_root(0)), Rat(1, 4)},
                                    {qvec_scale(Rat(5, 3), t.simple_root(0)), Rat(3, 4)}});
    CHECK(thrown_code([&] { cycle_label({bad}, t, kBudget); }) == errc::non_integral_path);
}
