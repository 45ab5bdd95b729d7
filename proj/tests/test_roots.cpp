#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "satake/roots.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace satake;
using testutil::thrown_code;

namespace {
std::vector<int> full_J(int rank) {
    std::vector<int> J(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) J[static_cast<size_t>(i)] = i;
    return J;
}
}  // namespace

TEST_CASE("positive root counts per named type") {
    CHECK(build_root_system(named_cartan("A1")).num_positive() == 1);
    CHECK(build_root_system(named_cartan("A2")).num_positive() == 3);
    CHECK(build_root_system(named_cartan("A3")).num_positive() == 6);
    CHECK(build_root_system(named_cartan("D4")).num_positive() == 12);
}

TEST_CASE("A2 positive roots are the two simple roots and their sum") {
    auto t = build_root_system(named_cartan("A2"));
    Weight a1 = t.simple_root(0), a2 = t.simple_root(1);
    CHECK(t.positive_root_index(a1) >= 0);
    CHECK(t.positive_root_index(a2) >= 0);
    CHECK(t.positive_root_index(qvec_add(a1, a2)) >= 0);
    CHECK(t.positive_root_index(qvec_sub(a1, a2)) == -1);
}

TEST_CASE("cartan validation rejects malformed and non-finite matrices") {
    CartanDatum bad_diag;
    bad_diag.rank = 1;
    bad_diag.cartan = {{1}};
    CHECK(thrown_code([&] { bad_diag.validate(); }) == errc::bad_input);

    CartanDatum affine;
    affine.rank = 2;
    affine.cartan = {{2, -2}, {-2, 2}};
    affine.validate();  // shape is fine ...
    CHECK(thrown_code([&] { build_root_system(affine); }) == errc::not_finite_type);

    CHECK(thrown_code([] { named_cartan("E9"); }) == errc::bad_input);
}

TEST_CASE("rho evaluations") {
    auto t = build_root_system(named_cartan("A2"));
    auto J = full_J(2);
    CHECK(rho_eval(t, t.simple_root(0), J) == Rat(1));
    CHECK(rho_eval(t, t.fundamental_weight(0), J) == Rat(1));
    CHECK(rho_eval(t, Weight(2, Rat(0)), J) == Rat(0));
}

TEST_CASE("rho pairs to one with every simple root in every type") {
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        for (int i = 0; i < t.rank(); ++i)
            CHECK(rho_eval(t, t.simple_root(i), full_J(t.rank())) == Rat(1));
    }
}

TEST_CASE("twice rho is an even integer on the root lattice") {
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<long> c(-3, 3);
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        auto J = full_J(t.rank());
        for (int trial = 0; trial < 20; ++trial) {
            Weight mu(t.rank(), Rat(0));
            for (int i = 0; i < t.rank(); ++i)
                mu = qvec_add(mu, qvec_scale(Rat(c(rng)), t.simple_root(i)));
            Rat v = Rat(2) * rho_eval(t, mu, J);
            REQUIRE(is_integer(v));
            CHECK(to_long(v) % 2 == 0);
        }
    }
}

TEST_CASE("dominance order") {
    auto t = build_root_system(named_cartan("A2"));
    auto J = full_J(2);
    Weight zero(2, Rat(0));
    Weight theta = qvec_add(t.simple_root(0), t.simple_root(1));
    CHECK(dominance_leq(t, zero, theta, J));
    CHECK_FALSE(dominance_leq(t, t.fundamental_weight(1), t.fundamental_weight(0), J));
    CHECK(dominance_leq(t, theta, theta, {}));
    CHECK_FALSE(dominance_leq(t, zero, theta, {}));
}

TEST_CASE("Weyl action and reduced words in A2") {
    auto t = build_root_system(named_cartan("A2"));
    Weight w1 = t.fundamental_weight(0);
    CHECK(weyl_act(t, {0}, w1) == qvec_sub(w1, t.simple_root(0)));
    Weight minus_w2 = qvec_scale(Rat(-1), t.fundamental_weight(1));
    CHECK(weyl_act(t, {0, 1, 0}, w1) == minus_w2);
    CHECK_FALSE(is_reduced(t, {0, 0}));
    CHECK(is_reduced(t, {0, 1, 0}));
    CHECK(weyl_length(t, {0, 1, 0}) == 3);
    CHECK(weyl_length(t, {0, 0}) == 0);
    CHECK(lexmin_reduced_word(t, {1, 0, 1}) == WeylWord{0, 1, 0});
}

TEST_CASE("simple reflections permute the other positive roots") {
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        for (int i = 0; i < t.rank(); ++i) {
            for (int k = 0; k < t.num_positive(); ++k) {
                if (t.positive_roots[static_cast<size_t>(k)] == t.simple_root(i)) continue;
                Weight image = t.reflect(i, t.positive_roots[static_cast<size_t>(k)]);
                CHECK(t.positive_root_index(image) >= 0);
            }
        }
    }
}

TEST_CASE("longest element") {
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        WeylWord w0 = longest_word(t);
        CHECK(static_cast<int>(w0.size()) == t.num_positive());
        CHECK(is_reduced(t, w0));
        // w0 sends the dominant chamber to the antidominant one.
        Weight rho(t.rank(), Rat(1));
        Weight img = weyl_act(t, w0, rho);
        for (int i = 0; i < t.rank(); ++i) CHECK(img[static_cast<size_t>(i)] < 0);
    }
    auto a2 = build_root_system(named_cartan("A2"));
    CHECK(longest_word(a2) == WeylWord{0, 1, 0});
}

TEST_CASE("dual highest weights") {
    auto a2 = build_root_system(named_cartan("A2"));
    CHECK(dual_highest_weight(a2, a2.fundamental_weight(0)) == a2.fundamental_weight(1));
    auto a1 = build_root_system(named_cartan("A1"));
    CHECK(dual_highest_weight(a1, a1.fundamental_weight(0)) == a1.fundamental_weight(0));
    auto d4 = build_root_system(named_cartan("D4"));
    for (int i = 0; i < 4; ++i)
        CHECK(dual_highest_weight(d4, d4.fundamental_weight(i)) == d4.fundamental_weight(i));
}

TEST_CASE("weight string parsing") {
    Weight w = weight_from_string("w1+2*w2", 2);
    CHECK(w == Weight{Rat(1), Rat(2)});
    CHECK(weight_from_string("0", 3) == Weight(3, Rat(0)));
    CHECK(weight_from_string(weight_to_string(w), 2) == w);
    CHECK(thrown_code([] { weight_from_string("w5", 2); }) == errc::parse_error);
}

TEST_CASE("root coordinate expansion") {
    auto t = build_root_system(named_cartan("A2"));
    auto c = t.root_coordinates(qvec_add(t.simple_root(0), t.simple_root(1)));
    REQUIRE(c.has_value());
    CHECK(*c == IVec{1, 1});
    CHECK_FALSE(t.root_coordinates(t.fundamental_weight(0)).has_value());
}

TEST_CASE("coroot pairings against fundamental weights") {
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        for (int i = 0; i < t.rank(); ++i) {
            for (int j = 0; j < t.rank(); ++j) {
                Rat p = t.pairing(t.positive_root_index(t.simple_root(i)),
                                  t.fundamental_weight(j));
                CHECK(p == (i == j ? Rat(1) : Rat(0)));
            }
        }
    }
}

TEST_CASE("dimension oracle sanity against hand values") {
    auto a2 = build_root_system(named_cartan("A2"));
    CHECK(oracles::weyl_dim(a2, a2.fundamental_weight(0)) == 3);
    CHECK(oracles::weyl_dim(a2, qvec_add(a2.fundamental_weight(0), a2.fundamental_weight(1))) ==
          8);
    auto d4 = build_root_system(named_cartan("D4"));
    CHECK(oracles::weyl_dim(d4, d4.fundamental_weight(1)) == 28);
    CHECK(oracles::weyl_dim(d4, d4.fundamental_weight(0)) == 8);
    auto a3 = build_root_system(named_cartan("A3"));
    CHECK(oracles::weyl_dim(a3, a3.fundamental_weight(1)) == 6);
}

TEST_CASE("character oracle matches dimension oracle") {
    std::mt19937_64 rng(77);
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        for (int trial = 0; trial < 3; ++trial) {
            Weight lam = oracles::random_dominant(t, rng, 300, 2);
            long total = 0;
            for (const auto& [mu, m] : oracles::irreducible_character(t, lam)) {
                CHECK(m > 0);
                (void)mu;
                total += m;
            }
            CHECK(total == oracles::weyl_dim(t, lam));
        }
    }
}
