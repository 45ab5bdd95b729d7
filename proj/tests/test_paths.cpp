#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "satake/paths.hpp"
#include "satake/roots.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace satake;
using testutil::thrown_code;

namespace {

Weight fw(const RootTables& t, int i) { return t.fundamental_weight(i); }

// Number of orbit members whose every color minimum is zero (i.e. dominant
// image paths).
int count_dominant(const std::set<Path>& orbit, const RootTables& t) {
    int n = 0;
    for (const Path& p : orbit) {
        bool dom = true;
        for (int i = 0; i < t.rank(); ++i)
            if (path_stats(p, i, t).min_value < 0) dom = false;
        if (dom) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("straight paths") {
    auto t = build_root_system(named_cartan("A2"));
    Path p = straight_path(fw(t, 0));
    CHECK(p.num_segments() == 1);
    CHECK(p.endpoint() == fw(t, 0));

    Path zero = straight_path(Weight(2, Rat(0)));
    CHECK(zero.num_segments() == 0);
    CHECK(zero == Path());

    Path both = straight_path(qvec_add(fw(t, 0), fw(t, 1)));
    CHECK(both.num_segments() == 1);
}

TEST_CASE("concatenation folds, respects the unit, and adds weights") {
    auto t = build_root_system(named_cartan("A2"));
    Path p1 = straight_path(fw(t, 0));

    Path doubled = concatenate(p1, p1);
    CHECK(doubled.num_segments() == 1);  // proportional segments merge
    CHECK(doubled.endpoint() == qvec_scale(Rat(2), fw(t, 0)));

    CHECK(concatenate(p1, Path()) == p1);
    CHECK(concatenate(Path(), p1) == p1);

    Weight s1w1 = weyl_act(t, {0}, fw(t, 0));
    Path bent = concatenate(p1, straight_path(s1w1));
    CHECK(bent.num_segments() == 2);
    CHECK(bent.endpoint() == qvec_add(fw(t, 0), s1w1));
}

TEST_CASE("exact string statistics") {
    auto a2 = build_root_system(named_cartan("A2"));
    auto s = path_stats(straight_path(fw(a2, 0)), 0, a2);
    CHECK(s.min_value == Rat(0));
    CHECK(s.epsilon == 0);
    CHECK(s.phi == 1);

    Path flipped = straight_path(weyl_act(a2, {0}, fw(a2, 0)));
    s = path_stats(flipped, 0, a2);
    CHECK(s.min_value == Rat(-1));
    CHECK(s.epsilon == 1);
    CHECK(s.phi == 0);

    auto a1 = build_root_system(named_cartan("A1"));
    Path down = straight_path(qvec_scale(Rat(-1), a1.simple_root(0)));
    s = path_stats(down, 0, a1);
    CHECK(s.min_value == Rat(-2));
    CHECK(s.epsilon == 2);
    CHECK(s.phi == 0);
}

TEST_CASE("raising operator on explicit paths") {
    auto t = build_root_system(named_cartan("A2"));
    Path flipped = straight_path(weyl_act(t, {0}, fw(t, 0)));
    auto up = e_op(flipped, 0, t);
    REQUIRE(up.has_value());
    CHECK(*up == straight_path(fw(t, 0)));
    CHECK_FALSE(e_op(straight_path(fw(t, 0)), 0, t).has_value());
}

TEST_CASE("rank-one double raise lands on the positive root") {
    auto t = build_root_system(named_cartan("A1"));
    Path p = straight_path(qvec_scale(Rat(-1), t.simple_root(0)));
    auto once = e_op(p, 0, t);
    REQUIRE(once.has_value());
    CHECK(once->endpoint() == Weight(1, Rat(0)));
    auto twice = e_op(*once, 0, t);
    REQUIRE(twice.has_value());
    CHECK(twice->endpoint() == t.simple_root(0));
    CHECK_FALSE(e_op(*twice, 0, t).has_value());
}

TEST_CASE("lowering operator and round trips") {
    auto t = build_root_system(named_cartan("A2"));
    Path top = straight_path(fw(t, 0));
    auto down = f_op(top, 0, t);
    REQUIRE(down.has_value());
    CHECK(*down == straight_path(weyl_act(t, {0}, fw(t, 0))));
    auto back = e_op(*down, 0, t);
    REQUIRE(back.has_value());
    CHECK(*back == top);

    CHECK_FALSE(f_op(*down, 0, t).has_value());       // phi = 0
    CHECK_FALSE(f_op(straight_path(fw(t, 1)), 0, t).has_value());  // <a1^v,w2> = 0
}

TEST_CASE("integrality decisions") {
    auto a1 = build_root_system(named_cartan("A1"));
    auto a2 = build_root_system(named_cartan("A2"));

    // Dominant straight paths are integral via the monotone fast test.
    CHECK(is_integral(straight_path(fw(a2, 0)), a2, 1) == Integrality::yes);

    // Lattice-segment concatenations are integral via the two-point test.
    Path concat = concatenate(straight_path(fw(a2, 0)), straight_path(fw(a2, 1)));
    CHECK(is_integral(concat, a2, 1) == Integrality::yes);

    // A path whose coroot pairing dips to -1/2 is not integral.
    Path bad = Path::from_segments({{qvec_scale(Rat(-1), a1.simple_root(0)), Rat(1, 4)},
                                    {qvec_scale(Rat(5, 3), a1.simple_root(0)), Rat(3, 4)}});
    CHECK(bad.endpoint() == a1.simple_root(0));
    CHECK(is_integral(bad, a1, orbit_budget_default()) == Integrality::no);
    CHECK(thrown_code([&] { e_op(bad, 0, a1); }) == errc::non_integral_path);

    // A bent orbit member defeats both fast tests and needs orbit search.
    Path bent = *f_op(straight_path(qvec_add(fw(a2, 0), fw(a2, 1))), 0, a2);
    CHECK(is_integral(bent, a2, 2) == Integrality::budget_exceeded);
    CHECK(is_integral(bent, a2, orbit_budget_default()) == Integrality::yes);
}

TEST_CASE("operator closures have oracle sizes and a unique dominant member") {
    auto a2 = build_root_system(named_cartan("A2"));
    auto a1 = build_root_system(named_cartan("A1"));

    auto orbit3 = crystal_closure(straight_path(fw(a2, 0)), a2, 100);
    CHECK(orbit3.size() == 3);
    CHECK(count_dominant(orbit3, a2) == 1);

    auto orbit2 = crystal_closure(straight_path(fw(a1, 0)), a1, 100);
    CHECK(orbit2.size() == 2);

    auto orbit8 = crystal_closure(straight_path(qvec_add(fw(a2, 0), fw(a2, 1))), a2, 100);
    CHECK(orbit8.size() == static_cast<size_t>(oracles::weyl_dim(a2, qvec_add(fw(a2, 0), fw(a2, 1)))));
    CHECK(count_dominant(orbit8, a2) == 1);

    CHECK(thrown_code([&] {
              crystal_closure(straight_path(qvec_add(fw(a2, 0), fw(a2, 1))), a2, 2);
          }) == errc::budget_exceeded);
}

TEST_CASE("dominant representative of an orbit") {
    auto t = build_root_system(named_cartan("A2"));
    Path top = straight_path(qvec_add(fw(t, 0), fw(t, 1)));
    Path member = *f_op(*f_op(top, 0, t), 1, t);
    CHECK(dominant_in_orbit(member, t) == top);
    CHECK(dominant_in_orbit(top, t) == top);
}

TEST_CASE("string axioms hold across random integral paths") {
    std::mt19937_64 rng(987654);
    for (const auto& [name, t] : testutil::all_named_tables()) {
        CAPTURE(name);
        for (int trial = 0; trial < 15; ++trial) {
            Path p = trial % 2 == 0 ? oracles::random_orbit_path(t, rng, 120, 6)
                                    : oracles::random_concat_path(t, rng, 2, 1);
            for (int i = 0; i < t.rank(); ++i) {
                auto s = path_stats(p, i, t);
                REQUIRE(s.integral_min);
                // phi - eps equals the coroot pairing of the endpoint.
                CHECK(Rat(s.phi - s.epsilon) == p.endpoint()[static_cast<size_t>(i)]);

                auto up = e_op(p, i, t);
                CHECK(up.has_value() == (s.epsilon > 0));
                if (up) {
                    CHECK(up->endpoint() == qvec_add(p.endpoint(), t.simple_root(i)));
                    auto down = f_op(*up, i, t);
                    REQUIRE(down.has_value());
                    CHECK(*down == p);
                }

                auto dn = f_op(p, i, t);
                CHECK(dn.has_value() == (s.phi > 0));
                if (dn) {
                    CHECK(dn->endpoint() == qvec_sub(p.endpoint(), t.simple_root(i)));
                    auto back = e_op(*dn, i, t);
                    REQUIRE(back.has_value());
                    CHECK(*back == p);
                }
            }
        }
    }
}

TEST_CASE("segment constructor rejects malformed input") {
    CHECK(thrown_code([] {
              Path::from_segments({{QVec{Rat(1)}, Rat(0)}});
          }) == errc::bad_input);
    CHECK(thrown_code([] {
              Path::from_segments({{QVec{Rat(1)}, Rat(1, 2)}, {QVec{Rat(1), Rat(1)}, Rat(1, 2)}});
          }) == errc::bad_input);
}
