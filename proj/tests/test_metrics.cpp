#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tcg/balanced.hpp"
#include "tcg/cost.hpp"
#include "tcg/enumeration.hpp"
#include "tcg/metrics.hpp"

using namespace tcg;
using fixtures::rat;

TEST_CASE("optimum is the chain with social cost n") {
    for (int n : {1, 5, 23}) {
        RootedProfile p = optimum_profile(n);
        CHECK(social_cost(compute_stats(p)) == n);
    }
}

TEST_CASE("any tree with an in-degree-2 node costs at least n + 2") {
    std::mt19937 rng(3);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 10);
        std::vector<int> choice(n);
        for (int i = 0; i < n; ++i) choice[i] = static_cast<int>(rng() % (i + 1));
        RootedProfile p(choice);
        SubtreeStats s = compute_stats(p);
        bool has_two = false;
        for (int v = 0; v <= n; ++v) has_two = has_two || s.indeg[v] >= 2;
        if (has_two) CHECK(social_cost(s) >= n + 2);
    }
}

TEST_CASE("quality report fields") {
    auto q10 = quality_report(find_equilibria(10));
    CHECK(q10.opt_sc == 10);
    CHECK(q10.fr_opt == rat(7381, 252));  // 10 * H_10
    REQUIRE(q10.has_equilibria);
    CHECK(*q10.pos_ratio <= *q10.poa_ratio);
    CHECK(*q10.pos_ratio >= Rational(1));
    CHECK(*q10.poa_ratio < rat(862, 100));
}

TEST_CASE("fr_opt equals n * H_n for 1 <= n <= 100") {
    for (int n = 1; n <= 100; ++n) {
        RootedProfile p = optimum_profile(n);
        SubtreeStats s = compute_stats(p);
        CHECK(fairness_ratio(p, s) == Rational(n) * harmonic(n));
    }
}

TEST_CASE("fairness bound formulas bracket the discovered equilibria") {
    for (int n = 4; n <= 10; ++n) {
        auto report = find_equilibria(n);
        Interval upper = fr_upper_bound(n);
        Interval lower = fr_lower_bound(n);
        for (const auto& e : report.equilibria) {
            CHECK(rational_below(e.fairness, upper));
            CHECK(rational_above(e.fairness, lower));
        }
    }
}

TEST_CASE("pos floor measurement and the 2.83 ceiling") {
    auto report = find_equilibria(4);
    auto m = pos_floor_check(report, true);  // n = 4 has the balanced (0,1,2) NE
    CHECK(m.ratio >= Rational(1));
    REQUIRE(m.below_283.has_value());
    CHECK(*m.below_283);

    auto m1 = pos_floor_check(find_equilibria(1), false);
    CHECK(m1.ratio == Rational(1));
    CHECK(!m1.below_283.has_value());
}

TEST_CASE("extremal ratios are non-decreasing and cross 2.4317 at h = 7") {
    Rational prev = 0;
    for (int h = 1; h <= 7; ++h) {
        Rational a = balanced_stats(extremal_sequence(h)).a_h;
        CHECK(a >= prev);
        prev = a;
    }
    CHECK(prev > rat(24317, 10000));
}
