#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tcg/enumeration.hpp"

using namespace tcg;

TEST_CASE("generator counts match the counting recurrence") {
    // 1, 1, 2, 4, 9, 20, 48, 115, 286, 719 ...
    CHECK(rooted_tree_count(1) == 1);
    CHECK(rooted_tree_count(4) == 4);
    CHECK(rooted_tree_count(9) == 286);
    CHECK(rooted_tree_count(17) == 634847);
    CHECK(rooted_tree_count(19) == 4688676);
    for (int m = 1; m <= 12; ++m) {
        RootedTreeGenerator gen(m);
        std::uint64_t count = 0;
        do {
            ++count;
        } while (gen.next());
        CHECK(BigInt(count) == rooted_tree_count(m));
    }
}

TEST_CASE("generator yields each shape exactly once") {
    for (int m : {4, 7, 9}) {
        RootedTreeGenerator gen(m);
        std::set<std::string> codes;
        std::uint64_t count = 0;
        std::vector<int> parent;
        do {
            gen.current_parents(parent);
            std::vector<int> choice(parent.size() - 1);
            for (std::size_t v = 1; v < parent.size(); ++v) choice[v - 1] = parent[v];
            codes.insert(canonical_code(RootedProfile(choice)).code);
            ++count;
        } while (gen.next());
        CHECK(BigInt(count) == rooted_tree_count(m));
        CHECK(codes.size() == count);  // no duplicates, all canonical
    }
}

TEST_CASE("equilibrium counts for small n match the brute-force oracle") {
    // independent oracle: all labeled profiles, definition-level Nash check,
    // dedup by permutation isomorphism
    for (int n = 1; n <= 3; ++n) {
        std::vector<RootedProfile> shapes;
        fixtures::all_labeled_profiles(n, [&](const RootedProfile& p) {
            if (!p.is_spanning_tree() || !fixtures::brute_is_nash(p)) return;
            for (const auto& s : shapes)
                if (fixtures::brute_isomorphic(s, p)) return;
            shapes.push_back(p);
        });
        EquilibriumReport report = find_equilibria(n);
        CHECK(report.equilibria.size() == shapes.size());
        CHECK(report.equilibria.size() == 1);  // chain is the unique NE here
    }
}

TEST_CASE("find_equilibria on mid-size n") {
    EquilibriumReport r7 = find_equilibria(7);
    CHECK(BigInt(r7.trees_scanned) == rooted_tree_count(8));
    CHECK(r7.equilibria.size() == 1);
    for (const auto& e : r7.equilibria) {
        CHECK(is_nash(e.representative).stable);
        CHECK(fixtures::brute_is_nash(e.representative));
    }

    EquilibriumReport r9 = find_equilibria(9);
    CHECK(r9.equilibria.size() == 1);
    CHECK(r9.best_sc == r9.worst_sc);
}

TEST_CASE("parallel scan returns the identical equilibrium set") {
    EquilibriumReport seq = find_equilibria(10, 1);
    EquilibriumReport par = find_equilibria(10, 4);
    CHECK(seq.trees_scanned == par.trees_scanned);
    REQUIRE(seq.equilibria.size() == par.equilibria.size());
    for (std::size_t k = 0; k < seq.equilibria.size(); ++k) {
        CHECK(seq.equilibria[k].code == par.equilibria[k].code);
        CHECK(seq.equilibria[k].social_cost == par.equilibria[k].social_cost);
    }
}

TEST_CASE("catalogue over a small range") {
    auto reports = equilibrium_catalogue(4, 8);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) CHECK(r.equilibria.size() == 1);
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(find_equilibria(21), ResourceLimitError);
    CHECK_NOTHROW(find_equilibria(5, 1, 5));
    CHECK_THROWS_AS(find_equilibria(6, 1, 5), ResourceLimitError);
}
