#ifndef TCG_TESTS_FIXTURES_HPP
#define TCG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "tcg/cost.hpp"
#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace fixtures {

// The depicted n=16 tree: root with one 6-node subtree (a 3-chain and a
// 2-chain under a shared branch node) and two 5-node subtrees (two 2-chains
// each). The "red" agent is agent 8 (node 9), the deep leaf of the first
// 2-chain in the first 5-node subtree.
inline tcg::RootedProfile fig1_left() {
    return tcg::RootedProfile({0, 1, 2, 3, 1, 5, 0, 7, 8, 7, 10, 0, 12, 13, 12, 15});
}
inline constexpr int kFig1RedAgent = 8;
inline constexpr int kFig1RedTarget = 6;  // leaf of the 6-subtree's 2-chain

// Path-game equilibrium for n=16: root with two subtrees, a branch node over
// two chains of 4 and a branch node over two chains of 3.
inline tcg::RootedProfile path_ne_16() {
    return tcg::RootedProfile({0, 1, 1, 2, 4, 5, 3, 7, 8, 0, 10, 10, 11, 13, 12, 15});
}

// Path-game equilibrium for n=18: two copies of the branch-over-two-4-chains
// subtree.
inline tcg::RootedProfile path_ne_18() {
    return tcg::RootedProfile({0, 1, 1, 2, 4, 5, 3, 7, 8, 0, 10, 10, 11, 13, 14, 12, 16, 17});
}

// The n=19 equilibrium hosting the joint 8/3 -> 109/42 pair deviation: root
// over a branch-with-two-4-chains subtree and two balanced 5-node subtrees.
// Agents 4 and 8 (the deep chain leaves) each pay 8/3.
inline tcg::RootedProfile pair_host_19() {
    return tcg::RootedProfile({0, 1, 2, 3, 4, 1, 6, 7, 8, 0, 10, 11, 10, 13, 0, 15, 16, 15, 18});
}

// --------------------------------------------------------------------------
// Independent oracles: everything below recomputes from the definitions with
// no shared code with the library's evaluation path.
// --------------------------------------------------------------------------

// Cost from the definition: walk the pointer chain, price each edge as
// indeg(head) / |T(tail)| with both quantities recounted from scratch.
inline tcg::CostValue brute_cost(const tcg::RootedProfile& p, int agent) {
    const int n = p.n;
    auto points_to = [&](int node) { return p.choice[node - 1]; };

    // reachability-based subtree size
    auto subtree_size = [&](int u) {
        int count = 0;
        for (int w = 1; w <= n; ++w) {
            int steps = 0;
            bool reaches = (w == u);
            for (int a = w; a != 0 && !reaches && steps <= n + 1; ++steps) {
                a = points_to(a);
                if (a == u) reaches = true;
                if (a == 0) break;
            }
            if (reaches) ++count;
        }
        return u == 0 ? count + 1 : count;
    };
    std::vector<int> indeg(n + 1, 0);
    for (int v = 1; v <= n; ++v) indeg[points_to(v)]++;

    tcg::Rational total = 0;
    int u = p.node_of_agent(agent);
    int hops = 0;
    while (u != 0) {
        if (++hops > n + 1) return tcg::CostValue::infinity();
        int v = points_to(u);
        total += tcg::Rational(indeg[v], subtree_size(u));
        u = v;
    }
    return tcg::CostValue::of(total);
}

// Nash check from the definition: every agent, every alternative target,
// full profile rebuild.
inline bool brute_is_nash(const tcg::RootedProfile& p) {
    for (int agent = 0; agent < p.n; ++agent) {
        tcg::CostValue current = brute_cost(p, agent);
        for (int t = 0; t <= p.n; ++t) {
            if (t == p.node_of_agent(agent) || t == p.choice[agent]) continue;
            tcg::RootedProfile moved = p;
            moved.choice[agent] = t;
            if (brute_cost(moved, agent) < current) return false;
        }
    }
    return true;
}

// All labeled profiles on n agents (n^n of them); fine for n <= 4.
inline void all_labeled_profiles(int n, const std::function<void(const tcg::RootedProfile&)>& f) {
    std::vector<int> choice(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            f(tcg::RootedProfile(choice));
            return;
        }
        for (int t = 0; t <= n; ++t) {
            if (t == i + 1) continue;
            choice[i] = t;
            rec(i + 1);
        }
    };
    rec(0);
}

// Rooted-tree isomorphism by brute permutation search (root fixed).
inline bool brute_isomorphic(const tcg::RootedProfile& a, const tcg::RootedProfile& b) {
    if (a.n != b.n) return false;
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i + 1;
    do {
        // node v of `a` maps to perm[v-1] in `b`; root maps to root
        auto map_node = [&](int v) { return v == 0 ? 0 : perm[v - 1]; };
        bool ok = true;
        for (int v = 1; v <= a.n && ok; ++v)
            ok = b.choice[map_node(v) - 1] == map_node(a.choice[v - 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline tcg::Rational rat(long long num, long long den) { return tcg::Rational(num, den); }

}  // namespace fixtures

#endif
