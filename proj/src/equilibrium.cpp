#include "tcg/equilibrium.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <string>
#include <unordered_map>

namespace tcg {

namespace detail {

namespace {

template <class Q>
Q make_q(long long num, long long den) {
    return Q(num, den);
}

}  // namespace

// One pass over a tree given as a parent array. Q is Frac (hot path) or
// Rational (overflow fallback).
template <class Q>
bool NashScanner::scan_impl(const std::vector<int>& parent, Deviation* witness) {
    const int m = static_cast<int>(parent.size());
    const int n = m - 1;
    if (n <= 0) return true;

    indeg_.assign(m, 0);
    size_.assign(m, 1);
    depth_.assign(m, 0);
    anc_.assign(m, 0);

    std::vector<Q> cost(m);

    bool preorder = true;
    for (int v = 1; v < m; ++v)
        if (parent[v] >= v) {
            preorder = false;
            break;
        }

    order_.resize(n);
    if (preorder) {
        for (int v = 1; v < m; ++v) {
            depth_[v] = depth_[parent[v]] + 1;
            indeg_[parent[v]]++;
            order_[v - 1] = v;
        }
        for (int v = m - 1; v >= 1; --v) size_[parent[v]] += size_[v];
        for (int v = 1; v < m; ++v)
            cost[v] = cost[parent[v]] + make_q<Q>(indeg_[parent[v]], size_[v]);
    } else {
        for (int v = 1; v < m; ++v) {
            indeg_[parent[v]]++;
            int d = 0, u = v;
            while (u != 0) {
                u = parent[u];
                ++d;
            }
            depth_[v] = d;
            order_[v - 1] = v;
        }
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return depth_[a] > depth_[b]; });
        for (int v : order_) size_[parent[v]] += size_[v];
        for (int i = n - 1; i >= 0; --i) {
            int v = order_[i];
            cost[v] = cost[parent[v]] + make_q<Q>(indeg_[parent[v]], size_[v]);
        }
    }

    // Post-deviation cost of moving u under t, stopped as soon as the
    // partial sum reaches `bound` (sums only grow). Returns false when not
    // strictly below bound or when t lies inside T(u).
    auto improves = [&](int u, int t, const Q& bound) -> bool {
        const int su = size_[u];
        const int p = parent[u];
        Q c = make_q<Q>(indeg_[t] + 1, su);
        if (!(c < bound)) return false;
        int a = t;
        while (a != 0) {
            if (a == u) return false;  // cycle: t is a descendant of u
            int b = parent[a];
            long long sz = size_[a] + (anc_[a] ? 0 : su);
            long long dg = indeg_[b] - (b == p ? 1 : 0);
            c += make_q<Q>(dg, sz);
            if (!(c < bound)) return false;
            a = b;
        }
        return true;
    };

    // Full post-deviation cost, only evaluated for confirmed witnesses.
    auto exact_eval = [&](int u, int t) -> Q {
        const int su = size_[u];
        const int p = parent[u];
        Q c = make_q<Q>(indeg_[t] + 1, su);
        for (int a = t; a != 0; a = parent[a]) {
            int b = parent[a];
            c += make_q<Q>(indeg_[b] - (b == p ? 1 : 0), size_[a] + (anc_[a] ? 0 : su));
        }
        return c;
    };

    auto mark = [&](int u, char flag) {
        for (int a = parent[u]; a != -1; a = parent[a]) anc_[a] = flag;
    };

    if (!witness) {
        // Boolean scan, deepest agents first (likeliest deviators).
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return depth_[a] > depth_[b]; });
        for (int u : order_) {
            mark(u, 1);
            bool found = false;
            for (int t = 0; t < m && !found; ++t) {
                if (t == u || t == parent[u]) continue;
                found = improves(u, t, cost[u]);
            }
            mark(u, 0);
            if (found) return false;
        }
        return true;
    }

    for (int u = 1; u < m; ++u) {
        mark(u, 1);
        for (int t = 0; t < m; ++t) {
            if (t == u || t == parent[u]) continue;
            if (improves(u, t, cost[u])) {
                Q exact = exact_eval(u, t);
                witness->agent = u - 1;
                witness->new_choice = t;
                if constexpr (std::is_same_v<Q, Frac>) {
                    witness->old_cost = CostValue::of(cost[u].to_rational());
                    witness->new_cost = CostValue::of(exact.to_rational());
                } else {
                    witness->old_cost = CostValue::of(cost[u]);
                    witness->new_cost = CostValue::of(exact);
                }
                mark(u, 0);
                return false;
            }
        }
        mark(u, 0);
    }
    return true;
}

bool NashScanner::scan(const std::vector<int>& parent, Deviation* witness) {
    try {
        return scan_impl<Frac>(parent, witness);
    } catch (const FracOverflow&) {
        return scan_impl<Rational>(parent, witness);
    }
}

}  // namespace detail

namespace {

std::vector<int> parent_array(const RootedProfile& profile) {
    std::vector<int> parent(profile.n + 1, -1);
    for (int v = 1; v <= profile.n; ++v) parent[v] = profile.choice[v - 1];
    return parent;
}

}  // namespace

CostValue deviation_cost(const RootedProfile& profile, const SubtreeStats& stats, int agent,
                         int target) {
    const int u = profile.node_of_agent(agent);
    if (target == u) throw InvalidNodesError("agent cannot target its own node");
    if (target == stats.parent[u]) return agent_cost(profile, stats, agent);
    // Cycle: target inside T(u)?
    for (int a = target; a != -1; a = stats.parent[a])
        if (a == u) return CostValue::infinity();
    std::vector<char> anc(profile.n + 1, 0);
    for (int a = stats.parent[u]; a != -1; a = stats.parent[a]) anc[a] = 1;
    const int p = stats.parent[u];
    Rational c(stats.indeg[target] + 1, stats.size[u]);
    for (int a = target; a != 0; a = stats.parent[a]) {
        int b = stats.parent[a];
        long long sz = stats.size[a] + (anc[a] ? 0 : stats.size[u]);
        long long dg = stats.indeg[b] - (b == p ? 1 : 0);
        c += Rational(dg, sz);
    }
    return CostValue::of(c);
}

namespace {

// Generic evaluation that tolerates non-tree profiles: rebuild the profile
// with the retarget applied and price the agent from scratch.
CostValue full_recompute_deviation(const RootedProfile& profile, int agent, int target) {
    RootedProfile moved = profile;
    moved.choice[agent] = target;
    return agent_cost(moved, agent);
}

}  // namespace

std::vector<Deviation> improving_deviations(const RootedProfile& profile, int agent) {
    std::vector<Deviation> out;
    const int u = profile.node_of_agent(agent);
    const bool tree = profile.is_spanning_tree();
    CostValue old_cost = agent_cost(profile, agent);
    SubtreeStats stats;
    if (tree) stats = compute_stats(profile);
    for (int t = 0; t <= profile.n; ++t) {
        if (t == u || t == profile.choice[agent]) continue;
        CostValue next =
            tree ? deviation_cost(profile, stats, agent, t) : full_recompute_deviation(profile, agent, t);
        if (next < old_cost) out.push_back(Deviation{agent, t, old_cost, next});
    }
    return out;
}

int best_response(const RootedProfile& profile, int agent) {
    const int u = profile.node_of_agent(agent);
    const int current = profile.choice[agent];
    const bool tree = profile.is_spanning_tree();
    SubtreeStats stats;
    if (tree) stats = compute_stats(profile);
    CostValue best = agent_cost(profile, agent);
    int best_t = current;
    for (int t = 0; t <= profile.n; ++t) {
        if (t == u || t == current) continue;
        CostValue next =
            tree ? deviation_cost(profile, stats, agent, t) : full_recompute_deviation(profile, agent, t);
        if (next < best) {
            best = next;
            best_t = t;
        }
    }
    return best_t;
}

NashResult is_nash(const RootedProfile& profile) {
    NashResult result;
    if (profile.is_spanning_tree()) {
        detail::NashScanner scanner;
        Deviation w;
        result.stable = scanner.scan(parent_array(profile), &w);
        if (!result.stable) result.witness = w;
        return result;
    }
    // Some agent is unreachable; report the first agent with an improving
    // move (any tree-restoring retarget qualifies).
    for (int agent = 0; agent < profile.n; ++agent) {
        auto devs = improving_deviations(profile, agent);
        if (!devs.empty()) {
            result.stable = false;
            result.witness = devs.front();
            return result;
        }
    }
    result.stable = true;  // unreachable in practice: non-trees always admit a fix
    return result;
}

OrderPolicy parse_policy(const std::string& name) {
    if (name == "round-robin") return OrderPolicy::RoundRobin;
    if (name == "random-agent") return OrderPolicy::RandomAgent;
    if (name == "max-improvement") return OrderPolicy::MaxImprovement;
    throw InvalidPolicyError("unknown policy '" + name +
                             "' (expected round-robin | random-agent | max-improvement)");
}

std::string policy_name(OrderPolicy p) {
    switch (p) {
        case OrderPolicy::RoundRobin: return "round-robin";
        case OrderPolicy::RandomAgent: return "random-agent";
        case OrderPolicy::MaxImprovement: return "max-improvement";
    }
    return "?";
}

namespace {

std::string state_key(const RootedProfile& p, int phase) {
    std::string key;
    key.reserve(p.n * 2 + 2);
    for (int c : p.choice) {
        key.push_back(static_cast<char>(c & 0xff));
        key.push_back(static_cast<char>((c >> 8) & 0xff));
    }
    key.push_back(static_cast<char>(phase & 0xff));
    key.push_back(static_cast<char>((phase >> 8) & 0xff));
    return key;
}

// Best improving deviation of one agent, or nullopt. Used by dynamics; the
// tie-break (stay if tied, then lowest target) matches best_response.
std::optional<Deviation> best_improvement(const RootedProfile& profile, const SubtreeStats& stats,
                                          int agent) {
    CostValue old_cost = agent_cost(profile, stats, agent);
    CostValue best = old_cost;
    int best_t = -1;
    const int u = profile.node_of_agent(agent);
    for (int t = 0; t <= profile.n; ++t) {
        if (t == u || t == profile.choice[agent]) continue;
        CostValue next = deviation_cost(profile, stats, agent, t);
        if (next < best) {
            best = next;
            best_t = t;
        }
    }
    if (best_t < 0) return std::nullopt;
    return Deviation{agent, best_t, old_cost, best};
}

}  // namespace

DynamicsOutcome run_dynamics(const RootedProfile& start, OrderPolicy policy,
                             std::uint64_t rng_seed, std::uint64_t max_steps) {
    if (!start.is_spanning_tree()) throw NotATreeError("dynamics must start from a spanning tree");
    DynamicsOutcome out;
    RootedProfile cur = start;
    std::mt19937_64 rng(rng_seed);
    detail::NashScanner scanner;

    // Visited labeled states. For the deterministic policies the key carries
    // the activation phase, so a revisit is a genuine cycle; for the random
    // policy a revisited state is reported as CycleDetected as well.
    std::unordered_map<std::string, std::uint64_t> seen;
    const int n = cur.n;
    int rr_next = 0;

    auto phase_of = [&]() -> int { return policy == OrderPolicy::RoundRobin ? rr_next : 0; };
    seen.emplace(state_key(cur, phase_of()), 0);

    std::uint64_t quiet = 0;  // consecutive non-improving activations
    for (std::uint64_t step = 0; step < max_steps; ++step) {
        int agent;
        std::optional<Deviation> move;
        SubtreeStats stats = compute_stats(cur);
        switch (policy) {
            case OrderPolicy::RoundRobin:
                agent = rr_next;
                rr_next = (rr_next + 1) % n;
                move = best_improvement(cur, stats, agent);
                break;
            case OrderPolicy::RandomAgent:
                agent = static_cast<int>(rng() % n);
                move = best_improvement(cur, stats, agent);
                break;
            case OrderPolicy::MaxImprovement: {
                // Largest absolute cost decrease; ties by agent then target.
                Rational best_gain = 0;
                for (int a = 0; a < n; ++a) {
                    auto cand = best_improvement(cur, stats, a);
                    if (!cand) continue;
                    Rational gain = cand->old_cost.value - cand->new_cost.value;
                    if (!move || gain > best_gain) {
                        move = cand;
                        best_gain = gain;
                    }
                }
                break;
            }
        }

        if (!move) {
            ++quiet;
            bool all_checked = (policy == OrderPolicy::RoundRobin && quiet >= static_cast<std::uint64_t>(n)) ||
                               policy == OrderPolicy::MaxImprovement ||
                               (policy == OrderPolicy::RandomAgent && quiet >= static_cast<std::uint64_t>(4 * n));
            if (all_checked) {
                Deviation w;
                if (scanner.scan(parent_array(cur), &w)) {
                    out.kind = DynamicsKind::Converged;
                    out.final_profile = cur;
                    return out;
                }
                quiet = 0;  // random policy missed the deviator; keep going
            }
            continue;
        }

        quiet = 0;
        cur.choice[move->agent] = move->new_choice;
        out.trajectory_length++;
        auto [it, inserted] = seen.emplace(state_key(cur, phase_of()), out.trajectory_length);
        if (!inserted) {
            out.kind = DynamicsKind::CycleDetected;
            out.cycle_length = out.trajectory_length - it->second;
            out.final_profile = cur;
            return out;
        }
    }
    out.kind = DynamicsKind::StepLimit;
    out.final_profile = cur;
    return out;
}

RootedProfile random_tree_profile(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> choice(n);
    for (int i = 0; i < n; ++i) {
        // node i+1 attaches to a uniform already-present node 0..i
        choice[i] = static_cast<int>(rng() % (i + 1));
    }
    return RootedProfile(std::move(choice));
}

}  // namespace tcg
