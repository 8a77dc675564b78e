#include "tcg/path_game.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "tcg/cost.hpp"
#include "tcg/enumeration.hpp"

namespace tcg {

PathProfile PathProfile::from_tree(const RootedProfile& profile) {
    if (!profile.is_spanning_tree()) throw NotATreeError("profile contains a cycle");
    PathProfile p;
    p.n = profile.n;
    p.paths.resize(profile.n);
    for (int i = 0; i < profile.n; ++i) {
        int u = profile.node_of_agent(i);
        while (u != 0) {
            p.paths[i].push_back(u);
            u = profile.choice[u - 1];
        }
        p.paths[i].push_back(0);
    }
    return p;
}

bool PathProfile::valid() const {
    if (static_cast<int>(paths.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        const auto& path = paths[i];
        if (path.size() < 2 || path.front() != i + 1 || path.back() != 0) return false;
        std::vector<char> seen(n + 1, 0);
        for (int v : path) {
            if (v < 0 || v > n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

InducedGraph InducedGraph::of(const PathProfile& profile) {
    InducedGraph g;
    g.n = profile.n;
    g.indeg.assign(profile.n + 1, 0);
    for (int i = 0; i < profile.n; ++i) {
        const auto& path = profile.paths[i];
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            auto key = std::make_pair(path[k], path[k + 1]);
            auto [it, inserted] = g.users.try_emplace(key);
            it->second.push_back(i);
            if (inserted) g.indeg[key.second]++;
        }
    }
    return g;
}

bool InducedGraph::is_tree() const {
    // every agent node has exactly one outgoing edge, and following them
    // reaches the root from everywhere
    std::vector<int> out(n + 1, -1);
    for (const auto& [edge, who] : users) {
        if (out[edge.first] != -1 && out[edge.first] != edge.second) return false;
        out[edge.first] = edge.second;
    }
    for (int v = 1; v <= n; ++v) {
        if (out[v] == -1) return false;
        int u = v, hops = 0;
        while (u != 0) {
            u = out[u];
            if (++hops > n) return false;
        }
    }
    return true;
}

CostValue path_agent_cost(const PathProfile& profile, int agent) {
    if (!profile.valid()) throw ParseError("invalid path profile", 0);
    InducedGraph g = InducedGraph::of(profile);
    const auto& path = profile.paths[agent];
    Rational total = 0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const auto& u = g.users.at({path[k], path[k + 1]});
        total += Rational(g.indeg[path[k + 1]], static_cast<long long>(u.size()));
    }
    return CostValue::of(total);
}

namespace detail_path {

// Induced graph of all paths except the deviator's, with O(1) queries.
// Edge keys are a*m+b.
struct GeneralBase {
    int m = 0;
    std::vector<int> indeg;
    std::map<long long, int> edge_users;

    int users(int a, int b) const {
        auto it = edge_users.find(static_cast<long long>(a) * m + b);
        return it == edge_users.end() ? 0 : it->second;
    }
    int in(int b) const { return indeg[b]; }
};

GeneralBase base_without(const PathProfile& profile, int skip_agent) {
    GeneralBase base;
    base.m = profile.n + 1;
    base.indeg.assign(profile.n + 1, 0);
    for (int i = 0; i < profile.n; ++i) {
        if (i == skip_agent) continue;
        const auto& path = profile.paths[i];
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            long long key = static_cast<long long>(path[k]) * base.m + path[k + 1];
            if (base.edge_users[key]++ == 0) base.indeg[path[k + 1]]++;
        }
    }
    return base;
}

// Tree-induced variant: others' paths are exactly the tree paths, so the
// base is the tree with the deviator's contribution removed. users_[c] is
// the user count of tree edge (c, parent[c]).
struct TreeBase {
    int m = 0;
    const std::vector<int>* parent = nullptr;
    std::vector<int> users_;
    std::vector<int> indeg;

    int users(int a, int b) const {
        return ((*parent)[a] == b && users_[a] > 0) ? users_[a] : 0;
    }
    int in(int b) const { return indeg[b]; }
};

// Exact branch-and-bound over simple deviation paths for the agent on node
// vi. An edge's exact price is fixed by the base graph alone, so the
// cheapest continuation from any node to the root is a shortest-path value;
// prefixes are cut once committed + continuation can no longer beat `bound`.
// The relaxation ignores only the simple-path constraint, which keeps it
// admissible. Calls sink(path, cost) for every complete path strictly below
// bound; sink returns true to stop the search.
template <class Base, class Sink>
bool search_paths(const Base& base, int vi, const Frac& bound, int extra_users,
                  std::uint64_t& budget, Sink&& sink) {
    const int m = base.m;
    std::vector<int> path{vi};
    std::vector<char> visited(m, 0);
    visited[vi] = 1;

    auto term = [&](int a, int b) {
        int eu = base.users(a, b);
        return Frac(base.in(b) + (eu == 0 ? 1 : 0), eu + 1 + extra_users);
    };

    // exact cheapest-continuation table (Dijkstra towards the root over
    // reversed edges, node vi excluded)
    std::vector<Frac> hstar(m, Frac(0, 1));
    {
        std::vector<char> done(m, 0), seen(m, 0);
        seen[0] = 1;
        for (int round = 0; round < m; ++round) {
            int best = -1;
            for (int v = 0; v < m; ++v)
                if (seen[v] && !done[v] && (best < 0 || hstar[v] < hstar[best])) best = v;
            if (best < 0) break;
            done[best] = 1;
            for (int a = 1; a < m; ++a) {
                if (a == vi || a == best || done[a]) continue;
                Frac cand = term(a, best) + hstar[best];
                if (!seen[a] || cand < hstar[a]) {
                    hstar[a] = cand;
                    seen[a] = 1;
                }
            }
        }
    }

    // explicit stack of (node, next target to try, committed cost)
    struct Level {
        int node;
        int next_target;
        Frac committed;
    };
    std::vector<Level> stack{{vi, 0, Frac(0, 1)}};
    while (!stack.empty()) {
        if (stack.back().node == 0) {
            if (sink(path, stack.back().committed)) return true;
            visited[0] = 0;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        bool descended = false;
        for (int t = stack.back().next_target; t < m; ++t) {
            if (visited[t]) continue;
            if (budget == 0) throw SearchBudgetError("path deviation search budget exhausted");
            --budget;
            Frac c = stack.back().committed;
            c += term(stack.back().node, t);
            if (!(c + hstar[t] < bound)) continue;
            stack.back().next_target = t + 1;
            visited[t] = 1;
            path.push_back(t);
            stack.push_back({t, 0, c});
            descended = true;
            break;
        }
        if (!descended) {
            const int node = stack.back().node;
            stack.pop_back();
            if (node == vi) break;
            visited[node] = 0;
            path.pop_back();
        }
    }
    return false;
}

Frac tree_cost_frac(const std::vector<int>& parent, const std::vector<int>& indeg,
                    const std::vector<int>& size, int v) {
    Frac c(0, 1);
    for (int a = v; a != 0; a = parent[a]) c += Frac(indeg[parent[a]], size[a]);
    return c;
}

TreeBase tree_base_for(const std::vector<int>& parent, const std::vector<int>& indeg,
                       const std::vector<int>& size, int vi) {
    TreeBase base;
    base.m = static_cast<int>(parent.size());
    base.parent = &parent;
    base.users_.assign(base.m, 0);
    std::vector<char> anc(base.m, 0);
    for (int a = vi; a != -1; a = parent[a]) anc[a] = 1;
    for (int v = 1; v < base.m; ++v) base.users_[v] = size[v] - (anc[v] ? 1 : 0);
    base.indeg.assign(base.m, 0);
    for (int v = 1; v < base.m; ++v)
        if (base.users_[v] > 0) base.indeg[parent[v]]++;
    return base;
}

// Stability of the tree-induced path profile; used by the shape scan.
// Returns the deviating agent in *witness_agent when unstable.
bool tree_path_stable(const std::vector<int>& parent, std::uint64_t& budget,
                      int* witness_agent = nullptr, std::vector<int>* witness_path = nullptr) {
    const int m = static_cast<int>(parent.size());
    std::vector<int> indeg(m, 0), size(m, 1), depth(m, 0), order;
    for (int v = 1; v < m; ++v) indeg[parent[v]]++;
    for (int v = 1; v < m; ++v) {
        int d = 0;
        for (int a = v; a != 0; a = parent[a]) ++d;
        depth[v] = d;
        order.push_back(v);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
    for (int v : order) size[parent[v]] += size[v];

    for (int vi : order) {  // deepest first: likeliest deviators
        Frac old_cost = tree_cost_frac(parent, indeg, size, vi);
        TreeBase base = tree_base_for(parent, indeg, size, vi);

        // cheap necessary screen: single jump + tree tail
        bool improving = false;
        for (int x = 0; x < m && !improving; ++x) {
            if (x == vi || x == parent[vi]) continue;
            Frac c = Frac(base.in(x) + (base.users(vi, x) == 0 ? 1 : 0), base.users(vi, x) + 1);
            bool simple = c < old_cost;
            for (int a = x; simple && a != 0; a = parent[a]) {
                if (a == vi) {
                    simple = false;
                    break;
                }
                int b = parent[a];
                c += Frac(base.in(b), base.users(a, b) + 1);
                if (!(c < old_cost)) simple = false;
            }
            improving = simple;
        }
        if (!improving) {
            // full exact search over all simple deviation paths
            improving = search_paths(base, vi, old_cost, 0, budget,
                                     [&](const std::vector<int>& path, const Frac&) {
                                         if (witness_path) *witness_path = path;
                                         return true;
                                     });
        }
        if (improving) {
            if (witness_agent) *witness_agent = vi - 1;
            return false;
        }
    }
    return true;
}

}  // namespace detail_path

PathNashResult is_path_nash(const PathProfile& profile, int cap, std::uint64_t budget) {
    if (!profile.valid()) throw ParseError("invalid path profile", 0);
    if (profile.n > cap)
        throw ResourceLimitError("n = " + std::to_string(profile.n) +
                                 " exceeds the path-search cap " + std::to_string(cap));
    PathNashResult result;
    for (int agent = 0; agent < profile.n; ++agent) {
        CostValue old_cost = path_agent_cost(profile, agent);
        auto base = detail_path::base_without(profile, agent);
        // old cost as an exact fraction for the bound
        Frac bound(numerator(old_cost.value).convert_to<long long>(),
                   denominator(old_cost.value).convert_to<long long>());
        std::vector<int> found;
        Frac found_cost(0, 1);
        bool improving = detail_path::search_paths(
            base, agent + 1, bound, 0, budget,
            [&](const std::vector<int>& path, const Frac& cost) {
                found = path;
                found_cost = cost;
                return true;
            });
        if (improving) {
            result.stable = false;
            result.witness = PathDeviation{agent, found, old_cost, CostValue::of(found_cost.to_rational())};
            return result;
        }
    }
    result.stable = true;
    return result;
}

namespace {

struct PairCandidate {
    std::vector<int> path;
    Frac solo;  // exact cost if the partner keeps her old strategy removed
};

// All candidate deviation paths for one member of the pair, enumerated with
// the optimistic assumption that the partner shares every edge (one extra
// user everywhere). Sound: the true joint cost is never below the optimistic
// committed cost, so no witness path is pruned.
std::vector<PairCandidate> pair_candidates(const detail_path::TreeBase& base, int vi,
                                           const Frac& old_cost, std::uint64_t& budget) {
    std::vector<PairCandidate> out;
    detail_path::search_paths(base, vi, old_cost, 1, budget,
                              [&](const std::vector<int>& path, const Frac&) {
                                  PairCandidate cand;
                                  cand.path = path;
                                  Frac solo(0, 1);
                                  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                                      int eu = base.users(path[k], path[k + 1]);
                                      solo += Frac(base.in(path[k + 1]) + (eu == 0 ? 1 : 0),
                                                   eu + 1);
                                  }
                                  cand.solo = solo;
                                  out.push_back(std::move(cand));
                                  return false;  // keep enumerating
                              });
    std::sort(out.begin(), out.end(), [](const PairCandidate& a, const PairCandidate& b) {
        if (a.solo == b.solo) return a.path < b.path;
        return a.solo < b.solo;
    });
    return out;
}

}  // namespace

std::optional<PairDeviation> pair_coalition_improving(const RootedProfile& profile, int i, int j,
                                                      std::uint64_t budget) {
    if (i == j) throw InvalidNodesError("coalition needs two distinct agents");
    SubtreeStats stats = compute_stats(profile);
    const int m = profile.n + 1;
    const int vi = profile.node_of_agent(i), vj = profile.node_of_agent(j);

    // base without both agents' tree paths
    std::vector<char> anc(m, 0);
    for (int a = vi; a != -1; a = stats.parent[a]) anc[a] += 1;
    for (int a = vj; a != -1; a = stats.parent[a]) anc[a] += 1;
    detail_path::TreeBase base;
    base.m = m;
    base.parent = &stats.parent;
    base.users_.assign(m, 0);
    for (int v = 1; v < m; ++v) base.users_[v] = stats.size[v] - anc[v];
    base.indeg.assign(m, 0);
    for (int v = 1; v < m; ++v)
        if (base.users_[v] > 0) base.indeg[stats.parent[v]]++;

    Frac old_i = detail_path::tree_cost_frac(stats.parent, stats.indeg, stats.size, vi);
    Frac old_j = detail_path::tree_cost_frac(stats.parent, stats.indeg, stats.size, vj);

    auto cands_i = pair_candidates(base, vi, old_i, budget);
    auto cands_j = pair_candidates(base, vj, old_j, budget);

    // exact joint evaluation of one ordered pair of paths
    auto evaluate = [&](const std::vector<int>& pi, const std::vector<int>& pj,
                        Frac& cost_i, Frac& cost_j) {
        std::map<long long, int> extra_users;  // edge -> deviators using it
        std::vector<int> extra_indeg(m, 0);
        auto add_path = [&](const std::vector<int>& path) {
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                long long key = static_cast<long long>(path[k]) * m + path[k + 1];
                if (extra_users[key]++ == 0 && base.users(path[k], path[k + 1]) == 0)
                    extra_indeg[path[k + 1]]++;
            }
        };
        add_path(pi);
        add_path(pj);
        auto price = [&](const std::vector<int>& path) {
            Frac c(0, 1);
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                int a = path[k], b = path[k + 1];
                long long key = static_cast<long long>(a) * m + b;
                c += Frac(base.in(b) + extra_indeg[b], base.users(a, b) + extra_users[key]);
            }
            return c;
        };
        cost_i = price(pi);
        cost_j = price(pj);
    };

    for (const auto& ci : cands_i) {
        for (const auto& cj : cands_j) {
            if (budget == 0) throw SearchBudgetError("pair coalition search budget exhausted");
            --budget;
            Frac cost_i(0, 1), cost_j(0, 1);
            evaluate(ci.path, cj.path, cost_i, cost_j);
            if (cost_i < old_i && cost_j < old_j) {
                PairDeviation dev;
                dev.agent_i = i;
                dev.agent_j = j;
                dev.path_i = ci.path;
                dev.path_j = cj.path;
                dev.old_i = CostValue::of(old_i.to_rational());
                dev.old_j = CostValue::of(old_j.to_rational());
                dev.new_i = CostValue::of(cost_i.to_rational());
                dev.new_j = CostValue::of(cost_j.to_rational());
                return dev;
            }
        }
    }
    return std::nullopt;
}

PathSearchResult path_equilibrium_search(int n, int jobs, int cap) {
    if (n < 1) throw ResourceLimitError("n must be >= 1");
    if (n > cap)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the path-search cap " +
                                 std::to_string(cap));
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    const int m = n + 1;
    PathSearchResult result;
    result.n = n;

    struct Found {
        std::uint64_t index;
        std::vector<int> parent;
    };
    std::vector<Found> found;
    std::uint64_t scanned = 0;

    auto handle = [&](const std::vector<int>& parent, std::uint64_t index,
                      std::vector<Found>& sink) {
        std::uint64_t budget = kDefaultPathBudget;
        if (detail_path::tree_path_stable(parent, budget)) sink.push_back({index, parent});
    };

    if (jobs == 1) {
        RootedTreeGenerator gen(m);
        std::vector<int> parent;
        do {
            gen.current_parents(parent);
            handle(parent, scanned, found);
            ++scanned;
        } while (gen.next());
    } else {
        std::mutex mu;
        RootedTreeGenerator gen(m);
        bool exhausted = false;
        std::uint64_t next_index = 0;
        constexpr int kBatch = 64;
        std::vector<std::vector<Found>> local_found(jobs);
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::vector<int>> batch;
                std::vector<int> parent;
                std::uint64_t base_idx = 0;
                while (true) {
                    batch.clear();
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (exhausted) return;
                        base_idx = next_index;
                        for (int b = 0; b < kBatch; ++b) {
                            batch.push_back(gen.current());
                            ++next_index;
                            if (!gen.next()) {
                                exhausted = true;
                                break;
                            }
                        }
                    }
                    for (std::size_t b = 0; b < batch.size(); ++b) {
                        const auto& level = batch[b];
                        parent.assign(level.size(), -1);
                        std::vector<int> last(level.size() + 2, -1);
                        for (std::size_t k = 0; k < level.size(); ++k) {
                            if (k > 0) parent[k] = last[level[k] - 1];
                            last[level[k]] = static_cast<int>(k);
                        }
                        handle(parent, base_idx + b, local_found[w]);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        scanned = next_index;
        for (auto& lf : local_found)
            for (auto& f : lf) found.push_back(std::move(f));
        std::sort(found.begin(), found.end(),
                  [](const Found& a, const Found& b) { return a.index < b.index; });
    }

    result.trees_scanned = scanned;
    for (const auto& f : found) {
        std::vector<int> choice(f.parent.size() - 1);
        for (std::size_t v = 1; v < f.parent.size(); ++v) choice[v - 1] = f.parent[v];
        RootedProfile p(std::move(choice));
        CanonicalCode code = canonical_code(p);
        result.representatives.push_back(profile_from_code(code));
        result.stable_codes.push_back(std::move(code));
    }
    return result;
}

}  // namespace tcg
