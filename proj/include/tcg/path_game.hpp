#ifndef TCG_PATH_GAME_HPP
#define TCG_PATH_GAME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tcg/equilibrium.hpp"
#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// Path-game strategy profile: agent i selects a full simple path from her
// node to the root. paths[i] lists the visited nodes starting at node i+1
// and ending at node 0.
struct PathProfile {
    int n = 0;
    std::vector<std::vector<int>> paths;

    // Every agent's strategy set to her tree path; requires a spanning tree.
    static PathProfile from_tree(const RootedProfile& profile);

    bool valid() const;  // simple paths, right endpoints
};

// Union of the selected paths with per-edge user sets. indeg counts
// distinct in-edges, not users.
struct InducedGraph {
    int n = 0;
    std::map<std::pair<int, int>, std::vector<int>> users;  // edge -> agents
    std::vector<int> indeg;

    static InducedGraph of(const PathProfile& profile);
    bool is_tree() const;
};

// cost(i) = sum over edges (u,v) of the agent's path of
// indeg(v) / |U(u,v)|.
CostValue path_agent_cost(const PathProfile& profile, int agent);

inline constexpr int kDefaultPathCap = 20;
inline constexpr std::uint64_t kDefaultPathBudget = 50'000'000;

struct PathDeviation {
    int agent = -1;
    std::vector<int> new_path;
    CostValue old_cost;
    CostValue new_cost;
};

struct PathNashResult {
    bool stable = false;
    std::optional<PathDeviation> witness;
};

// Exact branch-and-bound over simple deviation paths. A partial path's
// committed cost is a valid lower bound (every further edge costs > 0), so
// branches are cut once it reaches the agent's current cost. Throws
// SearchBudgetError when more than `budget` nodes are expanded.
PathNashResult is_path_nash(const PathProfile& profile, int cap = kDefaultPathCap,
                            std::uint64_t budget = kDefaultPathBudget);

struct PairDeviation {
    int agent_i = -1;
    int agent_j = -1;
    std::vector<int> path_i;
    std::vector<int> path_j;
    CostValue old_i, old_j;
    CostValue new_i, new_j;
};

// Joint simple-path deviation for a pair on a tree-induced profile, with
// both agents required to improve strictly. Candidate paths are enumerated
// under an optimistic share-with-partner bound and the survivors are
// re-evaluated exactly in the joint profile; the first witness in the
// deterministic candidate order is returned.
std::optional<PairDeviation> pair_coalition_improving(const RootedProfile& profile, int i, int j,
                                                      std::uint64_t budget = kDefaultPathBudget);

struct PathSearchResult {
    int n = 0;
    std::uint64_t trees_scanned = 0;
    std::vector<CanonicalCode> stable_codes;  // canonical enumeration order
    std::vector<RootedProfile> representatives;
};

// Scans every tree shape on n+1 nodes for path-game stability (each agent
// playing her tree path; all path equilibria are trees, so tree-induced
// profiles cover the search space).
PathSearchResult path_equilibrium_search(int n, int jobs = 1, int cap = kDefaultPathCap);

}  // namespace tcg

#endif
