#ifndef TCG_TREE_MODEL_HPP
#define TCG_TREE_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcg/errors.hpp"

namespace tcg {

// Strategy profile of the tree connection game. Node 0 is the root; agent i
// (0-based) sits on node i+1 and activates the single edge
// (i+1, choice[i]). The induced digraph need not be a spanning tree; all
// game operations treat unreachable agents as paying infinite cost.
struct RootedProfile {
    int n = 0;                // number of agents
    std::vector<int> choice;  // choice[i] in {0..n} \ {i+1}

    RootedProfile() = default;
    explicit RootedProfile(std::vector<int> c);

    int node_of_agent(int agent) const { return agent + 1; }
    int agent_of_node(int node) const { return node - 1; }

    // True iff every agent reaches node 0, i.e. the functional graph is
    // acyclic and the profile spans a rooted tree.
    bool is_spanning_tree() const;
};

// Per-node statistics of a spanning-tree profile.
struct SubtreeStats {
    int n = 0;
    std::vector<int> indeg;   // in-degree per node (0..n)
    std::vector<int> size;    // |T(u)| per node
    std::vector<int> depth;   // distance from root
    std::vector<int> parent;  // parent[0] = -1
    int height = 0;

    bool is_leaf(int node) const { return indeg[node] == 0; }
};

// Isomorphism-invariant code of an unlabeled rooted tree: recursive
// parenthesization with children codes sorted. Equal codes <=> isomorphic.
struct CanonicalCode {
    std::string code;

    bool operator==(const CanonicalCode& o) const { return code == o.code; }
    bool operator<(const CanonicalCode& o) const { return code < o.code; }
};

// Throws NotATreeError when the profile has a cycle.
SubtreeStats compute_stats(const RootedProfile& profile);

// Edge list (from, to) from the agent's node to the root; empty optional
// when no such path exists (that agent's cost is infinite).
std::optional<std::vector<std::pair<int, int>>> path_to_root(const RootedProfile& profile,
                                                             int agent);

CanonicalCode canonical_code(const RootedProfile& profile);

// Deterministic representative labeling of a canonical code: nodes numbered
// in the DFS order induced by the code itself.
RootedProfile profile_from_code(const CanonicalCode& code);

// Profile text format: JSON array of n integers, e.g. "[0,1,2]".
std::string serialize(const RootedProfile& profile);
RootedProfile deserialize(const std::string& text);

// DOT export of the activated edges; root drawn distinctly.
std::string to_dot(const RootedProfile& profile, const std::string& name = "tcg");

// The subgame induced by the subtree rooted at `node`: that node becomes the
// new root 0 and the subtree's agents keep their relative order. Used for
// the subtree-stability checks.
RootedProfile induced_subgame(const RootedProfile& profile, const SubtreeStats& stats, int node);

// Chain profile v_n -> ... -> v_1 -> r (the social optimum).
RootedProfile hamiltonian_path_profile(int n);

// All agents attach directly to the root.
RootedProfile star_profile(int n);

}  // namespace tcg

#endif
