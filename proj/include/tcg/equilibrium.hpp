#ifndef TCG_EQUILIBRIUM_HPP
#define TCG_EQUILIBRIUM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tcg/cost.hpp"
#include "tcg/fraction.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// A strictly improving single-edge retarget. new_cost is the deviating
// agent's exact cost in the post-deviation profile.
struct Deviation {
    int agent = -1;
    int new_choice = -1;
    CostValue old_cost;
    CostValue new_cost;
};

// All strictly improving retargets for one agent, ordered by target node.
// Works on arbitrary profiles: unreachable agents have infinite cost, so
// every tree-restoring move is improving.
std::vector<Deviation> improving_deviations(const RootedProfile& profile, int agent);

// Cost-minimizing choice. Tie-break: keep the current choice when it
// attains the minimum, otherwise the smallest node index among minimizers.
int best_response(const RootedProfile& profile, int agent);

struct NashResult {
    bool stable = false;
    // Witness when unstable: first agent (by index) with an improving move,
    // and its improving move with the smallest target node index.
    std::optional<Deviation> witness;
};

NashResult is_nash(const RootedProfile& profile);

enum class OrderPolicy { RoundRobin, RandomAgent, MaxImprovement };

OrderPolicy parse_policy(const std::string& name);  // throws InvalidPolicyError
std::string policy_name(OrderPolicy p);

enum class DynamicsKind { Converged, CycleDetected, StepLimit };

struct DynamicsOutcome {
    DynamicsKind kind = DynamicsKind::StepLimit;
    RootedProfile final_profile;
    std::uint64_t trajectory_length = 0;  // number of applied improving moves
    std::uint64_t cycle_length = 0;       // when kind == CycleDetected
};

constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

// Iterated best responses from `start` (must be a spanning tree). States are
// tracked as full labeled choice vectors; for the deterministic policies a
// revisit with matching activation phase is a genuine cycle.
DynamicsOutcome run_dynamics(const RootedProfile& start, OrderPolicy policy,
                             std::uint64_t rng_seed, std::uint64_t max_steps = kDefaultMaxSteps);

// Random spanning-tree profile: node i+1 attaches to a uniform earlier node.
// Deterministic in the seed.
RootedProfile random_tree_profile(int n, std::uint64_t seed);

namespace detail {

// Workspace for the exact fast-path Nash scan used by the enumerator and by
// is_nash on spanning trees. Buffers persist across calls to avoid
// reallocation in the per-tree hot loop. Arithmetic runs on 128-bit exact
// fractions; a detected overflow reruns the whole tree on Rational, so the
// result is exact either way.
class NashScanner {
  public:
    // parent[] encodes the tree (parent[0] = -1). Returns true iff stable.
    // If witness != nullptr, agents/targets are scanned in index order and
    // the first improving (agent, target) pair is reported; otherwise agents
    // are scanned deepest-first, which fails faster on typical trees.
    bool scan(const std::vector<int>& parent, Deviation* witness = nullptr);

  private:
    template <class Q>
    bool scan_impl(const std::vector<int>& parent, Deviation* witness);

    std::vector<int> indeg_, size_, depth_, order_;
    std::vector<char> anc_;
};

}  // namespace detail

// Exact post-deviation cost of retargeting `agent` to node `target`
// (infinite when the move creates a cycle). Shared by the public API, the
// structure checks and the balanced-tree condition checkers.
CostValue deviation_cost(const RootedProfile& profile, const SubtreeStats& stats, int agent,
                         int target);

}  // namespace tcg

#endif
