#ifndef TCG_BALANCED_HPP
#define TCG_BALANCED_HPP

#include <string>
#include <vector>

#include "tcg/equilibrium.hpp"
#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// Leaf-to-root in-degree sequence (d_h, d_{h-1}, ..., d_0) of a balanced
// tree: every node at distance i from the root has in-degree d_i.
struct DegreeSequence {
    std::vector<int> degs;  // degs.front() = d_h = 0, degs.back() = d_0

    int height() const { return static_cast<int>(degs.size()) - 1; }
    // d_i = in-degree at distance i from the root.
    int deg_at_level(int i) const { return degs[height() - i]; }

    bool valid() const;

    // Matches (0,1,2,4,d_{h-4},...,d_0) with d_{j+1} < d_j <= 2 d_{j+1} + 1
    // for every j <= h-4; these are exactly the sequences the stability
    // theorem covers.
    bool admissible_for_theorem() const;

    std::string to_string() const;  // "0,1,2,4,9"
    static DegreeSequence parse(const std::string& text);
};

// Exact per-level sizes and cost aggregates, computed by recurrence without
// building the tree: |T_h| = 1, |T_{i-1}| = d_{i-1} |T_i| + 1 and
// sc' = d * sc + d^2 from the leaves inward.
struct BalancedStats {
    std::vector<BigInt> sizes;  // |T_h|, ..., |T_0| (leaf-to-root)
    BigInt n_h;                 // node count |T_0| (root included)
    BigInt sc_h;                // social cost
    Rational a_h;               // sc_h / (n_h - 1), average agent cost
};

BalancedStats balanced_stats(const DegreeSequence& seq);

inline constexpr long long kDefaultBuildCap = 10'000'000;

// Builds the balanced tree as a labeled profile (BFS node order). Throws
// OverflowError when the node count exceeds `cap`.
RootedProfile build_balanced(const DegreeSequence& seq, long long cap = kDefaultBuildCap);

// Extremal sequence of height h: (0,1,2,4,...) doubling-plus-one above.
DegreeSequence extremal_sequence(int h);

// ---------------------------------------------------------------------------
// The stability conditions as executable predicates. Each condition_k_holds
// reports whether that lemma's hypothesis is satisfied at the given
// position; the matching check_condition_k verifies the conclusion (the
// stated swap is not profitable) by direct exact cost comparison. Positions
// that violate the positional precondition throw InvalidNodesError.
// ---------------------------------------------------------------------------

// Ancestor path of `node`: node = u_k, ..., u_0 = root.
std::vector<int> root_path(const SubtreeStats& stats, int node);

// Condition 1: u_i swapping to her ancestor u_{i-2}, assuming
// d_{i-2} >= d_{i-1} and |T_{i-1}| >= d_{i-2}/(d_{i-2}+1-d_{i-1}) |T_i|.
bool condition1_holds(const SubtreeStats& stats, int node);
bool check_condition1(const RootedProfile& p, const SubtreeStats& stats, int node);

// Condition 2: u_i swapping to her ancestor at distance-j level, given the
// lemma's four hypotheses (j <= i-3).
bool condition2_holds(const RootedProfile& p, const SubtreeStats& stats, int node, int j);
bool check_condition2(const RootedProfile& p, const SubtreeStats& stats, int node, int j);

// Condition 3: v (on its own path) swapping towards u_j, given it is not
// profitable to swap towards u_j's child u_jm1 and the stated size bound.
bool condition3_holds(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1);
bool check_condition3(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1);

// Condition 4: the mirror implication, towards the child u_jm1.
bool condition4_holds(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1);
bool check_condition4(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1);

// Condition 5: sibling swap in a balanced tree with d_j <= 2 d_{j+1} + 1.
bool condition5_holds(const DegreeSequence& seq, const SubtreeStats& stats, int v, int u);
bool check_condition5(const RootedProfile& p, const SubtreeStats& stats, int v, int u);

// Condition 6: swap towards a non-ancestor node one level up, in a balanced
// tree with the (0,1,2,4) tail and d_{j+1} <= d_j <= 2 d_{j+1} + 1.
bool condition6_holds(const DegreeSequence& seq, const SubtreeStats& stats, int v, int u);
bool check_condition6(const RootedProfile& p, const SubtreeStats& stats, int v, int u);

// Lateral-swap corollaries and the three leaf-swap lemmas, verified as a
// sweep: every applicable (agent, target) pair of the stated kind is checked
// by direct cost comparison. Returns the number of positions checked;
// throws on the first violated conclusion... none exist for admissible
// sequences (that is the theorem).
struct ConditionSweep {
    long long positions_checked = 0;
    long long hypothesis_hits = 0;
    bool all_conclusions_hold = true;
    // first failing position when !all_conclusions_hold
    int fail_agent = -1;
    int fail_target = -1;
};

ConditionSweep sweep_conditions(const DegreeSequence& seq, const RootedProfile& p);

// Builds the tree and runs the full Nash verification. Must return true for
// every admissible sequence.
bool verify_theorem_stability(const DegreeSequence& seq, long long cap = kDefaultBuildCap);

}  // namespace tcg

#endif
