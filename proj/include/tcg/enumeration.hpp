#ifndef TCG_ENUMERATION_HPP
#define TCG_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcg/equilibrium.hpp"
#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// Generates every unlabeled rooted tree on m nodes exactly once via the
// Beyer-Hedetniemi level-sequence successor scheme, in reverse-lexicographic
// order of canonical level sequences: first the path, last the star.
class RootedTreeGenerator {
  public:
    explicit RootedTreeGenerator(int node_count);

    // Level sequence of the current tree: level[0] = 1 is the root and
    // level[i] = 1 + level[parent(i)]. Valid until next().
    const std::vector<int>& current() const { return level_; }

    bool next();  // advance; false when exhausted
    bool done() const { return done_; }

    // Parent array (root index 0, node i's parent is the nearest earlier
    // node one level up) of the current tree, written into `parent`.
    void current_parents(std::vector<int>& parent) const;

  private:
    std::vector<int> level_;
    bool done_ = false;
};

// Number of unlabeled rooted trees on m nodes by the classic counting
// recurrence (exact big-integer arithmetic, independent of the generator).
BigInt rooted_tree_count(int node_count);

struct EquilibriumEntry {
    CanonicalCode code;
    RootedProfile representative;
    long long social_cost = 0;
    Rational fairness;
};

struct EquilibriumReport {
    int n = 0;
    std::uint64_t trees_scanned = 0;
    std::vector<EquilibriumEntry> equilibria;  // canonical enumeration order
    long long best_sc = 0;   // 0 when no equilibrium exists
    long long worst_sc = 0;
    double elapsed_seconds = 0.0;  // informational; never serialized
};

inline constexpr int kDefaultEnumerationCap = 20;

// Scans every rooted tree on n+1 nodes and keeps the stable ones.
// jobs = 0 picks the hardware concurrency. Content is deterministic and
// independent of the worker count. Throws ResourceLimitError above `cap`.
EquilibriumReport find_equilibria(int n, int jobs = 1, int cap = kDefaultEnumerationCap);

// Per-n reports for n_min..n_max inclusive.
std::vector<EquilibriumReport> equilibrium_catalogue(int n_min, int n_max, int jobs = 1,
                                                     int cap = kDefaultEnumerationCap);

}  // namespace tcg

#endif
