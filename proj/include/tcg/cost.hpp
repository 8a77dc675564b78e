#ifndef TCG_COST_HPP
#define TCG_COST_HPP

#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// cost(i) = sum over edges (u,v) on the agent's root path of
// indeg(v) / |T(u)|; infinite when the path does not exist. The edge-cost
// scale factor alpha is fixed to 1: it multiplies every cost uniformly, so
// every equilibrium predicate and argmin is unaffected by its value.
CostValue agent_cost(const RootedProfile& profile, const SubtreeStats& stats, int agent);

// Recomputes stats; convenience for one-off evaluations.
CostValue agent_cost(const RootedProfile& profile, int agent);

// Social cost of a spanning tree: sum of squared in-degrees. Equals the
// rational sum of all agent costs (tested as a double-entry invariant).
long long social_cost(const SubtreeStats& stats);

// max agent cost / min agent cost, exact. Requires a spanning tree, n >= 1.
Rational fairness_ratio(const RootedProfile& profile, const SubtreeStats& stats);

}  // namespace tcg

#endif
