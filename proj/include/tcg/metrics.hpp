#ifndef TCG_METRICS_HPP
#define TCG_METRICS_HPP

#include <optional>
#include <vector>

#include "tcg/enumeration.hpp"
#include "tcg/interval.hpp"
#include "tcg/rational.hpp"
#include "tcg/tree_model.hpp"

namespace tcg {

// Hamiltonian path ending at the root; social cost exactly n.
RootedProfile optimum_profile(int n);

// Efficiency and fairness metrics for one value of n. The ratio fields are
// empty when no equilibrium exists (n = 16, 18).
struct QualityReport {
    int n = 0;
    long long opt_sc = 0;  // = n
    bool has_equilibria = false;
    long long best_sc = 0;
    long long worst_sc = 0;
    std::optional<Rational> pos_ratio;  // best_sc / n
    std::optional<Rational> poa_ratio;  // worst_sc / n
    Rational fr_opt;                    // n * H_n
    std::vector<Rational> fr_per_equilibrium;
};

QualityReport quality_report(const EquilibriumReport& report);

// Upper/lower Fairness Ratio bound formulas for stable trees, as intervals:
//   upper: 8.62 (n-2) ln ln(4 sqrt(n/5)) / ln(4 sqrt(n/5))
//   lower: n * 2^(-2 sqrt(2 log2 n))
// Meaningful from n >= 4; below that the constants of the bound degenerate.
Interval fr_upper_bound(int n);
Interval fr_lower_bound(int n);

// Measurement of best_sc/n against the 7/5 floor (epsilon is Theta(1/n), so
// this is logged, not asserted) plus the 2.83 ceiling assertion for n that
// admit an admissible balanced equilibrium.
struct PosFloorMeasurement {
    int n = 0;
    Rational ratio;             // best_sc / n
    bool above_seven_fifths = false;  // logged
    std::optional<bool> below_283;    // asserted only for balanced-admissible n
};

PosFloorMeasurement pos_floor_check(const EquilibriumReport& report,
                                    bool admits_admissible_balanced);

}  // namespace tcg

#endif
