#include "tcg/metrics.hpp"

#include "tcg/cost.hpp"

namespace tcg {

RootedProfile optimum_profile(int n) { return hamiltonian_path_profile(n); }

QualityReport quality_report(const EquilibriumReport& report) {
    QualityReport q;
    q.n = report.n;
    q.opt_sc = report.n;
    q.fr_opt = Rational(report.n) * harmonic(report.n);
    q.has_equilibria = !report.equilibria.empty();
    if (q.has_equilibria) {
        q.best_sc = report.best_sc;
        q.worst_sc = report.worst_sc;
        q.pos_ratio = Rational(report.best_sc, report.n);
        q.poa_ratio = Rational(report.worst_sc, report.n);
        for (const auto& e : report.equilibria) q.fr_per_equilibrium.push_back(e.fairness);
    }
    return q;
}

Interval fr_upper_bound(int n) {
    // 8.62 (n-2) ln ln(4 sqrt(n/5)) / ln(4 sqrt(n/5))
    Interval arg = interval_sqrt(Interval::from_rational(Rational(n, 5))) * Interval::point(4.0);
    Interval ln = interval_ln(arg);
    Interval lnln = interval_ln(ln);
    return Interval::point(8.62) * Interval::point(static_cast<double>(n - 2)) * lnln / ln;
}

Interval fr_lower_bound(int n) {
    // n * 2^(-2 sqrt(2 log2 n))
    Interval lg = interval_log2(Interval::point(static_cast<double>(n)));
    Interval expo = Interval::point(-2.0) * interval_sqrt(Interval::point(2.0) * lg);
    return Interval::point(static_cast<double>(n)) * interval_exp2(expo);
}

PosFloorMeasurement pos_floor_check(const EquilibriumReport& report,
                                    bool admits_admissible_balanced) {
    if (report.equilibria.empty()) throw Error("pos_floor_check needs at least one equilibrium");
    PosFloorMeasurement m;
    m.n = report.n;
    m.ratio = Rational(report.best_sc, report.n);
    m.above_seven_fifths = m.ratio > Rational(7, 5);
    if (admits_admissible_balanced) m.below_283 = m.ratio <= Rational(283, 100);
    return m;
}

}  // namespace tcg
