#ifndef TCG_REPORT_IO_HPP
#define TCG_REPORT_IO_HPP

#include <string>
#include <vector>

#include "tcg/enumeration.hpp"
#include "tcg/equilibrium.hpp"
#include "tcg/metrics.hpp"
#include "tcg/path_game.hpp"
#include "tcg/structure_checks.hpp"

namespace tcg {

// JSON/CSV/DOT emission. Output is byte-deterministic for a fixed config:
// keys are emitted in insertion order and timing fields are never written.

std::string report_to_json(const EquilibriumReport& report,
                           const std::vector<StructureAudit>& audits,
                           const QualityReport& quality);

std::string dynamics_to_json(const DynamicsOutcome& outcome, OrderPolicy policy,
                             std::uint64_t seed);

std::string path_search_to_json(const PathSearchResult& result);

// One CSV row per n: n, trees_scanned, count, best_sc, worst_sc, pos, poa,
// fr_opt, fr_min, fr_max. Metric cells are empty when no equilibrium exists.
std::string catalogue_csv(const std::vector<EquilibriumReport>& reports);

// Writes report JSON, CSV and per-equilibrium DOT files under `dir`.
void write_report_files(const std::string& dir, const std::vector<EquilibriumReport>& reports);

}  // namespace tcg

#endif
