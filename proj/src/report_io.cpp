#include "tcg/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcg/cost.hpp"

namespace tcg {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json audit_to_json(const StructureAudit& audit) {
    ordered_json out = ordered_json::array();
    for (const auto& e : audit.entries) {
        ordered_json item;
        item["check"] = e.name;
        item["mode"] = e.applicable ? "assert" : "measure";
        if (e.applicable) item["passed"] = e.passed;
        if (!e.witness.empty()) item["witness"] = e.witness;
        if (e.measured) item["measured"] = *e.measured;
        if (e.reference) item["reference"] = *e.reference;
        out.push_back(item);
    }
    return out;
}

ordered_json profile_to_json(const RootedProfile& p) {
    ordered_json arr = ordered_json::array();
    for (int c : p.choice) arr.push_back(c);
    return arr;
}

}  // namespace

std::string report_to_json(const EquilibriumReport& report,
                           const std::vector<StructureAudit>& audits,
                           const QualityReport& quality) {
    ordered_json out;
    out["n"] = report.n;
    out["trees_scanned"] = report.trees_scanned;
    out["equilibrium_count"] = report.equilibria.size();
    ordered_json eqs = ordered_json::array();
    for (std::size_t k = 0; k < report.equilibria.size(); ++k) {
        const auto& e = report.equilibria[k];
        ordered_json item;
        item["code"] = e.code.code;
        item["profile"] = profile_to_json(e.representative);
        item["social_cost"] = e.social_cost;
        item["fairness"] = to_fraction_string(e.fairness);
        if (k < audits.size()) item["audit"] = audit_to_json(audits[k]);
        eqs.push_back(item);
    }
    out["equilibria"] = eqs;
    ordered_json q;
    q["opt_sc"] = quality.opt_sc;
    q["fr_opt"] = to_fraction_string(quality.fr_opt);
    if (quality.has_equilibria) {
        q["best_sc"] = quality.best_sc;
        q["worst_sc"] = quality.worst_sc;
        q["pos_ratio"] = to_fraction_string(*quality.pos_ratio);
        q["poa_ratio"] = to_fraction_string(*quality.poa_ratio);
    } else {
        q["note"] = "no equilibrium exists for this n";
    }
    out["quality"] = q;
    return out.dump(2) + "\n";
}

std::string dynamics_to_json(const DynamicsOutcome& outcome, OrderPolicy policy,
                             std::uint64_t seed) {
    ordered_json out;
    out["policy"] = policy_name(policy);
    out["seed"] = seed;
    switch (outcome.kind) {
        case DynamicsKind::Converged: out["kind"] = "Converged"; break;
        case DynamicsKind::CycleDetected: out["kind"] = "CycleDetected"; break;
        case DynamicsKind::StepLimit: out["kind"] = "StepLimit"; break;
    }
    out["trajectory_length"] = outcome.trajectory_length;
    if (outcome.kind == DynamicsKind::CycleDetected) out["cycle_length"] = outcome.cycle_length;
    out["final_profile"] = profile_to_json(outcome.final_profile);
    return out.dump(2) + "\n";
}

std::string path_search_to_json(const PathSearchResult& result) {
    ordered_json out;
    out["n"] = result.n;
    out["trees_scanned"] = result.trees_scanned;
    out["stable_count"] = result.stable_codes.size();
    ordered_json arr = ordered_json::array();
    for (std::size_t k = 0; k < result.stable_codes.size(); ++k) {
        ordered_json item;
        item["code"] = result.stable_codes[k].code;
        item["profile"] = profile_to_json(result.representatives[k]);
        arr.push_back(item);
    }
    out["stable_trees"] = arr;
    return out.dump(2) + "\n";
}

std::string catalogue_csv(const std::vector<EquilibriumReport>& reports) {
    std::ostringstream out;
    out << "n,trees_scanned,count,best_sc,worst_sc,pos_ratio,poa_ratio,fr_opt,fr_min,fr_max\n";
    for (const auto& r : reports) {
        out << r.n << "," << r.trees_scanned << "," << r.equilibria.size() << ",";
        if (r.equilibria.empty()) {
            out << ",,,," << to_fraction_string(Rational(r.n) * harmonic(r.n)) << ",,";
        } else {
            Rational fr_min = r.equilibria.front().fairness, fr_max = fr_min;
            for (const auto& e : r.equilibria) {
                fr_min = std::min(fr_min, e.fairness);
                fr_max = std::max(fr_max, e.fairness);
            }
            out << r.best_sc << "," << r.worst_sc << ","
                << to_fraction_string(Rational(r.best_sc, r.n)) << ","
                << to_fraction_string(Rational(r.worst_sc, r.n)) << ","
                << to_fraction_string(Rational(r.n) * harmonic(r.n)) << ","
                << to_fraction_string(fr_min) << "," << to_fraction_string(fr_max);
        }
        out << "\n";
    }
    return out.str();
}

void write_report_files(const std::string& dir, const std::vector<EquilibriumReport>& reports) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());

    auto write = [](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path.string() + "'");
        out << content;
    };

    ordered_json all = ordered_json::array();
    for (const auto& r : reports) {
        std::vector<StructureAudit> audits;
        for (const auto& e : r.equilibria)
            audits.push_back(audit_structure(e.representative, compute_stats(e.representative)));
        all.push_back(ordered_json::parse(report_to_json(r, audits, quality_report(r))));
        for (std::size_t k = 0; k < r.equilibria.size(); ++k) {
            std::ostringstream name;
            name << "eq_n" << r.n << "_" << k << ".dot";
            write(fs::path(dir) / name.str(),
                  to_dot(r.equilibria[k].representative, "eq_n" + std::to_string(r.n)));
        }
    }
    write(fs::path(dir) / "report.json", all.dump(2) + "\n");
    write(fs::path(dir) / "catalogue.csv", catalogue_csv(reports));
}

}  // namespace tcg
