#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcg/balanced.hpp"
#include "tcg/cost.hpp"
#include "tcg/enumeration.hpp"
#include "tcg/equilibrium.hpp"
#include "tcg/metrics.hpp"
#include "tcg/path_game.hpp"
#include "tcg/report_io.hpp"
#include "tcg/structure_checks.hpp"
#include "tcg/tree_model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // ran fine, verification answer is "no"
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tcg::Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw tcg::ParseError("range must look like A..B", 0);
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree connection game toolkit: equilibrium search, verification,\n"
                 "balanced-tree machinery, quality metrics and the path-strategy game."};
    app.require_subcommand(1);

    const int enum_cap = env_cap("TCG_ENUM_CAP", tcg::kDefaultEnumerationCap);
    const int path_cap = env_cap("TCG_PATH_CAP", tcg::kDefaultPathCap);
    const long long build_cap = env_cap("TCG_BUILD_CAP", 0) > 0
                                    ? env_cap("TCG_BUILD_CAP", 0)
                                    : tcg::kDefaultBuildCap;

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "scan all tree shapes for equilibria");
    int en_n = 0, en_jobs = 1, en_cap = enum_cap;
    std::string en_out;
    cmd_enum->add_option("--n", en_n, "number of agents")->required();
    cmd_enum->add_option("--jobs", en_jobs, "worker threads (0 = auto)");
    cmd_enum->add_option("--out", en_out, "directory for JSON/CSV/DOT output");
    cmd_enum->add_option("--cap", en_cap, "enumeration cap override");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check a profile for stability");
    std::string vf_file;
    cmd_verify->add_option("--profile", vf_file, "profile JSON file")->required();

    // dynamics
    auto* cmd_dyn = app.add_subcommand("dynamics", "run best-response dynamics");
    int dy_n = 0;
    std::string dy_policy = "round-robin", dy_start = "random", dy_start_file;
    std::uint64_t dy_seed = 0, dy_steps = tcg::kDefaultMaxSteps;
    cmd_dyn->add_option("--n", dy_n, "number of agents")->required();
    cmd_dyn->add_option("--policy", dy_policy, "round-robin | random-agent | max-improvement");
    cmd_dyn->add_option("--seed", dy_seed, "rng seed (default 0)");
    cmd_dyn->add_option("--steps", dy_steps, "step limit");
    cmd_dyn->add_option("--start", dy_start, "random | path | star");
    cmd_dyn->add_option("--start-file", dy_start_file, "profile JSON file to start from");

    // balanced
    auto* cmd_bal = app.add_subcommand("balanced", "balanced-tree stats and verification");
    std::string bal_seq;
    bool bal_verify = false, bal_stats = false;
    cmd_bal->add_option("--seq", bal_seq, "leaf-to-root degree sequence, e.g. \"0,1,2,4,9\"")
        ->required();
    cmd_bal->add_flag("--verify", bal_verify, "build the tree and run full stability check");
    cmd_bal->add_flag("--stats", bal_stats, "print exact sizes and social cost");

    // metrics
    auto* cmd_metrics = app.add_subcommand("metrics", "quality metrics over a range of n");
    std::string me_range, me_out;
    int me_jobs = 1;
    cmd_metrics->add_option("--range", me_range, "A..B")->required();
    cmd_metrics->add_option("--out", me_out, "output JSON file (default stdout)");
    cmd_metrics->add_option("--jobs", me_jobs, "worker threads (0 = auto)");

    // path-verify
    auto* cmd_pv = app.add_subcommand("path-verify", "check path-game stability");
    std::string pv_profile, pv_paths;
    cmd_pv->add_option("--profile", pv_profile, "tree profile JSON file")->required();
    cmd_pv->add_option("--paths", pv_paths, "explicit paths file (JSON array of node arrays)");

    // path-search
    auto* cmd_ps = app.add_subcommand("path-search", "scan tree shapes for path-game stability");
    int ps_n = 0, ps_jobs = 1, ps_cap = path_cap;
    cmd_ps->add_option("--n", ps_n, "number of agents")->required();
    cmd_ps->add_option("--jobs", ps_jobs, "worker threads (0 = auto)");
    cmd_ps->add_option("--cap", ps_cap, "path-search cap override");

    // report
    auto* cmd_report = app.add_subcommand("report", "full catalogue with files");
    std::string rp_range, rp_out;
    int rp_jobs = 1;
    cmd_report->add_option("--range", rp_range, "A..B")->required();
    cmd_report->add_option("--out", rp_out, "output directory")->required();
    cmd_report->add_option("--jobs", rp_jobs, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return kExitOk;  // --help
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitUsage;
    }

    try {
        if (*cmd_enum) {
            auto report = tcg::find_equilibria(en_n, en_jobs, en_cap);
            std::vector<tcg::StructureAudit> audits;
            for (const auto& e : report.equilibria)
                audits.push_back(
                    tcg::audit_structure(e.representative, tcg::compute_stats(e.representative)));
            std::cout << tcg::report_to_json(report, audits, tcg::quality_report(report));
            std::cerr << "scanned " << report.trees_scanned << " trees in "
                      << report.elapsed_seconds << "s\n";
            if (!en_out.empty()) tcg::write_report_files(en_out, {report});
            return kExitOk;
        }

        if (*cmd_verify) {
            auto profile = tcg::deserialize(read_file(vf_file));
            auto res = tcg::is_nash(profile);
            if (res.stable) {
                std::cout << "STABLE n=" << profile.n << "\n";
                return kExitOk;
            }
            std::cout << "UNSTABLE n=" << profile.n << " witness: agent " << res.witness->agent
                      << " -> node " << res.witness->new_choice << " cost "
                      << tcg::to_string(res.witness->old_cost) << " -> "
                      << tcg::to_string(res.witness->new_cost) << "\n";
            return kExitNegative;
        }

        if (*cmd_dyn) {
            tcg::RootedProfile start;
            if (!dy_start_file.empty())
                start = tcg::deserialize(read_file(dy_start_file));
            else if (dy_start == "random")
                start = tcg::random_tree_profile(dy_n, dy_seed);
            else if (dy_start == "path")
                start = tcg::hamiltonian_path_profile(dy_n);
            else if (dy_start == "star")
                start = tcg::star_profile(dy_n);
            else
                throw tcg::ParseError("unknown start '" + dy_start + "'", 0);
            auto policy = tcg::parse_policy(dy_policy);
            auto outcome = tcg::run_dynamics(start, policy, dy_seed, dy_steps);
            std::cout << tcg::dynamics_to_json(outcome, policy, dy_seed);
            return kExitOk;
        }

        if (*cmd_bal) {
            auto seq = tcg::DegreeSequence::parse(bal_seq);
            auto stats = tcg::balanced_stats(seq);
            tcg::BigInt agents = stats.n_h - 1;
            std::cout << "sequence (" << seq.to_string() << ") height " << seq.height()
                      << " nodes " << stats.n_h.str() << " agents " << agents.str() << " sc "
                      << stats.sc_h.str() << " admissible "
                      << (seq.admissible_for_theorem() ? "yes" : "no") << "\n";
            if (bal_stats) {
                std::cout << "sizes leaf-to-root:";
                for (const auto& s : stats.sizes) std::cout << " " << s.str();
                std::cout << "\naverage cost a_h = " << tcg::to_fraction_string(stats.a_h)
                          << "\n";
            }
            if (bal_verify) {
                bool stable = tcg::verify_theorem_stability(seq, build_cap);
                std::cout << (stable ? "STABLE" : "UNSTABLE") << "\n";
                return stable ? kExitOk : kExitNegative;
            }
            return kExitOk;
        }

        if (*cmd_metrics) {
            int lo = 0, hi = 0;
            parse_range(me_range, lo, hi);
            auto reports = tcg::equilibrium_catalogue(lo, hi, me_jobs, enum_cap);
            std::string csv = tcg::catalogue_csv(reports);
            if (me_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(me_out, std::ios::binary);
                if (!out) throw tcg::Error("cannot write '" + me_out + "'");
                out << csv;
            }
            return kExitOk;
        }

        if (*cmd_pv) {
            auto profile = tcg::deserialize(read_file(pv_profile));
            tcg::PathProfile paths;
            if (pv_paths.empty()) {
                paths = tcg::PathProfile::from_tree(profile);
            } else {
                // JSON array of node arrays, one per agent
                auto doc = nlohmann::json::parse(read_file(pv_paths));
                paths.n = profile.n;
                for (const auto& arr : doc)
                    paths.paths.push_back(std::vector<int>(arr.begin(), arr.end()));
            }
            auto res = tcg::is_path_nash(paths, path_cap);
            if (res.stable) {
                std::cout << "PATH-STABLE n=" << paths.n << "\n";
                return kExitOk;
            }
            std::cout << "PATH-UNSTABLE n=" << paths.n << " witness: agent "
                      << res.witness->agent << " cost " << tcg::to_string(res.witness->old_cost)
                      << " -> " << tcg::to_string(res.witness->new_cost) << " via path [";
            for (std::size_t k = 0; k < res.witness->new_path.size(); ++k) {
                if (k) std::cout << ",";
                std::cout << res.witness->new_path[k];
            }
            std::cout << "]\n";
            return kExitNegative;
        }

        if (*cmd_ps) {
            auto result = tcg::path_equilibrium_search(ps_n, ps_jobs, ps_cap);
            std::cout << tcg::path_search_to_json(result);
            return kExitOk;
        }

        if (*cmd_report) {
            int lo = 0, hi = 0;
            parse_range(rp_range, lo, hi);
            auto reports = tcg::equilibrium_catalogue(lo, hi, rp_jobs, enum_cap);
            tcg::write_report_files(rp_out, reports);
            std::cerr << "wrote report for n in [" << lo << "," << hi << "] to " << rp_out
                      << "\n";
            return kExitOk;
        }
    } catch (const tcg::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const tcg::OverflowError& e) {
        std::cerr << "overflow guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const tcg::SearchBudgetError& e) {
        std::cerr << "search budget: " << e.what() << "\n";
        return kExitResource;
    } catch (const tcg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
