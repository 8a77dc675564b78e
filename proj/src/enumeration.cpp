#include "tcg/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "tcg/cost.hpp"

namespace tcg {

RootedTreeGenerator::RootedTreeGenerator(int node_count) {
    if (node_count < 1) throw ResourceLimitError("node count must be >= 1");
    level_.resize(node_count);
    for (int i = 0; i < node_count; ++i) level_[i] = i + 1;  // the path
}

bool RootedTreeGenerator::next() {
    // Beyer-Hedetniemi successor: find the last node deeper than level 2,
    // lift it to its parent's sibling position and tile the tail with copies
    // of the subtree rooted at that parent.
    if (done_) return false;
    const int m = static_cast<int>(level_.size());
    int p = -1;
    for (int i = m - 1; i >= 0; --i) {
        if (level_[i] > 2) {
            p = i;
            break;
        }
    }
    if (p < 0) {
        done_ = true;
        return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (level_[i] == level_[p] - 1) {
            q = i;
            break;
        }
    }
    const int d = p - q;
    for (int i = p; i < m; ++i) level_[i] = level_[i - d];
    return true;
}

void RootedTreeGenerator::current_parents(std::vector<int>& parent) const {
    const int m = static_cast<int>(level_.size());
    parent.assign(m, -1);
    // last node seen on each level; levels are 1-based and grow by one.
    std::vector<int> last(m + 2, -1);
    for (int i = 0; i < m; ++i) {
        if (i > 0) parent[i] = last[level_[i] - 1];
        last[level_[i]] = i;
    }
}

BigInt rooted_tree_count(int node_count) {
    // t(n) = (1/(n-1)) * sum_{k=1}^{n-1} ( sum_{d|k} d t(d) ) t(n-k)
    if (node_count < 1) return 0;
    std::vector<BigInt> t(node_count + 1, 0), s(node_count + 1, 0);
    t[1] = 1;
    for (int n = 2; n <= node_count; ++n) {
        for (int k = 1; k < n; ++k) {
            if (s[k] == 0) {
                for (int d = 1; d <= k; ++d)
                    if (k % d == 0) s[k] += BigInt(d) * t[d];
            }
            t[n] += s[k] * t[n - k];
        }
        t[n] /= n - 1;
    }
    return t[node_count];
}

namespace {

struct Found {
    std::uint64_t index;
    std::vector<int> parent;
};

EquilibriumEntry make_entry(const std::vector<int>& parent) {
    std::vector<int> choice(parent.size() - 1);
    for (std::size_t v = 1; v < parent.size(); ++v) choice[v - 1] = parent[v];
    RootedProfile found(std::move(choice));
    CanonicalCode code = canonical_code(found);
    RootedProfile rep = profile_from_code(code);
    SubtreeStats stats = compute_stats(rep);
    EquilibriumEntry entry;
    entry.code = std::move(code);
    entry.social_cost = social_cost(stats);
    entry.fairness = fairness_ratio(rep, stats);
    entry.representative = std::move(rep);
    return entry;
}

}  // namespace

EquilibriumReport find_equilibria(int n, int jobs, int cap) {
    if (n < 1) throw ResourceLimitError("n must be >= 1");
    if (n > cap)
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(cap));
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    const auto t0 = std::chrono::steady_clock::now();
    const int m = n + 1;
    EquilibriumReport report;
    report.n = n;

    std::vector<Found> found;
    std::uint64_t scanned = 0;

    if (jobs == 1) {
        RootedTreeGenerator gen(m);
        detail::NashScanner scanner;
        std::vector<int> parent;
        do {
            gen.current_parents(parent);
            if (scanner.scan(parent)) found.push_back({scanned, parent});
            ++scanned;
        } while (gen.next());
    } else {
        // Workers pull fixed-size batches of level sequences under a lock;
        // the batch index makes the merged result order-independent.
        std::mutex mu;
        RootedTreeGenerator gen(m);
        bool exhausted = false;
        std::uint64_t next_index = 0;
        constexpr int kBatch = 256;

        std::vector<std::vector<Found>> local_found(jobs);
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                detail::NashScanner scanner;
                std::vector<std::vector<int>> batch;
                std::vector<int> parent;
                std::uint64_t base = 0;
                while (true) {
                    batch.clear();
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (exhausted) return;
                        base = next_index;
                        for (int i = 0; i < kBatch; ++i) {
                            batch.push_back(gen.current());
                            ++next_index;
                            if (!gen.next()) {
                                exhausted = true;
                                break;
                            }
                        }
                    }
                    for (std::size_t i = 0; i < batch.size(); ++i) {
                        // rebuild parents from the level sequence
                        const auto& level = batch[i];
                        parent.assign(level.size(), -1);
                        std::vector<int> last(level.size() + 2, -1);
                        for (std::size_t k = 0; k < level.size(); ++k) {
                            if (k > 0) parent[k] = last[level[k] - 1];
                            last[level[k]] = static_cast<int>(k);
                        }
                        if (scanner.scan(parent)) local_found[w].push_back({base + i, parent});
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        scanned = next_index;
        for (auto& lf : local_found)
            for (auto& f : lf) found.push_back(std::move(f));
        std::sort(found.begin(), found.end(),
                  [](const Found& a, const Found& b) { return a.index < b.index; });
    }

    report.trees_scanned = scanned;
    for (const auto& f : found) report.equilibria.push_back(make_entry(f.parent));
    if (!report.equilibria.empty()) {
        report.best_sc = report.worst_sc = report.equilibria.front().social_cost;
        for (const auto& e : report.equilibria) {
            report.best_sc = std::min(report.best_sc, e.social_cost);
            report.worst_sc = std::max(report.worst_sc, e.social_cost);
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::vector<EquilibriumReport> equilibrium_catalogue(int n_min, int n_max, int jobs, int cap) {
    if (n_min < 1 || n_max < n_min) throw ResourceLimitError("bad catalogue range");
    std::vector<EquilibriumReport> out;
    for (int n = n_min; n <= n_max; ++n) out.push_back(find_equilibria(n, jobs, cap));
    return out;
}

}  // namespace tcg
