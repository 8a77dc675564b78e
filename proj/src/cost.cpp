#include "tcg/cost.hpp"

#include <sstream>

namespace tcg {

std::string to_fraction_string(const Rational& q) {
    std::ostringstream out;
    out << numerator(q) << "/" << denominator(q);
    return out.str();
}

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator", slash + 1);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational '" + text + "'", 0);
    }
}

Rational harmonic(int n) {
    Rational h = 0;
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

double approx(const Rational& q) {
    return static_cast<double>(q);
}

std::string to_string(const CostValue& c) {
    return c.finite ? to_fraction_string(c.value) : "inf";
}

CostValue agent_cost(const RootedProfile& profile, const SubtreeStats& stats, int agent) {
    auto path = path_to_root(profile, agent);
    if (!path) return CostValue::infinity();
    Rational total = 0;
    for (const auto& [u, v] : *path) total += Rational(stats.indeg[v], stats.size[u]);
    return CostValue::of(total);
}

CostValue agent_cost(const RootedProfile& profile, int agent) {
    if (!profile.is_spanning_tree()) {
        // Stats are undefined on cyclic profiles, but indegrees and the
        // sizes of the reachable subtrees still are; cost only needs the
        // values along the agent's root path, which exists or not.
        auto path = path_to_root(profile, agent);
        if (!path) return CostValue::infinity();
        const int n = profile.n;
        std::vector<int> indeg(n + 1, 0);
        for (int v = 1; v <= n; ++v) indeg[profile.choice[v - 1]]++;
        // |T(u)| = nodes whose pointer walk reaches u, u included. The walk
        // from any node is deterministic, so its reachable set is just the
        // walk itself up to the first repeat (or the root).
        std::vector<int> size(n + 1, 1);
        for (int w = 1; w <= n; ++w) {
            std::vector<char> seen(n + 1, 0);
            seen[w] = 1;
            int u = w;
            while (u != 0) {
                u = profile.choice[u - 1];
                if (u == 0 || seen[u]) break;
                seen[u] = 1;
                size[u] += 1;
            }
        }
        Rational total = 0;
        for (const auto& [u, v] : *path) total += Rational(indeg[v], size[u]);
        return CostValue::of(total);
    }
    return agent_cost(profile, compute_stats(profile), agent);
}

long long social_cost(const SubtreeStats& stats) {
    long long total = 0;
    for (int v = 0; v <= stats.n; ++v)
        total += static_cast<long long>(stats.indeg[v]) * stats.indeg[v];
    return total;
}

Rational fairness_ratio(const RootedProfile& profile, const SubtreeStats& stats) {
    Rational max_cost, min_cost;
    for (int i = 0; i < profile.n; ++i) {
        CostValue c = agent_cost(profile, stats, i);
        if (i == 0) {
            max_cost = min_cost = c.value;
        } else {
            if (c.value > max_cost) max_cost = c.value;
            if (c.value < min_cost) min_cost = c.value;
        }
    }
    return max_cost / min_cost;
}

}  // namespace tcg
