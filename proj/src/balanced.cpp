#include "tcg/balanced.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tcg/cost.hpp"

namespace tcg {

bool DegreeSequence::valid() const {
    if (degs.empty() || degs.front() != 0) return false;
    for (std::size_t i = 1; i < degs.size(); ++i)
        if (degs[i] <= 0) return false;
    return true;
}

bool DegreeSequence::admissible_for_theorem() const {
    // (0, 1, 2, 4, d_{h-4}, ..., d_0) with d_{j+1} < d_j <= 2 d_{j+1} + 1
    // for every j <= h-4; the prefix is truncated for h < 3.
    if (!valid()) return false;
    const int h = height();
    if (h < 1) return false;
    if (degs[1] != 1) return false;               // d_{h-1}
    if (h >= 2 && degs[2] != 2) return false;     // d_{h-2}
    if (h >= 3 && degs[3] != 4) return false;     // d_{h-3}
    for (int j = 0; j <= h - 4; ++j) {
        int dj = deg_at_level(j), dj1 = deg_at_level(j + 1);
        if (!(dj1 < dj && dj <= 2 * dj1 + 1)) return false;
    }
    return true;
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        if (i) out << ",";
        out << degs[i];
    }
    return out.str();
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
    DegreeSequence seq;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad degree entry '" + item + "'", 0);
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw ParseError("bad degree entry '" + item + "'", pos);
        seq.degs.push_back(v);
    }
    if (!seq.valid())
        throw ParseError("sequence must start with 0 and continue with positive degrees", 0);
    return seq;
}

BalancedStats balanced_stats(const DegreeSequence& seq) {
    if (!seq.valid()) throw InvalidNodesError("invalid degree sequence");
    BalancedStats st;
    BigInt size = 1, sc = 0;
    st.sizes.push_back(size);
    for (std::size_t k = 1; k < seq.degs.size(); ++k) {
        const int d = seq.degs[k];
        sc = BigInt(d) * sc + BigInt(d) * d;
        size = BigInt(d) * size + 1;
        st.sizes.push_back(size);
    }
    st.n_h = size;
    st.sc_h = sc;
    st.a_h = size > 1 ? Rational(sc, size - 1) : Rational(0);
    return st;
}

RootedProfile build_balanced(const DegreeSequence& seq, long long cap) {
    BalancedStats st = balanced_stats(seq);
    if (st.n_h > cap)
        throw OverflowError("balanced tree has " + st.n_h.str() + " nodes, above the cap " +
                            std::to_string(cap));
    const int h = seq.height();
    const long long total = st.n_h.convert_to<long long>();
    std::vector<int> choice(total - 1);
    // BFS construction: each node at distance i from the root gets d_i
    // children (its in-degree).
    std::deque<std::pair<int, int>> queue;  // (node, level)
    queue.emplace_back(0, 0);
    int next = 1;
    while (!queue.empty()) {
        auto [node, level] = queue.front();
        queue.pop_front();
        if (level == h) continue;
        const int kids = seq.deg_at_level(level);
        for (int c = 0; c < kids; ++c) {
            choice[next - 1] = node;
            queue.emplace_back(next, level + 1);
            ++next;
        }
    }
    return RootedProfile(std::move(choice));
}

DegreeSequence extremal_sequence(int h) {
    if (h < 1) throw InvalidNodesError("extremal sequence needs height >= 1");
    DegreeSequence seq;
    seq.degs = {0, 1};
    if (h >= 2) seq.degs.push_back(2);
    if (h >= 3) seq.degs.push_back(4);
    while (static_cast<int>(seq.degs.size()) < h + 1)
        seq.degs.push_back(2 * seq.degs.back() + 1);
    return seq;
}

std::vector<int> root_path(const SubtreeStats& stats, int node) {
    std::vector<int> path;
    for (int a = node; a != -1; a = stats.parent[a]) path.push_back(a);
    return path;
}

namespace {

bool not_profitable(const RootedProfile& p, const SubtreeStats& stats, int node, int target) {
    const int agent = p.agent_of_node(node);
    return !(deviation_cost(p, stats, agent, target) < agent_cost(p, stats, agent));
}

int ancestor_at_depth(const SubtreeStats& stats, int node, int depth) {
    int a = node;
    while (a != -1 && stats.depth[a] > depth) a = stats.parent[a];
    if (a == -1 || stats.depth[a] != depth) throw InvalidNodesError("no ancestor at that depth");
    return a;
}

bool is_ancestor_or_self(const SubtreeStats& stats, int anc, int node) {
    for (int a = node; a != -1; a = stats.parent[a])
        if (a == anc) return true;
    return false;
}

}  // namespace

bool condition1_holds(const SubtreeStats& stats, int node) {
    if (node <= 0 || node > stats.n) throw InvalidNodesError("node out of range");
    if (stats.depth[node] < 2) throw InvalidNodesError("condition 1 needs depth >= 2");
    const int p = stats.parent[node];
    const int gp = stats.parent[p];
    const long long d_gp = stats.indeg[gp], d_p = stats.indeg[p];
    if (d_gp < d_p) return false;
    // |T_{i-1}| >= d_{i-2} / (d_{i-2} + 1 - d_{i-1}) * |T_i|
    return static_cast<long long>(stats.size[p]) * (d_gp + 1 - d_p) >=
           d_gp * stats.size[node];
}

bool check_condition1(const RootedProfile& p, const SubtreeStats& stats, int node) {
    const int gp = stats.parent[stats.parent[node]];
    return not_profitable(p, stats, node, gp);
}

bool condition2_holds(const RootedProfile& p, const SubtreeStats& stats, int node, int j) {
    if (node <= 0 || node > stats.n) throw InvalidNodesError("node out of range");
    const int i = stats.depth[node];
    if (j < 0 || i < j + 3) throw InvalidNodesError("condition 2 needs i >= j + 3");
    const int a_j = ancestor_at_depth(stats, node, j);
    const int a_j1 = ancestor_at_depth(stats, node, j + 1);
    const int a_j2 = ancestor_at_depth(stats, node, j + 2);
    if (stats.size[a_j2] < 2 * stats.size[node]) return false;
    if (stats.indeg[a_j] < stats.indeg[a_j1] + 1) return false;
    if (!not_profitable(p, stats, node, a_j1)) return false;
    if (!not_profitable(p, stats, a_j2, a_j)) return false;
    return true;
}

bool check_condition2(const RootedProfile& p, const SubtreeStats& stats, int node, int j) {
    return not_profitable(p, stats, node, ancestor_at_depth(stats, node, j));
}

namespace {

void require_lateral_positions(const SubtreeStats& stats, int v, int u_j, int u_jm1) {
    if (v <= 0 || v > stats.n || u_j < 0 || u_j > stats.n || u_jm1 <= 0 || u_jm1 > stats.n)
        throw InvalidNodesError("node out of range");
    if (stats.parent[u_jm1] != u_j) throw InvalidNodesError("u_jm1 must be a child of u_j");
    if (is_ancestor_or_self(stats, u_jm1, v))
        throw InvalidNodesError("v must not lie in the branch below u_jm1");
    if (v == u_j) throw InvalidNodesError("v must differ from u_j");
}

}  // namespace

bool condition3_holds(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1) {
    require_lateral_positions(stats, v, u_j, u_jm1);
    if (!not_profitable(p, stats, v, u_jm1)) return false;
    // |T_i| >= (d_{j-1} - d_j) / d_j * |T_j|
    const long long dj = stats.indeg[u_j], djm1 = stats.indeg[u_jm1];
    return static_cast<long long>(stats.size[v]) * dj >= (djm1 - dj) * stats.size[u_j];
}

bool check_condition3(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1) {
    require_lateral_positions(stats, v, u_j, u_jm1);
    return not_profitable(p, stats, v, u_j);
}

bool condition4_holds(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1) {
    require_lateral_positions(stats, v, u_j, u_jm1);
    if (!not_profitable(p, stats, v, u_j)) return false;
    const long long dj = stats.indeg[u_j], djm1 = stats.indeg[u_jm1];
    return static_cast<long long>(stats.size[v]) * dj <= (djm1 - dj) * stats.size[u_j];
}

bool check_condition4(const RootedProfile& p, const SubtreeStats& stats, int v, int u_j,
                      int u_jm1) {
    require_lateral_positions(stats, v, u_j, u_jm1);
    return not_profitable(p, stats, v, u_jm1);
}

namespace {

bool degrees_bounded(const DegreeSequence& seq, int slack) {
    // d_j <= 2 d_{j+1} + slack for every j < h
    for (int j = 0; j < seq.height(); ++j)
        if (seq.deg_at_level(j) > 2 * seq.deg_at_level(j + 1) + slack) return false;
    return true;
}

// d_{j+1} <= d_j <= 2 d_{j+1} + slack for every j <= h-4
bool tail_bounded(const DegreeSequence& seq, int slack) {
    for (int j = 0; j <= seq.height() - 4; ++j) {
        int dj = seq.deg_at_level(j), dj1 = seq.deg_at_level(j + 1);
        if (!(dj1 <= dj && dj <= 2 * dj1 + slack)) return false;
    }
    return true;
}

bool has_theorem_prefix(const DegreeSequence& seq) {
    const int h = seq.height();
    if (h < 3) return false;
    return seq.degs[1] == 1 && seq.degs[2] == 2 && seq.degs[3] == 4;
}

}  // namespace

bool condition5_holds(const DegreeSequence& seq, const SubtreeStats& stats, int v, int u) {
    if (v <= 0 || v > stats.n || u <= 0 || u > stats.n || v == u)
        throw InvalidNodesError("need two distinct agent nodes");
    if (stats.parent[v] != stats.parent[u]) throw InvalidNodesError("nodes must be siblings");
    return degrees_bounded(seq, 1);
}

bool check_condition5(const RootedProfile& p, const SubtreeStats& stats, int v, int u) {
    if (stats.parent[v] != stats.parent[u] || v == u)
        throw InvalidNodesError("nodes must be siblings");
    return not_profitable(p, stats, v, u);
}

bool condition6_holds(const DegreeSequence& seq, const SubtreeStats& stats, int v, int u) {
    if (v <= 0 || v > stats.n || u < 0 || u > stats.n || v == u)
        throw InvalidNodesError("node out of range");
    if (stats.depth[u] != stats.depth[v] - 1)
        throw InvalidNodesError("u must sit one level above v");
    if (is_ancestor_or_self(stats, u, v)) throw InvalidNodesError("u must not be an ancestor of v");
    return has_theorem_prefix(seq) && tail_bounded(seq, 1);
}

bool check_condition6(const RootedProfile& p, const SubtreeStats& stats, int v, int u) {
    if (stats.depth[u] != stats.depth[v] - 1 || is_ancestor_or_self(stats, u, v))
        throw InvalidNodesError("u must be a non-ancestor one level above v");
    return not_profitable(p, stats, v, u);
}

ConditionSweep sweep_conditions(const DegreeSequence& seq, const RootedProfile& p) {
    SubtreeStats stats = compute_stats(p);
    const int n = p.n;
    const int h = seq.height();
    ConditionSweep sweep;

    auto conclude = [&](int v, int target, bool hypothesis) {
        sweep.positions_checked++;
        if (!hypothesis) return;
        sweep.hypothesis_hits++;
        if (!not_profitable(p, stats, v, target) && sweep.all_conclusions_hold) {
            sweep.all_conclusions_hold = false;
            sweep.fail_agent = p.agent_of_node(v);
            sweep.fail_target = target;
        }
    };

    for (int v = 1; v <= n; ++v) {
        // ancestor swaps: condition 1 (grandparent), condition 2 (further up)
        if (stats.depth[v] >= 2)
            conclude(v, stats.parent[stats.parent[v]], condition1_holds(stats, v));
        for (int j = 0; j <= stats.depth[v] - 3; ++j)
            conclude(v, ancestor_at_depth(stats, v, j), condition2_holds(p, stats, v, j));

        // lateral swaps one level up / same level
        for (int u = 1; u <= n; ++u) {
            if (u == v) continue;
            if (stats.depth[u] == stats.depth[v] - 1 && !is_ancestor_or_self(stats, u, v))
                conclude(v, u, condition6_holds(seq, stats, v, u));
            if (stats.parent[u] == stats.parent[v])
                conclude(v, u, condition5_holds(seq, stats, v, u));
        }

        // conditions 3 and 4 at every lateral (u_j, child u_jm1) pair
        for (int u_jm1 = 1; u_jm1 <= n; ++u_jm1) {
            const int u_j = stats.parent[u_jm1];
            if (is_ancestor_or_self(stats, u_jm1, v) || v == u_j) continue;
            bool c3 = condition3_holds(p, stats, v, u_j, u_jm1);
            sweep.positions_checked++;
            if (c3) {
                sweep.hypothesis_hits++;
                if (!not_profitable(p, stats, v, u_j) && sweep.all_conclusions_hold) {
                    sweep.all_conclusions_hold = false;
                    sweep.fail_agent = p.agent_of_node(v);
                    sweep.fail_target = u_j;
                }
            }
            bool c4 = condition4_holds(p, stats, v, u_j, u_jm1);
            sweep.positions_checked++;
            if (c4) {
                sweep.hypothesis_hits++;
                if (!not_profitable(p, stats, v, u_jm1) && sweep.all_conclusions_hold) {
                    sweep.all_conclusions_hold = false;
                    sweep.fail_agent = p.agent_of_node(v);
                    sweep.fail_target = u_jm1;
                }
            }
        }

        // leaf-target lemmas
        const int dv = stats.depth[v];
        for (int u = 1; u <= n; ++u) {
            if (u == v || !stats.is_leaf(u) || stats.depth[u] != h) continue;
            if (is_ancestor_or_self(stats, v, u)) continue;  // descendants excluded
            bool hyp = false;
            if (dv == h) {
                hyp = has_theorem_prefix(seq) && tail_bounded(seq, 1);
            } else if (dv == h - 1) {
                hyp = has_theorem_prefix(seq) && tail_bounded(seq, 1) && stats.parent[u] != v;
            } else {
                // the heavy-subtree lemma needs the non-extremal bound
                hyp = has_theorem_prefix(seq) && tail_bounded(seq, 0);
            }
            conclude(v, u, hyp);
        }
    }
    return sweep;
}

bool verify_theorem_stability(const DegreeSequence& seq, long long cap) {
    if (!seq.admissible_for_theorem())
        throw InvalidNodesError("sequence is not admissible for the stability theorem");
    RootedProfile p = build_balanced(seq, cap);
    std::vector<int> parent(p.n + 1, -1);
    for (int v = 1; v <= p.n; ++v) parent[v] = p.choice[v - 1];
    detail::NashScanner scanner;
    return scanner.scan(parent);
}

}  // namespace tcg
