#include "tcg/tree_model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tcg {

RootedProfile::RootedProfile(std::vector<int> c) : n(static_cast<int>(c.size())), choice(std::move(c)) {
    for (int i = 0; i < n; ++i) {
        if (choice[i] < 0 || choice[i] > n)
            throw ParseError("choice out of range", static_cast<std::size_t>(i));
        if (choice[i] == i + 1)
            throw ParseError("agent points at itself", static_cast<std::size_t>(i));
    }
}

bool RootedProfile::is_spanning_tree() const {
    // Follow pointers; colour 0 = unseen, 1 = on current walk, 2 = reaches root.
    std::vector<char> colour(n + 1, 0);
    colour[0] = 2;
    std::vector<int> walk;
    for (int v = 1; v <= n; ++v) {
        if (colour[v] != 0) continue;
        walk.clear();
        int u = v;
        while (colour[u] == 0) {
            colour[u] = 1;
            walk.push_back(u);
            u = choice[u - 1];
        }
        if (colour[u] == 1) return false;  // walked into our own trail: cycle
        for (int w : walk) colour[w] = 2;
    }
    return true;
}

SubtreeStats compute_stats(const RootedProfile& profile) {
    if (!profile.is_spanning_tree()) throw NotATreeError("profile contains a cycle");
    const int n = profile.n;
    SubtreeStats s;
    s.n = n;
    s.indeg.assign(n + 1, 0);
    s.size.assign(n + 1, 1);
    s.depth.assign(n + 1, 0);
    s.parent.assign(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        s.parent[v] = profile.choice[v - 1];
        s.indeg[s.parent[v]]++;
    }
    // Order nodes by depth via repeated parent hops; the tree is shallow so
    // a two-pass approach is simplest: compute depths, then accumulate sizes
    // bottom-up in order of decreasing depth.
    s.height = 0;
    for (int v = 1; v <= n; ++v) {
        int d = 0, u = v;
        while (u != 0) {
            u = s.parent[u];
            ++d;
        }
        s.depth[v] = d;
        s.height = std::max(s.height, d);
    }
    std::vector<int> order(n);
    for (int v = 1; v <= n; ++v) order[v - 1] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.depth[a] > s.depth[b]; });
    for (int v : order) s.size[s.parent[v]] += s.size[v];
    assert(s.size[0] == n + 1);
    return s;
}

std::optional<std::vector<std::pair<int, int>>> path_to_root(const RootedProfile& profile,
                                                             int agent) {
    std::vector<std::pair<int, int>> edges;
    int u = profile.node_of_agent(agent);
    std::vector<char> seen(profile.n + 1, 0);
    while (u != 0) {
        if (seen[u]) return std::nullopt;  // cycle, no path exists
        seen[u] = 1;
        int v = profile.choice[u - 1];
        edges.emplace_back(u, v);
        u = v;
    }
    return edges;
}

namespace {

// AHU-style encoding: '(' + sorted child codes + ')'.
std::string encode_subtree(int node, const std::vector<std::vector<int>>& children) {
    std::vector<std::string> codes;
    codes.reserve(children[node].size());
    for (int c : children[node]) codes.push_back(encode_subtree(c, children));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    out += ")";
    return out;
}

}  // namespace

CanonicalCode canonical_code(const RootedProfile& profile) {
    if (!profile.is_spanning_tree()) throw NotATreeError("profile contains a cycle");
    std::vector<std::vector<int>> children(profile.n + 1);
    for (int v = 1; v <= profile.n; ++v) children[profile.choice[v - 1]].push_back(v);
    return CanonicalCode{encode_subtree(0, children)};
}

RootedProfile profile_from_code(const CanonicalCode& code) {
    const std::string& s = code.code;
    if (s.empty() || s.front() != '(')
        throw ParseError("canonical code must start with '('", 0);
    std::vector<int> parent_of;  // per node in DFS order; node 0 = root
    std::vector<int> stack;
    int next = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++next;
            parent_of.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(next);
        } else if (s[i] == ')') {
            if (stack.empty()) throw ParseError("unbalanced ')'", i);
            stack.pop_back();
        } else {
            throw ParseError("unexpected character in code", i);
        }
    }
    if (!stack.empty()) throw ParseError("unbalanced '('", s.size());
    if (parent_of.empty() || parent_of[0] != -1)
        throw ParseError("code does not describe a rooted tree", 0);
    std::vector<int> choice(parent_of.size() - 1);
    for (std::size_t v = 1; v < parent_of.size(); ++v)
        choice[v - 1] = parent_of[v];
    return RootedProfile(std::move(choice));
}

std::string serialize(const RootedProfile& profile) {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < profile.n; ++i) {
        if (i) out << ",";
        out << profile.choice[i];
    }
    out << "]";
    return out.str();
}

RootedProfile deserialize(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
    ++i;
    std::vector<int> values;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected integer", i);
            values.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ']'", i);
        }
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters", i);
    const int n = static_cast<int>(values.size());
    for (int k = 0; k < n; ++k) {
        if (values[k] < 0 || values[k] > n) throw ParseError("node index out of range", k);
        if (values[k] == k + 1) throw ParseError("agent points at itself", k);
    }
    return RootedProfile(std::move(values));
}

std::string to_dot(const RootedProfile& profile, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  0 [label=\"r\", shape=doublecircle];\n";
    for (int v = 1; v <= profile.n; ++v) out << "  " << v << " [shape=circle];\n";
    for (int v = 1; v <= profile.n; ++v)
        out << "  " << v << " -> " << profile.choice[v - 1] << ";\n";
    out << "}\n";
    return out.str();
}

RootedProfile induced_subgame(const RootedProfile& profile, const SubtreeStats& stats, int node) {
    // Collect the subtree nodes in increasing label order; `node` becomes the
    // new root 0 and the rest keep their relative order.
    const int n = profile.n;
    std::vector<char> in_subtree(n + 1, 0);
    in_subtree[node] = 1;
    // A node is in T(node) iff walking to the root passes through `node`.
    for (int v = 1; v <= n; ++v) {
        if (in_subtree[v]) continue;
        int u = v;
        while (u != 0 && u != node && !in_subtree[u]) u = stats.parent[u];
        if (u == node || (u != 0 && in_subtree[u])) {
            int w = v;
            while (w != u) {
                in_subtree[w] = 1;
                w = stats.parent[w];
            }
        }
    }
    std::vector<int> new_label(n + 1, -1);
    new_label[node] = 0;
    int next = 1;
    for (int v = 0; v <= n; ++v)
        if (in_subtree[v] && v != node) new_label[v] = next++;
    std::vector<int> choice(next - 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (!in_subtree[v] || v == node) continue;
        choice[new_label[v] - 1] = new_label[stats.parent[v]];
    }
    return RootedProfile(std::move(choice));
}

RootedProfile hamiltonian_path_profile(int n) {
    // Agent i's node i+1 points at node i: v_n -> ... -> v_1 -> r.
    std::vector<int> choice(n);
    for (int i = 0; i < n; ++i) choice[i] = i;
    return RootedProfile(std::move(choice));
}

RootedProfile star_profile(int n) {
    return RootedProfile(std::vector<int>(n, 0));
}

}  // namespace tcg
