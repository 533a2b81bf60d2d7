#include <algorithm>
#include <deque>
#include <set>

#include "graphrank/ends.hpp"

namespace graphrank {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// BFS tree from `root` restricted to the union of root-paths of targets.
struct SteinerTree {
    std::vector<std::size_t> parent;
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::size_t> count;  // targets in the subtree
    std::vector<bool> in;
};

SteinerTree steiner(const Truncation& t, const std::vector<bool>& target, std::size_t root) {
    const std::size_t n = t.size();
    SteinerTree s;
    s.parent.assign(n, kNone);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q{root};
    seen[root] = true;
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto u : t.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                s.parent[u] = v;
                q.push_back(u);
            }
    }
    s.in.assign(n, false);
    s.count.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!target[v]) continue;
        for (auto u = v; u != kNone; u = s.parent[u]) {
            ++s.count[u];
            s.in[u] = true;
        }
    }
    s.children.assign(n, {});
    for (std::size_t v = 0; v < n; ++v)
        if (s.in[v] && s.parent[v] != kNone) s.children[s.parent[v]].push_back(v);
    return s;
}

// Walks down from v to the first target vertex.
std::vector<std::size_t> descend(const SteinerTree& s, const std::vector<bool>& target, std::size_t v) {
    std::vector<std::size_t> path{v};
    while (!target[v]) {
        for (auto c : s.children[v])
            if (s.count[c] > 0) {
                v = c;
                break;
            }
        path.push_back(v);
    }
    return path;
}

// Path from v through its parent side to a target outside v's subtree.
std::vector<std::size_t> ascend(const SteinerTree& s, const std::vector<bool>& target, std::size_t v) {
    std::vector<std::size_t> path{v};
    std::size_t from = v;
    for (auto a = s.parent[v]; a != kNone; from = a, a = s.parent[a]) {
        path.push_back(a);
        if (target[a]) return path;
        for (auto c : s.children[a])
            if (c != from && s.count[c] > 0) {
                auto rest = descend(s, target, c);
                path.insert(path.end(), rest.begin(), rest.end());
                return path;
            }
    }
    return path;
}

}  // namespace

StarCombResult star_comb_search(const Truncation& t, const std::vector<bool>& target, std::size_t budget) {
    if (!is_connected(t)) throw GraphError("star_comb_search needs a connected truncation");
    std::size_t root = kNone, total = 0;
    for (std::size_t v = 0; v < t.size(); ++v)
        if (target[v]) {
            if (root == kNone) root = v;
            ++total;
        }
    if (total < budget || root == kNone) return Exhausted{total};
    auto s = steiner(t, target, root);

    for (std::size_t v = 0; v < t.size(); ++v) {
        if (!s.in[v]) continue;
        std::vector<std::vector<std::size_t>> paths;
        if (total > s.count[v]) paths.push_back(ascend(s, target, v));
        for (auto c : s.children[v]) {
            if (paths.size() >= budget) break;
            auto down = descend(s, target, c);
            down.insert(down.begin(), v);
            paths.push_back(std::move(down));
        }
        if (paths.size() >= budget) {
            paths.resize(budget);
            return StarWitness{v, std::move(paths)};
        }
    }

    CombWitness comb;
    for (auto v = root;;) {
        comb.spine.push_back(v);
        std::size_t heavy = kNone;
        for (auto c : s.children[v])
            if (s.count[c] > 0 && (heavy == kNone || s.count[c] > s.count[heavy])) heavy = c;
        if (target[v]) {
            comb.teeth.push_back({v});
        } else {
            for (auto c : s.children[v])
                if (c != heavy && s.count[c] > 0) {
                    auto down = descend(s, target, c);
                    down.insert(down.begin(), v);
                    comb.teeth.push_back(std::move(down));
                    break;
                }
        }
        if (comb.teeth.size() == budget) return comb;
        if (heavy == kNone) break;
        v = heavy;
    }
    return Exhausted{total};
}

bool check_star_comb(const Truncation& t, const std::vector<bool>& target, const StarCombResult& r) {
    auto is_path = [&](const std::vector<std::size_t>& p) {
        if (p.empty()) return false;
        std::set<std::size_t> seen(p.begin(), p.end());
        if (seen.size() != p.size()) return false;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (!t.has_edge(p[i - 1], p[i])) return false;
        return true;
    };
    if (const auto* star = std::get_if<StarWitness>(&r)) {
        std::set<std::size_t> used{star->center};
        for (const auto& p : star->paths) {
            if (!is_path(p) || p.front() != star->center || p.size() < 2 || !target[p.back()]) return false;
            for (std::size_t i = 1; i < p.size(); ++i)
                if (!used.insert(p[i]).second) return false;
        }
        return true;
    }
    if (const auto* comb = std::get_if<CombWitness>(&r)) {
        if (!is_path(comb->spine)) return false;
        std::set<std::size_t> spine(comb->spine.begin(), comb->spine.end()), used;
        for (const auto& tooth : comb->teeth) {
            if (!is_path(tooth) || !spine.count(tooth.front()) || !target[tooth.back()]) return false;
            for (std::size_t i = 0; i < tooth.size(); ++i) {
                if (i > 0 && spine.count(tooth[i])) return false;
                if (!used.insert(tooth[i]).second) return false;
            }
        }
        return true;
    }
    return true;
}

}  // namespace graphrank
