#include "graphrank/truncation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "json.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;

struct Piece {
    std::vector<Address> vertices;
    std::vector<std::pair<Address, Address>> edges;
};

class Builder {
public:
    Builder(unsigned d, unsigned w) : d_(d), w_(w) {}

    Piece build(const Expr& e) {
        Piece p;
        switch (e.kind) {
            case K::Finite:
                for (const auto& l : e.labels) add(p, Address{{l}});
                for (const auto& [a, b] : e.edges) p.edges.emplace_back(Address{{a}}, Address{{b}});
                break;
            case K::Ray:
                for (unsigned n = 0; n < d_; ++n) {
                    add(p, spine(n));
                    if (n) p.edges.emplace_back(spine(n - 1), spine(n));
                }
                break;
            case K::Comb:
                for (unsigned n = 0; n < d_; ++n) {
                    add(p, spine(n));
                    if (n) p.edges.emplace_back(spine(n - 1), spine(n));
                    Address prev = spine(n);
                    for (std::uint64_t j = 1; j <= e.tooth; ++j) {
                        auto t = spine(n).child("t" + std::to_string(j));
                        add(p, t);
                        p.edges.emplace_back(prev, t);
                        prev = t;
                    }
                }
                break;
            case K::Star: {
                const Address c{{"c"}};
                add(p, c);
                for (const auto& i : indices(e.card)) {
                    add(p, c.child(i));
                    p.edges.emplace_back(c, c.child(i));
                }
                break;
            }
            case K::Tree: tree(p, e.card); break;
            case K::Complete: {
                std::uint64_t n = e.card.is_finite() ? e.card.count() : std::max(d_, w_);
                for (std::uint64_t i = 0; i < n; ++i) {
                    add(p, Address{{"k" + std::to_string(i)}});
                    for (std::uint64_t j = 0; j < i; ++j)
                        p.edges.emplace_back(Address{{"k" + std::to_string(j)}}, Address{{"k" + std::to_string(i)}});
                }
                break;
            }
            case K::WithTops: tops(p, e); break;
            case K::Union:
                append(p, build(*e.left), Address{{"left"}});
                append(p, build(*e.right), Address{{"right"}});
                break;
            case K::JoinVertex: {
                p = build(*e.left);
                const Address label{{e.label}};
                std::vector<Address> attached;
                for (const auto& v : p.vertices)
                    if (in_descriptor(e.left, e.attach, v)) attached.push_back(v);
                add(p, label);
                for (const auto& v : attached) p.edges.emplace_back(label, v);
                break;
            }
            case K::AddEdge: {
                p = build(*e.left);
                for (const auto& end : {e.a, e.b}) {
                    if (std::find(p.vertices.begin(), p.vertices.end(), end) != p.vertices.end()) continue;
                    for (const auto& v : p.vertices)
                        if (adjacent(*e.left, end, v)) p.edges.emplace_back(end, v);
                    add(p, end);
                }
                p.edges.emplace_back(e.a, e.b);
                break;
            }
            case K::Hang: {
                const Address h{{"h"}};
                add(p, h);
                for (std::size_t j = 0; j < e.copies.size(); ++j) {
                    const auto& [copy, k] = e.copies[j];
                    const auto anchor_at = anchor(*copy);
                    for (const auto& i : indices(k)) {
                        const Address pre{{"h", std::to_string(j), i}};
                        append(p, build(*copy), pre);
                        p.edges.emplace_back(h, anchor_at.prefixed(pre));
                    }
                }
                break;
            }
        }
        return p;
    }

private:
    static Address spine(std::uint64_t n) { return Address{{"r" + std::to_string(n)}}; }

    std::vector<std::string> indices(Cardinality k) const {
        std::vector<std::string> out;
        if (k.is_finite()) {
            for (std::uint64_t i = 0; i < k.count(); ++i) out.push_back(std::to_string(i));
        } else if (k.is_countable()) {
            for (unsigned i = 0; i < w_; ++i) out.push_back(std::to_string(i));
        } else {
            for (unsigned i = 1; i <= w_; ++i) out.push_back("b" + std::to_string(i));
        }
        return out;
    }

    void tree(Piece& p, Cardinality k) {
        const auto idx = indices(k);
        std::vector<Address> layer{Address{{"root"}}};
        add(p, layer.front());
        for (unsigned depth = 1; depth <= d_; ++depth) {
            std::vector<Address> next;
            for (const auto& v : layer)
                for (const auto& i : idx) {
                    auto c = v.child(i);
                    add(p, c);
                    p.edges.emplace_back(v, c);
                    next.push_back(std::move(c));
                }
            layer = std::move(next);
        }
    }

    void tops(Piece& p, const Expr& e) {
        p = build(*e.left);
        std::set<Address> heads;
        for (const auto& v : p.vertices)
            if (v.size() == d_ + 1) heads.insert(branch_head(v));
        const auto nodes = p.vertices;
        for (const auto& h : heads) {
            const auto top = h.prefixed(Address{{"top"}});
            add(p, top);
            for (const auto& v : nodes) {
                if (!on_branch(h, v)) continue;
                if (e.mode == TopsMode::EveryOther && (v.size() - 1) % 2 != 0) continue;
                p.edges.emplace_back(top, v);
            }
        }
    }

    void add(Piece& p, Address a) {
        if (++count_ > kMaxTruncationVertices)
            throw GraphError("truncation exceeds " + std::to_string(kMaxTruncationVertices) + " vertices");
        p.vertices.push_back(std::move(a));
    }

    static void append(Piece& into, Piece from, const Address& prefix) {
        for (auto& v : from.vertices) into.vertices.push_back(v.prefixed(prefix));
        for (auto& [a, b] : from.edges) into.edges.emplace_back(a.prefixed(prefix), b.prefixed(prefix));
    }

    unsigned d_, w_;
    std::size_t count_ = 0;
};

bool reaches_outside(const Truncation& t, std::size_t v) {
    const auto nd = adjacency(t.expr, t.vertices[v]);
    for (const auto& a : nd.vertices)
        if (!t.id(a)) return true;
    for (const auto& f : nd.families) {
        auto c = descriptor_card(t.expr, f);
        if (!c.is_finite()) return true;
        // a finite family is fully present unless some member lies outside
        std::uint64_t present = 0;
        for (auto u : t.adj[v])
            if (in_descriptor(t.expr, f, t.vertices[u])) ++present;
        if (present < c.count()) return true;
    }
    return false;
}

}  // namespace

std::size_t Truncation::edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adj) n += a.size();
    return n / 2;
}

std::optional<std::size_t> Truncation::id(const Address& a) const {
    auto it = index.find(a);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

bool Truncation::has_edge(std::size_t u, std::size_t v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> Truncation::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (auto v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Truncation truncate(const ExprPtr& e, unsigned depth, unsigned width) {
    if (depth < 1 || width < 1) throw GraphError("truncation needs d, w >= 1");
    Builder b(depth, width);
    auto piece = b.build(*e);

    Truncation t;
    t.expr = e;
    t.depth = depth;
    t.width = width;
    t.vertices = std::move(piece.vertices);
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
    for (std::size_t i = 0; i < t.vertices.size(); ++i) t.index.emplace(t.vertices[i], i);
    t.adj.assign(t.vertices.size(), {});
    for (const auto& [a, b2] : piece.edges) {
        auto u = t.id(a), v = t.id(b2);
        if (!u || !v || *u == *v) throw GraphError("internal: truncation edge outside vertex set");
        t.adj[*u].push_back(*v);
        t.adj[*v].push_back(*u);
    }
    for (auto& a : t.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    t.frontier.assign(t.size(), false);
    for (std::size_t v = 0; v < t.size(); ++v) t.frontier[v] = reaches_outside(t, v);
    return t;
}

std::vector<std::size_t> members(const Truncation& t, const Descriptor& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (in_descriptor(t.expr, d, t.vertices[i])) out.push_back(i);
    return out;
}

std::vector<std::vector<std::size_t>> components(const Truncation& t, const std::vector<bool>& removed) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(t.size(), false);
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (seen[s] || (!removed.empty() && removed[s])) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto v : t.adj[comp[i]])
                if (!seen[v] && (removed.empty() || !removed[v])) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Truncation& t) { return components(t, {}).size() <= 1; }

std::vector<std::size_t> bfs_distances(const Truncation& t, const std::vector<std::size_t>& sources) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(t.size(), inf);
    std::deque<std::size_t> q;
    for (auto s : sources) {
        dist[s] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto v : t.adj[u])
            if (dist[v] == inf) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

std::string to_dot(const Truncation& t, const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges) {
    std::set<std::pair<std::size_t, std::size_t>> tree;
    for (auto [u, v] : tree_edges) tree.emplace(std::min(u, v), std::max(u, v));
    std::string out = "graph truncation {\n  // " + render(*t.expr) + " at d=" + std::to_string(t.depth) +
                      ", w=" + std::to_string(t.width) + "\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + t.vertices[i].to_string() + "\"" +
               (t.frontier[i] ? ", style=dashed" : "") + "];\n";
    for (auto [u, v] : t.edges()) {
        out += "  n" + std::to_string(u) + " -- n" + std::to_string(v);
        if (tree.count({u, v})) out += " [penwidth=3, color=\"#c0392b\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const Truncation& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["graph"] = render(*t.expr);
    j["d"] = t.depth;
    j["w"] = t.width;
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i)
        vs.push_back({{"id", i}, {"address", t.vertices[i].to_string()}, {"frontier", static_cast<bool>(t.frontier[i])}});
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : t.edges()) es.push_back({u, v});
    return j.dump(2);
}

}  // namespace graphrank
