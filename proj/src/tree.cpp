#include "graphrank/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphrank/parser.hpp"
#include "json.hpp"

namespace graphrank {

bool TreeDescriptor::covers(const Address& v) const {
    return contains(host, v) && (!domain || in_descriptor(host, *domain, v));
}

bool TreeDescriptor::is_root(const Address& v) const {
    return std::any_of(roots.begin(), roots.end(), [&](const Pattern& p) { return p.match(v).has_value(); });
}

std::vector<std::size_t> TreeDescriptor::matching_rules(const Address& v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (rules[i].applies(v)) out.push_back(i);
    return out;
}

std::optional<Address> TreeDescriptor::parent(const Address& v) const {
    if (is_root(v)) return std::nullopt;
    auto m = matching_rules(v);
    if (m.size() != 1) return std::nullopt;
    return rules[m[0]].parent.instantiate(*rules[m[0]].applies(v));
}

std::optional<std::vector<Address>> TreeDescriptor::ancestors(const Address& v, std::size_t limit) const {
    std::vector<Address> chain{v};
    std::set<Address> seen{v};
    while (!is_root(chain.back())) {
        auto p = parent(chain.back());
        if (!p || !seen.insert(*p).second || chain.size() > limit) return std::nullopt;
        chain.push_back(std::move(*p));
    }
    return chain;
}

std::optional<std::size_t> TreeDescriptor::depth(const Address& v) const {
    auto a = ancestors(v);
    if (!a) return std::nullopt;
    return a->size() - 1;
}

TreeDescriptor single_vertex_tree(const ExprPtr& host, const Address& v) {
    TreeDescriptor T;
    T.host = host;
    T.name = "single";
    T.roots.push_back(Pattern::parse(v.to_string()));
    T.domain = Descriptor::explicit_set({v});
    T.rayless = Verdict::Yes;
    return T;
}

namespace {

void fail(TreeCheck& c, bool TreeCheck::*flag, std::string msg) {
    c.*flag = false;
    if (c.failures.size() < 8) c.failures.push_back(std::move(msg));
}

// Walks the parent chain of v and records the first violation.
std::optional<std::vector<Address>> walk(const TreeDescriptor& T, const Address& v, TreeCheck& c) {
    std::vector<Address> chain{v};
    std::set<Address> seen{v};
    while (!T.is_root(chain.back())) {
        const auto& a = chain.back();
        auto m = T.matching_rules(a);
        if (m.empty()) {
            fail(c, &TreeCheck::spanning, "no parent rule for " + a.to_string());
            return std::nullopt;
        }
        if (m.size() > 1) {
            fail(c, &TreeCheck::spanning, "rules " + std::to_string(m[0]) + " and " + std::to_string(m[1]) + " both match " + a.to_string());
            return std::nullopt;
        }
        auto p = T.rules[m[0]].parent.instantiate(*T.rules[m[0]].applies(a));
        if (!p || !T.covers(*p)) {
            fail(c, &TreeCheck::edges, "parent of " + a.to_string() + " is not a tree vertex");
            return std::nullopt;
        }
        if (!adjacent(T.host, a, *p)) {
            fail(c, &TreeCheck::edges, "parent edge " + a.to_string() + " - " + p->to_string() + " is not a host edge");
            return std::nullopt;
        }
        if (!seen.insert(*p).second || chain.size() > 4096) {
            fail(c, &TreeCheck::acyclic, "parent chain of " + v.to_string() + " revisits " + p->to_string());
            return std::nullopt;
        }
        chain.push_back(std::move(*p));
    }
    return chain;
}

}  // namespace

TreeCheck check_tree(const TreeDescriptor& T, const Truncation& t) {
    TreeCheck c;
    std::map<Address, std::set<Address>> anc;
    std::optional<Address> the_root;
    const bool single_root = T.roots.size() == 1;
    for (const auto& v : t.vertices) {
        if (!T.covers(v)) continue;
        auto chain = walk(T, v, c);
        if (!chain) continue;
        if (single_root) {
            if (!the_root) the_root = chain->back();
            if (*the_root != chain->back())
                fail(c, &TreeCheck::connected, v.to_string() + " reaches root " + chain->back().to_string() + ", not " + the_root->to_string());
        }
        anc[v] = std::set<Address>(chain->begin(), chain->end());
    }
    for (std::size_t u = 0; u < t.size(); ++u) {
        auto iu = anc.find(t.vertices[u]);
        if (iu == anc.end()) continue;
        for (auto v : t.adj[u]) {
            if (v < u) continue;
            auto iv = anc.find(t.vertices[v]);
            if (iv == anc.end()) continue;
            if (!iu->second.count(t.vertices[v]) && !iv->second.count(t.vertices[u]))
                fail(c, &TreeCheck::normal, "edge " + t.vertices[u].to_string() + " - " + t.vertices[v].to_string() + " joins incomparable vertices");
        }
    }
    return c;
}

TreeCheck check_tree(const TreeDescriptor& T, unsigned d, unsigned w) { return check_tree(T, truncate(T.host, d, w)); }

std::vector<std::pair<std::size_t, std::size_t>> tree_edges(const TreeDescriptor& T, const Truncation& t) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < t.size(); ++v) {
        if (!T.covers(t.vertices[v])) continue;
        auto p = T.parent(t.vertices[v]);
        if (!p) continue;
        if (auto pi = t.id(*p)) out.emplace_back(v, *pi);
    }
    return out;
}

namespace {

std::size_t max_depth(const TreeDescriptor& T, unsigned d) {
    auto t = truncate(T.host, d, 2);
    std::size_t best = 0;
    for (const auto& v : t.vertices)
        if (T.covers(v))
            if (auto k = T.depth(v)) best = std::max(best, *k);
    return best;
}

}  // namespace

Verdict is_rayless(const TreeDescriptor& T) {
    try {
        return max_depth(T, 6) == max_depth(T, 10) ? Verdict::Yes : Verdict::No;
    } catch (const std::exception&) {
        return Verdict::Unknown;
    }
}

std::string to_string(Reflects r) {
    switch (r) {
        case Reflects::Pass: return "pass";
        case Reflects::Fail: return "fail";
        case Reflects::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::size_t meet(const std::vector<Address>& a, const std::vector<Address>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
    return k;
}

// Union-find over the truncation restricted to a vertex subset.
struct Dsu {
    std::vector<std::size_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(std::size_t a, std::size_t b) { p[find(a)] = find(b); }
};

}  // namespace

ReflectsResult reflects_check(const ExprPtr& e, const TreeDescriptor& T, const EndSubset& psi, unsigned max_d,
                              unsigned max_w) {
    auto space = end_space(e);
    if (!space.ok() || psi.entries.size() != space.classes.size()) return {Reflects::Unknown, "end space unavailable"};
    if (psi.is_empty()) {
        auto r = is_rayless(T);
        if (r == Verdict::Yes) return {Reflects::Pass, ""};
        return {r == Verdict::No ? Reflects::Fail : Reflects::Unknown, "no ends to reflect but the tree has rays"};
    }

    // symbolic: root paths to a host ray converge iff the tree has a ray in its end
    bool unknown = false;
    for (std::size_t i = 0; i < space.classes.size(); ++i) {
        const auto& cls = space.classes[i];
        const auto part = psi.entries[i].part;
        if (part == EndSubset::Part::Unknown || part == EndSubset::Part::Some) {
            unknown = unknown || part == EndSubset::Part::Unknown;
            continue;
        }
        std::vector<std::size_t> meets;
        bool covered = true;
        for (std::uint64_t n : {4u, 8u, 16u, 32u}) {
            auto a = T.ancestors(cls.ray.vertex(n)), b = T.ancestors(cls.ray.vertex(2 * n));
            if (!a || !b) {
                covered = false;
                break;
            }
            meets.push_back(meet(*a, *b));
        }
        if (!covered) {
            if (part == EndSubset::Part::All) unknown = true;
            continue;
        }
        const bool converges = std::is_sorted(meets.begin(), meets.end(), std::less_equal<>()) &&
                               std::adjacent_find(meets.begin(), meets.end()) == meets.end();
        if (part == EndSubset::Part::All && !converges)
            return {Reflects::Fail, "root paths to " + cls.ray.to_string() + " stop converging (end " + cls.id + ")"};
        if (part == EndSubset::Part::None && converges && T.spanning())
            return {Reflects::Fail, "tree has a ray in end " + cls.id + " outside the reflected set"};
    }

    // truncation evidence
    for (unsigned d = 2; d <= max_d; ++d)
        for (unsigned w = 1; w <= max_w; ++w) {
            auto t = truncate(e, d, w);
            if (t.size() > 6000) continue;
            std::vector<std::optional<std::size_t>> depth(t.size());
            std::vector<std::size_t> tree_vertices;
            std::size_t D = 0;
            for (std::size_t v = 0; v < t.size(); ++v) {
                if (!T.covers(t.vertices[v])) continue;
                depth[v] = T.depth(t.vertices[v]);
                if (!depth[v]) continue;
                tree_vertices.push_back(v);
                D = std::max(D, *depth[v]);
            }
            if (D < 2) continue;
            // deep: the tree continues below v outside this truncation
            std::vector<bool> open(t.size(), false);
            if (t.size() > 400) continue;
            const auto wider = truncate(e, d + 2, w + 1);
            for (const auto& u : wider.vertices) {
                    if (t.id(u) || !T.covers(u)) continue;
                    const auto chain = T.ancestors(u);
                    if (!chain) continue;
                    for (std::size_t k = 1; k < chain->size(); ++k)
                        if (auto pi = t.id((*chain)[k])) {
                            open[*pi] = true;
                            break;
                        }
                }
            auto deep = [&](std::size_t v) { return depth[v] && open[v]; };
            for (std::size_t m = 1; m <= 3 && m <= tree_vertices.size(); ++m) {
                std::vector<bool> removed(t.size(), false);
                std::set<Address> cut;
                for (std::size_t k = 0; k < m; ++k) {
                    const auto chain = T.ancestors(t.vertices[tree_vertices[k]]);
                    for (const auto& a : *chain) {
                        cut.insert(a);
                        if (auto id = t.id(a)) removed[*id] = true;
                    }
                }
                for (const auto& comp : components(t, removed)) {
                    if (std::none_of(comp.begin(), comp.end(), deep)) continue;
                    Dsu dsu(t.size());
                    std::set<std::size_t> in(comp.begin(), comp.end());
                    for (auto v : comp) {
                        if (!depth[v]) continue;
                        // the tree path may leave the truncation; it stays in G - X until it meets X
                        const auto chain = T.ancestors(t.vertices[v]);
                        for (std::size_t k = 1; k < chain->size(); ++k) {
                            const auto& a = (*chain)[k];
                            if (cut.count(a)) break;
                            auto pi = t.id(a);
                            if (pi && in.count(*pi)) {
                                dsu.unite(v, *pi);
                                break;
                            }
                        }
                    }
                    std::set<std::size_t> deep_parts;
                    for (auto v : comp)
                        if (deep(v)) deep_parts.insert(dsu.find(v));
                    const bool bad = T.spanning() ? deep_parts.size() != 1 : deep_parts.size() > 1;
                    if (bad)
                        return {Reflects::Fail, "d=" + std::to_string(d) + " w=" + std::to_string(w) + ": a component of the host minus " +
                                                    std::to_string(m) + " tree chains holds " + std::to_string(deep_parts.size()) +
                                                    " deep tree parts"};
                }
            }
        }
    if (unknown) return {Reflects::Unknown, "some end classes could not be checked symbolically"};
    return {Reflects::Pass, ""};
}

std::string tree_to_json(const TreeDescriptor& T) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["artifact"] = "tree";
    j["graph"] = render(T.host);
    j["name"] = T.name;
    auto& roots = j["roots"] = nlohmann::ordered_json::array();
    for (const auto& r : T.roots) roots.push_back(r.to_string());
    auto& rules = j["rules"] = nlohmann::ordered_json::array();
    for (const auto& r : T.rules) {
        nlohmann::ordered_json x;
        x["match"] = r.match.to_string();
        auto& when = x["when"] = nlohmann::ordered_json::array();
        for (const auto& c : r.when) when.push_back(c.to_string());
        x["parent"] = r.parent.to_string();
        rules.push_back(std::move(x));
    }
    j["domain"] = T.domain ? nlohmann::ordered_json(T.domain->to_string()) : nlohmann::ordered_json(nullptr);
    j["rayless"] = to_string(T.rayless);
    j["notes"] = T.notes;
    return j.dump(2) + "\n";
}

TreeDescriptor tree_from_json(const std::string& text, const ExprPtr& host) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw GraphError(std::string("malformed tree artifact: ") + err.what());
    }
    try {
        if (j.at("schema").get<int>() != 1 || j.at("artifact").get<std::string>() != "tree")
            throw GraphError("not a schema 1 tree artifact");
        if (j.at("graph").get<std::string>() != render(host))
            throw std::invalid_argument("artifact is for graph " + j.at("graph").get<std::string>());
        TreeDescriptor T;
        T.host = host;
        T.name = j.at("name").get<std::string>();
        for (const auto& r : j.at("roots")) T.roots.push_back(Pattern::parse(r.get<std::string>()));
        for (const auto& r : j.at("rules"))
            T.rules.push_back(ParentRule::make(r.at("match").get<std::string>(), r.at("parent").get<std::string>(),
                                               r.at("when").get<std::vector<std::string>>()));
        if (!j.at("domain").is_null()) T.domain = parse_descriptor(j.at("domain").get<std::string>());
        const auto rl = j.at("rayless").get<std::string>();
        T.rayless = rl == "yes" ? Verdict::Yes : rl == "no" ? Verdict::No : Verdict::Unknown;
        if (j.contains("notes")) T.notes = j.at("notes").get<std::vector<std::string>>();
        return T;
    } catch (const nlohmann::json::exception& err) {
        throw GraphError(std::string("malformed tree artifact: ") + err.what());
    }
}

}  // namespace graphrank
