#include <algorithm>
#include <functional>
#include <map>

#include "graphrank/ends.hpp"
#include "graphrank/graph.hpp"
#include "graphrank/parser.hpp"
#include "graphrank/rank.hpp"
#include "graphrank/truncation.hpp"

namespace graphrank {

namespace {

// Regions of e - X line up with the witness children; throws otherwise.
std::vector<RegionDescriptor> matching_regions(const ExprPtr& e, const PeelingTree& w) {
    auto comps = components_after_deletion(e, w.X);
    if (!comps.ok()) throw GraphError("witness peels " + w.X.to_string() + " from " + render(e) + ": " + *comps.unsupported);
    if (comps.regions.size() != w.children.size())
        throw GraphError("witness lists " + std::to_string(w.children.size()) + " regions, the graph has " +
                         std::to_string(comps.regions.size()));
    for (std::size_t i = 0; i < w.children.size(); ++i) {
        const auto& c = w.children[i];
        if (!c.witness) throw GraphError("region " + c.members + " has no witness");
        if (render(comps.regions[i].expr) != render(c.expr) || comps.regions[i].count != c.count)
            throw GraphError("region " + std::to_string(i) + " of the witness does not match " + comps.regions[i].members.to_string());
    }
    return comps.regions;
}

void check_structure(const ExprPtr& e, const PeelingTree& w) {
    if (w.base) return;
    matching_regions(e, w);
    for (const auto& c : w.children) check_structure(c.expr, *c.witness);
}

void build_nodes(const PeelingTree& w, const std::string& members, std::optional<std::size_t> parent, const std::string& id,
                 Cardinality count, std::vector<DecompositionNode>& out) {
    std::string local;
    if (w.base) local = members.empty() ? "all(.)" : "all of " + members;
    else local = members.empty() ? w.X.to_string() : w.X.to_string() + " in " + members;
    const auto self = out.size();
    out.push_back(DecompositionNode{id, parent, parent ? local + " + part(" + out[*parent].id + ")" : local, count});
    if (w.base) return;
    for (std::size_t i = 0; i < w.children.size(); ++i) {
        const auto& c = w.children[i];
        build_nodes(*c.witness, c.members, self, id + "." + std::to_string(i), count * c.count, out);
    }
}

ExprPtr tree_expr(const PeelingTree& w) {
    if (w.base) return make_finite({"t"}, {});
    std::vector<std::pair<ExprPtr, Cardinality>> copies;
    for (const auto& c : w.children) copies.emplace_back(tree_expr(*c.witness), c.count);
    return make_hang(std::move(copies));
}

// Concrete parts of the decomposition restricted to one truncation.
struct Instance {
    std::vector<std::vector<bool>> parts;
    std::vector<std::optional<std::size_t>> parent;
};

void instantiate(const Truncation& t, const ExprPtr& E, const PeelingTree& w, const std::vector<std::optional<Address>>& local,
                 const std::vector<bool>& widen, std::optional<std::size_t> parent, bool widened, Instance& out) {
    std::vector<bool> part = widened ? widen : std::vector<bool>(t.size(), false);
    for (std::size_t v = 0; v < t.size(); ++v)
        if (local[v] && (w.base || in_descriptor(E, w.X, *local[v]))) part[v] = true;
    const auto self = out.parts.size();
    out.parts.push_back(part);
    out.parent.push_back(parent);
    if (w.base) return;
    const auto regions = matching_regions(E, w);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        std::map<Address, std::vector<std::optional<Address>>> members;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (!local[v]) continue;
            auto back = regions[i].from_host(*local[v]);
            if (!back) continue;
            auto& m = members[back->first];
            if (m.empty()) m.assign(t.size(), std::nullopt);
            m[v] = back->second;
        }
        for (const auto& [key, sub] : members)
            instantiate(t, w.children[i].expr, *w.children[i].witness, sub, out.parts[self], self, widened, out);
    }
}

}  // namespace

TreeDecomposition rank_to_decomposition(const ExprPtr& e, const PeelingPtr& w) {
    if (!w) throw GraphError("missing witness");
    check_structure(e, *w);
    TreeDecomposition td;
    td.host = e;
    td.witness = w;
    build_nodes(*w, "", std::nullopt, "t", Cardinality::finite(1), td.nodes);
    return td;
}

ExprPtr decomposition_tree_expr(const TreeDecomposition& td) { return tree_expr(*td.witness); }

DecompositionRank decomposition_to_rank(const ExprPtr& e, const TreeDecomposition& td, const Ideal& I) {
    if (auto err = check_witness(e, I, *td.witness)) throw GraphError("invalid decomposition: " + *err);
    auto tree = decomposition_tree_expr(td);
    auto space = end_space(tree);
    if (!space.ok() || !space.classes.empty()) throw GraphError("decomposition tree has a ray");
    auto r = schmidt_rank(tree);
    if (!r.ranked()) throw GraphError("decomposition tree has no finite-set rank: " + r.reason);
    return {r.rank, td.witness};
}

DecompositionCheck verify_decomposition(const ExprPtr& e, const TreeDecomposition& td, unsigned max_d, unsigned max_w) {
    auto fail = [](std::string axiom, std::string why) { return DecompositionCheck{false, std::move(axiom), std::move(why)}; };
    try {
        check_structure(e, *td.witness);
    } catch (const GraphError& err) {
        return fail("witness", err.what());
    }
    auto space = end_space(decomposition_tree_expr(td));
    if (!space.ok() || !space.classes.empty()) return fail("rayless", "decomposition tree has a ray");

    for (unsigned d = 1; d <= max_d; ++d)
        for (unsigned w = 1; w <= max_w; ++w) {
            auto t = truncate(e, d, w);
            if (t.size() > 4000) continue;
            std::vector<std::optional<Address>> local(t.vertices.begin(), t.vertices.end());
            Instance inst;
            instantiate(t, e, *td.witness, local, std::vector<bool>(t.size(), false), std::nullopt, td.widened, inst);
            const auto at = "d=" + std::to_string(d) + " w=" + std::to_string(w) + ": ";
            const auto n = inst.parts.size();
            for (std::size_t v = 0; v < t.size(); ++v) {
                bool covered = false;
                std::size_t tops = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!inst.parts[k][v]) continue;
                    covered = true;
                    if (!inst.parent[k] || !inst.parts[*inst.parent[k]][v]) ++tops;
                }
                if (!covered) return fail("T1", at + t.vertices[v].to_string() + " lies in no part");
                if (tops != 1) return fail("T3", at + "the parts holding " + t.vertices[v].to_string() + " are not connected");
            }
            for (std::size_t u = 0; u < t.size(); ++u)
                for (auto v : t.adj[u]) {
                    if (v < u) continue;
                    bool inside = std::any_of(inst.parts.begin(), inst.parts.end(),
                                              [&](const std::vector<bool>& p) { return p[u] && p[v]; });
                    if (!inside)
                        return fail("T2", at + "edge " + t.vertices[u].to_string() + " - " + t.vertices[v].to_string() +
                                              " lies in no part");
                }
        }
    return {};
}

nlohmann::ordered_json peeling_to_json(const PeelingTree& w) {
    nlohmann::ordered_json j;
    j["kind"] = w.base ? "base" : "peel";
    j["ordinal"] = w.ordinal.to_string();
    if (w.base) return j;
    j["X"] = w.X.to_string();
    auto& cs = j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : w.children) {
        nlohmann::ordered_json x;
        x["members"] = c.members;
        x["count"] = c.count.to_string();
        x["expr"] = render(c.expr);
        x["witness"] = peeling_to_json(*c.witness);
        cs.push_back(std::move(x));
    }
    return j;
}

PeelingPtr peeling_from_json(const nlohmann::json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        PeelingPtr w;
        if (kind == "base") {
            w = PeelingTree::make_base();
        } else if (kind == "peel") {
            std::vector<PeelChild> children;
            for (const auto& c : j.at("children"))
                children.push_back(PeelChild{c.at("members").get<std::string>(), parse_cardinality(c.at("count").get<std::string>()),
                                             parse_graph(c.at("expr").get<std::string>()), peeling_from_json(c.at("witness"))});
            w = PeelingTree::make_peel(parse_descriptor(j.at("X").get<std::string>()), std::move(children));
        } else {
            throw GraphError("unknown witness kind " + kind);
        }
        if (w->ordinal.to_string() != j.at("ordinal").get<std::string>())
            throw GraphError("witness ordinal " + j.at("ordinal").get<std::string>() + " does not match its children");
        return w;
    } catch (const nlohmann::json::exception& err) {
        throw GraphError(std::string("malformed witness: ") + err.what());
    }
}

nlohmann::ordered_json certificate_to_json(const NoRankCertificate& c) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(c.kind);
    j["region"] = c.region;
    j["core"] = c.core;
    j["evidence"] = c.evidence;
    return j;
}

nlohmann::ordered_json rank_to_json(const RankResult& r) {
    nlohmann::ordered_json j;
    j["status"] = to_string(r.kind);
    if (r.ranked()) {
        j["rank"] = r.rank.to_string();
        j["witness"] = peeling_to_json(*r.witness);
    } else if (r.certificate) {
        j["certificate"] = certificate_to_json(*r.certificate);
    } else {
        j["reason"] = r.reason;
    }
    return j;
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["artifact"] = "tdecomp";
    j["graph"] = render(td.host);
    j["widened"] = td.widened;
    j["witness"] = peeling_to_json(*td.witness);
    auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : td.nodes) {
        nlohmann::ordered_json x;
        x["id"] = n.id;
        x["parent"] = n.parent ? nlohmann::ordered_json(td.nodes[*n.parent].id) : nlohmann::ordered_json(nullptr);
        x["count"] = n.count.to_string();
        x["part"] = n.part;
        nodes.push_back(std::move(x));
    }
    return j.dump(2) + "\n";
}

TreeDecomposition decomposition_from_json(const std::string& text, const ExprPtr& host) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw GraphError(std::string("malformed decomposition: ") + err.what());
    }
    if (!j.is_object() || j.value("schema", 0) != 1 || j.value("artifact", "") != "tdecomp" || !j.contains("witness") ||
        !j.contains("graph"))
        throw GraphError("not a schema 1 tdecomp artifact");
    if (render(parse_graph(j["graph"].get<std::string>())) != render(host))
        throw std::invalid_argument("decomposition belongs to " + j["graph"].get<std::string>());
    auto td = rank_to_decomposition(host, peeling_from_json(j["witness"]));
    td.widened = j.value("widened", true);
    return td;
}

}  // namespace graphrank
