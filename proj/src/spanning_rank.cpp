#include <algorithm>
#include <functional>
#include <set>

#include "graphrank/graph.hpp"
#include "graphrank/spanning.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;

std::optional<std::vector<Address>> finite_members(const Descriptor& X) {
    if (X.kind == DK::Explicit) return X.addresses;
    if (X.kind != DK::Union) return std::nullopt;
    std::vector<Address> out;
    for (const auto& p : X.parts) {
        auto sub = finite_members(p);
        if (!sub) return std::nullopt;
        out.insert(out.end(), sub->begin(), sub->end());
    }
    return out;
}

TreeResult from_rank(const RankResult& r) {
    if (r.kind == RankResult::Kind::NoRank) return TreeResult::none("the graph has no normal rank");
    return TreeResult::unknown("normal rank unknown: " + r.reason);
}

PeelingPtr witness_or_rank(const ExprPtr& e, PeelingPtr witness, TreeResult& failure) {
    if (witness) return witness;
    auto r = normal_rank(e);
    if (!r.ranked()) {
        failure = from_rank(r);
        return nullptr;
    }
    return r.witness;
}

using Recurse = std::function<TreeResult(const ExprPtr&, PeelingPtr, unsigned)>;

// One tree per region family, lifted into e and hung from the tree on X.
TreeResult assemble(const ExprPtr& e, const PeelingTree& w, TreeDescriptor on_x, const Recurse& recurse, const char* name,
                    unsigned depth) {
    auto comps = components_after_deletion(e, w.X);
    if (!comps.ok() || comps.regions.size() != w.children.size()) return TreeResult::unknown("witness regions do not match");
    const auto space = end_space(e);
    const auto near_x = closure_ends(e, space, w.X);
    std::vector<ForestPart> forest{{std::move(on_x), ""}};
    for (std::size_t i = 0; i < comps.regions.size(); ++i) {
        const auto& reg = comps.regions[i];
        if (!end_space(reg.expr).classes.empty() && !near_x.is_empty())
            return TreeResult::unknown("region " + reg.members.to_string() + " shares ends with the peeled set");
        auto sub = recurse(reg.expr, w.children[i].witness, depth + 1);
        if (!sub.ok()) return sub;
        auto lifted = embed_tree(*sub.tree, reg, "k" + std::to_string(depth) + "x" + std::to_string(i));
        if (!lifted) return TreeResult::unknown("cannot lift the tree of region " + reg.members.to_string());
        forest.push_back({std::move(*lifted), ""});
    }
    try {
        auto T = merge_forest(e, forest, 0);
        T.name = name;
        T.rayless = is_rayless(T);
        T.notes.push_back("peeled " + w.X.to_string() + ", one tree per region joined by its least edge");
        return TreeResult::of(std::move(T));
    } catch (const GraphError& err) {
        return TreeResult::unknown(err.what());
    }
}

}  // namespace

std::optional<TreeDescriptor> normal_tree_on(const ExprPtr& e, const Descriptor& X) {
    if (e->kind == K::WithTops && X.kind == DK::All && X.region == RegionPath{"base"}) {
        TreeDescriptor T;
        T.host = e;
        T.name = "base";
        T.roots = {Pattern::parse("root")};
        T.rules = {ParentRule::make("root/{p+}", "root/{p*|init}", {})};
        T.domain = X;
        T.rayless = e->left->card.is_zero() ? Verdict::Yes : Verdict::No;
        T.notes.push_back("the base tree is normal: each top sees one branch");
        return T;
    }
    auto xs = finite_members(X);
    if (!xs || xs->empty()) return std::nullopt;
    auto nst = normal_spanning_tree(e);
    if (!nst.ok()) return std::nullopt;
    std::set<Address> S, given(xs->begin(), xs->end());
    std::optional<Address> root;
    for (const auto& x : *xs) {
        auto chain = nst.tree->ancestors(x);
        if (!chain) return std::nullopt;
        S.insert(chain->begin(), chain->end());
        root = chain->back();
    }
    if (S != given) return std::nullopt;  // the down-closure must be X itself
    TreeDescriptor T;
    T.host = e;
    T.name = "down_closure";
    T.roots = {Pattern::parse(root->to_string())};
    for (const auto& v : S)
        if (v != *root) T.rules.push_back(ParentRule::make(v.to_string(), nst.tree->parent(v)->to_string(), {}));
    T.domain = X;
    T.rayless = Verdict::Yes;
    return T;
}

namespace {

TreeResult efst_at(const ExprPtr& e, PeelingPtr witness, unsigned depth) {
    TreeResult failure;
    auto w = witness_or_rank(e, std::move(witness), failure);
    if (!w) return failure;
    if (w->base) {
        auto r = normal_spanning_tree(e);
        if (r.ok()) {
            r.tree->name = "efst";
            r.tree->notes.push_back("normal spanning trees are end-faithful");
        }
        return r;
    }
    auto on_x = normal_tree_on(e, w->X);
    if (!on_x) return TreeResult::unknown("no normal tree with vertex set " + w->X.to_string());
    return assemble(e, *w, std::move(*on_x), efst_at, "efst", depth);
}

TreeResult rayless_at(const ExprPtr& e, PeelingPtr witness, unsigned depth) {
    auto space = end_space(e);
    if (!space.ok()) return TreeResult::unknown(*space.unsupported);
    for (const auto& c : space.classes) {
        if (c.dominated == Verdict::No) return TreeResult::undominated(c.id);
        if (c.dominated == Verdict::Unknown) return TreeResult::unknown("domination of end " + c.id + " is unknown");
    }
    auto direct = rayless_tree_containing(e, Descriptor::all());
    if (direct.ok()) {
        direct.tree->name = "rayless";
        return direct;
    }
    TreeResult failure;
    auto w = witness_or_rank(e, std::move(witness), failure);
    if (!w) return failure;
    if (w->base) return direct;
    auto on_x = rayless_tree_containing(e, w->X);
    if (!on_x.ok()) return on_x;
    if (on_x.tree->spanning()) return on_x;
    if (!on_x.tree->domain || !(*on_x.tree->domain == w->X)) {
        auto xs = finite_members(w->X);
        if (!xs) return TreeResult::unknown("rayless tree on the peeled set covers more than " + w->X.to_string());
        auto tn = normal_tree_on(e, w->X);
        if (!tn) return TreeResult::unknown("no rayless tree with vertex set " + w->X.to_string());
        on_x.tree = std::move(tn);
    }
    return assemble(e, *w, std::move(*on_x.tree), rayless_at, "rayless", depth);
}

}  // namespace

TreeResult end_faithful_spanning_tree(const ExprPtr& e, PeelingPtr witness) { return efst_at(e, std::move(witness), 0); }

TreeResult rayless_spanning_tree(const ExprPtr& e, PeelingPtr witness) { return rayless_at(e, std::move(witness), 0); }

std::optional<ExprPtr> induced_with(const ExprPtr& e, const Descriptor& X, const RegionDescriptor& C) {
    auto xs = finite_members(X);
    if (!xs) return std::nullopt;
    const auto key = C.representative_key();
    // neighbours of each x inside C, read off two truncations that must agree
    using Edge = std::pair<std::size_t, Address>;
    std::vector<std::vector<Edge>> seen;
    for (auto [d, w] : {std::pair{6u, 3u}, std::pair{8u, 5u}}) {
        auto t = truncate(e, d, w);
        std::vector<Edge> nb;
        for (std::size_t i = 0; i < xs->size(); ++i) {
            auto id = t.id((*xs)[i]);
            if (!id) return std::nullopt;
            for (auto u : t.adj[*id])
                if (auto back = C.from_host(t.vertices[u]); back && back->first == key) nb.emplace_back(i, back->second);
        }
        std::sort(nb.begin(), nb.end());
        seen.push_back(std::move(nb));
    }
    if (seen[0] != seen[1]) return std::nullopt;
    ExprPtr out = C.expr;
    for (std::size_t i = 0; i < xs->size(); ++i) {
        std::vector<Address> nb;
        for (const auto& [j, v] : seen[0])
            if (j == i) nb.push_back(v);
        for (std::size_t j = 0; j < i; ++j)
            if (adjacent(e, (*xs)[i], (*xs)[j])) nb.push_back(Address{{"x" + std::to_string(j)}});
        if (nb.empty()) return std::nullopt;
        out = make_join_vertex(out, "x" + std::to_string(i), Descriptor::explicit_set(nb));
    }
    return out;
}

Ordinal rank_transfer_bound(const ExprPtr& e, const Descriptor& X, const RegionDescriptor& C, const Ideal& I) {
    if (I.contains(e, X) != Verdict::Yes) throw GraphError(X.to_string() + " is not in the ideal " + I.to_string());
    // countable C + X: a normal spanning tree exists, rank 0
    if (I.kind == Ideal::Kind::NormallySpanned && vertices_card(C.expr).is_countable() && descriptor_card(e, X).is_countable())
        return Ordinal(0);
    const auto local = I.kind == Ideal::Kind::NormallySpanned ? Ideal::normally_spanned(C.expr) : I;
    auto r = ideal_rank(C.expr, local);
    if (!r.ranked()) throw GraphError("region " + C.members.to_string() + " has no rank");
    // the witness for C peels Y; Y + X peels G[C + X] with the same children
    return r.rank;
}

}  // namespace graphrank
