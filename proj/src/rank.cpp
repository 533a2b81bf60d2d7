#include "graphrank/rank.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphrank/ends.hpp"
#include "graphrank/graph.hpp"
#include "graphrank/spanning.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;

bool is_empty_set(const Descriptor& X) {
    if (X.kind == DK::Explicit) return X.addresses.empty();
    if (X.kind == DK::Union)
        return std::all_of(X.parts.begin(), X.parts.end(), [](const Descriptor& p) { return is_empty_set(p); });
    return false;
}

bool is_whole(const Descriptor& X) { return X.kind == DK::All && X.region.empty(); }

Verdict all_yes(std::vector<Verdict> vs) {
    if (std::all_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::Yes; })) return Verdict::Yes;
    return Verdict::Unknown;
}

}  // namespace

Ideal Ideal::finite_sets() { return Ideal{Kind::FiniteSets, Cardinality::aleph0(), nullptr}; }
Ideal Ideal::sets_below(Cardinality k) { return Ideal{Kind::SetsBelow, k, nullptr}; }
Ideal Ideal::normally_spanned(ExprPtr host) { return Ideal{Kind::NormallySpanned, Cardinality::aleph0(), std::move(host)}; }

std::string Ideal::to_string() const {
    switch (kind) {
        case Kind::FiniteSets: return "finite_sets";
        case Kind::SetsBelow: return "sets_below(" + kappa.to_string() + ")";
        case Kind::NormallySpanned: return "normally_spanned";
    }
    return "?";
}

Verdict Ideal::contains(const ExprPtr& e, const Descriptor& X) const {
    if (is_empty_set(X)) return Verdict::Yes;
    // closure under finite unions and subsets
    if (X.kind == DK::Union) {
        std::vector<Verdict> vs;
        for (const auto& p : X.parts) vs.push_back(contains(e, p));
        if (all_yes(vs) == Verdict::Yes) return Verdict::Yes;
    }
    if (X.kind == DK::Minus && contains(e, X.parts.at(0)) == Verdict::Yes) return Verdict::Yes;

    const auto size = descriptor_card(e, X);
    switch (kind) {
        case Kind::FiniteSets:
            if (size.is_finite()) return Verdict::Yes;
            return X.kind == DK::Minus ? Verdict::Unknown : Verdict::No;
        case Kind::SetsBelow:
            if (size < kappa) return Verdict::Yes;
            return X.kind == DK::Minus ? Verdict::Unknown : Verdict::No;
        case Kind::NormallySpanned: break;
    }

    // countable sets of a connected graph are normally spanned
    if (size.is_countable()) return Verdict::Yes;
    const Expr& c = core(*e);
    // a normal tree orders every clique as a chain, and chains are countable
    if (c.kind == K::Complete && !c.card.is_countable() && X.kind != DK::Minus) return Verdict::No;
    const bool in_host = host && same_expr(e, host);
    if (!in_host) return Verdict::Unknown;
    if (e->kind == K::Union) {
        // a normal tree lives in one component, so a set inside one side is decided there
        for (const std::string side : {"left", "right"}) {
            auto other = descriptor_on_side(X, side == "left" ? "right" : "left");
            auto mine = descriptor_on_side(X, side);
            if (!other || !mine || !is_empty_set(*other)) continue;
            const auto& sub = side == "left" ? e->left : e->right;
            return normally_spanned(sub).contains(sub, *mine);
        }
    }
    if (is_whole(X)) {
        auto nst = normal_spanning_tree(e);
        if (nst.ok()) return Verdict::Yes;
        if (nst.status == TreeResult::Status::None) return Verdict::No;
        return Verdict::Unknown;
    }
    if (e->kind == K::WithTops && X.kind == DK::All && X.region == RegionPath{"base"}) {
        // the base tree is normal: every top sees a single branch, a chain
        return Verdict::Yes;
    }
    if (is_dispersed(e, X) == Verdict::Yes) return Verdict::Yes;
    if (normal_spanning_tree(e).ok()) return Verdict::Yes;
    return Verdict::Unknown;
}

PeelingPtr PeelingTree::make_base() { return std::make_shared<PeelingTree>(); }

PeelingPtr PeelingTree::make_peel(Descriptor X, std::vector<PeelChild> children) {
    auto w = std::make_shared<PeelingTree>();
    w->base = false;
    w->X = std::move(X);
    std::vector<Ordinal> above;
    for (const auto& c : children) above.push_back(succ(c.witness->ordinal));
    w->ordinal = sup(above);
    w->children = std::move(children);
    return w;
}

std::string to_string(NoRankCertificate::Kind k) {
    return k == NoRankCertificate::Kind::SelfSimilarCore ? "self_similar_core" : "tree_containment";
}

std::string to_string(RankResult::Kind k) {
    switch (k) {
        case RankResult::Kind::Ranked: return "ranked";
        case RankResult::Kind::NoRank: return "no_rank";
        case RankResult::Kind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<Descriptor> own_candidates(const ExprPtr& e) {
    const Expr& x = *e;
    auto one = [](const char* a) { return Descriptor::explicit_set({Address::parse(a)}); };
    std::vector<Descriptor> out;
    auto lifted = [&](const ExprPtr& sub, const std::string& step, const Address& prefix) {
        std::vector<Descriptor> r;
        for (const auto& d : own_candidates(sub)) r.push_back(lift(d, {step}, prefix));
        return r;
    };
    switch (x.kind) {
        case K::Finite: break;
        case K::Ray:
        case K::Comb:
            out = {one("r0"), Descriptor::spine()};
            break;
        case K::Star: out = {one("c"), Descriptor::leaves()}; break;
        case K::Tree: out = {one("root")}; break;
        case K::WithTops: out = {Descriptor::all({"base"})}; break;
        case K::Complete:
            out = {one("k0")};
            if (!x.card.is_finite()) out.push_back(Descriptor::progression(0, 1));
            break;
        case K::Union: {
            out.push_back(Descriptor::explicit_set({}));
            for (auto& d : lifted(x.left, "left", Address{{"left"}})) out.push_back(d);
            for (auto& d : lifted(x.right, "right", Address{{"right"}})) out.push_back(d);
            break;
        }
        case K::JoinVertex: {
            const auto label = Descriptor::explicit_set({Address{{x.label}}});
            out = {label, Descriptor::all({"base"})};
            for (auto& d : lifted(x.left, "base", Address{})) out.push_back(Descriptor::cup({label, d}));
            break;
        }
        case K::AddEdge: out = lifted(x.left, "base", Address{}); break;
        case K::Hang: out = {one("h")}; break;
    }
    return out;
}

}  // namespace

std::vector<Descriptor> candidate_sets(const ExprPtr& e) {
    auto out = own_candidates(e);
    if (e->kind == K::JoinVertex || e->kind == K::Union) return out;
    // finite unions of two catalog sets
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(Descriptor::cup({out[i], out[j]}));
    return out;
}

namespace {

struct Found {
    RegionPath path;
    ExprPtr expr;
};

template <class Pred>
std::optional<Found> find_sub(const ExprPtr& e, Pred pred, RegionPath path = {}) {
    if (pred(*e)) return Found{path, e};
    auto go = [&](const ExprPtr& sub, const std::string& step) -> std::optional<Found> {
        auto p = path;
        p.push_back(step);
        return find_sub(sub, pred, p);
    };
    switch (e->kind) {
        case K::Union:
            if (auto f = go(e->left, "left")) return f;
            return go(e->right, "right");
        case K::WithTops:
        case K::JoinVertex:
        case K::AddEdge: return go(e->left, "base");
        case K::Hang:
            for (std::size_t j = 0; j < e->copies.size(); ++j)
                if (!e->copies[j].second.is_zero())
                    if (auto f = go(e->copies[j].first, "copy." + std::to_string(j) + ".0")) return f;
            return std::nullopt;
        default: return std::nullopt;
    }
}

}  // namespace

std::optional<NoRankCertificate> no_rank_certificates(const ExprPtr& e, const Ideal& I) {
    // (b) a tree where every node has at least kappa children
    if (I.kind != Ideal::Kind::NormallySpanned) {
        const auto kappa = I.kind == Ideal::Kind::FiniteSets ? Cardinality::aleph0() : I.kappa;
        auto f = find_sub(e, [&](const Expr& x) { return x.kind == K::Tree && x.card >= kappa; });
        if (f) {
            NoRankCertificate c;
            c.kind = NoRankCertificate::Kind::TreeContainment;
            c.region = render_region(f->path);
            c.core = render(f->expr);
            c.evidence.push_back("every node of " + c.core + " has " + f->expr->card.to_string() + " >= " + kappa.to_string() +
                                 " children, so the graph contains a T_kappa subgraph for kappa = " + kappa.to_string());
            return c;
        }
    }

    // (a) an uncountable clique survives every deletion of an ideal member up to a copy
    auto f = find_sub(e, [](const Expr& x) { return x.kind == K::Complete && !x.card.is_countable(); });
    if (!f) return std::nullopt;
    if (I.kind == Ideal::Kind::SetsBelow && I.kappa > f->expr->card) return std::nullopt;
    NoRankCertificate c;
    c.kind = NoRankCertificate::Kind::SelfSimilarCore;
    c.region = render_region(f->path);
    c.core = render(f->expr);
    std::size_t checked = 0;
    for (const auto& X : candidate_sets(e)) {
        if (I.contains(e, X) != Verdict::Yes) continue;
        auto comps = components_after_deletion(e, X);
        if (!comps.ok()) {
            c.evidence.push_back(X.to_string() + ": outside the component catalog, covered by the chain argument");
            continue;
        }
        auto it = std::find_if(comps.regions.begin(), comps.regions.end(),
                               [&](const RegionDescriptor& r) { return render(r.expr) == c.core; });
        if (it == comps.regions.end()) return std::nullopt;
        c.evidence.push_back(X.to_string() + ": leaves the copy " + it->members.to_string());
        ++checked;
    }
    if (checked == 0) return std::nullopt;
    return c;
}

namespace {

class Engine {
public:
    Engine(const Ideal& I, RankOptions opt) : I_(I), opt_(opt) {}

    std::optional<std::pair<ExprPtr, std::pair<RegionPath, Address>>> top_embedding;

    RankResult run(const ExprPtr& e, unsigned depth) {
        const auto key = render(e);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (active_.count(key)) return unknown("the search returns to " + key);
        if (depth > opt_.max_depth) return unknown("search depth exceeded at " + key);
        active_.insert(key);
        auto r = compute(e, depth);
        active_.erase(key);
        memo_[key] = r;
        return r;
    }

private:
    static RankResult unknown(std::string why) {
        RankResult r;
        r.reason = std::move(why);
        return r;
    }

    Verdict member(const ExprPtr& e, const Descriptor& X, unsigned depth) const {
        if (depth == 0 && top_embedding) {
            const auto& [host, emb] = *top_embedding;
            return I_.contains(host, lift(X, emb.first, emb.second));
        }
        return I_.contains(e, X);
    }

    RankResult compute(const ExprPtr& e, unsigned depth) {
        RankResult out;
        if (member(e, Descriptor::all(), depth) == Verdict::Yes) {
            out.kind = RankResult::Kind::Ranked;
            out.witness = PeelingTree::make_base();
            out.alternatives = {out.witness};
            return out;
        }
        if (opt_.use_certificates) {
            if (auto c = no_rank_certificates(e, I_)) {
                out.kind = RankResult::Kind::NoRank;
                out.certificate = std::move(c);
                return out;
            }
        }
        PeelingPtr best;
        std::vector<PeelingPtr> found;
        std::string last_reason = "no candidate set is in the ideal";
        for (const auto& X : candidate_sets(e)) {
            if (member(e, X, depth) != Verdict::Yes) continue;
            auto comps = components_after_deletion(e, X);
            if (!comps.ok()) {
                last_reason = *comps.unsupported;
                continue;
            }
            if (comps.regions.empty()) continue;
            std::vector<PeelChild> children;
            bool ok = true;
            for (const auto& reg : comps.regions) {
                auto sub = run(reg.expr, depth + 1);
                if (!sub.ranked()) {
                    ok = false;
                    last_reason = "component " + render(reg.expr) + ": " +
                                  (sub.kind == RankResult::Kind::NoRank ? std::string("no rank") : sub.reason);
                    break;
                }
                children.push_back(PeelChild{reg.members.to_string(), reg.count, reg.expr, sub.witness});
            }
            if (!ok) continue;
            auto w = PeelingTree::make_peel(X, std::move(children));
            found.push_back(w);
            if (!best || w->ordinal < best->ordinal) best = w;
        }
        if (!best) return unknown(last_reason);
        out.kind = RankResult::Kind::Ranked;
        out.rank = best->ordinal;
        out.witness = best;
        out.alternatives.push_back(best);
        for (const auto& w : found)
            if (w != best) out.alternatives.push_back(w);
        return out;
    }

    const Ideal& I_;
    RankOptions opt_;
    std::map<std::string, RankResult> memo_;
    std::set<std::string> active_;
};

}  // namespace

RankResult ideal_rank(const ExprPtr& e, const Ideal& I, RankOptions opt) {
    Engine engine(I, opt);
    return engine.run(e, 0);
}

RankResult ideal_rank_in(const ExprPtr& host, const RegionPath& region, const Ideal& I) {
    auto sub = resolve_region(host, region);
    Engine engine(I, {});
    engine.top_embedding = {host, {region, sub.prefix}};
    return engine.run(sub.expr, 0);
}

RankResult schmidt_rank(const ExprPtr& e) {
    auto space = end_space(e);
    if (space.ok() && !space.classes.empty()) throw GraphError("input has a ray: " + render(e));
    return ideal_rank(e, Ideal::finite_sets());
}

RankResult normal_rank(const ExprPtr& e) {
    if (is_connected(e) == Verdict::No) throw GraphError("normal rank needs a connected graph");
    return ideal_rank(e, Ideal::normally_spanned(e));
}

RankResult kappa_rank(const ExprPtr& e, Cardinality kappa) { return ideal_rank(e, Ideal::sets_below(kappa)); }

std::optional<std::string> check_witness(const ExprPtr& e, const Ideal& I, const PeelingTree& w) {
    if (w.base) {
        if (I.contains(e, Descriptor::all()) != Verdict::Yes) return "base case but V(G) is not in the ideal: " + render(e);
        if (!w.ordinal.is_zero()) return "base case with a nonzero ordinal";
        return std::nullopt;
    }
    if (I.contains(e, w.X) != Verdict::Yes) return "peeled set " + w.X.to_string() + " is not in the ideal";
    auto comps = components_after_deletion(e, w.X);
    if (!comps.ok()) return "components of " + render(e) + " minus " + w.X.to_string() + ": " + *comps.unsupported;
    if (comps.regions.size() != w.children.size()) return "region count differs for " + w.X.to_string();
    std::vector<Ordinal> above;
    for (std::size_t i = 0; i < w.children.size(); ++i) {
        const auto& c = w.children[i];
        const auto& reg = comps.regions[i];
        if (render(reg.expr) != render(c.expr) || reg.count != c.count || reg.members.to_string() != c.members)
            return "child " + std::to_string(i) + " does not match region " + reg.members.to_string();
        if (!c.witness) return "child " + std::to_string(i) + " has no witness";
        if (auto err = check_witness(c.expr, I, *c.witness)) return err;
        above.push_back(succ(c.witness->ordinal));
    }
    if (sup(above) != w.ordinal) return "ordinal " + w.ordinal.to_string() + " is not the sup of the successors of its children";
    return std::nullopt;
}

}  // namespace graphrank
