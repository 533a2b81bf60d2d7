#include "graphrank/spanning.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "graphrank/parser.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
        s.replace(at, from.size(), to);
    return s;
}

ParentRule rule(const std::string& match, const std::string& parent, std::vector<std::string> when = {}) {
    return ParentRule::make(match, parent, std::move(when));
}

TreeDescriptor make_tree(const ExprPtr& host, std::string name, const std::string& root, std::vector<ParentRule> rules,
                         Verdict rayless) {
    TreeDescriptor T;
    T.host = host;
    T.name = std::move(name);
    T.roots.push_back(Pattern::parse(root));
    T.rules = std::move(rules);
    T.rayless = rayless;
    return T;
}

// Literal rules for a finite tree given as child -> parent pairs.
TreeDescriptor literal_tree(const ExprPtr& host, std::string name, const Address& root,
                            const std::vector<std::pair<Address, Address>>& parent_of, bool spanning) {
    TreeDescriptor T;
    T.host = host;
    T.name = std::move(name);
    T.roots.push_back(Pattern::parse(root.to_string()));
    std::vector<Address> all{root};
    for (const auto& [c, p] : parent_of) {
        T.rules.push_back(rule(c.to_string(), p.to_string()));
        all.push_back(c);
    }
    if (!spanning) T.domain = Descriptor::explicit_set(all);
    T.rayless = Verdict::Yes;
    return T;
}

TreeResult finite_dfs(const ExprPtr& e, std::optional<Address> root) {
    auto t = truncate(e, 1, 1);
    if (t.size() == 0) return TreeResult::unknown("empty graph");
    std::size_t r = 0;
    if (root) {
        auto id = t.id(*root);
        if (!id) return TreeResult::unknown("requested root " + root->to_string() + " is not a vertex");
        r = *id;
    }
    std::vector<bool> seen(t.size(), false);
    std::vector<std::pair<Address, Address>> parent_of;
    std::vector<std::size_t> stack{r};
    std::vector<std::size_t> next(t.size(), 0);
    seen[r] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        if (next[v] == t.adj[v].size()) {
            stack.pop_back();
            continue;
        }
        auto u = t.adj[v][next[v]++];
        if (seen[u]) continue;
        seen[u] = true;
        parent_of.emplace_back(t.vertices[u], t.vertices[v]);
        stack.push_back(u);
    }
    if (parent_of.size() + 1 != t.size()) return TreeResult::unknown("graph is disconnected");
    auto T = literal_tree(e, "nst", t.vertices[r], parent_of, true);
    T.notes.push_back("depth-first search tree");
    return TreeResult::of(std::move(T));
}

std::vector<ParentRule> comb_rules(std::uint64_t tooth, const std::string& spine_parent = "r{n-1}",
                                   std::vector<std::string> spine_when = {"n>=1"}) {
    std::vector<ParentRule> rs{rule("r{n#}", spine_parent, std::move(spine_when))};
    if (tooth >= 1) rs.push_back(rule("r{n#}/t1", "r{n}"));
    if (tooth >= 2) rs.push_back(rule("r{n#}/t{j#}", "r{n}/t{j-1}", {"j>=2"}));
    return rs;
}

}  // namespace

std::string to_string(TreeResult::Status s) {
    switch (s) {
        case TreeResult::Status::Tree: return "tree";
        case TreeResult::Status::None: return "none";
        case TreeResult::Status::NotAllDominated: return "not_all_dominated";
        case TreeResult::Status::Unknown: return "unknown";
    }
    return "?";
}

TreeResult normal_spanning_tree(const ExprPtr& e, std::optional<Address> root) {
    const Expr& x = *e;
    switch (x.kind) {
        case K::Finite: return finite_dfs(e, root);
        case K::Ray: return TreeResult::of(make_tree(e, "nst", "r0", comb_rules(0), Verdict::No));
        case K::Comb: return TreeResult::of(make_tree(e, "nst", "r0", comb_rules(x.tooth), Verdict::No));
        case K::Star: return TreeResult::of(make_tree(e, "nst", "c", {rule("c/{i}", "c")}, Verdict::Yes));
        case K::Tree: {
            auto T = make_tree(e, "nst", "root", {rule("root/{p+}", "root/{p*|init}")},
                               x.card.is_zero() ? Verdict::Yes : Verdict::No);
            T.notes.push_back("a tree is its own normal spanning tree");
            return TreeResult::of(std::move(T));
        }
        case K::Complete: {
            if (!x.card.is_countable()) return TreeResult::none("an uncountable complete graph has no normal spanning tree");
            auto T = make_tree(e, "nst", "k0", {rule("k{n#}", "k{n-1}", {"n>=1"})},
                               x.card.is_finite() ? Verdict::Yes : Verdict::No);
            T.notes.push_back("spanning ray: any two vertices are adjacent, so every edge joins comparable vertices");
            return TreeResult::of(std::move(T));
        }
        case K::WithTops:
            return TreeResult::none("a tree with all tops has no normal spanning tree");
        case K::Union: return TreeResult::unknown("graph is disconnected");
        case K::JoinVertex: {
            auto base = normal_spanning_tree(x.left);
            if (!base.ok()) return base;
            auto T = *base.tree;
            const auto r = Address::parse(T.roots.at(0).to_string());
            if (!in_descriptor(x.left, x.attach, r)) {
                if (x.left->kind != K::Finite) return TreeResult::unknown("base root is not attached to " + x.label);
                // pick a finite base root next to the joined vertex
                for (const auto& v : truncate(x.left, 1, 1).vertices)
                    if (in_descriptor(x.left, x.attach, v)) return normal_spanning_tree(e, v);
                return TreeResult::unknown("joined vertex has no neighbour");
            }
            T.host = e;
            T.roots = {Pattern::parse(x.label)};
            T.rules.push_back(rule(r.to_string(), x.label));
            T.notes.push_back("the joined vertex is the new root");
            return TreeResult::of(std::move(T));
        }
        case K::AddEdge: {
            auto base = normal_spanning_tree(x.left, root);
            if (!base.ok()) return base;
            auto T = *base.tree;
            auto ca = T.ancestors(x.a), cb = T.ancestors(x.b);
            if (!ca || !cb) return TreeResult::unknown("added edge endpoints are outside the base tree");
            if (std::find(ca->begin(), ca->end(), x.b) == ca->end() && std::find(cb->begin(), cb->end(), x.a) == cb->end())
                return TreeResult::unknown("added edge joins incomparable vertices of the base tree");
            T.host = e;
            return TreeResult::of(std::move(T));
        }
        case K::Hang: {
            TreeDescriptor T = make_tree(e, "nst", "h", {}, Verdict::Yes);
            for (std::size_t j = 0; j < x.copies.size(); ++j) {
                const auto& [copy, k] = x.copies[j];
                const auto a = anchor(*copy);
                auto sub = normal_spanning_tree(copy, copy->kind == K::Finite ? std::optional<Address>(a) : std::nullopt);
                if (!sub.ok()) return sub;
                if (Address::parse(sub.tree->roots.at(0).to_string()) != a)
                    return TreeResult::unknown("copy tree is not rooted at its anchor");
                RegionDescriptor region;
                region.host = e;
                region.expr = copy;
                region.count = k;
                region.members = Descriptor::under(Address{{"h", std::to_string(j)}});
                region.embedding = Embedding::prefix(Address{}, "h/" + std::to_string(j) + "/{$}");
                const auto var = "c" + std::to_string(j);
                auto lifted = embed_tree(*sub.tree, region, var);
                if (!lifted) return TreeResult::unknown("copy tree cannot be lifted");
                for (auto& r : lifted->rules) T.rules.push_back(std::move(r));
                for (const auto& r : lifted->roots) T.rules.push_back(ParentRule{r, {}, Template::parse("h")});
                if (sub.tree->rayless != Verdict::Yes) T.rayless = sub.tree->rayless;
            }
            return TreeResult::of(std::move(T));
        }
    }
    return TreeResult::unknown("no construction");
}

namespace {

// Adds m to comparisons on `var` (the first step of a shifted region).
std::optional<Condition> shift_condition(const Condition& c, const std::string& var, std::uint64_t m) {
    static const std::regex re(R"(^\s*([^%\s<>=!]+)\s*(%\s*(\d+))?\s*(==|!=|<=|>=|<|>)\s*(\d+)\s*$)");
    std::smatch sm;
    const std::string text = c.to_string();
    if (!std::regex_match(text, sm, re)) return c;
    if (sm[1].str() != var) return c;
    const auto rhs = std::stoull(sm[5].str());
    if (sm[3].matched) {
        const auto mod = std::stoull(sm[3].str());
        return Condition::parse(var + "%" + std::to_string(mod) + sm[4].str() + std::to_string((rhs + m) % mod));
    }
    return Condition::parse(var + sm[4].str() + std::to_string(rhs + m));
}

std::optional<ParentRule> shift_rule(ParentRule r, const std::string& stem, std::uint64_t m) {
    if (r.match.steps().empty()) return std::nullopt;
    auto& s0 = r.match.steps()[0];
    std::string var;
    if (s0.kind == Pattern::Step::Kind::Literal) {
        auto n = step_index(s0.text, stem);
        if (!n) return std::nullopt;
        s0.text = stem + std::to_string(*n + m);
    } else if (s0.kind == Pattern::Step::Kind::Capture && s0.text == stem && s0.natural) {
        var = s0.var;
        std::vector<Condition> when;
        for (const auto& c : r.when) {
            auto sc = shift_condition(c, var, m);
            if (!sc) return std::nullopt;
            when.push_back(*sc);
        }
        when.push_back(Condition::parse(var + ">=" + std::to_string(m)));
        r.when = std::move(when);
    } else {
        return std::nullopt;
    }
    auto& t0 = r.parent.steps()[0];
    if (t0.kind == Template::Step::Kind::Literal) {
        auto n = step_index(t0.text, stem);
        if (!n) return std::nullopt;
        t0.text = stem + std::to_string(*n + m);
    } else if (t0.kind != Template::Step::Kind::Single || t0.text != stem || t0.var != var) {
        return std::nullopt;
    }
    return r;
}

}  // namespace

std::optional<TreeDescriptor> embed_tree(const TreeDescriptor& local, const RegionDescriptor& region, const std::string& var) {
    TreeDescriptor out;
    out.host = region.host;
    out.name = local.name;
    out.rayless = local.rayless;
    out.notes = local.notes;

    if (!region.explicit_map.empty()) {
        std::map<Address, Address> to_host(region.explicit_map.begin(), region.explicit_map.end());
        std::vector<Address> all;
        for (const auto& [l, h] : region.explicit_map) {
            all.push_back(h);
            if (local.is_root(l)) {
                out.roots.push_back(Pattern::parse(h.to_string()));
                continue;
            }
            auto p = local.parent(l);
            if (!p || !to_host.count(*p)) return std::nullopt;
            out.rules.push_back(rule(h.to_string(), to_host.at(*p).to_string()));
        }
        out.domain = Descriptor::explicit_set(all);
        return out;
    }
    if (!region.embedding || !local.spanning()) return std::nullopt;
    out.domain = region.members;
    const auto& emb = *region.embedding;

    if (emb.kind == Embedding::Kind::Shift) {
        const auto pre = emb.host_prefix;
        auto prefix_pattern = pre.empty() ? Pattern{} : Pattern::parse(pre);
        auto prefix_template = pre.empty() ? Template{} : Template::parse(pre);
        for (const auto& r : local.roots) {
            ParentRule fake{r, {}, Template::parse(r.to_string())};
            auto s = shift_rule(fake, emb.stem, emb.offset);
            if (!s) return std::nullopt;
            out.roots.push_back(*rebase(s->match, {}, prefix_pattern));
        }
        for (const auto& r : local.rules) {
            auto s = shift_rule(r, emb.stem, emb.offset);
            if (!s) return std::nullopt;
            s->match = *rebase(s->match, {}, prefix_pattern);
            s->parent = *rebase(s->parent, {}, prefix_template);
            out.rules.push_back(std::move(*s));
        }
        return out;
    }

    const auto hp_text = replace_all(emb.host_prefix, "{$", "{" + var);
    const auto ht_text = replace_all(pattern_to_template(emb.host_prefix), "{$", "{" + var);
    const Pattern hp = hp_text.empty() ? Pattern{} : Pattern::parse(hp_text);
    const Template ht = ht_text.empty() ? Template{} : Template::parse(ht_text);
    try {
        for (const auto& r : local.roots) {
            auto p = rebase(r, emb.local_prefix, hp);
            if (!p) return std::nullopt;
            out.roots.push_back(Pattern::parse(p->to_string()));
        }
        for (const auto& r : local.rules) {
            auto m = rebase(r.match, emb.local_prefix, hp);
            auto p = rebase(r.parent, emb.local_prefix, ht);
            if (!m || !p) return std::nullopt;
            // reparse so that a second multi capture is rejected here
            out.rules.push_back(ParentRule{Pattern::parse(m->to_string()), r.when, *p});
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return out;
}

namespace {

std::optional<Address> least_anchor_neighbour(const ExprPtr& e, const TreeDescriptor& anchor, const Address& v,
                                              const Truncation& t) {
    auto id = t.id(v);
    if (!id) return std::nullopt;
    for (auto u : t.adj[*id])
        if (anchor.covers(t.vertices[u]) && anchor.depth(t.vertices[u])) return t.vertices[u];
    (void)e;
    return std::nullopt;
}

}  // namespace

TreeDescriptor merge_forest(const ExprPtr& e, const std::vector<ForestPart>& forest, std::size_t anchor, bool spanning) {
    if (anchor >= forest.size()) throw GraphError("anchor index out of range");
    if (forest.size() == 1) return forest[0].tree;
    const auto& A = forest[anchor].tree;
    TreeDescriptor out;
    out.host = e;
    out.name = "merged";
    out.roots = A.roots;
    out.rules = A.rules;
    out.rayless = A.rayless;
    std::vector<Descriptor> domains;
    bool any_spanning = A.spanning();
    if (A.domain) domains.push_back(*A.domain);
    const auto t = truncate(e, 4, 3);
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (i == anchor) continue;
        const auto& D = forest[i].tree;
        out.rules.insert(out.rules.end(), D.rules.begin(), D.rules.end());
        if (D.rayless != Verdict::Yes && out.rayless == Verdict::Yes) out.rayless = D.rayless;
        if (D.domain) domains.push_back(*D.domain);
        else any_spanning = true;
        for (const auto& rp : D.roots) {
            std::string link = forest[i].link;
            if (link.empty()) {
                // least edge towards the anchor, read off the members present in a small truncation
                std::optional<Address> chosen;
                for (const auto& v : t.vertices) {
                    if (!rp.match(v)) continue;
                    auto n = least_anchor_neighbour(e, A, v, t);
                    if (!n) throw GraphError("part " + std::to_string(i) + " has no edge to the anchor at " + v.to_string());
                    if (chosen && *chosen != *n)
                        throw GraphError("members of part " + std::to_string(i) + " attach to different anchor vertices");
                    chosen = n;
                }
                if (!chosen) throw GraphError("part " + std::to_string(i) + " has no member in the truncation");
                link = chosen->to_string();
            }
            out.rules.push_back(ParentRule{rp, {}, Template::parse(link)});
        }
    }
    if (!spanning && !any_spanning) out.domain = domains.size() == 1 ? domains[0] : Descriptor::cup(domains);
    return out;
}

RerouteResult reroute_with_ray(const ExprPtr& e, const TreeDescriptor& T, const EndSubset& psi, const RaySchema& R) {
    constexpr std::uint64_t kProbe = 64;
    for (std::uint64_t n = 0; n < kProbe; ++n)
        if (!contains(e, R.vertex(n)) || !adjacent(e, R.vertex(n), R.vertex(n + 1)))
            throw GraphError("R is not a ray of the graph: " + R.to_string());
    auto space = end_space(e);
    bool in_psi = false;
    for (std::size_t i = 0; i < space.classes.size() && i < psi.entries.size(); ++i)
        if (psi.entries[i].part == EndSubset::Part::All) in_psi = true;
    if (!in_psi) throw GraphError("the end of R is not in the reflected set");

    auto tree_edge = [&](const Address& a, const Address& b) { return T.parent(a) == b || T.parent(b) == a; };
    bool tail = true;
    for (std::uint64_t n = kProbe / 4; n < kProbe && tail; ++n) tail = tree_edge(R.vertex(n), R.vertex(n + 1));
    if (tail) {
        RerouteResult r{T, true, {}, Descriptor::explicit_set({}), "R has a tail in T, so F is empty"};
        return r;
    }

    // T is the spanning path s0 s1 s2 ...; R visits s_a, s_{a+d}, ... in a graph with those chords
    if (R.kind != RaySchema::Kind::Indexed || !R.prefix.empty() || R.step < 2)
        throw GraphError("rerouting is implemented for spanning paths and arithmetic rays only");
    const auto& s = R.stem;
    const auto a = R.start, d = R.step;
    for (std::uint64_t m = 1; m < kProbe; ++m)
        if (T.parent(Address{{s + std::to_string(m)}}) != Address{{s + std::to_string(m - 1)}})
            throw GraphError("T is not the spanning path along " + s);
    TreeDescriptor out;
    out.host = e;
    out.name = T.name + "+ray";
    out.roots = T.roots;
    out.rayless = Verdict::No;
    const auto A = std::to_string(a), D = std::to_string(d), AM = std::to_string(a % d);
    if (a >= 1) out.rules.push_back(rule(s + "{m#}", s + "{m-1}", {"m>=1", "m<=" + A}));
    out.rules.push_back(rule(s + "{m#}", s + "{m-" + D + "}", {"m>" + A, "m%" + D + "==" + AM}));
    out.rules.push_back(rule(s + "{m#}", s + "{m+1}", {"m>" + A, "m%" + D + "!=" + AM}));
    out.notes.push_back("R = " + R.to_string() + " joined through its chords; every other vertex walks up to the next vertex of R");
    RerouteResult r;
    r.tree = std::move(out);
    r.deleted.push_back(s + "{" + A + " + " + D + "k} - " + s + "{" + A + " + " + D + "k + 1} for k >= 0");
    r.delta = Descriptor::progression(a, 1);
    r.note = "F holds the first edge of each segment of T between consecutive vertices of R";
    return r;
}

namespace {

// Down-closure of a finite vertex set in a tree, as a literal tree.
std::optional<TreeDescriptor> down_closure(const TreeDescriptor& T, const std::vector<Address>& xs, std::string name) {
    std::set<Address> S;
    std::optional<Address> root;
    for (const auto& x : xs) {
        auto chain = T.ancestors(x);
        if (!chain) return std::nullopt;
        S.insert(chain->begin(), chain->end());
        root = chain->back();
    }
    if (!root) return std::nullopt;
    std::vector<std::pair<Address, Address>> parent_of;
    for (const auto& v : S)
        if (v != *root) parent_of.emplace_back(v, *T.parent(v));
    return literal_tree(T.host, std::move(name), *root, parent_of, false);
}

std::optional<std::vector<Address>> explicit_addresses(const Descriptor& X) {
    if (X.kind == DK::Explicit) return X.addresses;
    if (X.kind != DK::Union) return std::nullopt;
    std::vector<Address> out;
    for (const auto& p : X.parts) {
        auto sub = explicit_addresses(p);
        if (!sub) return std::nullopt;
        out.insert(out.end(), sub->begin(), sub->end());
    }
    return out;
}

std::optional<std::uint64_t> max_level(const Descriptor& U) {
    if (U.kind == DK::Level && U.region.empty()) return U.level;
    if (U.kind == DK::Union) {
        std::uint64_t best = 0;
        for (const auto& p : U.parts) {
            auto k = max_level(p);
            if (!k) return std::nullopt;
            best = std::max(best, *k);
        }
        return best;
    }
    return std::nullopt;
}

TreeResult fan_of_join(const ExprPtr& e) {
    const Expr& x = *e;
    const Expr& base = *x.left;
    if (base.kind != K::Ray && base.kind != K::Comb) return TreeResult::unknown("no fan construction for this base");
    const auto& att = x.attach;
    std::vector<ParentRule> rules;
    if ((att.kind == DK::All || att.kind == DK::Spine) && att.region.empty()) {
        rules = comb_rules(base.kind == K::Comb ? base.tooth : 0, x.label, {});
    } else if (att.kind == DK::Progression && !att.on_branch && att.region.empty()) {
        const auto A = std::to_string(att.start), D = std::to_string(att.step), AM = std::to_string(att.start % att.step);
        rules = comb_rules(base.kind == K::Comb ? base.tooth : 0, x.label, {"n>=" + A, "n%" + D + "==" + AM});
        if (att.start > 0) rules.push_back(rule("r{n#}", "r{n+1}", {"n<" + A}));
        if (att.step > 1) rules.push_back(rule("r{n#}", "r{n-1}", {"n>" + A, "n%" + D + "!=" + AM}));
    } else {
        return TreeResult::unknown("no fan construction for attach set " + att.to_string());
    }
    auto T = make_tree(e, "rayless", x.label, std::move(rules), Verdict::Yes);
    T.notes.push_back("fan through the dominating vertex " + x.label);
    return TreeResult::of(std::move(T));
}

TreeResult tops_fan(const ExprPtr& e) {
    std::vector<ParentRule> rules{rule("top/{p+}", "root")};
    if (e->mode == TopsMode::WholeRay) {
        rules.push_back(rule("root/{p+}", "top/root/{p*|strip0}"));
    } else {
        rules.push_back(rule("root/{p+}", "root/{p*|init}", {"len(p)%2==1"}));
        rules.push_back(rule("root/{p+}", "top/root/{p*|strip0}", {"len(p)%2==0"}));
    }
    auto T = make_tree(e, "rayless", "root", std::move(rules), Verdict::Yes);
    T.notes.push_back("every branch is absorbed into the fan of its top");
    return TreeResult::of(std::move(T));
}

}  // namespace

TreeResult rayless_tree_containing(const ExprPtr& e, const Descriptor& U) {
    auto space = end_space(e);
    if (!space.ok()) return TreeResult::unknown(*space.unsupported);
    auto closure = closure_ends(e, space, U);
    bool dispersed = true;
    for (std::size_t i = 0; i < space.classes.size(); ++i) {
        const auto part = closure.entries[i].part;
        if (part == EndSubset::Part::None) continue;
        dispersed = false;
        const auto dom = space.classes[i].dominated;
        if (part == EndSubset::Part::Unknown && dom != Verdict::Yes)
            return TreeResult::unknown("closure of " + U.to_string() + " is unknown for end " + space.classes[i].id);
        if (dom == Verdict::No) return TreeResult::undominated(space.classes[i].id);
        if (dom == Verdict::Unknown) return TreeResult::unknown("domination of end " + space.classes[i].id + " is unknown");
    }
    const Expr& x = *e;

    if (dispersed) {
        if (x.kind == K::Tree) {
            if (auto k = max_level(U)) {
                auto T = make_tree(e, "rayless", "root", {rule("root/{p+}", "root/{p*|init}", {"len(p)<=" + std::to_string(*k)})},
                                   Verdict::Yes);
                std::vector<Descriptor> levels;
                for (std::uint64_t i = 0; i <= *k; ++i) levels.push_back(Descriptor::level_of(i));
                T.domain = levels.size() == 1 ? levels[0] : Descriptor::cup(levels);
                T.notes.push_back("down-closure of " + U.to_string());
                return TreeResult::of(std::move(T));
            }
        }
        auto nst = normal_spanning_tree(e);
        if (nst.ok()) {
            if (auto xs = explicit_addresses(U)) {
                if (auto T = down_closure(*nst.tree, *xs, "rayless")) {
                    T->notes.push_back("down-closure of " + U.to_string() + " in the normal spanning tree");
                    return TreeResult::of(std::move(*T));
                }
            }
            if (is_rayless(*nst.tree) == Verdict::Yes) {
                auto T = *nst.tree;
                T.name = "rayless";
                T.rayless = Verdict::Yes;
                return TreeResult::of(std::move(T));
            }
        }
        return TreeResult::unknown("no rayless construction for " + U.to_string());
    }

    switch (x.kind) {
        case K::Complete: {
            auto T = make_tree(e, "rayless", "k0", {rule("k{n}", "k0", {"n!=0"})}, Verdict::Yes);
            T.notes.push_back("star at k0");
            return TreeResult::of(std::move(T));
        }
        case K::JoinVertex: return fan_of_join(e);
        case K::WithTops: return tops_fan(e);
        default: break;
    }
    return TreeResult::unknown("no rayless construction for " + render(x));
}

}  // namespace graphrank
