#include "graphrank/graph.hpp"

#include <algorithm>
#include <set>

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;

std::optional<std::uint64_t> spine_index(const Address& v) {
    if (v.size() != 1) return std::nullopt;
    return step_index(v[0], "r");
}

struct HangPos {
    std::size_t family;
    std::string index;
    Address rest;
};

std::optional<HangPos> hang_pos(const Expr& e, const Address& v) {
    if (v.size() < 4 || v[0] != "h") return std::nullopt;
    auto j = parse_nat(v[1]);
    if (!j || *j >= e.copies.size()) return std::nullopt;
    if (!valid_index(e.copies[*j].second, v[2])) return std::nullopt;
    return HangPos{*j, v[2], Address{std::vector<std::string>(v.steps().begin() + 3, v.steps().end())}};
}

bool is_top(const Expr& e, const Address& v) {
    if (v.size() < 2 || v[0] != "top") return false;
    Address head{std::vector<std::string>(v.steps().begin() + 1, v.steps().end())};
    if (!tree_depth(e.left->card, head)) return false;
    return head.size() == 1 || head.back() != "0";
}

Address top_head(const Address& top) {
    return Address{std::vector<std::string>(top.steps().begin() + 1, top.steps().end())};
}

bool top_sees(const Expr& e, const Address& top, const Address& node) {
    auto depth = tree_depth(e.left->card, node);
    if (!depth || !on_branch(top_head(top), node)) return false;
    return e.mode == TopsMode::WholeRay || *depth % 2 == 0;
}

Cardinality pow_card(Cardinality k, std::uint64_t n) {
    Cardinality out = Cardinality::finite(1);
    for (std::uint64_t i = 0; i < n; ++i) {
        out = out * k;
        if (!out.is_finite()) break;
    }
    return out;
}

[[noreturn]] void not_applicable(const Descriptor& d, const Expr& e) {
    throw GraphError("descriptor " + d.to_string() + " does not apply to " + render(e));
}

const Expr& tree_of(const Expr& x) { return x.kind == K::WithTops ? *x.left : x; }

bool regional_member(const ExprPtr& s, const Descriptor& d, const Address& local);
Cardinality regional_card(const ExprPtr& s, const Descriptor& d);
Cardinality card_under(const Expr& e, const Address& prefix);

}  // namespace

bool valid_index(Cardinality k, const std::string& step) {
    if (auto n = parse_nat(step)) return !k.is_finite() || *n < k.count();
    return !k.is_countable() && is_token(step);
}

std::optional<std::size_t> tree_depth(Cardinality k, const Address& local) {
    if (local.empty() || local[0] != "root") return std::nullopt;
    for (std::size_t i = 1; i < local.size(); ++i)
        if (!valid_index(k, local[i])) return std::nullopt;
    return local.size() - 1;
}

bool on_branch(const Address& head, const Address& v) {
    if (head.starts_with(v)) return true;
    if (!v.starts_with(head)) return false;
    for (std::size_t i = head.size(); i < v.size(); ++i)
        if (v[i] != "0") return false;
    return true;
}

Address branch_head(const Address& v) {
    auto steps = v.steps();
    while (steps.size() > 1 && steps.back() == "0") steps.pop_back();
    return Address{std::move(steps)};
}

const Expr& core(const Expr& e) {
    const Expr* x = &e;
    while (x->kind == K::JoinVertex || x->kind == K::AddEdge) x = x->left.get();
    return *x;
}

bool contains(const Expr& e, const Address& v) {
    if (v.empty()) return false;
    switch (e.kind) {
        case K::Finite:
            return v.size() == 1 && std::find(e.labels.begin(), e.labels.end(), v[0]) != e.labels.end();
        case K::Ray: return spine_index(v).has_value();
        case K::Comb: {
            if (!step_index(v[0], "r")) return false;
            if (v.size() == 1) return true;
            if (v.size() != 2) return false;
            auto j = step_index(v[1], "t");
            return j && *j >= 1 && *j <= e.tooth;
        }
        case K::Star:
            if (v[0] != "c") return false;
            return v.size() == 1 || (v.size() == 2 && valid_index(e.card, v[1]));
        case K::Tree: return tree_depth(e.card, v).has_value();
        case K::Complete:
            return v.size() == 1 && v[0].size() > 1 && v[0][0] == 'k' && valid_index(e.card, v[0].substr(1));
        case K::WithTops: return tree_depth(e.left->card, v).has_value() || is_top(e, v);
        case K::Union:
            if (v[0] == "left") return contains(*e.left, v.strip_prefix(Address{{"left"}}));
            if (v[0] == "right") return contains(*e.right, v.strip_prefix(Address{{"right"}}));
            return false;
        case K::JoinVertex: return (v.size() == 1 && v[0] == e.label) || contains(*e.left, v);
        case K::AddEdge: return contains(*e.left, v);
        case K::Hang: {
            if (v.size() == 1) return v[0] == "h";
            auto p = hang_pos(e, v);
            return p && contains(*e.copies[p->family].first, p->rest);
        }
    }
    return false;
}

bool adjacent(const Expr& e, const Address& u, const Address& v) {
    if (u == v || !contains(e, u) || !contains(e, v)) return false;
    switch (e.kind) {
        case K::Finite:
            for (const auto& [x, y] : e.edges)
                if ((x == u[0] && y == v[0]) || (x == v[0] && y == u[0])) return true;
            return false;
        case K::Ray: {
            auto a = *spine_index(u), b = *spine_index(v);
            return a + 1 == b || b + 1 == a;
        }
        case K::Comb: {
            if (u.size() > v.size()) return adjacent(e, v, u);
            auto a = *step_index(u[0], "r"), b = *step_index(v[0], "r");
            if (u.size() == 1 && v.size() == 1) return a + 1 == b || b + 1 == a;
            if (a != b) return false;
            if (u.size() == 1) return *step_index(v[1], "t") == 1;
            auto i = *step_index(u[1], "t"), j = *step_index(v[1], "t");
            return i + 1 == j || j + 1 == i;
        }
        case K::Star: return (u.size() == 1) != (v.size() == 1);
        case K::Tree:
            return (u.size() + 1 == v.size() && v.starts_with(u)) || (v.size() + 1 == u.size() && u.starts_with(v));
        case K::Complete: return true;
        case K::WithTops: {
            bool tu = is_top(e, u), tv = is_top(e, v);
            if (tu && tv) return false;
            if (tu) return top_sees(e, u, v);
            if (tv) return top_sees(e, v, u);
            return adjacent(*e.left, u, v);
        }
        case K::Union:
            if (u[0] != v[0]) return false;
            return adjacent(u[0] == "left" ? *e.left : *e.right, u.strip_prefix(Address{{u[0]}}),
                            v.strip_prefix(Address{{v[0]}}));
        case K::JoinVertex: {
            const Address label{{e.label}};
            if (u == label) return in_descriptor(e.left, e.attach, v);
            if (v == label) return in_descriptor(e.left, e.attach, u);
            return adjacent(*e.left, u, v);
        }
        case K::AddEdge:
            if ((u == e.a && v == e.b) || (u == e.b && v == e.a)) return true;
            return adjacent(*e.left, u, v);
        case K::Hang: {
            if (u.size() == 1 || v.size() == 1) {
                const auto& other = u.size() == 1 ? v : u;
                auto p = hang_pos(e, other);
                return p && p->rest == anchor(*e.copies[p->family].first);
            }
            auto p = hang_pos(e, u), q = hang_pos(e, v);
            if (p->family != q->family || p->index != q->index) return false;
            return adjacent(*e.copies[p->family].first, p->rest, q->rest);
        }
    }
    return false;
}

Cardinality vertices_card(const Expr& e) {
    switch (e.kind) {
        case K::Finite: return Cardinality::finite(e.labels.size());
        case K::Ray:
        case K::Comb: return Cardinality::aleph0();
        case K::Star: return Cardinality::finite(1) + e.card;
        case K::Tree:
            if (e.card.is_zero()) return Cardinality::finite(1);
            return e.card.is_finite() ? Cardinality::aleph0() : e.card;
        case K::Complete: return e.card;
        case K::WithTops: return Cardinality::aleph1();
        case K::Union: return vertices_card(*e.left) + vertices_card(*e.right);
        case K::JoinVertex: return vertices_card(*e.left) + Cardinality::finite(1);
        case K::AddEdge: return vertices_card(*e.left);
        case K::Hang: {
            auto out = Cardinality::finite(1);
            for (const auto& [c, k] : e.copies) out = out + k * vertices_card(*c);
            return out;
        }
    }
    return Cardinality::finite(0);
}

bool in_descriptor(const ExprPtr& e, const Descriptor& d, const Address& v) {
    switch (d.kind) {
        case DK::Explicit:
            return std::find(d.addresses.begin(), d.addresses.end(), v) != d.addresses.end() && contains(*e, v);
        case DK::Union:
            return std::any_of(d.parts.begin(), d.parts.end(), [&](const auto& p) { return in_descriptor(e, p, v); });
        case DK::Minus: return in_descriptor(e, d.parts[0], v) && !in_descriptor(e, d.parts[1], v);
        case DK::Under: return v.starts_with(d.head) && contains(*e, v);
        default: break;
    }
    auto sub = resolve_region(e, d.region);
    if (!v.starts_with(sub.prefix)) return false;
    return regional_member(sub.expr, d, v.strip_prefix(sub.prefix));
}

Cardinality descriptor_card(const ExprPtr& e, const Descriptor& d) {
    switch (d.kind) {
        case DK::Explicit: {
            std::set<Address> seen;
            for (const auto& a : d.addresses)
                if (contains(*e, a)) seen.insert(a);
            return Cardinality::finite(seen.size());
        }
        case DK::Union: {
            std::set<Address> explicit_members;
            Cardinality out = Cardinality::finite(0);
            for (const auto& p : d.parts) {
                if (p.kind == DK::Explicit) {
                    for (const auto& a : p.addresses)
                        if (contains(*e, a)) explicit_members.insert(a);
                } else {
                    out = out + descriptor_card(e, p);
                }
            }
            return out + Cardinality::finite(explicit_members.size());
        }
        case DK::Minus: {
            auto a = descriptor_card(e, d.parts[0]);
            if (d.parts[0].kind == DK::Explicit) {
                std::uint64_t n = 0;
                for (const auto& x : d.parts[0].addresses)
                    if (in_descriptor(e, d, x)) ++n;
                return Cardinality::finite(n);
            }
            return a;
        }
        case DK::Under: return card_under(*e, d.head);
        default: break;
    }
    auto sub = resolve_region(e, d.region);
    return regional_card(sub.expr, d);
}

namespace {

bool regional_member(const ExprPtr& s, const Descriptor& d, const Address& local) {
    if (d.kind == DK::All) return contains(*s, local);
    const Expr& x = core(*s);
    const Expr& t = tree_of(x);
    switch (d.kind) {
        case DK::Level:
            if (t.kind != K::Tree) not_applicable(d, x);
            return tree_depth(t.card, local) == d.level;
        case DK::Spine:
            if (x.kind == K::Ray || x.kind == K::Comb) return spine_index(local).has_value();
            not_applicable(d, x);
        case DK::Centers:
            if (x.kind == K::Star) return local == Address{{"c"}};
            if (x.kind == K::Hang) {
                if (local == Address{{"h"}}) return true;
                auto p = hang_pos(x, local);
                return p && regional_member(x.copies[p->family].first, d, p->rest);
            }
            not_applicable(d, x);
        case DK::Leaves:
            if (x.kind == K::Star) return local.size() == 2 && contains(x, local);
            if (x.kind == K::Hang) {
                auto p = hang_pos(x, local);
                return p && regional_member(x.copies[p->family].first, d, p->rest);
            }
            not_applicable(d, x);
        case DK::Tops:
            if (x.kind != K::WithTops) not_applicable(d, x);
            return is_top(x, local);
        case DK::BranchPrefix:
            if (t.kind != K::Tree) not_applicable(d, x);
            return tree_depth(t.card, local).has_value() && on_branch(d.head, local);
        case DK::Progression: {
            std::optional<std::uint64_t> n;
            if (d.on_branch) {
                if (t.kind != K::Tree) not_applicable(d, x);
                auto depth = tree_depth(t.card, local);
                if (depth && on_branch(d.head, local)) n = *depth;
            } else if (x.kind == K::Ray || x.kind == K::Comb) {
                n = spine_index(local);
            } else if (x.kind == K::Complete) {
                if (contains(x, local)) n = parse_nat(local[0].substr(1));
            } else {
                not_applicable(d, x);
            }
            return n && *n >= d.start && (*n - d.start) % d.step == 0;
        }
        case DK::Children:
            if (t.kind != K::Tree) not_applicable(d, x);
            return local.size() == d.head.size() + 1 && local.starts_with(d.head) &&
                   tree_depth(t.card, local).has_value();
        case DK::TopsThrough:
            if (x.kind != K::WithTops) not_applicable(d, x);
            return is_top(x, local) && top_sees(x, local, d.head);
        case DK::Anchors: {
            if (x.kind != K::Hang) not_applicable(d, x);
            auto p = hang_pos(x, local);
            return p && p->rest == anchor(*x.copies[p->family].first);
        }
        default: not_applicable(d, x);
    }
}

Cardinality regional_card(const ExprPtr& s, const Descriptor& d) {
    if (d.kind == DK::All) return vertices_card(*s);
    const Expr& x = core(*s);
    const Expr& t = tree_of(x);
    switch (d.kind) {
        case DK::Level:
            if (t.kind != K::Tree) not_applicable(d, x);
            return pow_card(t.card, d.level);
        case DK::Spine:
            if (x.kind != K::Ray && x.kind != K::Comb) not_applicable(d, x);
            return Cardinality::aleph0();
        case DK::Centers:
        case DK::Leaves:
            if (x.kind == K::Star) return d.kind == DK::Centers ? Cardinality::finite(1) : x.card;
            if (x.kind == K::Hang) {
                auto out = Cardinality::finite(d.kind == DK::Centers ? 1 : 0);
                for (const auto& [c, k] : x.copies) out = out + k * regional_card(c, d);
                return out;
            }
            not_applicable(d, x);
        case DK::Tops:
            if (x.kind != K::WithTops) not_applicable(d, x);
            return Cardinality::aleph1();
        case DK::BranchPrefix:
            if (t.kind != K::Tree) not_applicable(d, x);
            return Cardinality::aleph0();
        case DK::Progression:
            if (d.on_branch ? t.kind != K::Tree
                            : (x.kind != K::Ray && x.kind != K::Comb && x.kind != K::Complete))
                not_applicable(d, x);
            if (x.kind == K::Complete && x.card.is_finite()) {
                std::uint64_t n = 0;
                for (std::uint64_t i = d.start; i < x.card.count(); i += d.step) ++n;
                return Cardinality::finite(n);
            }
            return Cardinality::aleph0();
        case DK::Children:
            if (t.kind != K::Tree) not_applicable(d, x);
            return t.card;
        case DK::TopsThrough: {
            if (x.kind != K::WithTops) not_applicable(d, x);
            auto depth = tree_depth(x.left->card, d.head);
            if (!depth) return Cardinality::finite(0);
            return (x.mode == TopsMode::WholeRay || *depth % 2 == 0) ? Cardinality::aleph1() : Cardinality::finite(0);
        }
        case DK::Anchors: {
            if (x.kind != K::Hang) not_applicable(d, x);
            auto out = Cardinality::finite(0);
            for (const auto& [c, k] : x.copies) out = out + k;
            return out;
        }
        default: not_applicable(d, x);
    }
}

Cardinality card_under(const Expr& e, const Address& prefix) {
    if (prefix.empty()) return vertices_card(e);
    switch (e.kind) {
        case K::Union:
            if (prefix[0] == "left") return card_under(*e.left, prefix.strip_prefix(Address{{"left"}}));
            if (prefix[0] == "right") return card_under(*e.right, prefix.strip_prefix(Address{{"right"}}));
            return Cardinality::finite(0);
        case K::Hang: {
            if (prefix[0] != "h") return Cardinality::finite(0);
            if (prefix.size() == 1) return vertices_card(e);
            auto j = parse_nat(prefix[1]);
            if (!j || *j >= e.copies.size()) return Cardinality::finite(0);
            const auto& [copy, k] = e.copies[*j];
            if (prefix.size() == 2) return k * vertices_card(*copy);
            if (!valid_index(k, prefix[2])) return Cardinality::finite(0);
            return card_under(*copy, prefix.strip_prefix(prefix.first(3)));
        }
        case K::JoinVertex:
            if (prefix == Address{{e.label}}) return Cardinality::finite(1);
            return card_under(*e.left, prefix);
        case K::AddEdge: return card_under(*e.left, prefix);
        case K::Tree:
        case K::WithTops: {
            const Expr& t = tree_of(e);
            if (e.kind == K::WithTops && prefix[0] == "top")
                return prefix.size() == 1 || !is_top(e, prefix) ? Cardinality::aleph1() : Cardinality::finite(1);
            if (!tree_depth(t.card, prefix)) return Cardinality::finite(0);
            if (t.card.is_zero()) return Cardinality::finite(1);
            return t.card.is_finite() ? Cardinality::aleph0() : t.card;
        }
        case K::Star:
            if (prefix == Address{{"c"}}) return vertices_card(e);
            return Cardinality::finite(contains(e, prefix) ? 1 : 0);
        case K::Comb:
            if (prefix.size() == 1 && contains(e, prefix)) return Cardinality::finite(1 + e.tooth);
            return Cardinality::finite(contains(e, prefix) ? 1 : 0);
        default: return Cardinality::finite(contains(e, prefix) ? 1 : 0);
    }
}

NeighborDescriptor neighbors(const ExprPtr& ep, const Address& v) {
    const Expr& e = *ep;
    NeighborDescriptor nd;
    switch (e.kind) {
        case K::Finite:
            for (const auto& [x, y] : e.edges) {
                if (x == v[0]) nd.vertices.push_back(Address{{y}});
                if (y == v[0]) nd.vertices.push_back(Address{{x}});
            }
            break;
        case K::Ray: {
            auto n = *spine_index(v);
            if (n > 0) nd.vertices.push_back(Address{{"r" + std::to_string(n - 1)}});
            nd.vertices.push_back(Address{{"r" + std::to_string(n + 1)}});
            break;
        }
        case K::Comb: {
            auto n = *step_index(v[0], "r");
            const auto spine = "r" + std::to_string(n);
            if (v.size() == 1) {
                if (n > 0) nd.vertices.push_back(Address{{"r" + std::to_string(n - 1)}});
                nd.vertices.push_back(Address{{"r" + std::to_string(n + 1)}});
                if (e.tooth >= 1) nd.vertices.push_back(Address{{spine, "t1"}});
            } else {
                auto j = *step_index(v[1], "t");
                nd.vertices.push_back(j == 1 ? Address{{spine}} : Address{{spine, "t" + std::to_string(j - 1)}});
                if (j < e.tooth) nd.vertices.push_back(Address{{spine, "t" + std::to_string(j + 1)}});
            }
            break;
        }
        case K::Star:
            if (v.size() == 2) {
                nd.vertices.push_back(Address{{"c"}});
            } else if (e.card.is_finite()) {
                for (std::uint64_t i = 0; i < e.card.count(); ++i) nd.vertices.push_back(Address{{"c", std::to_string(i)}});
            } else {
                nd.families.push_back(Descriptor::leaves());
            }
            break;
        case K::Tree:
            if (v.size() > 1) nd.vertices.push_back(v.parent());
            if (e.card.is_finite()) {
                for (std::uint64_t i = 0; i < e.card.count(); ++i) nd.vertices.push_back(v.child(std::to_string(i)));
            } else {
                nd.families.push_back(Descriptor::children(v));
            }
            break;
        case K::Complete:
            if (e.card.is_finite()) {
                for (std::uint64_t i = 0; i < e.card.count(); ++i) {
                    Address a{{"k" + std::to_string(i)}};
                    if (a != v) nd.vertices.push_back(a);
                }
            } else {
                nd.families.push_back(Descriptor::all());
                nd.exclude.push_back(v);
            }
            break;
        case K::WithTops:
            if (is_top(e, v)) {
                auto head = top_head(v);
                nd.families.push_back(e.mode == TopsMode::WholeRay
                                          ? Descriptor::branch_prefix(head, {"base"})
                                          : Descriptor::branch_progression(head, 0, 2, {"base"}));
            } else {
                nd = neighbors(e.left, v);
                for (auto& f : nd.families) f = lift(f, {"base"}, Address{});
                if (e.mode == TopsMode::WholeRay || (v.size() - 1) % 2 == 0)
                    nd.families.push_back(Descriptor::tops_through(v));
            }
            break;
        case K::Union: {
            const Address side{{v[0]}};
            nd = neighbors(v[0] == "left" ? e.left : e.right, v.strip_prefix(side));
            for (auto& a : nd.vertices) a = a.prefixed(side);
            for (auto& a : nd.exclude) a = a.prefixed(side);
            for (auto& f : nd.families) f = lift(f, {v[0]}, side);
            break;
        }
        case K::JoinVertex:
            if (v == Address{{e.label}}) {
                nd.families.push_back(lift(e.attach, {"base"}, Address{}));
            } else {
                nd = neighbors(e.left, v);
                for (auto& f : nd.families) f = lift(f, {"base"}, Address{});
                if (in_descriptor(e.left, e.attach, v)) nd.vertices.push_back(Address{{e.label}});
            }
            break;
        case K::AddEdge:
            nd = neighbors(e.left, v);
            for (auto& f : nd.families) f = lift(f, {"base"}, Address{});
            if (v == e.a) nd.vertices.push_back(e.b);
            if (v == e.b) nd.vertices.push_back(e.a);
            break;
        case K::Hang:
            if (v.size() == 1) {
                bool all_finite = true;
                for (const auto& c : e.copies) all_finite = all_finite && c.second.is_finite();
                if (!all_finite) {
                    nd.families.push_back(Descriptor::anchors());
                    break;
                }
                for (std::size_t j = 0; j < e.copies.size(); ++j)
                    for (std::uint64_t i = 0; i < e.copies[j].second.count(); ++i)
                        nd.vertices.push_back(
                            anchor(*e.copies[j].first).prefixed(Address{{"h", std::to_string(j), std::to_string(i)}}));
            } else {
                auto p = *hang_pos(e, v);
                const Address pre{{"h", std::to_string(p.family), p.index}};
                const auto& copy = e.copies[p.family].first;
                nd = neighbors(copy, p.rest);
                for (auto& a : nd.vertices) a = a.prefixed(pre);
                for (auto& a : nd.exclude) a = a.prefixed(pre);
                for (auto& f : nd.families)
                    f = lift(f, {"copy." + std::to_string(p.family) + "." + p.index}, pre);
                if (p.rest == anchor(*copy)) nd.vertices.push_back(Address{{"h"}});
            }
            break;
    }
    return nd;
}

}  // namespace

NeighborDescriptor adjacency(const ExprPtr& e, const Address& v) {
    if (!contains(*e, v)) throw GraphError("address " + v.to_string() + " does not resolve in " + render(*e));
    auto nd = neighbors(e, v);
    std::sort(nd.vertices.begin(), nd.vertices.end());
    nd.vertices.erase(std::unique(nd.vertices.begin(), nd.vertices.end()), nd.vertices.end());
    return nd;
}

bool NeighborDescriptor::contains(const ExprPtr& e, const Address& v) const {
    if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) return false;
    if (std::find(vertices.begin(), vertices.end(), v) != vertices.end()) return true;
    return std::any_of(families.begin(), families.end(), [&](const auto& f) { return in_descriptor(e, f, v); });
}

std::string NeighborDescriptor::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& v : vertices) {
        out += (first ? "" : ", ") + v.to_string();
        first = false;
    }
    for (const auto& f : families) {
        out += (first ? "" : ", ") + f.to_string();
        first = false;
    }
    out += "}";
    if (!exclude.empty()) {
        out += " minus {";
        for (std::size_t i = 0; i < exclude.size(); ++i) out += (i ? ", " : "") + exclude[i].to_string();
        out += "}";
    }
    return out;
}

Descriptor lift(const Descriptor& d, const RegionPath& region_steps, const Address& prefix) {
    Descriptor out = d;
    switch (d.kind) {
        case DK::Explicit:
            for (auto& a : out.addresses) a = a.prefixed(prefix);
            return out;
        case DK::Under: out.head = d.head.prefixed(prefix); return out;
        case DK::Union:
        case DK::Minus:
            for (auto& p : out.parts) p = lift(p, region_steps, prefix);
            return out;
        default: {
            RegionPath r = region_steps;
            r.insert(r.end(), d.region.begin(), d.region.end());
            out.region = std::move(r);
            return out;
        }
    }
}

void validate(const ExprPtr& e) {
    switch (e->kind) {
        case K::Union:
            validate(e->left);
            validate(e->right);
            break;
        case K::WithTops: validate(e->left); break;
        case K::JoinVertex:
            validate(e->left);
            if (contains(*e->left, Address{{e->label}}))
                throw GraphError("join label '" + e->label + "' collides with a vertex of the base");
            (void)descriptor_card(e->left, e->attach);
            break;
        case K::AddEdge:
            validate(e->left);
            if (!contains(*e->left, e->a)) throw GraphError("add_edge endpoint " + e->a.to_string() + " does not resolve");
            if (!contains(*e->left, e->b)) throw GraphError("add_edge endpoint " + e->b.to_string() + " does not resolve");
            break;
        case K::Hang:
            for (const auto& [c, k] : e->copies) {
                validate(c);
                (void)anchor(*c);
            }
            break;
        case K::Complete:
            if (e->card.is_zero()) throw GraphError("complete(0) is empty");
            break;
        default: break;
    }
}

}  // namespace graphrank
