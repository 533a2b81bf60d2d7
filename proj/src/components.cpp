#include "graphrank/components.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphrank/parser.hpp"
#include "graphrank/pattern.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;

const std::vector<std::string> kPlaceholders = {"{$}", "{$#}", "{$+}", "{$*}"};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
        s.replace(at, from.size(), to);
    return s;
}

Address addr_or_empty(const std::string& text) { return text.empty() ? Address{} : Address::parse(text); }

std::string join_text(const Address& prefix, const std::string& rest) {
    if (prefix.empty()) return rest;
    if (rest.empty()) return prefix.to_string();
    return prefix.to_string() + "/" + rest;
}

ComponentsResult unsupported(const Expr& e, const Descriptor& X) {
    ComponentsResult r;
    r.unsupported = "components of " + render(e) + " minus " + X.to_string() + " are outside the catalog";
    return r;
}

// Explicit addresses of X if X is a finite explicit set (or a cup of them).
std::optional<std::vector<Address>> explicit_of(const Descriptor& X) {
    if (X.kind == DK::Explicit) return X.addresses;
    if (X.kind == DK::Union) {
        std::vector<Address> out;
        for (const auto& p : X.parts) {
            auto sub = explicit_of(p);
            if (!sub) return std::nullopt;
            out.insert(out.end(), sub->begin(), sub->end());
        }
        return out;
    }
    return std::nullopt;
}

bool is_all(const Descriptor& X) { return X.kind == DK::All && X.region.empty(); }

bool is_empty_set(const Descriptor& X) {
    auto ex = explicit_of(X);
    return ex && ex->empty();
}

// A finite component given by its host vertices; neighbours in X come from
// the explicit part of each neighbourhood.
RegionDescriptor finite_region(const ExprPtr& host, std::vector<Address> verts, const std::vector<bool>* unused,
                               const std::function<bool(const Address&)>& in_x) {
    (void)unused;
    std::sort(verts.begin(), verts.end());
    RegionDescriptor r;
    r.host = host;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < verts.size(); ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(*host, verts[i], verts[j])) edges.emplace_back(labels[i], labels[j]);
    r.expr = make_finite(labels, edges);
    for (std::size_t i = 0; i < verts.size(); ++i) r.explicit_map.emplace_back(Address{{labels[i]}}, verts[i]);
    r.members = Descriptor::explicit_set(verts);
    std::set<Address> attach;
    for (const auto& v : verts) {
        auto nd = adjacency(host, v);
        for (const auto& u : nd.vertices)
            if (in_x(u)) {
                attach.insert(u);
                if (r.link_member.empty()) {
                    r.link_member = v.to_string();
                    r.link_x = u.to_string();
                }
            }
    }
    Descriptor att = Descriptor::explicit_set({attach.begin(), attach.end()});
    r.attachment = [att](const Address&) { return att; };
    r.attachment_text = att.to_string();
    r.note = "finite component";
    return r;
}

// Family of isolated vertices whose host addresses match `host_pattern`.
RegionDescriptor isolated_family(const ExprPtr& host, Cardinality count, Descriptor members, std::string host_pattern,
                                 std::string link_x, std::string attachment_text) {
    RegionDescriptor r;
    r.host = host;
    r.expr = make_finite({"v"}, {});
    r.count = count;
    r.members = std::move(members);
    r.embedding = Embedding::prefix(Address{{"v"}}, host_pattern);
    r.link_member = host_pattern;
    r.link_x = std::move(link_x);
    r.attachment = [attachment_text](const Address& key) { return parse_descriptor(substitute_key(attachment_text, key)); };
    r.attachment_text = std::move(attachment_text);
    r.note = "isolated vertices";
    return r;
}

RegionDescriptor copy_family(const ExprPtr& host, ExprPtr copy, Cardinality count, Descriptor members,
                             Address local_prefix, std::string host_prefix, std::string link_member, std::string link_x,
                             std::string attachment_text, std::string note) {
    RegionDescriptor r;
    r.host = host;
    r.expr = std::move(copy);
    r.count = count;
    r.members = std::move(members);
    r.embedding = Embedding::prefix(std::move(local_prefix), std::move(host_prefix));
    r.link_member = std::move(link_member);
    r.link_x = std::move(link_x);
    r.attachment = [attachment_text](const Address& key) { return parse_descriptor(substitute_key(attachment_text, key)); };
    r.attachment_text = std::move(attachment_text);
    r.note = std::move(note);
    return r;
}

RegionDescriptor whole(const ExprPtr& e) {
    RegionDescriptor r;
    r.host = e;
    r.expr = e;
    r.members = Descriptor::all();
    r.embedding = Embedding::identity();
    r.attachment = [](const Address&) { return Descriptor::explicit_set({}); };
    r.attachment_text = "{}";
    r.note = "the whole graph";
    return r;
}

// Re-expresses a region of a sub-expression (reached through `step`, whose
// vertices carry `prefix`) in terms of the outer expression.
RegionDescriptor lift_region(RegionDescriptor r, const ExprPtr& outer, const std::string& step, const Address& prefix) {
    r.host = outer;
    r.members = lift(r.members, {step}, prefix);
    if (r.embedding) {
        r.embedding->host_prefix = join_text(prefix, r.embedding->host_prefix);
    }
    for (auto& [local, h] : r.explicit_map) h = h.prefixed(prefix);
    if (!r.link_member.empty()) r.link_member = join_text(prefix, r.link_member);
    if (!r.link_x.empty()) r.link_x = join_text(prefix, r.link_x);
    auto inner = r.attachment;
    r.attachment = [inner, step, prefix](const Address& key) { return lift(inner(key), {step}, prefix); };
    if (!prefix.empty()) r.attachment_text = "lifted to " + prefix.to_string() + ": " + r.attachment_text;
    return r;
}

ComponentsResult finite_graph_components(const ExprPtr& e, const Descriptor& X) {
    auto t = truncate(e, 1, 1);
    std::vector<bool> removed(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) removed[i] = in_descriptor(e, X, t.vertices[i]);
    ComponentsResult out;
    auto in_x = [&](const Address& a) { return contains(*e, a) && in_descriptor(e, X, a); };
    for (const auto& comp : components(t, removed)) {
        std::vector<Address> verts;
        for (auto i : comp) verts.push_back(t.vertices[i]);
        out.regions.push_back(finite_region(e, verts, nullptr, in_x));
    }
    return out;
}

Address spine_at(const std::string& stem, std::uint64_t n) { return Address{{stem + std::to_string(n)}}; }

// Ray or comb minus finitely many spine vertices.
ComponentsResult spine_minus_finite(const ExprPtr& e, const std::vector<Address>& xs) {
    std::set<std::uint64_t> removed;
    for (const auto& a : xs) {
        if (a.size() != 1) return {};
        auto n = step_index(a[0], "r");
        if (!n) return {};
        removed.insert(*n);
    }
    ComponentsResult out;
    const std::uint64_t tooth = e->kind == K::Comb ? e->tooth : 0;
    auto in_x = [&](const Address& a) {
        return a.size() == 1 && step_index(a[0], "r") && removed.count(*step_index(a[0], "r"));
    };
    auto teeth_of = [&](std::uint64_t n) {
        std::vector<Address> ts;
        for (std::uint64_t j = 1; j <= tooth; ++j) ts.push_back(spine_at("r", n).child("t" + std::to_string(j)));
        return ts;
    };
    const std::uint64_t end = removed.empty() ? 0 : *removed.rbegin() + 1;
    std::vector<Address> segment;
    for (std::uint64_t n = 0; n < end; ++n) {
        if (removed.count(n)) {
            if (!segment.empty()) out.regions.push_back(finite_region(e, segment, nullptr, in_x));
            segment.clear();
            auto ts = teeth_of(n);
            if (!ts.empty()) out.regions.push_back(finite_region(e, ts, nullptr, in_x));
            continue;
        }
        segment.push_back(spine_at("r", n));
        for (auto& t : teeth_of(n)) segment.push_back(t);
    }
    if (!segment.empty()) out.regions.push_back(finite_region(e, segment, nullptr, in_x));

    RegionDescriptor tail;
    tail.host = e;
    tail.expr = e->kind == K::Comb ? make_comb(tooth) : make_ray();
    tail.members = removed.empty() ? Descriptor::all() : Descriptor::minus(Descriptor::all(), Descriptor::under(Address{}));
    if (!removed.empty()) {
        std::vector<Address> before;
        for (std::uint64_t n = 0; n < end; ++n) {
            before.push_back(spine_at("r", n));
            for (auto& t : teeth_of(n)) before.push_back(t);
        }
        tail.members = Descriptor::minus(Descriptor::all(), Descriptor::explicit_set(before));
    }
    tail.embedding = Embedding::shift("r", end);
    tail.link_member = spine_at("r", end).to_string();
    if (!removed.empty()) tail.link_x = spine_at("r", end - 1).to_string();
    Descriptor att = removed.empty() ? Descriptor::explicit_set({}) : Descriptor::explicit_set({spine_at("r", end - 1)});
    tail.attachment = [att](const Address&) { return att; };
    tail.attachment_text = att.to_string();
    tail.note = "tail";
    out.regions.push_back(std::move(tail));
    return out;
}

ComponentsResult complete_minus(const ExprPtr& e, const Descriptor& X) {
    // a copy of the same complete graph survives any countable deletion from an
    // uncountable one, and any finite or co-infinite progression deletion from K_aleph0
    RegionDescriptor r;
    r.host = e;
    r.expr = e;
    r.members = Descriptor::minus(Descriptor::all(), X);
    auto ex = explicit_of(X);
    std::set<Address> xs;
    if (ex) xs.insert(ex->begin(), ex->end());
    // survivors keep their own addresses inside the copy unless X is an initial segment
    r.embedding = Embedding::identity();
    if (ex) {
        std::uint64_t m = 0;
        while (xs.count(spine_at("k", m))) ++m;
        if (m == xs.size()) r.embedding = Embedding::shift("k", m);
    }
    std::optional<Address> least;
    for (std::uint64_t i = 0; i < 64 && !least; ++i)
        if (!in_descriptor(e, X, spine_at("k", i))) least = spine_at("k", i);
    if (!least) least = Address{{"kb1"}};
    r.link_member = least->to_string();
    for (std::uint64_t i = 0; i < 64 && r.link_x.empty(); ++i)
        if (in_descriptor(e, X, spine_at("k", i))) r.link_x = spine_at("k", i).to_string();
    r.attachment = [X](const Address&) { return X; };
    r.attachment_text = X.to_string();
    r.note = "self-similar copy";
    ComponentsResult out;
    out.regions.push_back(std::move(r));
    return out;
}

ComponentsResult rec(const ExprPtr& e, const Descriptor& X);

ComponentsResult rec(const ExprPtr& e, const Descriptor& X) {
    if (is_all(X)) return {};
    if (is_empty_set(X)) {
        if (is_connected(e) == Verdict::Yes) return ComponentsResult{{whole(e)}, std::nullopt};
        if (e->kind != K::Union) return unsupported(*e, X);
    }
    const Expr& x = *e;
    const auto ex = explicit_of(X);

    switch (x.kind) {
        case K::Finite: return finite_graph_components(e, X);
        case K::Star: {
            if (x.card.is_finite()) return finite_graph_components(e, X);
            const Address c{{"c"}};
            bool center = in_descriptor(e, X, c);
            if (X.kind == DK::Leaves && X.region.empty()) {
                ComponentsResult out;
                out.regions.push_back(finite_region(e, {c}, nullptr, [&](const Address& a) { return in_descriptor(e, X, a); }));
                return out;
            }
            if (center && (ex || X.kind == DK::Centers)) {
                // leaves outside X become isolated
                Descriptor leaves_left = ex ? Descriptor::minus(Descriptor::leaves(), X) : Descriptor::leaves();
                ComponentsResult out;
                out.regions.push_back(isolated_family(e, x.card, leaves_left, "c/{$}", "c", "{c}"));
                if (ex && ex->size() > 1) out.regions.back().note = "isolated leaves not in X";
                return out;
            }
            return unsupported(x, X);
        }
        case K::Tree: {
            if (ex && ex->size() == 1 && ex->front() == Address{{"root"}}) {
                ComponentsResult out;
                if (x.card.is_zero()) return out;
                out.regions.push_back(copy_family(e, e, x.card, Descriptor::minus(Descriptor::all(), X), Address{{"root"}},
                                                  "root/{$}", "root/{$}", "root", "{root}", "subtrees below the root"));
                return out;
            }
            if (X.kind == DK::Level && X.level == 0 && X.region.empty()) return rec(e, Descriptor::explicit_set({Address{{"root"}}}));
            return unsupported(x, X);
        }
        case K::WithTops: {
            const bool whole_base = (X.kind == DK::All && X.region == RegionPath{"base"});
            if (whole_base) {
                ComponentsResult out;
                std::string att = x.mode == TopsMode::WholeRay ? "prefix({$}, base)" : "progression({$}, base, 0, 2)";
                out.regions.push_back(isolated_family(e, Cardinality::aleph1(), Descriptor::tops(), "top/{$+}", "root", att));
                out.regions.back().note = "isolated tops";
                return out;
            }
            return unsupported(x, X);
        }
        case K::Ray:
        case K::Comb: {
            if (ex) {
                auto r = spine_minus_finite(e, *ex);
                if (r.regions.empty()) return unsupported(x, X);
                return r;
            }
            if (X.kind == DK::Spine && X.region.empty()) {
                ComponentsResult out;
                if (x.kind == K::Ray || x.tooth == 0) return out;
                std::vector<std::string> labels;
                std::vector<std::pair<std::string, std::string>> edges;
                for (std::uint64_t j = 1; j <= x.tooth; ++j) {
                    labels.push_back("t" + std::to_string(j));
                    if (j > 1) edges.emplace_back("t" + std::to_string(j - 1), "t" + std::to_string(j));
                }
                out.regions.push_back(copy_family(e, make_finite(labels, edges), Cardinality::aleph0(),
                                                  Descriptor::minus(Descriptor::all(), X), Address{}, "r{$#}", "r{$#}/t1",
                                                  "r{$}", "{r{$}}", "teeth"));
                return out;
            }
            return unsupported(x, X);
        }
        case K::Complete: {
            if (x.card.is_finite()) return finite_graph_components(e, X);
            auto size = descriptor_card(e, X);
            if (ex || (X.kind == DK::Progression && X.region.empty() && size.is_countable() &&
                       (!x.card.is_countable() || X.step >= 2 || X.start > 0)))
                return complete_minus(e, X);
            return unsupported(x, X);
        }
        case K::Union: {
            ComponentsResult out;
            for (const std::string side : {"left", "right"}) {
                auto part = descriptor_on_side(X, side);
                if (!part) return unsupported(x, X);
                const auto& sub = side == "left" ? x.left : x.right;
                auto r = rec(sub, *part);
                if (!r.ok()) return r;
                for (auto& reg : r.regions) out.regions.push_back(lift_region(std::move(reg), e, side, Address{{side}}));
            }
            return out;
        }
        case K::JoinVertex: {
            bool has_label = false;
            auto part = descriptor_on_base(X, x.label, has_label);
            if (!part) return unsupported(x, X);
            if (!has_label) {
                if (X.kind == DK::All && X.region == RegionPath{"base"}) {
                    ComponentsResult out;
                    out.regions.push_back(finite_region(e, {Address{{x.label}}}, nullptr, [](const Address&) { return false; }));
                    return out;
                }
                return unsupported(x, X);
            }
            auto r = rec(x.left, *part);
            if (!r.ok()) return r;
            ComponentsResult out;
            const Address label{{x.label}};
            for (auto& reg : r.regions) {
                auto lifted = lift_region(std::move(reg), e, "base", Address{});
                // the deleted join vertex is a neighbour of members meeting the attach set
                auto key = lifted.representative_key();
                bool touches = false;
                auto t = truncate(x.left, 3, 2);
                for (const auto& v : t.vertices) {
                    auto back = lifted.from_host(v);
                    if (back && back->first == key && in_descriptor(x.left, x.attach, v)) {
                        touches = true;
                        break;
                    }
                }
                if (touches) {
                    auto inner = lifted.attachment;
                    lifted.attachment = [inner, label](const Address& k) {
                        return Descriptor::cup({inner(k), Descriptor::explicit_set({label})});
                    };
                    lifted.attachment_text = "cup(" + lifted.attachment_text + ", {" + x.label + "})";
                    if (lifted.link_x.empty() || label.to_string() < lifted.link_x) {
                        // keep the least X neighbour as the link target
                        if (lifted.link_x.empty() || Address::parse(substitute_key(lifted.link_x, key)) > label)
                            lifted.link_x = label.to_string();
                    }
                }
                out.regions.push_back(std::move(lifted));
            }
            return out;
        }
        case K::AddEdge: {
            auto r = rec(x.left, X);
            if (!r.ok()) return r;
            if (in_descriptor(x.left, X, x.a) || in_descriptor(x.left, X, x.b)) {
                ComponentsResult out;
                for (auto& reg : r.regions) out.regions.push_back(lift_region(std::move(reg), e, "base", Address{}));
                return out;
            }
            // the new edge survives: it must stay inside one single component
            for (auto& reg : r.regions) {
                auto la = reg.from_host(x.a), lb = reg.from_host(x.b);
                if (la && lb && reg.count == Cardinality::finite(1)) {
                    reg.expr = make_add_edge(reg.expr, la->second, lb->second);
                } else if (la || lb) {
                    return unsupported(x, X);
                }
            }
            ComponentsResult out;
            for (auto& reg : r.regions) out.regions.push_back(lift_region(std::move(reg), e, "base", Address{}));
            return out;
        }
        case K::Hang: {
            if (ex && ex->size() == 1 && ex->front() == Address{{"h"}}) {
                ComponentsResult out;
                for (std::size_t j = 0; j < x.copies.size(); ++j) {
                    const auto& [copy, k] = x.copies[j];
                    const std::string pre = "h/" + std::to_string(j) + "/{$}";
                    out.regions.push_back(copy_family(e, copy, k, Descriptor::under(Address{{"h", std::to_string(j)}}),
                                                      Address{}, pre, join_text(Address::parse("h/" + std::to_string(j)), "{$}/" + anchor(*copy).to_string()),
                                                      "h", "{h}", "copies below the root"));
                }
                return out;
            }
            return unsupported(x, X);
        }
    }
    return unsupported(x, X);
}

}  // namespace

// X restricted to one side of a union, in that side's coordinates.
std::optional<Descriptor> descriptor_on_side(const Descriptor& X, const std::string& side) {
    const Address pre{{side}};
    if (auto ex = explicit_of(X)) {
        std::vector<Address> mine;
        for (const auto& a : *ex)
            if (a.starts_with(pre)) mine.push_back(a.strip_prefix(pre));
        return Descriptor::explicit_set(mine);
    }
    if (X.kind == DK::Under) {
        if (X.head.starts_with(pre)) return Descriptor::under(X.head.strip_prefix(pre));
        return Descriptor::explicit_set({});
    }
    if (X.kind == DK::Union) {
        std::vector<Descriptor> parts;
        for (const auto& p : X.parts) {
            auto s = descriptor_on_side(p, side);
            if (!s) return std::nullopt;
            if (!is_empty_set(*s)) parts.push_back(*s);
        }
        if (parts.empty()) return Descriptor::explicit_set({});
        if (parts.size() == 1) return parts.front();
        return Descriptor::cup(parts);
    }
    if (X.kind == DK::Minus) return std::nullopt;
    if (X.region.empty()) {
        if (X.kind == DK::All) return Descriptor::all();
        return std::nullopt;
    }
    if (X.region.front() != side) return Descriptor::explicit_set({});
    Descriptor d = X;
    d.region.erase(d.region.begin());
    return d;
}

// X inside the base of a join_vertex, or nullopt if X mentions other regions.
std::optional<Descriptor> descriptor_on_base(const Descriptor& X, const std::string& label, bool& has_label) {
    if (auto ex = explicit_of(X)) {
        std::vector<Address> mine;
        for (const auto& a : *ex) {
            if (a == Address{{label}})
                has_label = true;
            else
                mine.push_back(a);
        }
        return Descriptor::explicit_set(mine);
    }
    if (X.kind == DK::Union) {
        std::vector<Descriptor> parts;
        for (const auto& p : X.parts) {
            auto s = descriptor_on_base(p, label, has_label);
            if (!s) return std::nullopt;
            if (!is_empty_set(*s)) parts.push_back(*s);
        }
        if (parts.empty()) return Descriptor::explicit_set({});
        if (parts.size() == 1) return parts.front();
        return Descriptor::cup(parts);
    }
    if (X.kind == DK::Under) return X;
    if (X.kind == DK::Minus) return std::nullopt;
    if (X.region.empty()) {
        if (X.kind == DK::All) {
            has_label = true;
            return Descriptor::all();
        }
        return X;  // e.g. spine(.) of a join resolves through to the base
    }
    if (X.region.front() != "base") return std::nullopt;
    Descriptor d = X;
    d.region.erase(d.region.begin());
    return d;
}

std::string substitute_key(const std::string& text, const Address& key) {
    std::string out = text;
    for (const auto& p : kPlaceholders) out = replace_all(out, p, key.to_string());
    return out;
}

std::string pattern_to_template(const std::string& pattern) {
    return replace_all(replace_all(pattern, "{$#}", "{$}"), "{$+}", "{$*}");
}

std::optional<Address> Embedding::to_host(const Address& local, const Address& key) const {
    if (kind == Kind::Shift) {
        if (local.empty()) return std::nullopt;
        auto n = step_index(local[0], stem);
        if (!n) return std::nullopt;
        auto steps = local.steps();
        steps[0] = stem + std::to_string(*n + offset);
        return Address(std::move(steps)).prefixed(addr_or_empty(host_prefix));
    }
    if (!local.starts_with(local_prefix)) return std::nullopt;
    auto rest = local.strip_prefix(local_prefix);
    if (host_prefix.empty()) return rest;
    if (has_key() && key.empty()) return std::nullopt;
    return rest.prefixed(Address::parse(substitute_key(host_prefix, key)));
}

std::optional<std::pair<Address, Address>> Embedding::from_host(const Address& host) const {
    if (kind == Kind::Shift) {
        const auto pre = addr_or_empty(host_prefix);
        if (!host.starts_with(pre)) return std::nullopt;
        const auto rest = host.strip_prefix(pre);
        if (rest.empty()) return std::nullopt;
        auto n = step_index(rest[0], stem);
        if (!n || *n < offset) return std::nullopt;
        auto steps = rest.steps();
        steps[0] = stem + std::to_string(*n - offset);
        return std::make_pair(Address{}, Address{std::move(steps)});
    }
    if (host_prefix.empty()) return std::make_pair(Address{}, host.prefixed(local_prefix));
    auto m = Pattern::parse(host_prefix).match_prefix(host);
    if (!m) return std::nullopt;
    Address key;
    if (auto it = m->first.single.find("$"); it != m->first.single.end())
        key = Address(std::vector<std::string>{it->second});
    else if (auto jt = m->first.multi.find("$"); jt != m->first.multi.end())
        key = Address(jt->second);
    Address rest(std::vector<std::string>(host.steps().begin() + static_cast<std::ptrdiff_t>(m->second), host.steps().end()));
    return std::make_pair(key, rest.prefixed(local_prefix));
}

std::string Embedding::to_string() const {
    if (kind == Kind::Shift)
        return "shift " + stem + " by " + std::to_string(offset) + (host_prefix.empty() ? "" : " below " + host_prefix);
    const auto local = local_prefix.empty() ? std::string(".") : local_prefix.to_string();
    return local + " -> " + (host_prefix.empty() ? std::string(".") : host_prefix);
}

std::optional<Address> RegionDescriptor::to_host(const Address& local, const Address& key) const {
    if (!explicit_map.empty()) {
        for (const auto& [l, h] : explicit_map)
            if (l == local) return h;
        return std::nullopt;
    }
    if (!embedding) return std::nullopt;
    return embedding->to_host(local, key);
}

std::optional<std::pair<Address, Address>> RegionDescriptor::from_host(const Address& host_addr) const {
    if (!explicit_map.empty()) {
        for (const auto& [l, h] : explicit_map)
            if (h == host_addr) return std::make_pair(Address{}, l);
        return std::nullopt;
    }
    if (!embedding || !in_descriptor(host, members, host_addr)) return std::nullopt;
    auto back = embedding->from_host(host_addr);
    if (!back || !contains(*expr, back->second)) return std::nullopt;
    return back;
}

std::vector<Address> RegionDescriptor::keys_in(const Truncation& t) const {
    std::set<Address> keys;
    for (const auto& v : t.vertices)
        if (auto back = from_host(v)) keys.insert(back->first);
    return {keys.begin(), keys.end()};
}

Address RegionDescriptor::representative_key() const {
    if (!is_family()) return {};
    auto keys = keys_in(truncate(host, 2, 2));
    if (keys.empty()) return {};
    return keys.front();
}

ComponentsResult components_after_deletion(const ExprPtr& e, const Descriptor& X) {
    try {
        return rec(e, X);
    } catch (const GraphError& err) {
        ComponentsResult r;
        r.unsupported = err.what();
        return r;
    }
}

Verdict is_connected(const ExprPtr& e) {
    const Expr& x = *e;
    switch (x.kind) {
        case K::Finite: return graphrank::is_connected(truncate(e, 1, 1)) ? Verdict::Yes : Verdict::No;
        case K::Ray:
        case K::Comb:
        case K::Star:
        case K::Tree:
        case K::WithTops: return Verdict::Yes;
        case K::Complete: return x.card.is_zero() ? Verdict::No : Verdict::Yes;
        case K::Union: return Verdict::No;
        case K::Hang: {
            Verdict v = Verdict::Yes;
            for (const auto& [c, k] : x.copies) {
                auto cv = is_connected(c);
                if (cv == Verdict::No) return Verdict::No;
                if (cv == Verdict::Unknown) v = Verdict::Unknown;
            }
            return v;
        }
        case K::JoinVertex:
        case K::AddEdge: {
            auto base = is_connected(x.left);
            if (base == Verdict::Yes) return Verdict::Yes;
            if (x.left->kind != K::Union) return Verdict::Unknown;
            const auto& u = *x.left;
            if (is_connected(u.left) != Verdict::Yes || is_connected(u.right) != Verdict::Yes) return Verdict::Unknown;
            if (x.kind == K::AddEdge)
                return (x.a[0] != x.b[0]) ? Verdict::Yes : Verdict::No;
            // the join vertex links the sides iff its attach set meets both
            auto t = truncate(x.left, 3, 2);
            bool left = false, right = false;
            for (const auto& v : t.vertices)
                if (in_descriptor(x.left, x.attach, v)) (v[0] == "left" ? left : right) = true;
            if (left && right) return Verdict::Yes;
            return descriptor_card(x.left, x.attach).is_zero() ? Verdict::No : Verdict::Unknown;
        }
    }
    return Verdict::Unknown;
}

}  // namespace graphrank
