#include "graphrank/ends.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "graphrank/components.hpp"

namespace graphrank {

namespace {

using K = Expr::Kind;
using DK = Descriptor::Kind;
using Part = EndSubset::Part;

}  // namespace

RaySchema RaySchema::indexed(Address prefix, std::string stem, std::uint64_t start, std::uint64_t step) {
    RaySchema r;
    r.kind = Kind::Indexed;
    r.prefix = std::move(prefix);
    r.stem = std::move(stem);
    r.start = start;
    r.step = step;
    return r;
}

RaySchema RaySchema::branch(Address head) {
    RaySchema r;
    r.kind = Kind::Branch;
    r.head = std::move(head);
    return r;
}

Address RaySchema::vertex(std::uint64_t n) const {
    if (kind == Kind::Indexed) return Address{{stem + std::to_string(start + n * step)}}.prefixed(prefix);
    auto steps = head.steps();
    for (std::uint64_t i = 0; i < n; ++i) steps.push_back("0");
    return Address(std::move(steps)).prefixed(prefix);
}

std::optional<std::uint64_t> RaySchema::position(const Address& v) const {
    if (!v.starts_with(prefix)) return std::nullopt;
    auto local = v.strip_prefix(prefix);
    if (kind == Kind::Indexed) {
        if (local.size() != 1) return std::nullopt;
        auto n = step_index(local[0], stem);
        if (!n || *n < start || (*n - start) % step != 0) return std::nullopt;
        return (*n - start) / step;
    }
    if (!local.starts_with(head)) return std::nullopt;
    auto rest = local.strip_prefix(head);
    for (const auto& s : rest.steps())
        if (s != "0") return std::nullopt;
    return rest.size();
}

RaySchema RaySchema::prefixed(const Address& p) const {
    RaySchema r = *this;
    r.prefix = r.prefix.prefixed(p);
    return r;
}

std::string RaySchema::to_string() const {
    auto pre = prefix.empty() ? std::string() : prefix.to_string() + "/";
    if (kind == Kind::Indexed) {
        std::string out = pre + stem + "{" + std::to_string(start);
        if (step != 1) out += " + " + std::to_string(step) + "n";
        else out += " + n";
        return out + "}";
    }
    return pre + head.to_string() + "/0/0/...";
}

const EndClass* EndSpace::find(const std::string& id) const {
    for (const auto& c : classes)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

EndSpace one_end(std::string id, RaySchema ray, Verdict dominated, std::optional<Address> witness, std::string note) {
    EndSpace s;
    s.classes.push_back(EndClass{std::move(id), Cardinality::finite(1), std::move(ray), dominated, std::move(witness), std::move(note)});
    return s;
}

void add_prefixed(EndSpace& out, const EndSpace& in, const std::string& id_prefix, const Address& addr_prefix,
                  Cardinality multiplicity = Cardinality::finite(1)) {
    for (auto c : in.classes) {
        c.id = id_prefix + c.id;
        c.ray = c.ray.prefixed(addr_prefix);
        c.count = c.count * multiplicity;
        if (c.witness) c.witness = c.witness->prefixed(addr_prefix);
        out.classes.push_back(std::move(c));
    }
}

std::string first_index(Cardinality k) { return k.is_countable() ? "0" : "b1"; }

EndSpace space_rec(const ExprPtr& e) {
    const Expr& x = *e;
    switch (x.kind) {
        case K::Finite:
        case K::Star: return {};
        case K::Ray: return one_end("ray", RaySchema::indexed({}, "r"), Verdict::No, std::nullopt, "locally finite");
        case K::Comb: return one_end("ray", RaySchema::indexed({}, "r"), Verdict::No, std::nullopt, "locally finite");
        case K::Complete:
            if (x.card.is_finite()) return {};
            return one_end("end", RaySchema::indexed({}, "k", 1), Verdict::Yes, Address{{"k0"}},
                           "every vertex sends an infinite fan");
        case K::Tree: {
            if (x.card.is_zero()) return {};
            EndSpace s = one_end(x.card == Cardinality::finite(1) ? "ray" : "branches", RaySchema::branch(Address{{"root"}}),
                                 Verdict::No, std::nullopt, "rooted branches; every vertex has finite or tree degree only");
            s.classes[0].count = branch_count(x.card);
            return s;
        }
        case K::WithTops: {
            EndSpace s = space_rec(x.left);
            for (auto& c : s.classes) {
                c.dominated = Verdict::Yes;
                c.witness = Address{{"top", "root"}};
                c.note = "each branch is dominated by its top";
            }
            return s;
        }
        case K::Union: {
            EndSpace s;
            auto l = space_rec(x.left), r = space_rec(x.right);
            if (!l.ok()) return l;
            if (!r.ok()) return r;
            add_prefixed(s, l, "left.", Address{{"left"}});
            add_prefixed(s, r, "right.", Address{{"right"}});
            return s;
        }
        case K::JoinVertex: {
            EndSpace s = space_rec(x.left);
            if (!s.ok() || s.empty()) return s;
            auto closure = closure_ends(x.left, s, x.attach);
            for (std::size_t i = 0; i < s.classes.size(); ++i) {
                auto& c = s.classes[i];
                if (c.dominated == Verdict::Yes) continue;
                switch (closure.entries[i].part) {
                    case Part::All:
                        // infinitely many attach vertices near every ray: the joined vertex dominates it
                        c.dominated = Verdict::Yes;
                        c.witness = Address{{x.label}};
                        c.note = "dominated by the joined vertex";
                        break;
                    case Part::None: break;
                    case Part::Some:
                    case Part::Unknown: c.dominated = Verdict::Unknown; break;
                }
            }
            return s;
        }
        case K::AddEdge: return space_rec(x.left);  // one edge changes neither ends nor domination
        case K::Hang: {
            EndSpace s;
            for (std::size_t j = 0; j < x.copies.size(); ++j) {
                const auto& [copy, k] = x.copies[j];
                auto sub = space_rec(copy);
                if (!sub.ok()) return sub;
                add_prefixed(s, sub, "h." + std::to_string(j) + ".",
                             Address{{"h", std::to_string(j), first_index(k)}}, k);
            }
            return s;
        }
    }
    EndSpace s;
    s.unsupported = "no end rule for " + render(x);
    return s;
}

bool surely_infinite(const ExprPtr& e, const Descriptor& M) {
    if (M.kind == DK::Minus)
        if (surely_infinite(e, M.parts[0]) && descriptor_card(e, M.parts[1]).is_finite()) return true;
    if (M.kind == DK::Union)
        return std::any_of(M.parts.begin(), M.parts.end(), [&](const Descriptor& p) { return surely_infinite(e, p); });
    if (M.kind != DK::Minus) return !descriptor_card(e, M).is_finite();
    // growth evidence along the spine: member counts keep rising with depth
    auto count = [&](unsigned d) { return members(truncate(e, d, 2), M).size(); };
    const auto a = count(6), b = count(12), c = count(18);
    return a < b && b < c;
}

EndSubset::Entry entry(Part p, std::string d = {}) { return EndSubset::Entry{p, std::move(d)}; }

std::vector<EndSubset::Entry> uniform(std::size_t n, Part p) { return std::vector<EndSubset::Entry>(n, entry(p)); }

EndSubset::Entry combine(const std::vector<EndSubset::Entry>& xs) {
    bool unknown = false;
    std::vector<std::string> some;
    for (const auto& x : xs) {
        if (x.part == Part::All) return x;
        if (x.part == Part::Unknown) unknown = true;
        if (x.part == Part::Some) some.push_back(x.detail);
    }
    if (unknown) return entry(Part::Unknown);
    if (some.empty()) return entry(Part::None);
    std::string d;
    for (const auto& s : some) d += (d.empty() ? "" : " or ") + s;
    return entry(Part::Some, d);
}

// Closure of M inside a tree(card) expression given in tree coordinates.
EndSubset::Entry tree_closure(const ExprPtr& tree, const Descriptor& M) {
    const auto k = tree->card;
    const bool single = k == Cardinality::finite(1);
    switch (M.kind) {
        case DK::Explicit:
        case DK::Level:
        case DK::Children: return entry(Part::None);
        case DK::All: return entry(Part::All);
        case DK::BranchPrefix:
            return single ? entry(Part::All) : entry(Part::Some, "branch " + M.head.to_string());
        case DK::Progression:
            if (!M.on_branch) return entry(Part::Unknown);
            return single ? entry(Part::All) : entry(Part::Some, "branch " + M.head.to_string());
        case DK::Under:
            if (!tree_depth(k, M.head)) return entry(Part::None);
            return single ? entry(Part::All) : entry(Part::Some, "branches through " + M.head.to_string());
        default: return entry(Part::Unknown);
    }
}

Descriptor strip_region_step(Descriptor d, const std::string& step) {
    if (!d.region.empty() && d.region.front() == step) d.region.erase(d.region.begin());
    for (auto& p : d.parts) p = strip_region_step(p, step);
    return d;
}

std::vector<EndSubset::Entry> closure_rec(const ExprPtr& e, const EndSpace& s, const Descriptor& M) {
    const std::size_t n = s.classes.size();
    if (n == 0) return {};
    if (M.kind == DK::Explicit) return uniform(n, Part::None);  // finite sets are dispersed
    const auto core_kind = core(*e).kind;
    if (core_kind == K::Ray || core_kind == K::Comb || core_kind == K::Complete) {
        // one end, and every infinite set converges to it
        if (surely_infinite(e, M)) return uniform(n, Part::All);
        if (descriptor_card(e, M).is_finite()) return uniform(n, Part::None);
    }
    if (M.kind == DK::All && M.region.empty()) return uniform(n, Part::All);
    if (M.kind == DK::Union) {
        std::vector<std::vector<EndSubset::Entry>> parts;
        for (const auto& p : M.parts) parts.push_back(closure_rec(e, s, p));
        std::vector<EndSubset::Entry> out;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<EndSubset::Entry> col;
            for (const auto& p : parts) col.push_back(p[i]);
            out.push_back(combine(col));
        }
        return out;
    }
    if (M.kind == DK::Minus) {
        // removing a dispersed set does not change the closure
        auto a = closure_rec(e, s, M.parts[0]);
        auto b = closure_rec(e, s, M.parts[1]);
        for (std::size_t i = 0; i < n; ++i)
            if (a[i].part != Part::None && b[i].part != Part::None) a[i] = entry(Part::Unknown);
        return a;
    }
    const Expr& x = *e;
    switch (x.kind) {
        case K::Ray:
        case K::Comb:
        case K::Complete:
            return uniform(n, Part::Unknown);
        case K::Tree: return {tree_closure(e, M)};
        case K::WithTops: {
            if (M.kind == DK::Tops) return uniform(n, Part::All);
            if (M.kind == DK::TopsThrough) return {entry(Part::Some, "branches through " + M.head.to_string())};
            if (M.region.size() <= 1 && (M.region.empty() || M.region.front() == "base"))
                return {tree_closure(x.left, strip_region_step(M, "base"))};
            return uniform(n, Part::Unknown);
        }
        case K::Union: {
            std::vector<EndSubset::Entry> out;
            for (const std::string side : {"left", "right"}) {
                auto part = descriptor_on_side(M, side);
                const auto& sub = side == "left" ? x.left : x.right;
                auto ss = space_rec(sub);
                if (!part) {
                    auto u = uniform(ss.classes.size(), Part::Unknown);
                    out.insert(out.end(), u.begin(), u.end());
                    continue;
                }
                auto r = closure_rec(sub, ss, *part);
                out.insert(out.end(), r.begin(), r.end());
            }
            return out;
        }
        case K::JoinVertex: {
            bool has_label = false;
            auto part = descriptor_on_base(M, x.label, has_label);
            if (!part) return uniform(n, Part::Unknown);
            return closure_rec(x.left, space_rec(x.left), *part);
        }
        case K::AddEdge: return closure_rec(x.left, space_rec(x.left), strip_region_step(M, "base"));
        case K::Hang: {
            if (M.kind == DK::Anchors || M.kind == DK::Centers) return uniform(n, Part::None);
            if (M.kind == DK::Under && M.head.size() >= 2 && M.head[0] == "h") {
                std::vector<EndSubset::Entry> out;
                for (std::size_t j = 0; j < x.copies.size(); ++j) {
                    auto sub = space_rec(x.copies[j].first);
                    const bool mine = M.head[1] == std::to_string(j);
                    Part p = !mine ? Part::None : M.head.size() == 2 ? Part::All : Part::Some;
                    for (std::size_t i = 0; i < sub.classes.size(); ++i)
                        out.push_back(entry(p, p == Part::Some ? "copy " + M.head.to_string() : ""));
                }
                return out;
            }
            return uniform(n, Part::Unknown);
        }
        default: return uniform(n, Part::Unknown);
    }
}

}  // namespace

EndSpace end_space(const ExprPtr& e) { return space_rec(e); }

EndSubset EndSubset::all_of(const EndSpace& s) { return EndSubset{uniform(s.classes.size(), Part::All)}; }
EndSubset EndSubset::none_of(const EndSpace& s) { return EndSubset{uniform(s.classes.size(), Part::None)}; }

bool EndSubset::is_empty() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& x) { return x.part == Part::None; });
}

bool EndSubset::is_known() const {
    return std::none_of(entries.begin(), entries.end(), [](const Entry& x) { return x.part == Part::Unknown; });
}

std::string to_string(EndSubset::Part p) {
    switch (p) {
        case Part::None: return "none";
        case Part::All: return "all";
        case Part::Some: return "some";
        case Part::Unknown: return "unknown";
    }
    return "?";
}

EndSubset closure_ends(const ExprPtr& e, const EndSpace& space, const Descriptor& M) {
    if (!space.ok()) return EndSubset{};
    try {
        return EndSubset{closure_rec(e, space, M)};
    } catch (const GraphError&) {
        return EndSubset{uniform(space.classes.size(), Part::Unknown)};
    }
}

Verdict is_dispersed(const ExprPtr& e, const Descriptor& U) {
    auto s = end_space(e);
    if (!s.ok()) return Verdict::Unknown;
    auto c = closure_ends(e, s, U);
    if (c.is_empty()) return Verdict::Yes;
    for (const auto& x : c.entries)
        if (x.part == Part::All || x.part == Part::Some) return Verdict::No;
    return Verdict::Unknown;
}

DominationResult is_dominated(const ExprPtr& e, const std::string& end_id) {
    auto s = end_space(e);
    const auto* c = s.find(end_id);
    if (!c) return {Verdict::Unknown, std::nullopt, "no end class " + end_id};
    return {c->dominated, c->witness, c->note};
}

}  // namespace graphrank
