#include "graphrank/expr.hpp"

#include <cctype>
#include <sstream>

namespace graphrank {

std::string render_region(const RegionPath& r) {
    if (r.empty()) return ".";
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += '/';
        out += r[i];
    }
    return out;
}

Descriptor Descriptor::explicit_set(std::vector<Address> a) {
    Descriptor d;
    d.kind = Kind::Explicit;
    d.addresses = std::move(a);
    return d;
}

namespace {
Descriptor regional(Descriptor::Kind k, RegionPath r) {
    Descriptor d;
    d.kind = k;
    d.region = std::move(r);
    return d;
}
}  // namespace

Descriptor Descriptor::all(RegionPath r) { return regional(Kind::All, std::move(r)); }
Descriptor Descriptor::spine(RegionPath r) { return regional(Kind::Spine, std::move(r)); }
Descriptor Descriptor::centers(RegionPath r) { return regional(Kind::Centers, std::move(r)); }
Descriptor Descriptor::leaves(RegionPath r) { return regional(Kind::Leaves, std::move(r)); }
Descriptor Descriptor::tops(RegionPath r) { return regional(Kind::Tops, std::move(r)); }

Descriptor Descriptor::level_of(std::uint64_t k, RegionPath r) {
    auto d = regional(Kind::Level, std::move(r));
    d.level = k;
    return d;
}

Descriptor Descriptor::branch_prefix(Address head, RegionPath r) {
    auto d = regional(Kind::BranchPrefix, std::move(r));
    d.head = std::move(head);
    d.on_branch = true;
    return d;
}

Descriptor Descriptor::progression(std::uint64_t a, std::uint64_t step, RegionPath r) {
    auto d = regional(Kind::Progression, std::move(r));
    d.start = a;
    d.step = step;
    return d;
}

Descriptor Descriptor::branch_progression(Address head, std::uint64_t a, std::uint64_t step, RegionPath r) {
    auto d = progression(a, step, std::move(r));
    d.head = std::move(head);
    d.on_branch = true;
    return d;
}

Descriptor Descriptor::cup(std::vector<Descriptor> parts) {
    Descriptor d;
    d.kind = Kind::Union;
    d.parts = std::move(parts);
    return d;
}

Descriptor Descriptor::under(Address prefix) {
    Descriptor d;
    d.kind = Kind::Under;
    d.head = std::move(prefix);
    return d;
}

Descriptor Descriptor::minus(Descriptor a, Descriptor b) {
    Descriptor d;
    d.kind = Kind::Minus;
    d.parts = {std::move(a), std::move(b)};
    return d;
}

Descriptor Descriptor::children(Address node, RegionPath r) {
    auto d = regional(Kind::Children, std::move(r));
    d.head = std::move(node);
    return d;
}

Descriptor Descriptor::tops_through(Address node, RegionPath r) {
    auto d = regional(Kind::TopsThrough, std::move(r));
    d.head = std::move(node);
    return d;
}

Descriptor Descriptor::anchors(RegionPath r) { return regional(Kind::Anchors, std::move(r)); }

std::string Descriptor::to_string() const {
    const auto r = render_region(region);
    switch (kind) {
        case Kind::Explicit: {
            std::string out = "{";
            for (std::size_t i = 0; i < addresses.size(); ++i) {
                if (i) out += ", ";
                out += addresses[i].to_string();
            }
            return out + "}";
        }
        case Kind::All: return "all(" + r + ")";
        case Kind::Level: return "level(" + std::to_string(level) + ", " + r + ")";
        case Kind::Spine: return "spine(" + r + ")";
        case Kind::Centers: return "centers(" + r + ")";
        case Kind::Leaves: return "leaves(" + r + ")";
        case Kind::Tops: return "tops(" + r + ")";
        case Kind::BranchPrefix: return "prefix(" + head.to_string() + ", " + r + ")";
        case Kind::Progression:
            if (on_branch)
                return "progression(" + head.to_string() + ", " + r + ", " + std::to_string(start) + ", " +
                       std::to_string(step) + ")";
            return "progression(" + r + ", " + std::to_string(start) + ", " + std::to_string(step) + ")";
        case Kind::Union: {
            std::string out = "cup(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += ", ";
                out += parts[i].to_string();
            }
            return out + ")";
        }
        case Kind::Under: return "under(" + head.to_string() + ")";
        case Kind::Minus: return "minus(" + parts[0].to_string() + ", " + parts[1].to_string() + ")";
        case Kind::Children: return "children(" + head.to_string() + ", " + r + ")";
        case Kind::TopsThrough: return "tops_through(" + head.to_string() + ", " + r + ")";
        case Kind::Anchors: return "anchors(" + r + ")";
    }
    return "?";
}

namespace {

ExprPtr leaf(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

}  // namespace

ExprPtr make_finite(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> edges) {
    for (const auto& l : labels)
        if (!valid_label(l)) throw GraphError("invalid vertex label '" + l + "'");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw GraphError("duplicate vertex label '" + labels[i] + "'");
    auto known = [&](const std::string& v) {
        for (const auto& l : labels)
            if (l == v) return true;
        return false;
    };
    for (const auto& [u, v] : edges) {
        if (!known(u) || !known(v)) throw GraphError("edge " + u + "-" + v + " uses an undeclared vertex");
        if (u == v) throw GraphError("loop at " + u);
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Finite;
    e->labels = std::move(labels);
    e->edges = std::move(edges);
    return e;
}

ExprPtr make_ray() { return leaf(Expr::Kind::Ray); }

ExprPtr make_comb(std::uint64_t tooth) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Comb;
    e->tooth = tooth;
    return e;
}

namespace {
ExprPtr with_card(Expr::Kind k, Cardinality c) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->card = c;
    return e;
}
}  // namespace

ExprPtr make_star(Cardinality k) { return with_card(Expr::Kind::Star, k); }
ExprPtr make_tree(Cardinality k) { return with_card(Expr::Kind::Tree, k); }
ExprPtr make_complete(Cardinality k) { return with_card(Expr::Kind::Complete, k); }

ExprPtr make_with_tops(ExprPtr tree, TopsMode mode) {
    if (!tree || tree->kind != Expr::Kind::Tree || tree->card != Cardinality::aleph1())
        throw GraphError("with_tops applies only to tree(aleph1)");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::WithTops;
    e->left = std::move(tree);
    e->mode = mode;
    return e;
}

ExprPtr make_union(ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Union;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

ExprPtr make_join_vertex(ExprPtr base, std::string label, Descriptor attach) {
    if (!valid_label(label)) throw GraphError("invalid join label '" + label + "'");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::JoinVertex;
    e->left = std::move(base);
    e->label = std::move(label);
    e->attach = std::move(attach);
    return e;
}

ExprPtr make_add_edge(ExprPtr base, Address a, Address b) {
    if (a == b) throw GraphError("add_edge endpoints coincide: " + a.to_string());
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::AddEdge;
    e->left = std::move(base);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr make_hang(std::vector<std::pair<ExprPtr, Cardinality>> copies) {
    if (copies.empty()) throw GraphError("hang needs at least one copy family");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Hang;
    e->copies = std::move(copies);
    return e;
}

std::string render(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Finite: {
            std::string out = "finite{v:[";
            for (std::size_t i = 0; i < e.labels.size(); ++i) out += (i ? ", " : "") + e.labels[i];
            out += "], e:[";
            for (std::size_t i = 0; i < e.edges.size(); ++i)
                out += (i ? ", " : "") + e.edges[i].first + "-" + e.edges[i].second;
            return out + "]}";
        }
        case Expr::Kind::Ray: return "ray";
        case Expr::Kind::Comb: return "comb(" + std::to_string(e.tooth) + ")";
        case Expr::Kind::Star: return "star(" + e.card.to_string() + ")";
        case Expr::Kind::Tree: return "tree(" + e.card.to_string() + ")";
        case Expr::Kind::Complete: return "complete(" + e.card.to_string() + ")";
        case Expr::Kind::WithTops:
            return "with_tops(" + render(*e.left) + ", all, " +
                   (e.mode == TopsMode::WholeRay ? "whole_ray" : "every_2nd") + ")";
        case Expr::Kind::Union: return "union(" + render(*e.left) + ", " + render(*e.right) + ")";
        case Expr::Kind::JoinVertex:
            return "join_vertex(" + render(*e.left) + ", " + e.label + ", " + e.attach.to_string() + ")";
        case Expr::Kind::AddEdge:
            return "add_edge(" + render(*e.left) + ", " + e.a.to_string() + ", " + e.b.to_string() + ")";
        case Expr::Kind::Hang: {
            std::string out = "hang(";
            for (std::size_t i = 0; i < e.copies.size(); ++i)
                out += (i ? ", " : "") + render(*e.copies[i].first) + ", " + e.copies[i].second.to_string();
            return out + ")";
        }
    }
    return "?";
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) { return a == b || render(*a) == render(*b); }

SubExpr resolve_region(const ExprPtr& e, const RegionPath& r) {
    SubExpr cur{e, Address{}};
    for (const auto& step : r) {
        const auto& x = *cur.expr;
        if (x.kind == Expr::Kind::Union && (step == "left" || step == "right")) {
            cur.prefix = cur.prefix.child(step);
            cur.expr = step == "left" ? x.left : x.right;
        } else if (step == "base" && (x.kind == Expr::Kind::WithTops || x.kind == Expr::Kind::JoinVertex ||
                                      x.kind == Expr::Kind::AddEdge)) {
            cur.expr = x.left;
        } else if (x.kind == Expr::Kind::Hang && step.rfind("copy.", 0) == 0) {
            auto dot = step.find('.', 5);
            auto j = dot == std::string::npos ? std::nullopt : parse_nat(step.substr(5, dot - 5));
            if (!j || *j >= x.copies.size()) throw GraphError("bad copy region step '" + step + "'");
            auto i = step.substr(dot + 1);
            cur.prefix = cur.prefix.child("h").child(std::to_string(*j)).child(i);
            cur.expr = x.copies[*j].first;
        } else {
            throw GraphError("region step '" + step + "' does not apply to " + render(x));
        }
    }
    return cur;
}

Address anchor(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Finite:
            if (e.labels.empty()) throw GraphError("empty finite graph has no anchor");
            return Address{{e.labels.front()}};
        case Expr::Kind::Ray:
        case Expr::Kind::Comb: return Address{{"r0"}};
        case Expr::Kind::Star: return Address{{"c"}};
        case Expr::Kind::Tree:
        case Expr::Kind::WithTops: return Address{{"root"}};
        case Expr::Kind::Complete:
            if (e.card.is_zero()) throw GraphError("complete(0) has no anchor");
            return Address{{"k0"}};
        case Expr::Kind::Union: return anchor(*e.left).prefixed(Address{{"left"}});
        case Expr::Kind::JoinVertex: return Address{{e.label}};
        case Expr::Kind::AddEdge: return anchor(*e.left);
        case Expr::Kind::Hang: return Address{{"h"}};
    }
    throw GraphError("no anchor");
}

}  // namespace graphrank
