#pragma once

// Property suites over the fixture catalog, shared by the unit tests and the
// acceptance binary. Each suite reports every instance it ran.

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphrank/ends.hpp"
#include "graphrank/spanning.hpp"
#include "oracles.hpp"

namespace properties {

using namespace graphrank;

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    bool ok() const { return instances >= 5 && failures.empty(); }
    void record(const std::string& what, bool pass, const std::string& why = "") {
        ++instances;
        if (!pass) failures.push_back(what + (why.empty() ? "" : ": " + why));
    }
};

inline std::string parts(const EndSubset& s) {
    std::string out;
    for (const auto& x : s.entries) out += to_string(x.part) + " ";
    return out;
}

inline bool same_parts(const EndSubset& a, const EndSubset& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].part != b.entries[i].part) return false;
    return true;
}

inline Descriptor vertex_set(const TreeDescriptor& T) { return T.domain.value_or(Descriptor::all()); }

// A rooted tree containing U cofinally has the closure of U.
inline SuiteResult cofinal_closure() {
    SuiteResult r{"cofinal sets share the closure of their tree", 0, {}};
    struct Case {
        const char* graph;
        const char* U;
    };
    const std::vector<Case> cases = {
        {"ray", "minus(all(.), {r0, r1, r2})"},
        {"comb1", "spine(.)"},
        {"comb2", "minus(all(.), spine(.))"},
        {"k_aleph0", "progression(., 1, 3)"},
        {"tree_aleph0", "minus(all(.), {root})"},
        {"tree_aleph1", "minus(all(.), {root})"},
        {"star_aleph0", "leaves(.)"},
    };
    for (const auto& c : cases) {
        auto e = fixtures::load(c.graph);
        auto T = normal_spanning_tree(e);
        if (!T.ok()) {
            r.record(c.graph, false, "no normal spanning tree");
            continue;
        }
        const auto space = end_space(e);
        const auto a = closure_ends(e, space, vertex_set(*T.tree)), b = closure_ends(e, space, parse_descriptor(c.U));
        r.record(std::string(c.graph) + " U=" + c.U, a.is_known() && same_parts(a, b), parts(a) + "vs " + parts(b));
    }
    auto wt = fixtures::load("withtops_all");
    auto base = normal_tree_on(wt, parse_descriptor("all(base)"));
    const auto space = end_space(wt);
    const auto a = closure_ends(wt, space, vertex_set(*base)), b = closure_ends(wt, space, parse_descriptor("minus(all(base), {root})"));
    r.record("withtops_all base tree", a.is_known() && same_parts(a, b), parts(a) + "vs " + parts(b));
    return r;
}

// Every normal tree reflects the ends in its closure.
inline SuiteResult normal_trees_reflect() {
    SuiteResult r{"normal trees reflect the ends in their closure", 0, {}};
    for (const auto& name : fixtures::names()) {
        auto e = fixtures::load(name);
        auto T = normal_spanning_tree(e);
        if (!T.ok()) continue;
        auto v = reflects_check(e, *T.tree, closure_ends(e, vertex_set(*T.tree)));
        r.record(name, v.verdict == Reflects::Pass, v.witness);
    }
    for (const char* name : {"withtops_all", "withtops_every2nd"}) {
        auto e = fixtures::load(name);
        auto T = normal_tree_on(e, parse_descriptor("all(base)"));
        if (!T) {
            r.record(std::string(name) + " base", false, "no normal tree on the base");
            continue;
        }
        auto v = reflects_check(e, *T, closure_ends(e, vertex_set(*T)));
        r.record(std::string(name) + " base", v.verdict == Reflects::Pass, v.witness);
    }
    return r;
}

struct Split {
    const char* graph;
    const char* X;
};

inline const std::vector<Split>& split_cases() {
    static const std::vector<Split> all = {
        {"ray", "{r2}"},           {"comb1", "{r0}"},         {"comb1", "spine(.)"},           {"comb3", "spine(.)"},
        {"tree_aleph0", "{root}"}, {"tree_aleph1", "{root}"}, {"withtops_all", "all(base)"},  {"k_aleph0", "{k0}"},
        {"k_aleph0", "progression(., 0, 2)"},
    };
    return all;
}

// Closure flags of the regions: a finite member has no end in its closure; a
// family of infinite members counts as one region (its members are separated
// by X, so no end lies in two of them).
inline std::vector<EndSubset> region_flags(const ExprPtr& e, const EndSpace& space, const ComponentsResult& comps) {
    std::vector<EndSubset> out;
    for (const auto& reg : comps.regions)
        out.push_back(vertices_card(reg.expr).is_finite() ? EndSubset::none_of(space) : closure_ends(e, space, reg.members));
    return out;
}

// Every end lies in the closure of X or of some region of G - X.
inline SuiteResult closure_split() {
    SuiteResult r{"every end is near X or near a region", 0, {}};
    for (const auto& c : split_cases()) {
        auto e = fixtures::load(c.graph);
        const auto space = end_space(e);
        const auto X = parse_descriptor(c.X);
        auto comps = components_after_deletion(e, X);
        const auto what = std::string(c.graph) + " X=" + c.X;
        if (!comps.ok()) {
            r.record(what, false, *comps.unsupported);
            continue;
        }
        const auto near_x = closure_ends(e, space, X);
        const auto flags = region_flags(e, space, comps);
        bool pass = true;
        for (std::size_t i = 0; i < space.classes.size(); ++i) {
            bool covered = near_x.covers(i);
            for (const auto& f : flags) covered = covered || f.covers(i);
            pass = pass && covered;
        }
        r.record(what, pass, "an end class is in no closure");
    }
    return r;
}

// An end in the closure of two distinct regions is in the closure of X.
inline SuiteResult closure_shared() {
    SuiteResult r{"ends shared by two regions are near X", 0, {}};
    for (const auto& c : split_cases()) {
        auto e = fixtures::load(c.graph);
        const auto space = end_space(e);
        const auto X = parse_descriptor(c.X);
        auto comps = components_after_deletion(e, X);
        const auto what = std::string(c.graph) + " X=" + c.X;
        if (!comps.ok()) {
            r.record(what, false, *comps.unsupported);
            continue;
        }
        const auto near_x = closure_ends(e, space, X);
        const auto flags = region_flags(e, space, comps);
        bool pass = true;
        for (std::size_t i = 0; i < space.classes.size(); ++i) {
            std::size_t hits = 0;
            for (const auto& f : flags) hits += f.entries[i].part != EndSubset::Part::None;
            if (hits >= 2) pass = pass && near_x.entries[i].part != EndSubset::Part::None;
        }
        r.record(what, pass, "an end shared by two regions is not near X");
    }
    return r;
}

// rank(G[C + X]) is bounded by the rank of C; bounds frozen by oracles.
inline SuiteResult rank_transfer() {
    SuiteResult r{"rank transfers to a region plus the peeled set", 0, {}};
    oracles::Shape leaf, star{{{&leaf, true, 0}}};
    const auto star_rank = oracles::shape_rank(star);
    struct Case {
        const char* graph;
        const char* X;
        bool finite_ideal;
        std::uint64_t bound;
    };
    const std::vector<Case> cases = {
        {"star_of_stars", "{h}", true, star_rank},
        {"rank2_nested", "{z, h}", true, star_rank},
        {"star_aleph0", "{c}", true, 0},
        {"ray", "{r2}", false, 0},
        {"withtops_all", "all(base)", false, 0},
        {"k_aleph0", "{k0}", false, 0},
        {"comb1", "spine(.)", false, 0},
    };
    for (const auto& c : cases) {
        auto e = fixtures::load(c.graph);
        const auto X = parse_descriptor(c.X);
        const auto I = c.finite_ideal ? Ideal::finite_sets() : Ideal::normally_spanned(e);
        auto comps = components_after_deletion(e, X);
        const auto what = std::string(c.graph) + " X=" + c.X;
        if (!comps.ok()) {
            r.record(what, false, *comps.unsupported);
            continue;
        }
        bool pass = true;
        std::string why;
        try {
            for (const auto& reg : comps.regions) {
                const auto b = rank_transfer_bound(e, X, reg, I);
                if (!(b == Ordinal(c.bound))) {
                    pass = false;
                    why = "bound " + b.to_string() + " for " + reg.members.to_string();
                }
                auto induced = induced_with(e, X, reg);
                if (!induced) continue;
                auto direct = c.finite_ideal ? schmidt_rank(*induced) : normal_rank(*induced);
                if (!direct.ranked() || b < direct.rank) {
                    pass = false;
                    why = "direct rank of " + render(*induced) + " exceeds the bound";
                }
            }
        } catch (const GraphError& err) {
            pass = false;
            why = err.what();
        }
        r.record(what, pass, why);
    }
    return r;
}

inline std::vector<SuiteResult> all_suites() {
    return {cofinal_closure(), normal_trees_reflect(), closure_split(), closure_shared(), rank_transfer()};
}

}  // namespace properties
