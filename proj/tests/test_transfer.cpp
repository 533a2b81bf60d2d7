#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "graphrank/ends.hpp"
#include "graphrank/spanning.hpp"
#include "oracles.hpp"

using namespace graphrank;

namespace {

Descriptor D(const char* s) { return parse_descriptor(s); }
using TS = TreeResult::Status;

}  // namespace

TEST_CASE("end-faithful spanning trees from rank witnesses") {
    for (const auto& name : fixtures::names()) {
        CAPTURE(name);
        auto e = fixtures::load(name);
        auto t = end_faithful_spanning_tree(e);
        if (name == "k_aleph1") {
            CHECK(t.status == TS::None);
            continue;
        }
        REQUIRE(t.ok());
        CHECK(check_tree(*t.tree, 4, 4).ok(false));
        CHECK(reflects_check(e, *t.tree, EndSubset::all_of(end_space(e))).verdict == Reflects::Pass);
    }
    // withtops has no normal spanning tree, the witness peels the base
    auto wt = fixtures::load("withtops_all");
    CHECK(normal_spanning_tree(wt).status == TS::None);
    auto t = end_faithful_spanning_tree(wt);
    REQUIRE(t.ok());
    CHECK(t.tree->name == "efst");
    CHECK(t.tree->spanning());
}

TEST_CASE("trees driven by finite-set witnesses nest their lifts") {
    for (const char* name : {"star_of_stars", "rank2_nested"}) {
        CAPTURE(name);
        auto e = fixtures::load(name);
        auto w = schmidt_rank(e).witness;
        REQUIRE(w);
        auto t = end_faithful_spanning_tree(e, w);
        REQUIRE(t.ok());
        CHECK(check_tree(*t.tree, 4, 4).ok(false));
        auto r = rayless_spanning_tree(e, w);
        REQUIRE(r.ok());
        CHECK(is_rayless(*r.tree) == Verdict::Yes);
        CHECK(check_tree(*r.tree, 4, 4).ok(false));
    }
}

TEST_CASE("rayless spanning trees") {
    for (const char* name : {"ray", "comb0", "comb3", "tree_aleph0", "tree_aleph1"}) {
        CAPTURE(name);
        CHECK(rayless_spanning_tree(fixtures::load(name)).status == TS::NotAllDominated);
    }
    for (const char* name : {"star_aleph0", "withtops_all", "withtops_every2nd", "k_aleph0", "k_aleph1", "comb_dominated",
                             "star_of_stars", "rank2_nested"}) {
        CAPTURE(name);
        auto r = rayless_spanning_tree(fixtures::load(name));
        REQUIRE(r.ok());
        CHECK(r.tree->spanning());
        CHECK(is_rayless(*r.tree) == Verdict::Yes);
        CHECK(check_tree(*r.tree, 4, 4).ok(false));
    }
}

TEST_CASE("a tree with two rays in one end is not end-faithful") {
    auto k = parse_graph("complete(aleph0)");
    TreeDescriptor T;
    T.host = k;
    T.name = "split";
    T.roots = {Pattern::parse("k0")};
    T.rules = {ParentRule::make("k1", "k0", {}), ParentRule::make("k{n#}", "k{n-2}", {"n>=2"})};
    REQUIRE(check_tree(T, 4, 4).ok(false));
    CHECK(reflects_check(k, T, EndSubset::all_of(end_space(k))).verdict == Reflects::Fail);
}

TEST_CASE("rank transfers from a region to the region plus the peeled set") {
    struct Case {
        const char* graph;
        const char* X;
        bool finite_ideal;
        unsigned bound;  // frozen by the shape oracle or by countability
    };
    oracles::Shape leaf, star{{{&leaf, true, 0}}};
    const auto star_rank = static_cast<unsigned>(oracles::shape_rank(star));
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
        CAPTURE(c.graph);
        auto e = fixtures::load(c.graph);
        const auto X = D(c.X);
        const auto I = c.finite_ideal ? Ideal::finite_sets() : Ideal::normally_spanned(e);
        auto comps = components_after_deletion(e, X);
        REQUIRE(comps.ok());
        for (const auto& reg : comps.regions) {
            CAPTURE(reg.members.to_string());
            const auto b = rank_transfer_bound(e, X, reg, I);
            CHECK(b == Ordinal(c.bound));
            auto induced = induced_with(e, X, reg);
            if (!induced) continue;
            auto r = c.finite_ideal ? schmidt_rank(*induced) : normal_rank(*induced);
            REQUIRE(r.ranked());
            CHECK(r.rank <= b);
        }
    }
    auto k1 = fixtures::load("k_aleph1");
    auto comps = components_after_deletion(k1, D("{k0}"));
    REQUIRE(comps.ok());
    CHECK_THROWS_AS(rank_transfer_bound(k1, D("{k0}"), comps.regions[0], Ideal::normally_spanned(k1)), GraphError);
    auto ray = parse_graph("ray");
    CHECK_THROWS_AS(rank_transfer_bound(ray, D("all(.)"), components_after_deletion(ray, D("{r0}")).regions[0],
                                        Ideal::finite_sets()),
                    GraphError);
}
