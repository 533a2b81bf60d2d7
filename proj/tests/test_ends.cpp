#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "graphrank/components.hpp"
#include "graphrank/ends.hpp"

using namespace graphrank;

namespace {

Address A(const char* s) { return Address::parse(s); }
using Part = EndSubset::Part;

std::vector<bool> mask(const Truncation& t, const ExprPtr& e, const Descriptor& d) {
    std::vector<bool> m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) m[i] = in_descriptor(e, d, t.vertices[i]);
    return m;
}

}  // namespace

TEST_CASE("end space examples") {
    auto ray = end_space(parse_graph("ray"));
    REQUIRE(ray.classes.size() == 1);
    CHECK(ray.classes[0].count == Cardinality::finite(1));
    CHECK(ray.classes[0].dominated == Verdict::No);

    auto k = end_space(parse_graph("complete(aleph0)"));
    REQUIRE(k.classes.size() == 1);
    CHECK(k.classes[0].dominated == Verdict::Yes);
    CHECK(k.classes[0].witness == A("k0"));

    auto wt = end_space(fixtures::load("withtops_all"));
    REQUIRE(wt.classes.size() == 1);
    CHECK(wt.classes[0].count == Cardinality::uncountable());
    CHECK(wt.classes[0].dominated == Verdict::Yes);

    CHECK(end_space(parse_graph("star(aleph0)")).empty());
    CHECK(end_space(fixtures::load("star_of_stars")).empty());
    CHECK(end_space(parse_graph("tree(1)")).classes[0].count == Cardinality::finite(1));

    auto u = end_space(parse_graph("union(ray, comb(2))"));
    REQUIRE(u.classes.size() == 2);
    CHECK(u.classes[1].id == "right.ray");
    CHECK(u.classes[1].ray.vertex(3) == A("right/r3"));
}

TEST_CASE("top fans grow with depth") {
    auto e = fixtures::load("withtops_all");
    auto s = end_space(e);
    // symbolically: the witness top sees every vertex of the representative ray
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(adjacent(e, *s.classes[0].witness, s.classes[0].ray.vertex(n)));
    // on truncations: each top has a fan of d+1 vertices along one rooted path
    for (unsigned d = 1; d <= 5; ++d) {
        auto t = truncate(e, d, 2);
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (t.vertices[v][0] != "top") continue;
            CHECK(t.adj[v].size() == d + 1);
            for (auto u : t.adj[v])
                for (auto w : t.adj[v]) {
                    const auto& a = t.vertices[u];
                    const auto& b = t.vertices[w];
                    CHECK((a.starts_with(b) || b.starts_with(a)));
                }
        }
    }
}

TEST_CASE("closure examples") {
    auto ray = parse_graph("ray");
    CHECK(closure_ends(ray, parse_descriptor("progression(., 0, 2)")).entries[0].part == Part::All);
    CHECK(closure_ends(parse_graph("comb(1)"), parse_descriptor("minus(all(.), spine(.))")).entries[0].part == Part::All);
    CHECK(closure_ends(parse_graph("ray"), parse_descriptor("{r1, r7}")).entries[0].part == Part::None);

    auto tree = parse_graph("tree(aleph1)");
    CHECK(closure_ends(tree, parse_descriptor("level(3, .)")).entries[0].part == Part::None);
    auto some = closure_ends(tree, parse_descriptor("prefix(root/b1, .)")).entries[0];
    CHECK(some.part == Part::Some);
    CHECK(some.detail == "branch root/b1");
    CHECK(closure_ends(fixtures::load("withtops_all"), parse_descriptor("tops(.)")).entries[0].part == Part::All);
}

TEST_CASE("level sets of a tree are dispersed: components below the level miss it") {
    // oracle: delete depths <= 3; every component reaching depth >= 4 avoids level 3
    auto tree = parse_graph("tree(aleph1)");
    for (unsigned d = 4; d <= 5; ++d) {
        auto t = truncate(tree, d, 2);
        std::vector<bool> removed(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) removed[i] = *tree_depth(tree->card, t.vertices[i]) <= 3;
        auto level = mask(t, tree, parse_descriptor("level(3, .)"));
        for (const auto& comp : components(t, removed))
            for (auto v : comp) CHECK_FALSE(level[v]);
    }
    CHECK(is_dispersed(tree, parse_descriptor("level(2, .)")) == Verdict::Yes);
    CHECK(is_dispersed(parse_graph("ray"), parse_descriptor("spine(.)")) == Verdict::No);
    CHECK(is_dispersed(parse_graph("star(aleph0)"), parse_descriptor("leaves(.)")) == Verdict::Yes);
}

TEST_CASE("domination examples") {
    CHECK(is_dominated(parse_graph("ray"), "ray").verdict == Verdict::No);
    auto joined = is_dominated(parse_graph("join_vertex(ray, d, all(.))"), "ray");
    CHECK(joined.verdict == Verdict::Yes);
    CHECK(joined.witness == A("d"));
    CHECK(is_dominated(fixtures::load("comb_dominated"), "ray").verdict == Verdict::Yes);

    // comb(1) is locally finite with maximum degree 3, so no vertex sends an infinite fan
    auto comb = parse_graph("comb(1)");
    CHECK(is_dominated(comb, "ray").verdict == Verdict::No);
    for (unsigned d = 2; d <= 8; ++d) {
        auto t = truncate(comb, d, 1);
        for (std::size_t v = 0; v < t.size(); ++v) CHECK(t.adj[v].size() <= 3);
    }
}

TEST_CASE("star-comb search examples") {
    auto ray = truncate(parse_graph("ray"), 20, 1);
    std::vector<bool> all(ray.size(), true);
    auto r = star_comb_search(ray, all, 5);
    REQUIRE(std::holds_alternative<CombWitness>(r));
    CHECK(std::get<CombWitness>(r).teeth.size() == 5);
    CHECK(check_star_comb(ray, all, r));

    auto star_e = parse_graph("star(aleph0)");
    auto star = truncate(star_e, 2, 10);
    auto leaves = mask(star, star_e, parse_descriptor("leaves(.)"));
    auto s = star_comb_search(star, leaves, 8);
    REQUIRE(std::holds_alternative<StarWitness>(s));
    CHECK(star.vertices[std::get<StarWitness>(s).center] == A("c"));
    CHECK(check_star_comb(star, leaves, s));

    auto k = truncate(parse_graph("complete(aleph0)"), 1, 12);
    std::vector<bool> kall(k.size(), true);
    auto kr = star_comb_search(k, kall, 6);
    CHECK_FALSE(std::holds_alternative<Exhausted>(kr));
    CHECK(check_star_comb(k, kall, kr));

    CHECK(std::holds_alternative<Exhausted>(star_comb_search(star, leaves, 20)));
    CHECK_THROWS_AS(star_comb_search(truncate(parse_graph("union(ray, ray)"), 3, 1), all, 1), GraphError);
}

TEST_CASE("star-comb witnesses are valid across the catalog") {
    for (const auto& name : fixtures::names()) {
        auto e = fixtures::load(name);
        auto t = truncate(e, 3, 3);
        std::vector<bool> all(t.size(), true);
        for (std::size_t k : {2u, 4u, 7u}) {
            CAPTURE(name);
            CHECK(check_star_comb(t, all, star_comb_search(t, all, k)));
        }
    }
}

TEST_CASE("dispersed sets never yield long combs") {
    // budgeted falsification: the comb prefix found in a dispersed set cannot grow with d
    auto tree = parse_graph("tree(aleph0)");
    auto level = parse_descriptor("level(2, .)");
    REQUIRE(is_dispersed(tree, level) == Verdict::Yes);
    for (unsigned d = 3; d <= 5; ++d) {
        auto t = truncate(tree, d, 2);
        auto r = star_comb_search(t, mask(t, tree, level), 3);
        CHECK_FALSE(std::holds_alternative<CombWitness>(r));
    }
}

TEST_CASE("every end lies in the closure of X or of some region") {
    struct Case {
        const char* graph;
        const char* X;
    };
    for (auto [g, x] : std::vector<Case>{{"ray", "{r0}"},
                                         {"comb(2)", "spine(.)"},
                                         {"comb(1)", "{r1, r3}"},
                                         {"complete(aleph0)", "{k0, k1}"},
                                         {"union(ray, comb(1))", "{left/r2}"},
                                         {"join_vertex(ray, d, all(.))", "{d}"}}) {
        auto e = parse_graph(g);
        auto X = parse_descriptor(x);
        auto space = end_space(e);
        auto cx = closure_ends(e, space, X);
        auto comps = components_after_deletion(e, X);
        REQUIRE(comps.ok());
        for (std::size_t i = 0; i < space.classes.size(); ++i) {
            int in_regions = 0;
            for (const auto& r : comps.regions)
                if (closure_ends(e, space, r.members).entries[i].part == Part::All) ++in_regions;
            CAPTURE(g);
            CHECK((cx.entries[i].part == Part::All || in_regions >= 1));
            if (in_regions >= 2) CHECK(cx.entries[i].part == Part::All);
        }
    }
}
