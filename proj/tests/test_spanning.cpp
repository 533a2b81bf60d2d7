#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "graphrank/spanning.hpp"

using namespace graphrank;

namespace {

Address A(const char* s) { return Address::parse(s); }
Descriptor D(const char* s) { return parse_descriptor(s); }
using Status = TreeResult::Status;

void require_tree(const TreeDescriptor& T, unsigned d, unsigned w, bool normal) {
    auto c = check_tree(T, d, w);
    INFO(T.name << " d=" << d << " w=" << w);
    for (const auto& f : c.failures) INFO(f);
    CHECK(c.ok(normal));
}

}  // namespace

TEST_CASE("normal spanning trees of the catalog") {
    for (const char* name : {"ray", "comb0", "comb1", "comb2", "comb3", "star_aleph0", "tree_aleph0", "tree_aleph1",
                             "k_aleph0", "comb_dominated", "star_of_stars", "rank2_nested"}) {
        CAPTURE(name);
        auto e = fixtures::load(name);
        auto r = normal_spanning_tree(e);
        REQUIRE(r.ok());
        for (unsigned d = 2; d <= 4; ++d) require_tree(*r.tree, d, 3, true);
    }
    for (unsigned n = 1; n <= 6; ++n) require_tree(*normal_spanning_tree(parse_graph("complete(aleph0)")).tree, n, n, true);
    CHECK(normal_spanning_tree(fixtures::load("k_aleph1")).status == Status::None);
    CHECK(normal_spanning_tree(fixtures::load("withtops_all")).status == Status::None);
    CHECK(normal_spanning_tree(fixtures::load("withtops_every2nd")).status == Status::None);
}

TEST_CASE("finite depth-first trees") {
    auto e = parse_graph("finite{v:[a, b, c, d], e:[a-b, b-c, c-a, c-d]}");
    auto r = normal_spanning_tree(e, A("c"));
    REQUIRE(r.ok());
    CHECK(r.tree->is_root(A("c")));
    require_tree(*r.tree, 1, 1, true);
    CHECK(normal_spanning_tree(parse_graph("finite{v:[a, b], e:[]}")).status == Status::Unknown);
}

TEST_CASE("tampered trees fail") {
    auto e = parse_graph("finite{v:[a, b, c], e:[a-b, b-c, c-a]}");
    TreeDescriptor T;
    T.host = e;
    T.roots = {Pattern::parse("a")};
    T.rules = {ParentRule::make("b", "c", {}), ParentRule::make("c", "b", {})};
    auto c = check_tree(T, 1, 1);
    CHECK_FALSE(c.acyclic);
    CHECK_FALSE(c.ok());

    auto ray = *normal_spanning_tree(parse_graph("ray")).tree;
    ray.rules = {ParentRule::make("r{n#}", "r{n-2}", {"n>=2"}), ParentRule::make("r1", "r0", {})};
    CHECK_FALSE(check_tree(ray, 4, 1).edges);
}

TEST_CASE("trees of copies are lifted into place") {
    auto e = fixtures::load("star_of_stars");
    auto T = *normal_spanning_tree(e).tree;
    CHECK(T.parent(A("h/0/3/c")) == A("h"));
    CHECK(T.parent(A("h/0/3/c/7")) == A("h/0/3/c"));

    auto ray = parse_graph("ray");
    auto comps = components_after_deletion(ray, D("{r0, r1}"));
    REQUIRE(comps.ok());
    REQUIRE(comps.regions.size() == 1);
    auto local = *normal_spanning_tree(comps.regions[0].expr).tree;
    auto lifted = embed_tree(local, comps.regions[0], "x");
    REQUIRE(lifted);
    CHECK(lifted->is_root(A("r2")));
    CHECK(lifted->parent(A("r9")) == A("r8"));
    CHECK_FALSE(lifted->covers(A("r1")));
}

TEST_CASE("forests merge by one edge per part") {
    auto ray = parse_graph("ray");
    auto comps = components_after_deletion(ray, D("{r0, r1, r2}"));
    REQUIRE(comps.ok());
    auto tail = *embed_tree(*normal_spanning_tree(comps.regions[0].expr).tree, comps.regions[0], "x");
    TreeDescriptor head;
    head.host = ray;
    head.roots = {Pattern::parse("r0")};
    head.rules = {ParentRule::make("r1", "r0", {}), ParentRule::make("r2", "r1", {})};
    head.domain = D("{r0, r1, r2}");
    auto T = merge_forest(ray, {{head, ""}, {tail, ""}}, 0);
    CHECK(T.parent(A("r3")) == A("r2"));
    require_tree(T, 8, 1, true);

    TreeDescriptor far = head;
    far.domain = D("{r0}");
    far.rules.clear();
    auto lone = single_vertex_tree(ray, A("r5"));
    CHECK_THROWS_AS(merge_forest(ray, {{far, ""}, {lone, ""}}, 0), GraphError);
}

TEST_CASE("rayless trees containing a set") {
    auto ray = parse_graph("ray");
    auto r = rayless_tree_containing(ray, D("all(.)"));
    CHECK(r.status == Status::NotAllDominated);
    CHECK(r.reason == "ray");

    auto fin = rayless_tree_containing(ray, D("{r3}"));
    REQUIRE(fin.ok());
    CHECK(fin.tree->covers(A("r0")));
    CHECK_FALSE(fin.tree->covers(A("r4")));

    auto tr = rayless_tree_containing(parse_graph("tree(aleph0)"), D("level(2, .)"));
    REQUIRE(tr.ok());
    CHECK(tr.tree->covers(A("root/3/1")));
    CHECK_FALSE(tr.tree->covers(A("root/3/1/0")));
    require_tree(*tr.tree, 4, 3, false);

    for (const char* name : {"comb_dominated", "k_aleph0", "k_aleph1", "withtops_all", "withtops_every2nd", "star_of_stars",
                             "rank2_nested"}) {
        CAPTURE(name);
        auto e = fixtures::load(name);
        auto t = rayless_tree_containing(e, D("all(.)"));
        REQUIRE(t.ok());
        CHECK(t.tree->spanning());
        CHECK(is_rayless(*t.tree) == Verdict::Yes);
        require_tree(*t.tree, 4, 2, false);
    }
    auto fan = rayless_tree_containing(parse_graph("join_vertex(ray, d, progression(., 1, 3))"), D("all(.)"));
    REQUIRE(fan.ok());
    require_tree(*fan.tree, 12, 1, false);
    CHECK(rayless_tree_containing(fixtures::load("comb1"), D("spine(.)")).status == Status::NotAllDominated);
}

TEST_CASE("rerouting a spanning path through a ray") {
    auto k = parse_graph("complete(aleph0)");
    auto T = *normal_spanning_tree(k).tree;
    auto psi = EndSubset::all_of(end_space(k));
    for (auto [a, d] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 2}}) {
        CAPTURE(a);
        CAPTURE(d);
        auto R = RaySchema::indexed({}, "k", a, d);
        auto out = reroute_with_ray(k, T, psi, R);
        CHECK_FALSE(out.unchanged);
        require_tree(out.tree, 10, 10, false);
        for (unsigned n = 1; n < 10; ++n) CHECK(out.tree.parent(R.vertex(n)) == R.vertex(n - 1));
        CHECK(reflects_check(k, out.tree, psi).verdict == Reflects::Pass);
        // vertices below the start of R keep their tree edges
        for (int m = 1; m <= a; ++m) CHECK(in_descriptor(k, out.delta, A(("k" + std::to_string(m - 1)).c_str())) == false);
    }
    auto star = *rayless_tree_containing(k, D("all(.)")).tree;
    CHECK(reflects_check(k, star, psi).verdict == Reflects::Fail);
    CHECK(reflects_check(k, star, EndSubset::none_of(end_space(k))).verdict == Reflects::Pass);

    auto ray = parse_graph("ray");
    auto same = reroute_with_ray(ray, *normal_spanning_tree(ray).tree, EndSubset::all_of(end_space(ray)),
                                 RaySchema::indexed({}, "r", 5, 1));
    CHECK(same.unchanged);
    CHECK_THROWS_AS(reroute_with_ray(ray, *normal_spanning_tree(ray).tree, EndSubset::all_of(end_space(ray)),
                                     RaySchema::indexed({}, "r", 0, 2)),
                    GraphError);
}

TEST_CASE("tree artifacts round trip") {
    for (const char* name : {"comb2", "star_of_stars", "k_aleph0"}) {
        auto e = fixtures::load(name);
        auto T = *normal_spanning_tree(e).tree;
        auto text = tree_to_json(T);
        auto back = tree_from_json(text, e);
        CHECK(tree_to_json(back) == text);
    }
    auto e = fixtures::load("withtops_every2nd");
    auto T = *rayless_tree_containing(e, D("all(.)")).tree;
    CHECK(tree_to_json(tree_from_json(tree_to_json(T), e)) == tree_to_json(T));
    CHECK_THROWS_AS(tree_from_json(tree_to_json(T), parse_graph("ray")), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json("{\"schema\": 1}", e), GraphError);
}
