#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "graphrank/graph.hpp"
#include "graphrank/parser.hpp"

using namespace graphrank;
using K = Expr::Kind;

TEST_CASE("parse examples") {
    CHECK(parse_graph("ray")->kind == K::Ray);
    auto wt = parse_graph("with_tops(tree(aleph1), all, whole_ray)");
    CHECK(wt->kind == K::WithTops);
    CHECK(wt->left->kind == K::Tree);
    CHECK(wt->mode == TopsMode::WholeRay);
    auto jv = parse_graph("join_vertex(comb(0), d, spine(.))");
    REQUIRE(jv->kind == K::JoinVertex);
    CHECK(jv->label == "d");
    CHECK(jv->attach.kind == Descriptor::Kind::Spine);
    CHECK(jv->left->kind == K::Comb);
    CHECK(jv->left->tooth == 0);
}

TEST_CASE("finite graphs and comments") {
    auto g = parse_graph("# a triangle\nfinite{v:[a, b, c], e:[a-b, b-c, c-a]}");
    CHECK(g->labels.size() == 3);
    CHECK(g->edges.size() == 3);
    CHECK(render(g) == "finite{v:[a, b, c], e:[a-b, b-c, c-a]}");
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_graph("union(ray, )");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 11);
    }
    CHECK_THROWS_AS(parse_graph("ray ray"), ParseError);
    CHECK_THROWS_AS(parse_graph("comb(-1)"), ParseError);
    CHECK_THROWS_AS(parse_graph("tree(aleph2)"), ParseError);
    CHECK_THROWS_AS(parse_graph("finite{v:[a], e:[a-b]}"), ParseError);
    CHECK_THROWS_AS(parse_graph("finite{v:[a, a], e:[]}"), ParseError);
}

TEST_CASE("with_tops only applies to tree(aleph1)") {
    CHECK_THROWS_AS(parse_graph("with_tops(tree(aleph0), all, whole_ray)"), ParseError);
    CHECK_THROWS_AS(parse_graph("with_tops(ray, all, whole_ray)"), ParseError);
    CHECK_THROWS_AS(parse_graph("with_tops(tree(aleph1), some, whole_ray)"), ParseError);
}

TEST_CASE("ill-formed attach descriptors are rejected") {
    CHECK_THROWS_AS(parse_graph("join_vertex(ray, d, leaves(.))"), ParseError);
    CHECK_THROWS_AS(parse_graph("join_vertex(ray, d, all(left))"), ParseError);
    CHECK_THROWS_AS(parse_graph("join_vertex(ray, r0, spine(.))"), ParseError);
    CHECK_THROWS_AS(parse_graph("add_edge(ray, r0, x7)"), ParseError);
    CHECK_THROWS_AS(parse_graph("join_vertex(ray, d, progression(., 1, 0))"), ParseError);
    CHECK_NOTHROW(parse_graph("join_vertex(ray, d, progression(., 1, 3))"));
    CHECK_NOTHROW(parse_graph("add_edge(union(ray, ray), left/r0, right/r0)"));
}

TEST_CASE("descriptor round trip") {
    for (const char* s : {"{r0, r1}", "all(.)", "level(3, base)", "spine(left)", "centers(.)", "leaves(copy.0.5)",
                          "tops(.)", "prefix(root/b1, base)", "progression(., 0, 2)",
                          "progression(root/b1, base, 0, 2)", "cup(spine(.), {d})", "under(h/0/3)",
                          "minus(all(.), {r0})", "children(root/b2, .)", "tops_through(root, .)", "anchors(.)"})
        CHECK(parse_descriptor(s).to_string() == s);
}

TEST_CASE("parse . render is the identity on the fixture catalog") {
    for (const auto& name : fixtures::names()) {
        CAPTURE(name);
        auto e = fixtures::load(name);
        auto again = parse_graph(render(e));
        CHECK(render(again) == render(e));
    }
}

TEST_CASE("cardinalities") {
    CHECK(parse_cardinality("0") == Cardinality::finite(0));
    CHECK(parse_cardinality("aleph0") == Cardinality::aleph0());
    CHECK(parse_cardinality("uncountable") == Cardinality::uncountable());
    CHECK(Cardinality::finite(7) < Cardinality::aleph0());
    CHECK(Cardinality::aleph0() < Cardinality::aleph1());
    CHECK(Cardinality::aleph1() <= Cardinality::uncountable());
    CHECK(Cardinality::aleph0() + Cardinality::finite(3) == Cardinality::aleph0());
}
