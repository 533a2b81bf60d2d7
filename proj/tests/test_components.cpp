#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "graphrank/components.hpp"

using namespace graphrank;

namespace {

Address A(const char* s) { return Address::parse(s); }

// Concrete check on a truncation: every surviving vertex belongs to exactly one
// region member, each concrete component lies inside one member, and a concrete
// component away from the frontier is the whole member.
void cross_check(const ExprPtr& e, const Descriptor& X, unsigned d, unsigned w) {
    auto res = components_after_deletion(e, X);
    CAPTURE(render(e));
    CAPTURE(res.unsupported.value_or(""));
    REQUIRE(res.ok());
    auto t = truncate(e, d, w);
    std::vector<bool> removed(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) removed[i] = in_descriptor(e, X, t.vertices[i]);

    std::vector<std::pair<int, Address>> owner(t.size(), {-1, {}});
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (removed[i]) continue;
        int hits = 0;
        for (std::size_t r = 0; r < res.regions.size(); ++r) {
            auto back = res.regions[r].from_host(t.vertices[i]);
            if (!back) continue;
            ++hits;
            owner[i] = {static_cast<int>(r), back->first};
            CHECK(contains(*res.regions[r].expr, back->second));
            CHECK(res.regions[r].to_host(back->second, back->first) == t.vertices[i]);
        }
        CAPTURE(t.vertices[i].to_string());
        CHECK(hits == 1);
    }
    for (const auto& comp : components(t, removed)) {
        bool frontier = false;
        for (auto i : comp) {
            CHECK(owner[i] == owner[comp.front()]);
            frontier = frontier || t.frontier[i];
        }
        if (frontier) continue;
        std::size_t same = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!removed[i] && owner[i] == owner[comp.front()]) ++same;
        CHECK(same == comp.size());
    }
}

}  // namespace

TEST_CASE("tops become an uncountable family of isolated vertices") {
    auto wt = fixtures::load("withtops_all");
    auto res = components_after_deletion(wt, parse_descriptor("all(base)"));
    REQUIRE(res.ok());
    REQUIRE(res.regions.size() == 1);
    CHECK(res.regions[0].count == Cardinality::aleph1());
    CHECK(vertices_card(res.regions[0].expr) == Cardinality::finite(1));
    auto back = res.regions[0].from_host(A("top/root/b1/b2"));
    REQUIRE(back);
    CHECK(back->first == A("root/b1/b2"));
    CHECK(res.regions[0].attachment(back->first).to_string() == "prefix(root/b1/b2, base)");
    cross_check(wt, parse_descriptor("all(base)"), 3, 2);
    cross_check(fixtures::load("withtops_every2nd"), parse_descriptor("all(base)"), 3, 2);
}

TEST_CASE("ray minus its first vertex is one ray") {
    auto ray = parse_graph("ray");
    auto res = components_after_deletion(ray, parse_descriptor("{r0}"));
    REQUIRE(res.ok());
    REQUIRE(res.regions.size() == 1);
    CHECK(res.regions[0].expr->kind == Expr::Kind::Ray);
    CHECK(res.regions[0].to_host(A("r0")) == A("r1"));
    cross_check(ray, parse_descriptor("{r0}"), 6, 1);
    cross_check(ray, parse_descriptor("{r2, r4}"), 8, 1);
}

TEST_CASE("star minus its center") {
    auto star = parse_graph("star(aleph0)");
    auto res = components_after_deletion(star, parse_descriptor("{c}"));
    REQUIRE(res.ok());
    REQUIRE(res.regions.size() == 1);
    CHECK(res.regions[0].count == Cardinality::aleph0());
    CHECK(res.regions[0].attachment(A("3")).to_string() == "{c}");
    cross_check(star, parse_descriptor("{c}"), 2, 5);
    auto rest = components_after_deletion(star, parse_descriptor("leaves(.)"));
    REQUIRE(rest.ok());
    CHECK(rest.regions.size() == 1);
}

TEST_CASE("catalog cross-checked on truncations") {
    cross_check(parse_graph("comb(2)"), parse_descriptor("spine(.)"), 5, 2);
    cross_check(parse_graph("comb(1)"), parse_descriptor("{r1, r3}"), 7, 2);
    cross_check(parse_graph("tree(aleph1)"), parse_descriptor("{root}"), 3, 2);
    cross_check(parse_graph("tree(2)"), parse_descriptor("{root}"), 4, 2);
    cross_check(parse_graph("complete(aleph0)"), parse_descriptor("{k0, k1}"), 1, 6);
    cross_check(parse_graph("complete(aleph1)"), parse_descriptor("progression(., 0, 1)"), 1, 5);
    cross_check(fixtures::load("star_of_stars"), parse_descriptor("{h}"), 3, 3);
    cross_check(fixtures::load("rank2_nested"), parse_descriptor("{z, h}"), 3, 3);
    cross_check(fixtures::load("comb_dominated"), parse_descriptor("{d}"), 5, 2);
    cross_check(fixtures::load("comb_dominated"), parse_descriptor("all(base)"), 5, 2);
    cross_check(parse_graph("union(ray, star(aleph0))"), parse_descriptor("{right/c, left/r1}"), 5, 3);
    cross_check(parse_graph("complete(4)"), parse_descriptor("{k1}"), 1, 1);
}

TEST_CASE("outside the catalog is a value, not an exception") {
    auto res = components_after_deletion(parse_graph("tree(aleph1)"), parse_descriptor("level(1, .)"));
    CHECK_FALSE(res.ok());
    CHECK(components_after_deletion(parse_graph("ray"), parse_descriptor("all(.)")).regions.empty());
}

TEST_CASE("symbolic connectivity") {
    CHECK(is_connected(parse_graph("comb(2)")) == Verdict::Yes);
    CHECK(is_connected(parse_graph("union(ray, ray)")) == Verdict::No);
    CHECK(is_connected(parse_graph("add_edge(union(ray, ray), left/r0, right/r0)")) == Verdict::Yes);
    CHECK(is_connected(parse_graph("finite{v:[a, b, c], e:[a-b]}")) == Verdict::No);
}
