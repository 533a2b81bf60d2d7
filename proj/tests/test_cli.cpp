#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "graphrank/cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using graphrank::cli::run;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json J(const Run& r) { return nlohmann::json::parse(r.out); }

fs::path scratch() {
    auto p = fs::temp_directory_path() / "graphrank_cli_test";
    fs::create_directories(p);
    return p;
}

std::string write(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("analyze reports") {
    auto wt = J(cli({"analyze", fixtures::path("withtops_all")}));
    CHECK(wt["schema"] == 1);
    CHECK(wt["ranks"]["normal"]["status"] == "ranked");
    CHECK(wt["ranks"]["normal"]["rank"] == "1");
    CHECK(wt["ranks"]["aleph1"]["status"] == "no_rank");

    auto k1 = J(cli({"analyze", fixtures::path("k_aleph1")}));
    CHECK(k1["ranks"]["normal"]["status"] == "no_rank");
    CHECK(k1["ranks"]["normal"]["certificate"]["kind"] == "self_similar_core");

    auto ray = J(cli({"analyze", fixtures::path("ray")}));
    CHECK(ray["undominated_ends"] == 1);
    CHECK(ray["ranks"]["normal"]["rank"] == "0");

    auto text = cli({"analyze", "--format", "text", fixtures::path("ray")});
    CHECK(text.code == 0);
    CHECK(text.out.find("ranks.normal.rank: 0") != std::string::npos);
}

TEST_CASE("build and verify") {
    auto efst = cli({"build", "efst", fixtures::path("withtops_all")});
    REQUIRE(efst.code == 0);
    const auto tree = write("wt_efst.json", efst.out);
    auto v = cli({"verify", tree, fixtures::path("withtops_all")});
    CHECK(v.code == 0);
    CHECK(J(v)["pass"] == true);

    auto ray = cli({"build", "rayless", fixtures::path("ray")});
    CHECK(ray.code == 4);
    CHECK(J(ray)["status"] == "not_all_dominated");

    auto td = cli({"build", "tdecomp", fixtures::path("star_aleph0")});
    REQUIRE(td.code == 0);
    CHECK(J(td)["nodes"].size() == 2);
    const auto td_path = write("star_td.json", td.out);
    CHECK(cli({"verify", td_path, fixtures::path("star_aleph0")}).code == 0);
    CHECK(cli({"verify", td_path, fixtures::path("ray")}).code == 5);
    CHECK(cli({"verify", tree, fixtures::path("ray")}).code == 5);

    auto trivial = cli({"build", "tdecomp", fixtures::path("ray")});
    REQUIRE(trivial.code == 0);
    CHECK(cli({"verify", write("ray_td.json", trivial.out), fixtures::path("ray")}).code == 0);
}

TEST_CASE("a tampered tree fails verification") {
    auto nst = cli({"build", "nst", fixtures::path("k_aleph0")});
    REQUIRE(nst.code == 0);
    auto j = J(nst);
    REQUIRE(j["rules"].size() == 1);
    j["rules"][0]["when"] = {"n>=3"};
    j["rules"].push_back({{"match", "k1"}, {"when", nlohmann::json::array()}, {"parent", "k2"}});
    j["rules"].push_back({{"match", "k2"}, {"when", nlohmann::json::array()}, {"parent", "k1"}});
    auto v = cli({"verify", write("cycle.json", j.dump()), fixtures::path("k_aleph0")});
    CHECK(v.code == 3);
    auto r = J(v);
    CHECK(r["pass"] == false);
    bool cycle = false;
    for (const auto& c : r["checks"]) cycle = cycle || c["acyclic"] == false;
    CHECK(cycle);
}

TEST_CASE("export") {
    auto ray = cli({"export", "--d", "5", fixtures::path("ray")});
    REQUIRE(ray.code == 0);
    auto count = [](const std::string& s, const std::string& what) {
        std::size_t n = 0;
        for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
        return n;
    };
    CHECK(count(ray.out, "label=") == 5);
    CHECK(count(ray.out, " -- ") == 4);
    auto k6 = cli({"export", "--d", "1", "--w", "6", fixtures::path("k_aleph0")});
    CHECK(count(k6.out, "label=") == 6);
    CHECK(count(k6.out, " -- ") == 15);
    const auto tree = write("wt_tree.json", cli({"build", "efst", fixtures::path("withtops_all")}).out);
    auto overlay = cli({"export", "--d", "3", "--w", "2", "--tree", tree, fixtures::path("withtops_all")});
    CHECK(count(overlay.out, "penwidth") + 1 == count(overlay.out, "label="));
    auto adj = cli({"export", "--format", "json", "--d", "5", fixtures::path("ray")});
    CHECK(adj.code == 0);
}

TEST_CASE("errors and caps") {
    CHECK(cli({"analyze", write("bad.graph", "bad(")}).code == 2);
    CHECK(cli({"analyze", (scratch() / "missing.graph").string()}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"build", "spanning", fixtures::path("ray")}).code == 2);
    CHECK(cli({"verify", write("junk.json", "{"), fixtures::path("ray")}).code == 2);

    const auto td = write("ray_td2.json", cli({"build", "tdecomp", fixtures::path("ray")}).out);
    setenv("GRAPHRANK_MAX_SWEEP", "2", 1);
    auto capped = cli({"verify", "--d", "6", "--w", "6", td, fixtures::path("ray")});
    unsetenv("GRAPHRANK_MAX_SWEEP");
    CHECK(capped.code == 0);
    CHECK(J(capped)["sweep"]["d"] == 2);
    CHECK(capped.err.find("capped") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    for (const char* name : {"withtops_all", "star_of_stars", "comb2"}) {
        CAPTURE(name);
        CHECK(cli({"analyze", fixtures::path(name)}).out == cli({"analyze", fixtures::path(name)}).out);
        CHECK(cli({"build", "efst", fixtures::path(name)}).out == cli({"build", "efst", fixtures::path(name)}).out);
    }
}
