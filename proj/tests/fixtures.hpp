#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graphrank/parser.hpp"

namespace fixtures {

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> all = {
        "ray",         "comb0",          "comb1",          "comb2",       "comb3",
        "star_aleph0", "tree_aleph0",    "tree_aleph1",    "withtops_all", "withtops_every2nd",
        "k_aleph0",    "k_aleph1",       "comb_dominated", "star_of_stars", "rank2_nested"};
    return all;
}

inline std::string path(const std::string& name) { return std::string(GRAPHRANK_FIXTURES) + "/" + name + ".graph"; }

inline std::string text(const std::string& name) {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline graphrank::ExprPtr load(const std::string& name) { return graphrank::parse_graph(text(name)); }

}  // namespace fixtures
