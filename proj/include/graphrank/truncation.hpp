#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphrank/graph.hpp"

namespace graphrank {

/// Finite induced subgraph of an expression. Vertices are sorted by address.
struct Truncation {
    ExprPtr expr;
    unsigned depth = 0, width = 0;
    std::vector<Address> vertices;
    std::vector<std::vector<std::size_t>> adj;  // sorted neighbour ids
    /// Vertices with at least one neighbour outside the truncation.
    std::vector<bool> frontier;
    std::unordered_map<Address, std::size_t, AddressHash> index;

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const;
    std::optional<std::size_t> id(const Address& a) const;
    bool has_edge(std::size_t u, std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// Hard cap on truncation size; larger requests throw GraphError.
inline constexpr std::size_t kMaxTruncationVertices = 60000;

Truncation truncate(const ExprPtr& e, unsigned depth, unsigned width);

/// Ids of truncation vertices that belong to the descriptor.
std::vector<std::size_t> members(const Truncation& t, const Descriptor& d);

/// Connected components of the truncation with `removed` vertices deleted.
std::vector<std::vector<std::size_t>> components(const Truncation& t, const std::vector<bool>& removed);
bool is_connected(const Truncation& t);
/// BFS distances from the sources (SIZE_MAX when unreachable).
std::vector<std::size_t> bfs_distances(const Truncation& t, const std::vector<std::size_t>& sources);

/// DOT rendering; `tree_edges` (pairs of ids) are drawn bold.
std::string to_dot(const Truncation& t, const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges = {});
/// JSON adjacency document (serialized).
std::string to_json(const Truncation& t);

}  // namespace graphrank
