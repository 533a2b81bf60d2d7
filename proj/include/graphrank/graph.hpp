#pragma once

#include <optional>
#include <vector>

#include "graphrank/expr.hpp"

namespace graphrank {

/// Neighbourhood of one vertex: finitely many explicit addresses plus
/// symbolic families, minus the listed exclusions.
struct NeighborDescriptor {
    std::vector<Address> vertices;
    std::vector<Descriptor> families;
    std::vector<Address> exclude;

    bool contains(const ExprPtr& e, const Address& v) const;
    std::string to_string() const;
};

bool contains(const Expr& e, const Address& v);
inline bool contains(const ExprPtr& e, const Address& v) { return contains(*e, v); }

/// Exact edge test between two addresses (false if either does not resolve).
bool adjacent(const Expr& e, const Address& u, const Address& v);
inline bool adjacent(const ExprPtr& e, const Address& u, const Address& v) { return adjacent(*e, u, v); }

Cardinality vertices_card(const Expr& e);
inline Cardinality vertices_card(const ExprPtr& e) { return vertices_card(*e); }

NeighborDescriptor adjacency(const ExprPtr& e, const Address& v);

bool in_descriptor(const ExprPtr& e, const Descriptor& d, const Address& v);
/// Coarse size by structural rules; exact for the catalog, an upper bound for
/// unions with overlapping symbolic parts and for differences.
Cardinality descriptor_card(const ExprPtr& e, const Descriptor& d);

/// Re-expresses a descriptor over a sub-expression in terms of the outer
/// expression reached through `region_steps` whose vertices carry `prefix`.
Descriptor lift(const Descriptor& d, const RegionPath& region_steps, const Address& prefix);

/// Well-formedness beyond the grammar: join labels are fresh, add_edge
/// endpoints resolve, attach descriptors only name regions of their base.
void validate(const ExprPtr& e);

// Shared helpers for the tree-shaped constructors.
bool valid_index(Cardinality k, const std::string& step);
/// Depth of a tree node address (root = 0), or nullopt if not a node of tree(k).
std::optional<std::size_t> tree_depth(Cardinality k, const Address& local);
/// True if tree node `v` lies on the branch head.0.0.0...
bool on_branch(const Address& head, const Address& v);
/// Canonical head of the branch through `v` that continues with index 0.
Address branch_head(const Address& v);

/// The expression with join_vertex / add_edge wrappers removed.
const Expr& core(const Expr& e);

}  // namespace graphrank
