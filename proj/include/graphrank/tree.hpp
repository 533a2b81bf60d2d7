#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphrank/ends.hpp"
#include "graphrank/pattern.hpp"

namespace graphrank {

/// A rooted tree (or forest) inside a host expression, given by parent rules.
/// Every non-root vertex of the domain must match exactly one rule.
struct TreeDescriptor {
    ExprPtr host;
    std::string name;
    std::vector<Pattern> roots;            // one literal pattern for a tree, more for a forest
    std::vector<ParentRule> rules;
    std::optional<Descriptor> domain;      // vertices the tree covers; nullopt = all (spanning)
    Verdict rayless = Verdict::Unknown;    // declared by the construction, checked by is_rayless
    std::vector<std::string> notes;

    bool spanning() const { return !domain.has_value(); }
    bool covers(const Address& v) const;
    bool is_root(const Address& v) const;
    /// Indices of the rules that apply to v.
    std::vector<std::size_t> matching_rules(const Address& v) const;
    /// Parent of v; nullopt for roots and for vertices without exactly one rule.
    std::optional<Address> parent(const Address& v) const;
    /// v, parent(v), ..., root; nullopt on a cycle, a missing rule or when `limit` is exceeded.
    std::optional<std::vector<Address>> ancestors(const Address& v, std::size_t limit = 4096) const;
    std::optional<std::size_t> depth(const Address& v) const;
};

TreeDescriptor single_vertex_tree(const ExprPtr& host, const Address& v);

/// Per-truncation verification of a tree descriptor.
struct TreeCheck {
    bool spanning = true;   // every covered vertex is reached
    bool edges = true;      // parent edges are host edges
    bool acyclic = true;
    bool connected = true;  // every chain ends in a root (one root for trees)
    bool normal = true;     // host edges between tree vertices join comparable vertices
    std::vector<std::string> failures;

    bool ok(bool need_normal = false) const {
        return spanning && edges && acyclic && connected && (!need_normal || normal);
    }
};

TreeCheck check_tree(const TreeDescriptor& T, const Truncation& t);
TreeCheck check_tree(const TreeDescriptor& T, unsigned d, unsigned w);

/// Tree edges (child, parent) inside the truncation, as index pairs.
std::vector<std::pair<std::size_t, std::size_t>> tree_edges(const TreeDescriptor& T, const Truncation& t);

/// Structural raylessness: parent chains of truncation vertices stop growing
/// when the truncation deepens.
Verdict is_rayless(const TreeDescriptor& T);

enum class Reflects { Pass, Fail, Unknown };
struct ReflectsResult {
    Reflects verdict = Reflects::Unknown;
    std::string witness;
};
std::string to_string(Reflects r);

/// Does the natural end map of T hit exactly the end classes in psi, one
/// T-end per host end? Symbolic part: host representative rays have
/// converging root paths in T. Truncation part: after deleting the
/// down-closure of the least tree vertices, each deep host component holds
/// exactly one deep T-component.
ReflectsResult reflects_check(const ExprPtr& e, const TreeDescriptor& T, const EndSubset& psi, unsigned max_d = 4,
                              unsigned max_w = 4);

std::string tree_to_json(const TreeDescriptor& T);
/// Parses a tree artifact for `host`; throws GraphError on malformed input
/// and std::invalid_argument when the artifact names another graph.
TreeDescriptor tree_from_json(const std::string& text, const ExprPtr& host);

}  // namespace graphrank
