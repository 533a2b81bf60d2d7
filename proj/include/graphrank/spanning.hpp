#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphrank/components.hpp"
#include "graphrank/rank.hpp"
#include "graphrank/tree.hpp"

namespace graphrank {

/// Outcome of a tree construction.
struct TreeResult {
    enum class Status { Tree, None, NotAllDominated, Unknown };
    Status status = Status::Unknown;
    std::optional<TreeDescriptor> tree;
    std::string reason;  // for NotAllDominated: the undominated end class id

    static TreeResult of(TreeDescriptor t) { return {Status::Tree, std::move(t), ""}; }
    static TreeResult none(std::string why) { return {Status::None, std::nullopt, std::move(why)}; }
    static TreeResult undominated(std::string end) { return {Status::NotAllDominated, std::nullopt, std::move(end)}; }
    static TreeResult unknown(std::string why) { return {Status::Unknown, std::nullopt, std::move(why)}; }
    bool ok() const { return status == Status::Tree; }
};

std::string to_string(TreeResult::Status s);

/// Normal spanning tree per constructor; `root` requests a root for finite graphs.
TreeResult normal_spanning_tree(const ExprPtr& e, std::optional<Address> root = std::nullopt);

/// Lifts a tree of one region member (in the region's local coordinates) to a
/// forest over all members in host coordinates. `var` names the member key.
std::optional<TreeDescriptor> embed_tree(const TreeDescriptor& local, const RegionDescriptor& region,
                                         const std::string& var);

/// One tree of a forest plus the host address its root(s) should hang from.
/// `link` is a template over the root pattern's variables; empty = least edge.
struct ForestPart {
    TreeDescriptor tree;
    std::string link;
};

/// Joins every part to the anchor part by one edge. Throws GraphError when a
/// part has no edge towards the anchor.
TreeDescriptor merge_forest(const ExprPtr& e, const std::vector<ForestPart>& forest, std::size_t anchor,
                            bool spanning = true);

struct RerouteResult {
    TreeDescriptor tree;
    bool unchanged = false;
    std::vector<std::string> deleted;  // the edge set F, one description per family
    Descriptor delta;                   // vertices incident with E(T) xor E(T')
    std::string note;
};

/// A spanning tree that contains the ray R and still reflects psi. Throws
/// GraphError when R is not a ray of e or the case is outside the catalog.
RerouteResult reroute_with_ray(const ExprPtr& e, const TreeDescriptor& T, const EndSubset& psi, const RaySchema& R);

/// A rayless tree containing U, or the first undominated end in the closure of U.
TreeResult rayless_tree_containing(const ExprPtr& e, const Descriptor& U);

/// Normal tree whose vertex set is exactly X, when the catalog has one.
std::optional<TreeDescriptor> normal_tree_on(const ExprPtr& e, const Descriptor& X);

/// End-faithful spanning tree by recursion along a peeling witness whose
/// peeled sets are normally spanned (the normal rank witness by default).
TreeResult end_faithful_spanning_tree(const ExprPtr& e, PeelingPtr witness = nullptr);

/// Rayless spanning tree, or the first undominated end.
TreeResult rayless_spanning_tree(const ExprPtr& e, PeelingPtr witness = nullptr);

/// Bound on the rank of G[C + X] from the rank of the region C. Throws
/// GraphError when X is not in the ideal or C has no rank.
Ordinal rank_transfer_bound(const ExprPtr& e, const Descriptor& X, const RegionDescriptor& C, const Ideal& I);

/// G[C + X] for one member C of the region, as an expression, for a finite X with finitely many edges into C.
std::optional<ExprPtr> induced_with(const ExprPtr& e, const Descriptor& X, const RegionDescriptor& C);

}  // namespace graphrank
