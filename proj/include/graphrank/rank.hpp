#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphrank/components.hpp"
#include "graphrank/ordinal.hpp"
#include "json.hpp"

namespace graphrank {

/// A class of vertex sets closed under subsets and finite unions.
struct Ideal {
    enum class Kind { FiniteSets, SetsBelow, NormallySpanned };
    Kind kind = Kind::FiniteSets;
    Cardinality kappa = Cardinality::aleph0();  // SetsBelow
    ExprPtr host;                               // NormallySpanned

    static Ideal finite_sets();
    static Ideal sets_below(Cardinality k);
    static Ideal normally_spanned(ExprPtr host);

    /// Membership of X, a vertex set of e. For NormallySpanned, e is the host
    /// or a subgraph of it; rules that only hold inside the host itself are
    /// used only when e is the host.
    Verdict contains(const ExprPtr& e, const Descriptor& X) const;
    std::string to_string() const;
};

struct PeelingTree;
using PeelingPtr = std::shared_ptr<const PeelingTree>;

/// One region family of G - X with the witness shared by all its members.
struct PeelChild {
    std::string members;
    Cardinality count = Cardinality::finite(1);
    ExprPtr expr;
    PeelingPtr witness;
};

/// Rank witness: Base means V(G) is in the ideal; otherwise X is peeled off.
struct PeelingTree {
    bool base = true;
    Descriptor X;
    std::vector<PeelChild> children;
    Ordinal ordinal;

    static PeelingPtr make_base();
    static PeelingPtr make_peel(Descriptor X, std::vector<PeelChild> children);
};

struct NoRankCertificate {
    enum class Kind { SelfSimilarCore, TreeContainment };
    Kind kind = Kind::SelfSimilarCore;
    std::string region;                 // region path of the core / tree
    std::string core;                   // the sub-expression found there
    std::vector<std::string> evidence;  // per checked X: the copy it leaves behind
};
std::string to_string(NoRankCertificate::Kind k);

struct RankResult {
    enum class Kind { Ranked, NoRank, Unknown };
    Kind kind = Kind::Unknown;
    Ordinal rank;
    PeelingPtr witness;
    std::optional<NoRankCertificate> certificate;
    std::string reason;
    /// Top-level witnesses of every successful candidate, minimal one first.
    std::vector<PeelingPtr> alternatives;

    bool ranked() const { return kind == Kind::Ranked; }
};
std::string to_string(RankResult::Kind k);

struct RankOptions {
    bool use_certificates = true;
    unsigned max_depth = 5;
};

/// Candidate peeling sets tried for e, in catalog order.
std::vector<Descriptor> candidate_sets(const ExprPtr& e);

RankResult ideal_rank(const ExprPtr& e, const Ideal& I, RankOptions opt = {});
/// Rank of the sub-expression at `region` with membership decided in `host`.
RankResult ideal_rank_in(const ExprPtr& host, const RegionPath& region, const Ideal& I);
std::optional<NoRankCertificate> no_rank_certificates(const ExprPtr& e, const Ideal& I);

/// Finite-set rank; throws GraphError when e has a ray.
RankResult schmidt_rank(const ExprPtr& e);
/// Rank for the normally spanned sets of e; throws GraphError when e is disconnected.
RankResult normal_rank(const ExprPtr& e);
RankResult kappa_rank(const ExprPtr& e, Cardinality kappa);

/// Rechecks a witness against e: memberships, regions and ordinals. Empty on success.
std::optional<std::string> check_witness(const ExprPtr& e, const Ideal& I, const PeelingTree& w);

/// Decomposition built from a peeling witness: one node per peel step, the
/// parts of every child decomposition widened by the peeled set.
struct DecompositionNode {
    std::string id;
    std::optional<std::size_t> parent;
    std::string part;
    Cardinality count = Cardinality::finite(1);  // copies this node stands for
};

struct TreeDecomposition {
    ExprPtr host;
    PeelingPtr witness;
    std::vector<DecompositionNode> nodes;
    bool widened = true;  // false only for deliberately broken decompositions
};

TreeDecomposition rank_to_decomposition(const ExprPtr& e, const PeelingPtr& w);

/// The decomposition tree as a graph expression (nested hang of single vertices).
ExprPtr decomposition_tree_expr(const TreeDecomposition& td);

struct DecompositionRank {
    Ordinal bound;
    PeelingPtr induced;
};
/// Rank bound from a decomposition: the finite-set rank of its tree. Throws
/// GraphError when a part is not in the ideal or the tree has a ray.
DecompositionRank decomposition_to_rank(const ExprPtr& e, const TreeDecomposition& td, const Ideal& I);

struct DecompositionCheck {
    bool pass = true;
    std::string axiom;  // T1, T2, T3, witness or rayless
    std::string witness;
};
DecompositionCheck verify_decomposition(const ExprPtr& e, const TreeDecomposition& td, unsigned max_d, unsigned max_w);

nlohmann::ordered_json peeling_to_json(const PeelingTree& w);
PeelingPtr peeling_from_json(const nlohmann::json& j);
nlohmann::ordered_json certificate_to_json(const NoRankCertificate& c);
nlohmann::ordered_json rank_to_json(const RankResult& r);
std::string decomposition_to_json(const TreeDecomposition& td);
/// Throws GraphError on malformed input, std::invalid_argument for another graph.
TreeDecomposition decomposition_from_json(const std::string& text, const ExprPtr& host);

}  // namespace graphrank
