#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphrank/address.hpp"
#include "graphrank/cardinality.hpp"

namespace graphrank {

/// Raised for ill-formed expressions and unresolvable addresses.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Path from an expression to one of its sub-expressions: steps are
/// "left", "right" (union sides) and "base" (the operand of with_tops,
/// join_vertex and add_edge) and "copy.J.I" (copy I of family J below a
/// hang root). Empty means the expression itself (".").
using RegionPath = std::vector<std::string>;

std::string render_region(const RegionPath& r);

/// Symbolic vertex family over an expression.
struct Descriptor {
    enum class Kind {
        Explicit,      // {a, b, ...}
        All,           // all(R)
        Level,         // level(k, R): tree nodes at depth k
        Spine,         // spine(R): ray / comb spine vertices
        Centers,       // centers(R): star center, hang roots
        Leaves,        // leaves(R): star leaves
        Tops,          // tops(R)
        BranchPrefix,  // prefix(ADDR, R): vertices of the branch ADDR.0.0...
        Progression,   // progression(R, a, d) on a spine, or progression(ADDR, R, a, d) on a branch
        Union,         // cup(D, D, ...)
        Under,         // under(ADDR): every vertex whose address extends ADDR
        Minus,         // minus(D, D)
        Children,      // children(ADDR, R): children of a tree node
        TopsThrough,   // tops_through(ADDR, R): tops adjacent to a tree node
        Anchors,       // anchors(R): the copy anchors below a hang root
    };

    Kind kind = Kind::Explicit;
    std::vector<Address> addresses;  // Explicit
    RegionPath region;
    std::uint64_t level = 0;
    Address head;  // BranchPrefix, branch Progression, Under
    bool on_branch = false;
    std::uint64_t start = 0, step = 1;
    std::vector<Descriptor> parts;  // Union, Minus

    static Descriptor explicit_set(std::vector<Address> a);
    static Descriptor all(RegionPath r = {});
    static Descriptor level_of(std::uint64_t k, RegionPath r = {});
    static Descriptor spine(RegionPath r = {});
    static Descriptor centers(RegionPath r = {});
    static Descriptor leaves(RegionPath r = {});
    static Descriptor tops(RegionPath r = {});
    static Descriptor branch_prefix(Address head, RegionPath r = {});
    static Descriptor progression(std::uint64_t a, std::uint64_t d, RegionPath r = {});
    static Descriptor branch_progression(Address head, std::uint64_t a, std::uint64_t d, RegionPath r = {});
    static Descriptor cup(std::vector<Descriptor> parts);
    static Descriptor under(Address prefix);
    static Descriptor minus(Descriptor a, Descriptor b);
    static Descriptor children(Address node, RegionPath r = {});
    static Descriptor tops_through(Address node, RegionPath r = {});
    static Descriptor anchors(RegionPath r = {});

    std::string to_string() const;
    bool operator==(const Descriptor&) const = default;
};

enum class TopsMode { WholeRay, EveryOther };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Finite presentation of a (possibly uncountable) graph.
struct Expr {
    enum class Kind { Finite, Ray, Comb, Star, Tree, WithTops, Complete, Union, JoinVertex, AddEdge, Hang };

    Kind kind = Kind::Finite;
    std::vector<std::string> labels;                          // Finite
    std::vector<std::pair<std::string, std::string>> edges;   // Finite
    std::uint64_t tooth = 0;                                  // Comb
    Cardinality card;                                         // Star, Tree, Complete
    TopsMode mode = TopsMode::WholeRay;                       // WithTops
    ExprPtr left, right;                                      // Union; left is the base otherwise
    std::string label;                                        // JoinVertex
    Descriptor attach;                                        // JoinVertex
    Address a, b;                                             // AddEdge
    std::vector<std::pair<ExprPtr, Cardinality>> copies;      // Hang

    const ExprPtr& base() const { return left; }
};

ExprPtr make_finite(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> edges);
ExprPtr make_ray();
ExprPtr make_comb(std::uint64_t tooth);
ExprPtr make_star(Cardinality k);
ExprPtr make_tree(Cardinality k);
ExprPtr make_complete(Cardinality k);
ExprPtr make_with_tops(ExprPtr tree, TopsMode mode);
ExprPtr make_union(ExprPtr l, ExprPtr r);
ExprPtr make_join_vertex(ExprPtr base, std::string label, Descriptor attach);
ExprPtr make_add_edge(ExprPtr base, Address a, Address b);
/// A new root h joined to the anchor vertex of every copy.
ExprPtr make_hang(std::vector<std::pair<ExprPtr, Cardinality>> copies);

std::string render(const Expr& e);
inline std::string render(const ExprPtr& e) { return render(*e); }
bool same_expr(const ExprPtr& a, const ExprPtr& b);

/// Sub-expression at a region path together with the address prefix that
/// its vertices carry inside the outer expression.
struct SubExpr {
    ExprPtr expr;
    Address prefix;
};
SubExpr resolve_region(const ExprPtr& e, const RegionPath& r);

/// The designated vertex used when an expression is hung below a new root.
Address anchor(const Expr& e);

}  // namespace graphrank
