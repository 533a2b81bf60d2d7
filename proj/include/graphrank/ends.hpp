#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphrank/graph.hpp"
#include "graphrank/truncation.hpp"

namespace graphrank {

/// A concrete ray given by a rule over addresses.
///   Indexed: prefix/<stem><start + n*step> for n = 0, 1, ...
///   Branch:  head, head/0, head/0/0, ... (a tree branch below head)
struct RaySchema {
    enum class Kind { Indexed, Branch };
    Kind kind = Kind::Indexed;
    Address prefix;
    std::string stem = "r";
    std::uint64_t start = 0, step = 1;
    Address head;

    static RaySchema indexed(Address prefix, std::string stem, std::uint64_t start = 0, std::uint64_t step = 1);
    static RaySchema branch(Address head);

    Address vertex(std::uint64_t n) const;
    /// Position of v on the ray, if any.
    std::optional<std::uint64_t> position(const Address& v) const;
    RaySchema prefixed(const Address& p) const;
    std::string to_string() const;
};

struct EndClass {
    std::string id;
    Cardinality count;
    RaySchema ray;
    Verdict dominated = Verdict::Unknown;
    std::optional<Address> witness;  // a vertex sending an infinite fan to `ray`
    std::string note;
};

struct EndSpace {
    std::vector<EndClass> classes;
    std::optional<std::string> unsupported;

    bool ok() const { return !unsupported; }
    bool empty() const { return classes.empty(); }
    const EndClass* find(const std::string& id) const;
};

EndSpace end_space(const ExprPtr& e);

/// Per class of an EndSpace: which of its ends lie in the closure of a set.
struct EndSubset {
    enum class Part { None, All, Some, Unknown };
    struct Entry {
        Part part = Part::Unknown;
        std::string detail;  // the sub-family for Some ("branch root/b1", "copy 0", ...)
    };
    std::vector<Entry> entries;  // parallel to EndSpace::classes

    static EndSubset all_of(const EndSpace& s);
    static EndSubset none_of(const EndSpace& s);
    bool is_empty() const;   // every entry None
    bool is_known() const;   // no Unknown entry
    bool covers(std::size_t cls) const { return entries[cls].part == Part::All; }
};

std::string to_string(EndSubset::Part p);

EndSubset closure_ends(const ExprPtr& e, const EndSpace& space, const Descriptor& M);
inline EndSubset closure_ends(const ExprPtr& e, const Descriptor& M) { return closure_ends(e, end_space(e), M); }

Verdict is_dispersed(const ExprPtr& e, const Descriptor& U);

struct DominationResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Address> witness;
    std::string reason;
};
DominationResult is_dominated(const ExprPtr& e, const std::string& end_id);

/// Finite prefixes of the two outcomes of the star-comb dichotomy.
struct CombWitness {
    std::vector<std::size_t> spine;                // path in the truncation
    std::vector<std::vector<std::size_t>> teeth;  // each starts on the spine, ends in U
};
struct StarWitness {
    std::size_t center = 0;
    std::vector<std::vector<std::size_t>> paths;  // each starts at the center, ends in U
};
struct Exhausted {
    std::size_t reachable = 0;
};
using StarCombResult = std::variant<CombWitness, StarWitness, Exhausted>;

/// Grows a tree through the targets and reads off a star (a vertex with
/// `budget` branches towards U) or a comb (a path with `budget` teeth).
/// Throws GraphError on a disconnected truncation.
StarCombResult star_comb_search(const Truncation& t, const std::vector<bool>& target, std::size_t budget);

/// True when the witness is well formed: paths are graph paths, disjoint
/// where required, and end in the target set.
bool check_star_comb(const Truncation& t, const std::vector<bool>& target, const StarCombResult& r);

}  // namespace graphrank
