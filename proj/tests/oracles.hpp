#pragma once

// Independent oracles: they use only truncations and plain arithmetic, never
// the rank search or the component catalog.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "graphrank/truncation.hpp"

namespace oracles {

/// A rooted tree given by families of isomorphic subtrees below the root.
struct Shape {
    struct Family {
        Shape* child;
        bool infinite;
        std::uint64_t n;  // when finite
    };
    std::vector<Family> families;
};

inline bool finite_shape(const Shape& s) {
    for (const auto& f : s.families)
        if (f.infinite || !finite_shape(*f.child)) return false;
    return true;
}

/// Finite-set rank of a rayless rooted tree: 0 when finite; otherwise deleting
/// the root and the finite witnesses of finitely repeated subtrees leaves the
/// infinitely repeated subtrees, each one step lower.
inline std::uint64_t shape_rank(const Shape& s) {
    if (finite_shape(s)) return 0;
    std::uint64_t best = 0;
    for (const auto& f : s.families) {
        const auto r = shape_rank(*f.child);
        best = std::max(best, f.infinite ? r + 1 : r);
    }
    return best;
}

/// Largest component of truncate(e, d, w) minus the vertices in X.
inline std::size_t largest_component(const graphrank::ExprPtr& e, unsigned d, unsigned w,
                                     const std::set<graphrank::Address>& X) {
    auto t = graphrank::truncate(e, d, w);
    std::vector<bool> removed(t.size(), false);
    for (std::size_t v = 0; v < t.size(); ++v) removed[v] = X.count(t.vertices[v]) > 0;
    std::size_t best = 0;
    for (const auto& c : graphrank::components(t, removed)) best = std::max(best, c.size());
    return best;
}

/// Every finite subset of `pool` with at most k elements.
inline std::vector<std::set<graphrank::Address>> subsets(const std::vector<graphrank::Address>& pool, std::size_t k) {
    std::vector<std::set<graphrank::Address>> out{{}};
    for (const auto& v : pool) {
        const auto n = out.size();
        for (std::size_t i = 0; i < n; ++i)
            if (out[i].size() < k) {
                auto s = out[i];
                s.insert(v);
                out.push_back(std::move(s));
            }
    }
    return out;
}

}  // namespace oracles
