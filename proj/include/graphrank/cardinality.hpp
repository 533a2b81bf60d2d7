#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace graphrank {

/// Coarse cardinal: Finite(n) < Aleph0 < Aleph1 <= Uncountable.
class Cardinality {
public:
    enum class Kind { Finite, Aleph0, Aleph1, Uncountable };

    constexpr Cardinality() = default;
    static constexpr Cardinality finite(std::uint64_t n) { return Cardinality{Kind::Finite, n}; }
    static constexpr Cardinality aleph0() { return Cardinality{Kind::Aleph0, 0}; }
    static constexpr Cardinality aleph1() { return Cardinality{Kind::Aleph1, 0}; }
    static constexpr Cardinality uncountable() { return Cardinality{Kind::Uncountable, 0}; }

    constexpr Kind kind() const { return kind_; }
    constexpr std::uint64_t count() const { return n_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_countable() const { return kind_ == Kind::Finite || kind_ == Kind::Aleph0; }
    constexpr bool is_zero() const { return kind_ == Kind::Finite && n_ == 0; }

    friend constexpr std::strong_ordering operator<=>(Cardinality a, Cardinality b) {
        if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
        return a.n_ <=> b.n_;
    }
    friend constexpr bool operator==(Cardinality a, Cardinality b) = default;

    /// Cardinal sum; for two infinite values this is their max.
    friend constexpr Cardinality operator+(Cardinality a, Cardinality b) {
        if (a.is_finite() && b.is_finite()) return finite(a.n_ + b.n_);
        return a < b ? b : a;
    }
    /// Cardinal product, coarse (0 annihilates, infinite absorbs).
    friend constexpr Cardinality operator*(Cardinality a, Cardinality b) {
        if (a.is_zero() || b.is_zero()) return finite(0);
        if (a.is_finite() && b.is_finite()) return finite(a.n_ * b.n_);
        return a < b ? b : a;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Finite: return std::to_string(n_);
            case Kind::Aleph0: return "aleph0";
            case Kind::Aleph1: return "aleph1";
            case Kind::Uncountable: return "uncountable";
        }
        return "?";
    }

private:
    constexpr Cardinality(Kind k, std::uint64_t n) : kind_(k), n_(n) {}
    Kind kind_ = Kind::Finite;
    std::uint64_t n_ = 0;
};

constexpr Cardinality max(Cardinality a, Cardinality b) { return a < b ? b : a; }

/// Number of rooted rays in a tree where every node has `branching` children.
constexpr Cardinality branch_count(Cardinality branching) {
    if (branching.is_zero()) return Cardinality::finite(0);
    if (branching == Cardinality::finite(1)) return Cardinality::finite(1);
    return Cardinality::uncountable();
}

/// Three-valued verdict used throughout the analyses.
enum class Verdict { No, Yes, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::No: return "no";
        case Verdict::Yes: return "yes";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace graphrank
