#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphrank {

class OrdinalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Nesting bound on exponents; ordinals deeper than this are rejected.
std::size_t ordinal_depth_limit();
void set_ordinal_depth_limit(std::size_t limit);

/// An ordinal below epsilon_0 in Cantor normal form:
///   w^e1*c1 + w^e2*c2 + ... + w^ek*ck   with e1 > e2 > ... > ek, ci >= 1.
/// The empty term list is 0.
class Ordinal {
public:
    struct Term;

    Ordinal() = default;
    Ordinal(std::uint64_t n);  // NOLINT: finite ordinals convert implicitly

    static Ordinal omega();
    /// w^exponent * coefficient
    static Ordinal power(const Ordinal& exponent, std::uint64_t coefficient = 1);
    /// Builds from terms; throws OrdinalError if they are not in normal form.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    bool is_successor() const;
    bool is_limit() const { return !is_zero() && !is_successor(); }
    /// Value of a finite ordinal; throws for infinite ones.
    std::uint64_t finite_value() const;
    /// 0 for finite ordinals, 1 + depth(leading exponent) otherwise.
    std::size_t depth() const;

    std::string to_string() const;
    static Ordinal parse(std::string_view text);

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    std::vector<Term> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    std::uint64_t coefficient = 1;
};

enum class Order { Less, Equal, Greater };

Order compare(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal sup(const std::vector<Ordinal>& xs);

/// Infinite families {f(n) : n < w} from the closed shape catalog.
struct DescribedFamily {
    enum class Shape { Constant, Identity, OmegaTimes };
    Shape shape = Shape::Identity;
    Ordinal constant;  // only for Shape::Constant
};

Ordinal sup(const DescribedFamily& family);

}  // namespace graphrank
