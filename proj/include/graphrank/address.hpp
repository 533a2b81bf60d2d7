#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphrank {

/// A vertex name: a path of constructor-local steps, rendered with '/'.
///
/// Step conventions per constructor:
///   ray / comb spine   r<n>           comb tooth     r<n>/t<j>
///   star               c, c/<i>       tree           root, root/<i>/<j>/...
///   complete           k<i>           top            top/<tree address>
///   union              left/..., right/...
///   hang               h, h/<j>/<i>/<copy address>
/// Indices are natural numbers or symbolic branch tokens b1, b2, ...
class Address {
public:
    Address() = default;
    explicit Address(std::vector<std::string> steps) : steps_(std::move(steps)) {}

    static Address parse(std::string_view text);
    std::string to_string() const;

    const std::vector<std::string>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const std::string& front() const { return steps_.front(); }
    const std::string& back() const { return steps_.back(); }
    const std::string& operator[](std::size_t i) const { return steps_[i]; }

    Address child(std::string step) const;
    Address parent() const;  // drops the last step
    Address prefixed(const Address& prefix) const;
    bool starts_with(const Address& prefix) const;
    /// The steps after `prefix`; precondition starts_with(prefix).
    Address strip_prefix(const Address& prefix) const;
    Address first(std::size_t n) const;

    friend std::strong_ordering operator<=>(const Address& a, const Address& b);
    friend bool operator==(const Address& a, const Address& b) { return a.steps_ == b.steps_; }

private:
    std::vector<std::string> steps_;
};

/// Natural ordering on steps: "r2" < "r10", numbers before tokens.
std::strong_ordering compare_steps(std::string_view a, std::string_view b);

/// Parses "<prefix><n>" into n.
std::optional<std::uint64_t> step_index(std::string_view step, std::string_view prefix);
std::optional<std::uint64_t> parse_nat(std::string_view text);
bool is_token(std::string_view step);  // b1, b2, ...

struct AddressHash {
    std::size_t operator()(const Address& a) const noexcept;
};

}  // namespace graphrank
