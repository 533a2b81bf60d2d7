#include "graphrank/address.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace graphrank {

Address Address::parse(std::string_view text) {
    std::vector<std::string> steps;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto slash = text.find('/', start);
        auto end = slash == std::string_view::npos ? text.size() : slash;
        auto step = text.substr(start, end - start);
        if (step.empty()) throw std::invalid_argument("empty step in address '" + std::string(text) + "'");
        steps.emplace_back(step);
        if (slash == std::string_view::npos) break;
        start = slash + 1;
    }
    return Address{std::move(steps)};
}

std::string Address::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += '/';
        out += steps_[i];
    }
    return out;
}

Address Address::child(std::string step) const {
    auto s = steps_;
    s.push_back(std::move(step));
    return Address{std::move(s)};
}

Address Address::parent() const {
    auto s = steps_;
    if (!s.empty()) s.pop_back();
    return Address{std::move(s)};
}

Address Address::prefixed(const Address& prefix) const {
    auto s = prefix.steps_;
    s.insert(s.end(), steps_.begin(), steps_.end());
    return Address{std::move(s)};
}

bool Address::starts_with(const Address& prefix) const {
    if (prefix.size() > size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (steps_[i] != prefix.steps_[i]) return false;
    return true;
}

Address Address::strip_prefix(const Address& prefix) const {
    return Address{std::vector<std::string>(steps_.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                            steps_.end())};
}

Address Address::first(std::size_t n) const {
    if (n > size()) n = size();
    return Address{std::vector<std::string>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n))};
}

namespace {

// Splits a step into a non-digit head and a trailing natural number, if any.
std::pair<std::string_view, std::optional<std::uint64_t>> split_step(std::string_view s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    if (i == s.size() || s.size() - i > 18) return {s, std::nullopt};
    if (s.size() - i > 1 && s[i] == '0') return {s, std::nullopt};
    return {s.substr(0, i), parse_nat(s.substr(i))};
}

}  // namespace

std::strong_ordering compare_steps(std::string_view a, std::string_view b) {
    auto [ha, na] = split_step(a);
    auto [hb, nb] = split_step(b);
    if (auto c = ha.compare(hb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (na && nb) return *na <=> *nb;
    if (na != nb) return na ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.compare(b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Address& a, const Address& b) {
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare_steps(a.steps_[i], b.steps_[i]); c != 0) return c;
    return a.size() <=> b.size();
}

std::optional<std::uint64_t> parse_nat(std::string_view text) {
    if (text.empty() || text.size() > 18) return std::nullopt;
    if (text.size() > 1 && text[0] == '0') return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

std::optional<std::uint64_t> step_index(std::string_view step, std::string_view prefix) {
    if (step.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_nat(step.substr(prefix.size()));
}

bool is_token(std::string_view step) {
    auto n = step_index(step, "b");
    return n && *n >= 1;
}

std::size_t AddressHash::operator()(const Address& a) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : a.steps()) h = (h ^ std::hash<std::string>{}(s)) * 1099511628211ull;
    return h;
}

}  // namespace graphrank
