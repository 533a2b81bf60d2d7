#include "graphrank/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace graphrank {

namespace {

std::atomic<std::size_t> g_depth_limit{8};

void check_depth(const Ordinal& o) {
    if (o.depth() > ordinal_depth_limit())
        throw OrdinalError("ordinal nesting depth " + std::to_string(o.depth()) +
                           " exceeds limit " + std::to_string(ordinal_depth_limit()));
}

}  // namespace

std::size_t ordinal_depth_limit() { return g_depth_limit.load(); }
void set_ordinal_depth_limit(std::size_t limit) { g_depth_limit.store(limit); }

Ordinal::Ordinal(std::uint64_t n) {
    if (n > 0) terms_.push_back(Term{Ordinal{}, n});
}

Ordinal Ordinal::omega() { return power(Ordinal{1}); }

Ordinal Ordinal::power(const Ordinal& exponent, std::uint64_t coefficient) {
    if (coefficient == 0) return Ordinal{};
    Ordinal o;
    o.terms_.push_back(Term{exponent, coefficient});
    check_depth(o);
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) throw OrdinalError("zero coefficient in CNF term");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw OrdinalError("CNF exponents must be strictly decreasing");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    check_depth(o);
    return o;
}

bool Ordinal::is_finite() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw OrdinalError("ordinal " + to_string() + " is not finite");
    return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::size_t Ordinal::depth() const {
    if (is_finite()) return 0;
    return 1 + terms_[0].exponent.depth();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.exponent <=> y.exponent; c != 0) return c;
        if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

Order compare(const Ordinal& a, const Ordinal& b) {
    auto c = a <=> b;
    if (c < 0) return Order::Less;
    if (c > 0) return Order::Greater;
    return Order::Equal;
}

Ordinal succ(const Ordinal& a) { return add(a, Ordinal{1}); }

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const auto& lead = b.terms()[0];
    std::vector<Ordinal::Term> out;
    for (const auto& t : a.terms()) {
        if (t.exponent > lead.exponent) {
            out.push_back(t);
        } else {
            if (t.exponent == lead.exponent) {
                out.push_back(Ordinal::Term{lead.exponent, t.coefficient + lead.coefficient});
                out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
                return Ordinal::from_terms(std::move(out));
            }
            break;
        }
    }
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal sup(const std::vector<Ordinal>& xs) {
    Ordinal best;
    for (const auto& x : xs)
        if (x > best) best = x;
    return best;
}

Ordinal sup(const DescribedFamily& family) {
    switch (family.shape) {
        case DescribedFamily::Shape::Constant: return family.constant;
        case DescribedFamily::Shape::Identity: return Ordinal::omega();
        case DescribedFamily::Shape::OmegaTimes: return Ordinal::power(Ordinal{2});
    }
    throw OrdinalError("family shape outside catalog");
}

std::string Ordinal::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        if (t.exponent.is_zero()) {
            out << t.coefficient;
            continue;
        }
        out << 'w';
        if (!(t.exponent == Ordinal{1})) {
            if (t.exponent.is_finite())
                out << '^' << t.exponent.finite_value();
            else
                out << "^(" << t.exponent.to_string() << ')';
        }
        if (t.coefficient > 1) out << '*' << t.coefficient;
    }
    return out.str();
}

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view s) : s_(s) {}

    Ordinal parse_all() {
        Ordinal o = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return o;
    }

private:
    Ordinal parse_sum() {
        std::vector<Ordinal::Term> terms;
        terms.push_back(parse_term());
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
                terms.push_back(parse_term());
            } else {
                break;
            }
        }
        // "0" alone is the only zero term allowed
        if (terms.size() == 1 && terms[0].coefficient == 0) return Ordinal{};
        return Ordinal::from_terms(std::move(terms));
    }

    Ordinal::Term parse_term() {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Ordinal::Term{Ordinal{}, parse_nat()};
        if (pos_ >= s_.size() || s_[pos_] != 'w') fail("expected 'w' or a number");
        ++pos_;
        Ordinal exponent{1};
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '(') {
                ++pos_;
                exponent = parse_sum();
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
                ++pos_;
            } else if (pos_ < s_.size() && s_[pos_] == 'w') {
                ++pos_;
                exponent = Ordinal::omega();
            } else {
                exponent = Ordinal{parse_nat()};
            }
        }
        std::uint64_t coefficient = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            skip_ws();
            coefficient = parse_nat();
            if (coefficient == 0) fail("zero coefficient");
        }
        if (exponent.is_zero()) fail("w^0 must be written as a number");
        return Ordinal::Term{exponent, coefficient};
    }

    std::uint64_t parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        if (start == pos_) fail("expected a number");
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw OrdinalError("ordinal parse error at " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse_all(); }

}  // namespace graphrank
