#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphrank/address.hpp"

namespace graphrank {

/// Variable bindings produced by matching an address against a Pattern.
struct Bindings {
    std::map<std::string, std::string> single;
    std::map<std::string, std::vector<std::string>> multi;
};

/// Address pattern. Step syntax:
///   text          literal step
///   pre{v}        step starting with "pre", rest bound to v (non-empty)
///   pre{v#}       as above, rest must be a natural number
///   {v*} / {v+}   zero-or-more / one-or-more whole steps bound to v
class Pattern {
public:
    struct Step {
        enum class Kind { Literal, Capture, Multi };
        Kind kind = Kind::Literal;
        std::string text;  // literal text or capture prefix
        std::string var;
        bool natural = false;
        bool at_least_one = false;
    };

    Pattern() = default;
    static Pattern parse(std::string_view text);
    std::string to_string() const;

    std::optional<Bindings> match(const Address& a) const;
    /// Matches a leading portion of the address; returns bindings and matched length.
    /// A trailing multi step makes this equivalent to a full match.
    std::optional<std::pair<Bindings, std::size_t>> match_prefix(const Address& a) const;

    const std::vector<Step>& steps() const { return steps_; }
    std::vector<Step>& steps() { return steps_; }
    bool operator==(const Pattern&) const = default;

private:
    std::vector<Step> steps_;
};

/// Condition on bindings: `v OP int`, `v%K OP int`, `len(v) OP int`, `len(v)%K OP int`,
/// `last(v) OP text`, `v OP text`, with OP in == != < <= > >=.
class Condition {
public:
    static Condition parse(std::string_view text);
    std::string to_string() const { return text_; }
    bool holds(const Bindings& b) const;
    bool operator==(const Condition&) const = default;

private:
    enum class Lhs { Var, Mod, Len, Last };
    std::string text_;
    Lhs lhs_ = Lhs::Var;
    std::string var_;
    long long modulus_ = 0;
    std::string op_;
    std::string rhs_;
};

/// Address template. Step syntax mirrors Pattern:
///   pre{v}, pre{v+K}, pre{v-K}      single steps (arithmetic on naturals)
///   {v*}, {v*|strip0}, {v*|init}    splice a multi binding
class Template {
public:
    struct Step {
        enum class Kind { Literal, Single, Splice };
        Kind kind = Kind::Literal;
        std::string text;  // literal text or prefix
        std::string var;
        long long offset = 0;
        std::string filter;  // "", "strip0", "init"
    };

    static Template parse(std::string_view text);
    std::string to_string() const;
    /// nullopt when arithmetic leaves the naturals or a variable is unbound.
    std::optional<Address> instantiate(const Bindings& b) const;

    const std::vector<Step>& steps() const { return steps_; }
    std::vector<Step>& steps() { return steps_; }
    bool operator==(const Template&) const = default;

private:
    std::vector<Step> steps_;
};

/// "match [when c1, c2] -> parent": maps every matched vertex to its parent.
struct ParentRule {
    Pattern match;
    std::vector<Condition> when;
    Template parent;

    static ParentRule make(std::string_view match, std::string_view parent,
                           std::vector<std::string> conditions = {});
    std::optional<Bindings> applies(const Address& a) const;
    std::string to_string() const;
    bool operator==(const ParentRule&) const = default;
};

/// Replaces a leading literal prefix of a pattern/template by host steps.
/// Host steps are given in pattern syntax (for Pattern) and template syntax
/// (for Template); both usually carry the family variable {$}.
std::optional<Pattern> rebase(const Pattern& p, const Address& local_prefix, const Pattern& host_prefix);
std::optional<Template> rebase(const Template& t, const Address& local_prefix, const Template& host_prefix);

}  // namespace graphrank
