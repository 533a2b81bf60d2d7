#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphrank/graph.hpp"
#include "graphrank/truncation.hpp"

namespace graphrank {

/// How the vertices of one family member sit inside the host.
///   Prefix: local_prefix is replaced by host_prefix, a pattern in which the
///           member key appears as {$} (one step), {$#} (natural step) or
///           {$+} (several steps). Example: local "v" -> host "top/{$+}".
///   Shift:  the first step "<stem><n>" becomes "<stem><n + offset>", below
///           the literal host_prefix if one is set.
struct Embedding {
    enum class Kind { Prefix, Shift };
    Kind kind = Kind::Prefix;
    Address local_prefix;
    std::string host_prefix;
    std::string stem;
    std::uint64_t offset = 0;

    static Embedding identity() { return {}; }
    static Embedding prefix(Address local, std::string host) { return {Kind::Prefix, std::move(local), std::move(host), {}, 0}; }
    static Embedding shift(std::string stem, std::uint64_t offset) { return {Kind::Shift, {}, {}, std::move(stem), offset}; }

    bool has_key() const { return host_prefix.find("{$") != std::string::npos; }
    std::optional<Address> to_host(const Address& local, const Address& key = {}) const;
    /// (key, local) for a host address inside some member.
    std::optional<std::pair<Address, Address>> from_host(const Address& host) const;
    std::string to_string() const;
};

/// Replaces the key placeholders {$}, {$#}, {$+}, {$*} in a text by `key`.
std::string substitute_key(const std::string& text, const Address& key);
/// Pattern syntax to template syntax: {$#} -> {$}, {$+} -> {$*}.
std::string pattern_to_template(const std::string& pattern);

/// One component of G - X, or a family of `count` pairwise isomorphic ones.
struct RegionDescriptor {
    ExprPtr host;
    ExprPtr expr;          // induced graph of one member
    Cardinality count = Cardinality::finite(1);
    Descriptor members;    // host vertices of all members
    std::optional<Embedding> embedding;
    /// Local -> host map for finite single components (used instead of an embedding).
    std::vector<std::pair<Address, Address>> explicit_map;
    /// Least edge between a member and X: member vertex and X vertex (host
    /// patterns / templates with the key placeholder).
    std::string link_member, link_x;
    /// N(C) for the member with the given key (host coordinates), plus its text form.
    std::function<Descriptor(const Address& key)> attachment;
    std::string attachment_text;
    std::string note;

    bool is_family() const { return embedding && embedding->has_key(); }
    std::optional<Address> to_host(const Address& local, const Address& key = {}) const;
    std::optional<std::pair<Address, Address>> from_host(const Address& host) const;
    /// Keys of members that have a vertex in the truncation (sorted).
    std::vector<Address> keys_in(const Truncation& t) const;
    /// A representative member key (the least key seen in a small truncation).
    Address representative_key() const;
};

struct ComponentsResult {
    std::vector<RegionDescriptor> regions;
    std::optional<std::string> unsupported;  // reason; regions are meaningless when set
    bool ok() const { return !unsupported.has_value(); }
};

/// Components of e - X for the supported (constructor, descriptor) catalog.
ComponentsResult components_after_deletion(const ExprPtr& e, const Descriptor& X);

Verdict is_connected(const ExprPtr& e);

/// The part of X on one side ("left"/"right") of a union, in that side's
/// coordinates; nullopt when X cannot be split symbolically.
std::optional<Descriptor> descriptor_on_side(const Descriptor& X, const std::string& side);
/// The part of X inside the base of a join_vertex; sets has_label when X
/// contains the joined vertex.
std::optional<Descriptor> descriptor_on_base(const Descriptor& X, const std::string& label, bool& has_label);

}  // namespace graphrank
