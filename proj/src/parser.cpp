#include "graphrank/parser.hpp"

#include <cctype>

#include "graphrank/graph.hpp"

namespace graphrank {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr expr_all() {
        auto e = expr();
        expect_end();
        try {
            validate(e);
        } catch (const GraphError& err) {
            throw ParseError(0, err.what());
        }
        return e;
    }

    Descriptor descriptor_all() {
        auto d = descriptor();
        expect_end();
        return d;
    }

    Cardinality card_all() {
        auto c = card();
        expect_end();
        return c;
    }

private:
    ExprPtr expr() {
        skip();
        const auto at = pos_;
        const auto word = ident();
        try {
            if (word == "ray") return make_ray();
            if (word == "finite") return finite();
            if (word == "comb") {
                open();
                auto n = nat();
                close();
                return make_comb(n);
            }
            if (word == "star" || word == "tree" || word == "complete") {
                open();
                auto k = card();
                close();
                if (word == "star") return make_star(k);
                if (word == "tree") return make_tree(k);
                return make_complete(k);
            }
            if (word == "with_tops") {
                open();
                auto base = expr();
                comma();
                auto fam = ident();
                if (fam != "all") fail("only the 'all' top family is supported, got '" + fam + "'");
                comma();
                auto adj = ident();
                TopsMode mode;
                if (adj == "whole_ray")
                    mode = TopsMode::WholeRay;
                else if (adj == "every_2nd")
                    mode = TopsMode::EveryOther;
                else
                    fail("expected whole_ray or every_2nd");
                close();
                return make_with_tops(std::move(base), mode);
            }
            if (word == "union") {
                open();
                auto l = expr();
                comma();
                auto r = expr();
                close();
                return make_union(std::move(l), std::move(r));
            }
            if (word == "join_vertex") {
                open();
                auto base = expr();
                comma();
                auto label = ident();
                comma();
                auto d = descriptor();
                close();
                return make_join_vertex(std::move(base), std::move(label), std::move(d));
            }
            if (word == "add_edge") {
                open();
                auto base = expr();
                comma();
                auto a = address();
                comma();
                auto b = address();
                close();
                return make_add_edge(std::move(base), std::move(a), std::move(b));
            }
            if (word == "hang") {
                open();
                std::vector<std::pair<ExprPtr, Cardinality>> copies;
                while (true) {
                    auto e = expr();
                    comma();
                    copies.emplace_back(std::move(e), card());
                    if (!peek(',')) break;
                    ++pos_;
                }
                close();
                return make_hang(std::move(copies));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const GraphError& err) {
            throw ParseError(at, err.what());
        }
        pos_ = at;
        fail("unknown constructor '" + word + "'");
    }

    ExprPtr finite() {
        skip();
        if (!peek('{')) fail("expected '{'");
        ++pos_;
        key("v");
        std::vector<std::string> labels;
        list([&] { labels.push_back(ident()); });
        comma();
        key("e");
        std::vector<std::pair<std::string, std::string>> edges;
        list([&] {
            auto u = ident();
            skip();
            if (!peek('-')) fail("expected '-' in edge");
            ++pos_;
            edges.emplace_back(u, ident());
        });
        skip();
        if (!peek('}')) fail("expected '}'");
        ++pos_;
        return make_finite(std::move(labels), std::move(edges));
    }

    template <class F>
    void list(F item) {
        skip();
        if (!peek('[')) fail("expected '['");
        ++pos_;
        skip();
        if (peek(']')) {
            ++pos_;
            return;
        }
        while (true) {
            item();
            skip();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            if (peek(']')) {
                ++pos_;
                return;
            }
            fail("expected ',' or ']'");
        }
    }

    void key(const char* k) {
        auto w = ident();
        if (w != k) fail(std::string("expected '") + k + "'");
        skip();
        if (!peek(':')) fail("expected ':'");
        ++pos_;
    }

    Descriptor descriptor() {
        skip();
        if (peek('{')) {
            ++pos_;
            std::vector<Address> addrs;
            skip();
            if (!peek('}')) {
                while (true) {
                    addrs.push_back(address());
                    skip();
                    if (peek(',')) {
                        ++pos_;
                        continue;
                    }
                    break;
                }
            }
            skip();
            if (!peek('}')) fail("expected '}'");
            ++pos_;
            return Descriptor::explicit_set(std::move(addrs));
        }
        auto word = ident();
        open();
        Descriptor d;
        if (word == "all") {
            d = Descriptor::all(region());
        } else if (word == "spine") {
            d = Descriptor::spine(region());
        } else if (word == "centers") {
            d = Descriptor::centers(region());
        } else if (word == "leaves") {
            d = Descriptor::leaves(region());
        } else if (word == "tops") {
            d = Descriptor::tops(region());
        } else if (word == "level") {
            auto k = nat();
            comma();
            d = Descriptor::level_of(k, region());
        } else if (word == "prefix") {
            auto h = address();
            comma();
            d = Descriptor::branch_prefix(std::move(h), region());
        } else if (word == "progression") {
            skip();
            // progression(R, a, d) or progression(ADDR, R, a, d)
            auto save = pos_;
            auto first = region_or_address();
            comma();
            skip();
            if (std::isdigit(static_cast<unsigned char>(cur()))) {
                pos_ = save;
                auto r = region();
                comma();
                auto a = nat();
                comma();
                d = Descriptor::progression(a, nat(), r);
            } else {
                auto r = region();
                comma();
                auto a = nat();
                comma();
                d = Descriptor::branch_progression(Address::parse(first), a, nat(), r);
            }
        } else if (word == "cup") {
            std::vector<Descriptor> parts;
            while (true) {
                parts.push_back(descriptor());
                if (!peek(',')) break;
                ++pos_;
            }
            d = Descriptor::cup(std::move(parts));
        } else if (word == "children" || word == "tops_through") {
            auto h = address();
            comma();
            auto r = region();
            d = word == "children" ? Descriptor::children(std::move(h), std::move(r))
                                   : Descriptor::tops_through(std::move(h), std::move(r));
        } else if (word == "anchors") {
            d = Descriptor::anchors(region());
        } else if (word == "under") {
            d = Descriptor::under(address());
        } else if (word == "minus") {
            auto a = descriptor();
            comma();
            d = Descriptor::minus(std::move(a), descriptor());
        } else {
            fail("unknown descriptor '" + word + "'");
        }
        if (d.kind == Descriptor::Kind::Progression && d.step == 0) fail("progression step must be positive");
        close();
        return d;
    }

    std::string region_or_address() {
        skip();
        auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' ||
                                    cur() == '/' || cur() == '.' || cur() == '-'))
            ++pos_;
        if (start == pos_) fail("expected a region or an address");
        return std::string(s_.substr(start, pos_ - start));
    }

    RegionPath region() {
        auto text = region_or_address();
        if (text == ".") return {};
        RegionPath r;
        auto a = Address::parse(text);
        for (const auto& step : a.steps()) {
            if (step != "left" && step != "right" && step != "base" && step.rfind("copy.", 0) != 0)
                fail("bad region step '" + step + "'");
            r.push_back(step);
        }
        return r;
    }

    Address address() {
        auto text = region_or_address();
        try {
            return Address::parse(text);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    Cardinality card() {
        skip();
        if (std::isdigit(static_cast<unsigned char>(cur()))) return Cardinality::finite(nat());
        auto w = ident();
        if (w == "aleph0") return Cardinality::aleph0();
        if (w == "aleph1") return Cardinality::aleph1();
        if (w == "uncountable") return Cardinality::uncountable();
        fail("expected a cardinality");
    }

    std::uint64_t nat() {
        skip();
        auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(cur()))) ++pos_;
        auto v = parse_nat(s_.substr(start, pos_ - start));
        if (!v) fail("expected a natural number");
        return *v;
    }

    std::string ident() {
        skip();
        auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_' || cur() == '.'))
            ++pos_;
        if (start == pos_) fail("expected an identifier");
        return std::string(s_.substr(start, pos_ - start));
    }

    void open() { punct('('); }
    void close() { punct(')'); }
    void comma() { punct(','); }

    void punct(char c) {
        skip();
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    char cur() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            } else if (s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    void expect_end() {
        skip();
        if (pos_ != s_.size()) fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_graph(std::string_view text) { return Parser(text).expr_all(); }
Descriptor parse_descriptor(std::string_view text) { return Parser(text).descriptor_all(); }
Cardinality parse_cardinality(std::string_view text) { return Parser(text).card_all(); }

}  // namespace graphrank
