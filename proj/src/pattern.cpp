#include "graphrank/pattern.hpp"

#include <stdexcept>

namespace graphrank {

namespace {

std::vector<std::string> split_steps(std::string_view text) {
    std::vector<std::string> out;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '{') ++depth;
        if (text[i] == '}') --depth;
        if (text[i] == '/' && depth == 0) {
            out.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    out.emplace_back(text.substr(start));
    for (const auto& s : out)
        if (s.empty()) throw std::invalid_argument("empty step in pattern '" + std::string(text) + "'");
    return out;
}

// Splits "pre{body}" into (pre, body); body empty when there is no brace.
std::pair<std::string, std::optional<std::string>> split_brace(const std::string& step) {
    auto open = step.find('{');
    if (open == std::string::npos) return {step, std::nullopt};
    auto close = step.find('}', open);
    if (close == std::string::npos || close + 1 != step.size())
        throw std::invalid_argument("malformed placeholder in step '" + step + "'");
    return {step.substr(0, open), step.substr(open + 1, close - open - 1)};
}

bool match_single(const Pattern::Step& s, const std::string& step, Bindings& b) {
    if (s.kind == Pattern::Step::Kind::Literal) return step == s.text;
    if (step.size() <= s.text.size() || step.compare(0, s.text.size(), s.text) != 0) return false;
    auto rest = step.substr(s.text.size());
    if (s.natural && !parse_nat(rest)) return false;
    auto [it, inserted] = b.single.emplace(s.var, rest);
    return inserted || it->second == rest;
}

}  // namespace

Pattern Pattern::parse(std::string_view text) {
    Pattern p;
    bool seen_multi = false;
    for (const auto& raw : split_steps(text)) {
        auto [pre, body] = split_brace(raw);
        Step s;
        if (!body) {
            s.kind = Step::Kind::Literal;
            s.text = pre;
        } else if (!body->empty() && (body->back() == '*' || body->back() == '+')) {
            if (!pre.empty()) throw std::invalid_argument("multi capture must be a whole step: " + raw);
            if (seen_multi) throw std::invalid_argument("at most one multi capture per pattern");
            seen_multi = true;
            s.kind = Step::Kind::Multi;
            s.at_least_one = body->back() == '+';
            s.var = body->substr(0, body->size() - 1);
        } else {
            s.kind = Step::Kind::Capture;
            s.text = pre;
            s.var = *body;
            if (!s.var.empty() && s.var.back() == '#') {
                s.natural = true;
                s.var.pop_back();
            }
        }
        p.steps_.push_back(std::move(s));
    }
    return p;
}

std::string Pattern::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += '/';
        const auto& s = steps_[i];
        switch (s.kind) {
            case Step::Kind::Literal: out += s.text; break;
            case Step::Kind::Capture: out += s.text + "{" + s.var + (s.natural ? "#" : "") + "}"; break;
            case Step::Kind::Multi: out += "{" + s.var + (s.at_least_one ? "+" : "*") + "}"; break;
        }
    }
    return out;
}

std::optional<std::pair<Bindings, std::size_t>> Pattern::match_prefix(const Address& a) const {
    Bindings b;
    std::size_t multi_at = steps_.size();
    for (std::size_t i = 0; i < steps_.size(); ++i)
        if (steps_[i].kind == Step::Kind::Multi) multi_at = i;

    if (multi_at == steps_.size()) {
        if (a.size() < steps_.size()) return std::nullopt;
        for (std::size_t i = 0; i < steps_.size(); ++i)
            if (!match_single(steps_[i], a[i], b)) return std::nullopt;
        return std::make_pair(std::move(b), steps_.size());
    }
    const std::size_t after = steps_.size() - multi_at - 1;
    if (a.size() < multi_at + after) return std::nullopt;
    for (std::size_t i = 0; i < multi_at; ++i)
        if (!match_single(steps_[i], a[i], b)) return std::nullopt;
    const std::size_t multi_len = a.size() - multi_at - after;
    if (steps_[multi_at].at_least_one && multi_len == 0) return std::nullopt;
    for (std::size_t j = 0; j < after; ++j)
        if (!match_single(steps_[multi_at + 1 + j], a[multi_at + multi_len + j], b)) return std::nullopt;
    b.multi[steps_[multi_at].var] =
        std::vector<std::string>(a.steps().begin() + static_cast<std::ptrdiff_t>(multi_at),
                                 a.steps().begin() + static_cast<std::ptrdiff_t>(multi_at + multi_len));
    return std::make_pair(std::move(b), a.size());
}

std::optional<Bindings> Pattern::match(const Address& a) const {
    auto m = match_prefix(a);
    if (!m || m->second != a.size()) return std::nullopt;
    return std::move(m->first);
}

Condition Condition::parse(std::string_view text) {
    Condition c;
    c.text_ = std::string(text);
    static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
    std::size_t at = std::string_view::npos;
    for (const char* op : ops) {
        auto p = text.find(op);
        if (p != std::string_view::npos && (at == std::string_view::npos || p < at)) {
            at = p;
            c.op_ = op;
        } else if (p != std::string_view::npos && p == at && std::string(op).size() > c.op_.size()) {
            c.op_ = op;
        }
    }
    if (at == std::string_view::npos) throw std::invalid_argument("condition without operator: " + c.text_);
    std::string lhs(text.substr(0, at));
    c.rhs_ = std::string(text.substr(at + c.op_.size()));
    auto strip = [](std::string& s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
    };
    strip(lhs);
    strip(c.rhs_);
    if (lhs.rfind("len(", 0) == 0 && lhs.find(')') != std::string::npos) {
        c.lhs_ = Lhs::Len;
        auto close = lhs.find(')');
        c.var_ = lhs.substr(4, close - 4);
        if (close + 1 < lhs.size()) {
            auto m = lhs[close + 1] == '%' ? parse_nat(lhs.substr(close + 2)) : std::nullopt;
            if (!m || *m == 0) throw std::invalid_argument("bad length condition: " + c.text_);
            c.modulus_ = static_cast<long long>(*m);
        }
    } else if (lhs.rfind("last(", 0) == 0 && lhs.back() == ')') {
        c.lhs_ = Lhs::Last;
        c.var_ = lhs.substr(5, lhs.size() - 6);
    } else if (auto pct = lhs.find('%'); pct != std::string::npos) {
        c.lhs_ = Lhs::Mod;
        c.var_ = lhs.substr(0, pct);
        auto m = parse_nat(lhs.substr(pct + 1));
        if (!m || *m == 0) throw std::invalid_argument("bad modulus in condition: " + c.text_);
        c.modulus_ = static_cast<long long>(*m);
    } else {
        c.lhs_ = Lhs::Var;
        c.var_ = lhs;
    }
    return c;
}

bool Condition::holds(const Bindings& b) const {
    auto cmp_int = [&](long long l) {
        auto r = parse_nat(rhs_);
        if (!r) return false;
        long long rv = static_cast<long long>(*r);
        if (op_ == "==") return l == rv;
        if (op_ == "!=") return l != rv;
        if (op_ == "<") return l < rv;
        if (op_ == "<=") return l <= rv;
        if (op_ == ">") return l > rv;
        return l >= rv;
    };
    auto cmp_text = [&](const std::string& l) {
        if (op_ == "==") return l == rhs_;
        if (op_ == "!=") return l != rhs_;
        auto ln = parse_nat(l);
        return ln ? cmp_int(static_cast<long long>(*ln)) : false;
    };
    switch (lhs_) {
        case Lhs::Len: {
            auto it = b.multi.find(var_);
            if (it == b.multi.end()) return false;
            auto n = static_cast<long long>(it->second.size());
            return cmp_int(modulus_ > 0 ? n % modulus_ : n);
        }
        case Lhs::Last: {
            auto it = b.multi.find(var_);
            if (it == b.multi.end() || it->second.empty()) return false;
            return cmp_text(it->second.back());
        }
        case Lhs::Mod: {
            auto it = b.single.find(var_);
            if (it == b.single.end()) return false;
            auto n = parse_nat(it->second);
            return n && cmp_int(static_cast<long long>(*n) % modulus_);
        }
        case Lhs::Var: {
            auto it = b.single.find(var_);
            return it != b.single.end() && cmp_text(it->second);
        }
    }
    return false;
}

Template Template::parse(std::string_view text) {
    Template t;
    for (const auto& raw : split_steps(text)) {
        auto [pre, body] = split_brace(raw);
        Step s;
        s.text = pre;
        if (!body) {
            s.kind = Step::Kind::Literal;
        } else if (auto star = body->find('*'); star != std::string::npos) {
            if (!pre.empty()) throw std::invalid_argument("splice must be a whole step: " + raw);
            s.kind = Step::Kind::Splice;
            s.var = body->substr(0, star);
            auto bar = body->find('|');
            if (bar != std::string::npos) s.filter = body->substr(bar + 1);
            if (!s.filter.empty() && s.filter != "strip0" && s.filter != "init")
                throw std::invalid_argument("unknown splice filter: " + s.filter);
        } else {
            s.kind = Step::Kind::Single;
            auto op = body->find_first_of("+-");
            if (op == std::string::npos) {
                s.var = *body;
            } else {
                s.var = body->substr(0, op);
                auto k = parse_nat(body->substr(op + 1));
                if (!k) throw std::invalid_argument("bad offset in template step: " + raw);
                s.offset = (*body)[op] == '+' ? static_cast<long long>(*k) : -static_cast<long long>(*k);
            }
        }
        t.steps_.push_back(std::move(s));
    }
    return t;
}

std::string Template::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += '/';
        const auto& s = steps_[i];
        switch (s.kind) {
            case Step::Kind::Literal: out += s.text; break;
            case Step::Kind::Single:
                out += s.text + "{" + s.var;
                if (s.offset > 0) out += "+" + std::to_string(s.offset);
                if (s.offset < 0) out += "-" + std::to_string(-s.offset);
                out += "}";
                break;
            case Step::Kind::Splice: out += "{" + s.var + "*" + (s.filter.empty() ? "" : "|" + s.filter) + "}"; break;
        }
    }
    return out;
}

std::optional<Address> Template::instantiate(const Bindings& b) const {
    std::vector<std::string> out;
    for (const auto& s : steps_) {
        switch (s.kind) {
            case Step::Kind::Literal: out.push_back(s.text); break;
            case Step::Kind::Single: {
                auto it = b.single.find(s.var);
                if (it == b.single.end()) return std::nullopt;
                if (s.offset == 0) {
                    out.push_back(s.text + it->second);
                    break;
                }
                auto n = parse_nat(it->second);
                if (!n) return std::nullopt;
                long long v = static_cast<long long>(*n) + s.offset;
                if (v < 0) return std::nullopt;
                out.push_back(s.text + std::to_string(v));
                break;
            }
            case Step::Kind::Splice: {
                auto it = b.multi.find(s.var);
                if (it == b.multi.end()) return std::nullopt;
                auto steps = it->second;
                if (s.filter == "strip0") {
                    while (!steps.empty() && steps.back() == "0") steps.pop_back();
                } else if (s.filter == "init") {
                    if (steps.empty()) return std::nullopt;
                    steps.pop_back();
                }
                out.insert(out.end(), steps.begin(), steps.end());
                break;
            }
        }
    }
    if (out.empty()) return std::nullopt;
    return Address{std::move(out)};
}

ParentRule ParentRule::make(std::string_view match, std::string_view parent, std::vector<std::string> conditions) {
    ParentRule r;
    r.match = Pattern::parse(match);
    r.parent = Template::parse(parent);
    for (const auto& c : conditions) r.when.push_back(Condition::parse(c));
    return r;
}

std::optional<Bindings> ParentRule::applies(const Address& a) const {
    auto b = match.match(a);
    if (!b) return std::nullopt;
    for (const auto& c : when)
        if (!c.holds(*b)) return std::nullopt;
    return b;
}

std::string ParentRule::to_string() const {
    std::string out = match.to_string();
    if (!when.empty()) {
        out += " when ";
        for (std::size_t i = 0; i < when.size(); ++i) {
            if (i) out += ", ";
            out += when[i].to_string();
        }
    }
    return out + " -> " + parent.to_string();
}

std::optional<Pattern> rebase(const Pattern& p, const Address& local_prefix, const Pattern& host_prefix) {
    const auto& steps = p.steps();
    if (steps.size() < local_prefix.size()) return std::nullopt;
    for (std::size_t i = 0; i < local_prefix.size(); ++i)
        if (steps[i].kind != Pattern::Step::Kind::Literal || steps[i].text != local_prefix[i]) return std::nullopt;
    Pattern out = host_prefix;
    out.steps().insert(out.steps().end(), steps.begin() + static_cast<std::ptrdiff_t>(local_prefix.size()),
                       steps.end());
    return out;
}

std::optional<Template> rebase(const Template& t, const Address& local_prefix, const Template& host_prefix) {
    const auto& steps = t.steps();
    if (steps.size() < local_prefix.size()) return std::nullopt;
    for (std::size_t i = 0; i < local_prefix.size(); ++i)
        if (steps[i].kind != Template::Step::Kind::Literal || steps[i].text != local_prefix[i]) return std::nullopt;
    Template out = host_prefix;
    out.steps().insert(out.steps().end(), steps.begin() + static_cast<std::ptrdiff_t>(local_prefix.size()),
                       steps.end());
    return out;
}

}  // namespace graphrank
