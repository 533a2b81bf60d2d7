#include "graphrank/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphrank/ends.hpp"
#include "graphrank/parser.hpp"
#include "graphrank/spanning.hpp"
#include "json.hpp"

namespace graphrank::cli {

namespace {

using json = nlohmann::ordered_json;

// Input/output failures that are not about the graph itself.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json ends_json(const EndSpace& s) {
    json j;
    j["supported"] = s.ok();
    if (!s.ok()) {
        j["reason"] = *s.unsupported;
        return j;
    }
    auto& cs = j["classes"] = json::array();
    for (const auto& c : s.classes) {
        json x;
        x["id"] = c.id;
        x["count"] = c.count.to_string();
        x["ray"] = c.ray.to_string();
        x["dominated"] = to_string(c.dominated);
        x["witness"] = c.witness ? json(c.witness->to_string()) : json(nullptr);
        cs.push_back(std::move(x));
    }
    return j;
}

json rank_or_reason(const std::function<RankResult()>& f) {
    try {
        return rank_to_json(f());
    } catch (const GraphError& err) {
        json j;
        j["status"] = to_string(RankResult::Kind::Unknown);
        j["reason"] = err.what();
        return j;
    }
}

json finite_rank(const ExprPtr& e, const EndSpace& s) {
    if (s.ok() && !s.classes.empty()) {
        json j;
        j["status"] = to_string(RankResult::Kind::NoRank);
        j["reason"] = "the graph has a ray";
        return j;
    }
    return rank_or_reason([&] { return schmidt_rank(e); });
}

std::string text_lines(const json& j, const std::string& prefix = "") {
    std::string out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) out += text_lines(*it, key);
        else if (it->is_array() && !it->empty() && it->front().is_object()) {
            for (std::size_t i = 0; i < it->size(); ++i) out += text_lines((*it)[i], key + "[" + std::to_string(i) + "]");
        } else {
            out += key + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        }
    }
    return out;
}

}  // namespace

unsigned sweep_cap() {
    if (const char* v = std::getenv("GRAPHRANK_MAX_SWEEP")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    }
    return 8;
}

std::string analyze_report(const ExprPtr& e, Format f) {
    const auto space = end_space(e);
    json j;
    j["schema"] = 1;
    j["command"] = "analyze";
    j["graph"] = render(e);
    j["connected"] = to_string(is_connected(e));
    j["vertices"] = vertices_card(e).to_string();
    j["ends"] = ends_json(space);
    std::size_t undominated = 0;
    for (const auto& c : space.classes) undominated += c.dominated == Verdict::No;
    j["undominated_ends"] = undominated;
    auto& ranks = j["ranks"];
    ranks["normal"] = rank_or_reason([&] { return normal_rank(e); });
    ranks["aleph1"] = rank_or_reason([&] { return kappa_rank(e, Cardinality::aleph1()); });
    ranks["finite_sets"] = finite_rank(e, space);
    return f == Format::Text ? text_lines(j) : dump(j);
}

namespace {

struct Outcome {
    int code = kOk;
    std::string body;
};

json failure_report(const RunConfig& cfg, const ExprPtr& e, const std::string& status, const std::string& reason) {
    json j;
    j["schema"] = 1;
    j["command"] = cfg.command;
    if (!cfg.target.empty()) j["target"] = cfg.target;
    j["graph"] = render(e);
    j["status"] = status;
    j["reason"] = reason;
    return j;
}

Outcome build(const RunConfig& cfg, const ExprPtr& e) {
    if (cfg.target == "tdecomp") {
        const auto space = end_space(e);
        const bool rayless = space.ok() && space.classes.empty();
        auto r = rayless ? schmidt_rank(e) : normal_rank(e);
        if (!r.ranked()) {
            auto j = failure_report(cfg, e, to_string(r.kind), r.reason);
            j["rank"] = rank_to_json(r);
            return {kNoResult, dump(j)};
        }
        return {kOk, decomposition_to_json(rank_to_decomposition(e, r.witness))};
    }
    TreeResult r;
    if (cfg.target == "nst") r = normal_spanning_tree(e);
    else if (cfg.target == "efst") r = end_faithful_spanning_tree(e);
    else if (cfg.target == "rayless") r = rayless_spanning_tree(e);
    else throw IoError("unknown build target " + cfg.target);
    if (!r.ok()) {
        const auto why = r.status == TreeResult::Status::NotAllDominated ? "undominated end " + r.reason : r.reason;
        return {kNoResult, dump(failure_report(cfg, e, to_string(r.status), why))};
    }
    if (cfg.format == Format::Dot) {
        const auto t = truncate(e, cfg.d, cfg.w);
        return {kOk, to_dot(t, tree_edges(*r.tree, t))};
    }
    return {kOk, tree_to_json(*r.tree)};
}

json parse_artifact(const std::string& text) {
    try {
        auto j = json::parse(text);
        if (!j.is_object() || !j.contains("artifact")) throw ParseError(0, "artifact has no type");
        return j;
    } catch (const json::exception& err) {
        throw ParseError(0, std::string("artifact is not JSON: ") + err.what());
    }
}

// Malformed artifacts are parse errors; a foreign graph stays std::invalid_argument.
template <class F>
auto artifact_or_parse_error(F f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const GraphError& err) {
        throw ParseError(0, err.what());
    }
}

Outcome verify_tree(const RunConfig& cfg, const ExprPtr& e, const std::string& text) {
    const auto T = artifact_or_parse_error([&] { return tree_from_json(text, e); });
    const bool need_normal = T.name == "nst";
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["artifact"] = "tree";
    j["graph"] = render(e);
    j["name"] = T.name;
    j["sweep"] = {{"d", cfg.d}, {"w", cfg.w}};
    bool pass = true;
    auto& cells = j["checks"] = json::array();
    for (unsigned d = 1; d <= cfg.d; ++d)
        for (unsigned w = 1; w <= cfg.w; ++w) {
            const auto c = check_tree(T, d, w);
            pass = pass && c.ok(need_normal);
            json x;
            x["d"] = d;
            x["w"] = w;
            x["spanning"] = c.spanning;
            x["edges"] = c.edges;
            x["acyclic"] = c.acyclic;
            x["connected"] = c.connected;
            x["normal"] = c.normal;
            if (!c.failures.empty()) x["failures"] = c.failures;
            cells.push_back(std::move(x));
        }
    json ends;
    if (T.rayless == Verdict::Yes) {
        const auto v = is_rayless(T);
        ends["kind"] = "rayless";
        ends["verdict"] = to_string(v);
        pass = pass && v == Verdict::Yes;
    } else {
        const auto space = end_space(e);
        const auto psi = closure_ends(e, space, T.domain.value_or(Descriptor::all()));
        const auto v = reflects_check(e, T, psi, std::min(cfg.d, 4u), std::min(cfg.w, 4u));
        ends["kind"] = "reflects closure";
        ends["verdict"] = to_string(v.verdict);
        if (!v.witness.empty()) ends["witness"] = v.witness;
        pass = pass && v.verdict == Reflects::Pass;
    }
    j["ends"] = std::move(ends);
    j["pass"] = pass;
    return {pass ? kOk : kInvariant, cfg.format == Format::Text ? text_lines(j) : dump(j)};
}

Outcome verify_decomp(const RunConfig& cfg, const ExprPtr& e, const std::string& text) {
    const auto td = artifact_or_parse_error([&] { return decomposition_from_json(text, e); });
    const auto c = verify_decomposition(e, td, cfg.d, cfg.w);
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["artifact"] = "tdecomp";
    j["graph"] = render(e);
    j["sweep"] = {{"d", cfg.d}, {"w", cfg.w}};
    j["nodes"] = td.nodes.size();
    j["pass"] = c.pass;
    if (!c.pass) {
        j["axiom"] = c.axiom;
        j["witness"] = c.witness;
    }
    return {c.pass ? kOk : kInvariant, cfg.format == Format::Text ? text_lines(j) : dump(j)};
}

Outcome verify(const RunConfig& cfg, const ExprPtr& e) {
    const auto text = read_file(cfg.artifact);
    const auto kind = parse_artifact(text).value("artifact", "");
    if (kind == "tree") return verify_tree(cfg, e, text);
    if (kind == "tdecomp") return verify_decomp(cfg, e, text);
    throw ParseError(0, "unknown artifact type " + kind);
}

Outcome export_dot(const RunConfig& cfg, const ExprPtr& e) {
    const auto t = truncate(e, cfg.d, cfg.w);
    if (cfg.format == Format::Json) return {kOk, to_json(t)};
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (!cfg.artifact.empty()) {
        const auto text = read_file(cfg.artifact);
        if (parse_artifact(text).value("artifact", "") != "tree") throw ParseError(0, "overlay must be a tree artifact");
        edges = tree_edges(tree_from_json(text, e), t);
    }
    return {kOk, to_dot(t, edges)};
}

}  // namespace

int execute(const RunConfig& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg = in;
    const auto cap = sweep_cap();
    if (cfg.d < 1 || cfg.w < 1) {
        err << "error: --d and --w must be at least 1\n";
        return kParse;
    }
    if (cfg.d > cap || cfg.w > cap) err << "note: sweep capped at " << cap << "\n";
    cfg.d = std::min(cfg.d, cap);
    cfg.w = std::min(cfg.w, cap);
    Outcome result;
    try {
        const auto e = parse_graph(read_file(cfg.input));
        if (cfg.command == "analyze") result = {kOk, analyze_report(e, cfg.format)};
        else if (cfg.command == "build") result = build(cfg, e);
        else if (cfg.command == "verify") result = verify(cfg, e);
        else if (cfg.command == "export") result = export_dot(cfg, e);
        else throw IoError("unknown command " + cfg.command);
    } catch (const IoError& x) {
        err << "error: " << x.what() << "\n";
        return kParse;
    } catch (const ParseError& x) {
        err << x.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& x) {
        err << "mismatched artifact: " << x.what() << "\n";
        return kMismatch;
    } catch (const std::exception& x) {
        err << "invariant violation: " << x.what() << "\n";
        return kInvariant;
    }
    if (cfg.out.empty()) {
        out << result.body;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return kParse;
        }
        f << result.body;
    }
    return result.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graphrank: ranks, ends and spanning trees of infinite graphs given in the graph DSL", "graphrank"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format;  // default: dot for export, json otherwise
    auto common = [&](CLI::App* sub, bool sweep) {
        sub->add_option("--d", cfg.d, sweep ? "largest truncation depth in the sweep" : "truncation depth");
        sub->add_option("--w", cfg.w, sweep ? "largest truncation width in the sweep" : "truncation width");
        sub->add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    };
    auto* analyze = app.add_subcommand("analyze", "connectivity, ends and the three ranks");
    common(analyze, true);
    analyze->add_option("INPUT", cfg.input, "graph file")->required();
    auto* build_cmd = app.add_subcommand("build", "build an artifact: nst, efst, rayless or tdecomp");
    common(build_cmd, false);
    build_cmd->add_option("TARGET", cfg.target, "artifact kind")->required()->check(CLI::IsMember({"nst", "efst", "rayless", "tdecomp"}));
    build_cmd->add_option("INPUT", cfg.input, "graph file")->required();
    auto* verify_cmd = app.add_subcommand("verify", "check an artifact over the truncation sweep");
    common(verify_cmd, true);
    verify_cmd->add_option("ARTIFACT", cfg.artifact, "artifact file")->required();
    verify_cmd->add_option("INPUT", cfg.input, "graph file")->required();
    auto* export_cmd = app.add_subcommand("export", "DOT (or JSON) of one truncation");
    common(export_cmd, false);
    export_cmd->add_option("--tree", cfg.artifact, "tree artifact drawn in bold");
    export_cmd->add_option("INPUT", cfg.input, "graph file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& x) {
        err << "usage error: " << x.what() << "\n" << app.help();
        return kParse;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (format.empty()) format = cfg.command == "export" ? "dot" : "json";
    cfg.format = format == "dot" ? Format::Dot : format == "text" ? Format::Text : Format::Json;
    return execute(cfg, out, err);
}

}  // namespace graphrank::cli
