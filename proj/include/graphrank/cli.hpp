#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphrank/expr.hpp"

namespace graphrank::cli {

enum Exit : int {
    kOk = 0,
    kParse = 2,       // unreadable graph, artifact or command line
    kInvariant = 3,   // an internal invariant broke, or a verified artifact failed its checks
    kNoResult = 4,    // NotAllDominated / None / Unknown
    kMismatch = 5,    // artifact built for another graph
};

enum class Format { Json, Dot, Text };

struct RunConfig {
    std::string command;   // analyze | build | verify | export
    std::string target;    // build: nst | efst | rayless | tdecomp
    std::string artifact;  // verify: artifact path; export: optional tree overlay
    std::string input;
    std::string out;       // empty: stdout
    unsigned d = 4, w = 4; // sweep bounds (export: exact truncation)
    Format format = Format::Json;
};

/// Hard cap on the sweep bounds: 8, or GRAPHRANK_MAX_SWEEP when set.
unsigned sweep_cap();

/// One command; the report body goes to `out`, diagnostics to `err`.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report builders, also used by tests.
std::string analyze_report(const ExprPtr& e, Format f);

}  // namespace graphrank::cli
