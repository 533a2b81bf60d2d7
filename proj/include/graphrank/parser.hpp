#pragma once

#include <string_view>

#include "graphrank/expr.hpp"

namespace graphrank {

/// Syntax error carrying the byte offset where parsing failed.
class ParseError : public GraphError {
public:
    ParseError(std::size_t offset, const std::string& what)
        : GraphError("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses the graph DSL (see docs/dsl.md). Lines starting with '#' are comments.
ExprPtr parse_graph(std::string_view text);
Descriptor parse_descriptor(std::string_view text);
Cardinality parse_cardinality(std::string_view text);

}  // namespace graphrank
