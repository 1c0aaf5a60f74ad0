#include "hyperlap/errors.hpp"

#include <utility>

namespace hyperlap {

namespace {

std::string render(const std::string& message, const SourceLocation& where) {
    std::string out = "line " + std::to_string(where.line) + ", column " +
                      std::to_string(where.column) + ": " + message;
    if (!where.excerpt.empty())
        out += "\n  | " + where.excerpt;
    return out;
}

} // namespace

parse_error::parse_error(const std::string& message, SourceLocation where)
    : input_error(render(message, where)), message_(message), where_(std::move(where)) {}

} // namespace hyperlap
