#ifndef HYPERLAP_FORMATS_HPP
#define HYPERLAP_FORMATS_HPP

#include <string>
#include <string_view>
#include <variant>

#include "hyperlap/errors.hpp"
#include "hyperlap/model.hpp"

namespace hyperlap {

// .hg text format, one directive per line, '#' starts a comment:
//
//   vertices <n>
//   edge <name> <i1> <i2> ...
//
// .cw text format:
//
//   cells <d> <count>             (d = 0, 1, 2, ... in order)
//   inc <d> <i> <j> <+1|-1>       (e_i^d lies in e_j^{d+1})
//   skel <d> <j> <v1> <v2> ...    (optional 0-skeleton of e_j^d, d >= 1)
//
// Indices are 1-based. LF and CRLF line endings are both accepted.

Hypergraph parse_hg(std::string_view text);
CWHypergraph parse_cw(std::string_view text);

std::string serialize(const Hypergraph& h);
std::string serialize(const CWHypergraph& x);

using AnyObject = std::variant<Hypergraph, CWHypergraph>;

// "fig1" (hypergraph) or "fig2" (CW-hypergraph). Throws input_error otherwise.
AnyObject builtin_fixture(std::string_view name);

// Text of the shipped fixture files.
extern const char* const fig1_text;
extern const char* const fig2_text;

// Reads a file and dispatches on extension (.hg / .cw).
AnyObject load_file(const std::string& path);

} // namespace hyperlap

#endif
