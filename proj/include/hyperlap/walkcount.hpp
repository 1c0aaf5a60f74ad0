#ifndef HYPERLAP_WALKCOUNT_HPP
#define HYPERLAP_WALKCOUNT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hyperlap/matrix.hpp"
#include "hyperlap/model.hpp"

namespace hyperlap {

// vertex: v,e,v,...   edge: e,v,e,...
// lower: d-cell, (d+1)-cell, ..., d-cell   upper: (d+1)-cell, d-cell, ...
enum class WalkKind { vertex, edge, lower, upper };

const char* to_string(WalkKind kind) noexcept;
// Throws input_error on an unknown name.
WalkKind parse_walk_kind(const std::string& name);

inline bool is_signed(WalkKind kind) noexcept {
    return kind == WalkKind::lower || kind == WalkKind::upper;
}

struct WalkQuery {
    WalkKind kind = WalkKind::vertex;
    std::size_t level = 0; // lower/upper only
    std::size_t from = 1;
    std::size_t to = 1;
    unsigned length = 0;
};

struct CountResult {
    BigInt value;
    WalkQuery query;
    // Matrix family the value was read from, e.g. "even", "odd[d=1]".
    std::string family;
};

// M^k by binary exponentiation; M^0 is the identity.
ExactMatrix matrix_power(const ExactMatrix& m, unsigned k);

// M^1, ..., M^kmax by repeated multiplication (element r-1 holds M^r).
std::vector<ExactMatrix> power_table(const ExactMatrix& m, unsigned kmax);

// Number of hyperwalks (vertex kind) or edge-hyperwalks (edge kind).
CountResult count_walks(const Hypergraph& h, const WalkQuery& q);

// Signed sum over (d,d+1)-hyperwalks (lower) or (d+1,d)-hyperwalks (upper).
CountResult signed_count(const CWHypergraph& x, const WalkQuery& q);

// Range checks shared with the enumerator. Throw index_error/level_error.
void check_query(const Hypergraph& h, const WalkQuery& q);
void check_query(const CWHypergraph& x, const WalkQuery& q);

} // namespace hyperlap

#endif
