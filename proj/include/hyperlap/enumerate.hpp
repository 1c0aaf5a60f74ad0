#ifndef HYPERLAP_ENUMERATE_HPP
#define HYPERLAP_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperlap/matrix.hpp"
#include "hyperlap/model.hpp"
#include "hyperlap/walkcount.hpp"

namespace hyperlap {

// Brute-force walk enumeration. Nothing here touches the Laplacians: walks
// are generated straight from membership/incidence data so the results can
// serve as an independent check on the matrix-power counts.

inline constexpr std::uint64_t default_walk_budget = 10'000'000;

struct Walk {
    WalkKind kind = WalkKind::vertex;
    std::size_t level = 0;
    // Alternating 1-based indices, starting and ending on the outer tier.
    std::vector<std::size_t> steps;

    unsigned length() const noexcept { return static_cast<unsigned>(steps.size() / 2); }
    bool operator==(const Walk&) const = default;
};

struct SignedWalk {
    Walk walk;
    int sign = 1;
};

// e.g. "v1,e2,v3" or "e^1_1,e^2_2,e^1_4"; signed walks append "[+1]".
std::string format_walk(const Walk& w);
std::string format_walk(const SignedWalk& w);

// All walks of exactly length k from i to j, in lexicographic order of their
// step sequences. Throws budget_error once more than `budget` walks would be
// produced.
std::vector<Walk> enum_walks(const Hypergraph& h, WalkKind kind, std::size_t i, std::size_t j,
                             unsigned k, std::uint64_t budget = default_walk_budget);

std::vector<SignedWalk> enum_signed_walks(const CWHypergraph& x, std::size_t d, WalkKind kind,
                                          std::size_t i, std::size_t j, unsigned k,
                                          std::uint64_t budget = default_walk_budget);

// Visitor forms of the above; the visitor sees each walk in the same order.
// Return the number of walks visited.
std::uint64_t for_each_walk(const Hypergraph& h, const WalkQuery& q, std::uint64_t budget,
                            const std::function<void(const Walk&)>& visit);
std::uint64_t for_each_signed_walk(const CWHypergraph& x, const WalkQuery& q, std::uint64_t budget,
                                   const std::function<void(const Walk&, int)>& visit);

// Product over middle-tier cells of the signs to their two neighbours.
// Throws invalid_walk_error if a required incidence is missing.
int walk_sign(const CWHypergraph& x, const Walk& w);

struct Comparison {
    WalkQuery query;
    BigInt matrix_value;
    BigInt oracle_value;
};

struct CrossCheckReport {
    std::string description;
    std::vector<Comparison> comparisons;
    std::vector<Comparison> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

// Compares matrix-power values with the enumerator for every applicable
// kind, every index pair and every 0 <= k <= kmax. For a CW-hypergraph all
// levels 0..D-1 are checked. The budget applies to each single query.
CrossCheckReport cross_check(const Hypergraph& h, unsigned kmax,
                             std::uint64_t budget = default_walk_budget);
CrossCheckReport cross_check(const CWHypergraph& x, unsigned kmax,
                             std::uint64_t budget = default_walk_budget);

} // namespace hyperlap

#endif
