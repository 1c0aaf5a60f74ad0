#ifndef HYPERLAP_TOOLS_FIG2_SIGN_SEARCH_HPP
#define HYPERLAP_TOOLS_FIG2_SIGN_SEARCH_HPP

// Exhaustive search for the level-1 orientation signs of the fig2
// complex. The picture fixes which edge bounds which face but not the signs,
// so all 2^9 assignments are tried and filtered by three facts about the
// example:
//
//   1. sgn(e^1_6 in e^2_1) = -1
//   2. the lower walk e^1_1,e^2_2,e^1_4,e^2_1,e^1_6,e^2_3,e^1_5,e^2_3,e^1_6 has sign +1
//   3. the upper walk e^2_1,e^1_4,e^2_2,e^1_5,e^2_3 has sign -1
//
// Among the survivors the preferred ones have a length-1 upper signed sum
// from e^2_1 to e^2_3 equal to +1, then I_0 * I_1 = 0, then the smallest
// mask (bit b set means incidence b of level 1 is negative).

#include <cstdint>
#include <tuple>
#include <vector>

#include "hyperlap/enumerate.hpp"
#include "hyperlap/formats.hpp"
#include "hyperlap/model.hpp"
#include "hyperlap/walkcount.hpp"

namespace hyperlap::tools {

struct SignCandidate {
    std::uint32_t mask = 0;
    bool upper_k1_is_plus_one = false;
    bool boundary_squared_zero = false;
};

struct SignSearchResult {
    std::vector<SignCandidate> satisfying; // all assignments meeting facts 1-3
    SignCandidate chosen;
    CWHypergraph complex;                  // fig2 with the chosen signs
};

inline CWHypergraph with_level1_mask(CWHypergraph x, std::uint32_t mask) {
    for (std::size_t b = 0; b < x.levels[1].size(); ++b)
        x.levels[1][b].sign = (mask >> b) & 1u ? -1 : 1;
    return x;
}

inline SignSearchResult search_fig2_signs() {
    const auto base = std::get<CWHypergraph>(builtin_fixture("fig2"));
    const Walk lower{WalkKind::lower, 1, {1, 2, 4, 1, 6, 3, 5, 3, 6}};
    const Walk upper{WalkKind::upper, 1, {1, 4, 2, 5, 3}};

    SignSearchResult result;
    const std::uint32_t total = 1u << base.levels[1].size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const auto x = with_level1_mask(base, mask);
        if (x.sign_of(1, 6, 1) != -1 || walk_sign(x, lower) != 1 || walk_sign(x, upper) != -1)
            continue;
        SignCandidate c{mask, false, false};
        c.upper_k1_is_plus_one = signed_count(x, {WalkKind::upper, 1, 1, 3, 1}).value == 1;
        c.boundary_squared_zero = validate(x).boundary_squared_zero.at(1);
        result.satisfying.push_back(c);
    }

    auto rank = [](const SignCandidate& c) {
        return std::tuple(!c.upper_k1_is_plus_one, !c.boundary_squared_zero, c.mask);
    };
    const SignCandidate* best = nullptr;
    for (const auto& c : result.satisfying)
        if (best == nullptr || rank(c) < rank(*best))
            best = &c;
    if (best != nullptr) {
        result.chosen = *best;
        result.complex = with_level1_mask(base, best->mask);
    }
    return result;
}

} // namespace hyperlap::tools

#endif
