#include "doctest.h"

#include <set>

#include "fig2_sign_search.hpp"
#include "hyperlap/walkcount.hpp"

using namespace hyperlap;

TEST_CASE("search reproduces the shipped fig2 signs") {
    const auto result = tools::search_fig2_signs();
    CHECK(result.satisfying.size() == 64);
    CHECK(result.chosen.mask == 341);
    CHECK(result.chosen.upper_k1_is_plus_one);
    CHECK(result.chosen.boundary_squared_zero);
    CHECK(result.complex == std::get<CWHypergraph>(builtin_fixture("fig2")));
}

TEST_CASE("tie-break counts") {
    const auto result = tools::search_fig2_signs();
    std::size_t plus_one = 0;
    std::size_t both = 0;
    for (const auto& c : result.satisfying) {
        plus_one += c.upper_k1_is_plus_one;
        both += c.upper_k1_is_plus_one && c.boundary_squared_zero;
    }
    CHECK(plus_one == 32);
    CHECK(both == 2);
}

TEST_CASE("length-2 upper sum is determined up to the k=1 sign") {
    // No admissible sign choice makes the length-2 sum from e^2_1 to e^2_3
    // equal +1.
    const auto result = tools::search_fig2_signs();
    const auto base = std::get<CWHypergraph>(builtin_fixture("fig2"));
    std::set<long> seen;
    for (const auto& c : result.satisfying) {
        const auto x = tools::with_level1_mask(base, c.mask);
        const auto k2 = signed_count(x, {WalkKind::upper, 1, 1, 3, 2}).value;
        seen.insert(k2.get_si());
        CHECK(k2 != 1);
    }
    CHECK(seen == std::set<long>{-7, 5});
}
