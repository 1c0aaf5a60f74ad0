#include "doctest.h"

#include <random>

#include "hyperlap/errors.hpp"
#include "hyperlap/formats.hpp"
#include "hyperlap/model.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace hyperlap;

namespace {

bool has_error_containing(const ValidationReport& r, const std::string& text) {
    for (const auto& issue : r.issues)
        if (issue.severity == Severity::error && issue.message.find(text) != std::string::npos)
            return true;
    return false;
}

CWHypergraph fig2() {
    return std::get<CWHypergraph>(builtin_fixture("fig2"));
}

} // namespace

TEST_CASE("single edge on two vertices is valid") {
    const Hypergraph h{2, {{1, 2}}, {"a"}};
    const auto r = validate(h);
    CHECK(r.ok);
    CHECK(r.issues.empty());
}

TEST_CASE("edge referencing a missing vertex is reported") {
    const Hypergraph h{4, {{1, 5}}, {}};
    const auto r = validate(h);
    CHECK_FALSE(r.ok);
    CHECK(has_error_containing(r, "vertex index out of range"));
    CHECK_THROWS_AS(require_valid(h), input_error);
}

TEST_CASE("hypergraph invariants") {
    CHECK_FALSE(validate(Hypergraph{0, {}, {}}).ok);
    CHECK(has_error_containing(validate(Hypergraph{3, {{}}, {}}), "empty edge"));
    CHECK(has_error_containing(validate(Hypergraph{3, {{2, 1}}, {}}), "strictly increasing"));
    CHECK(has_error_containing(validate(Hypergraph{3, {{1, 1}}, {}}), "strictly increasing"));
    CHECK_FALSE(validate(Hypergraph{3, {{1}, {2}}, {"only-one-name"}}).ok);
    CHECK(validate(Hypergraph{3, {}, {}}).ok);
}

TEST_CASE("fig2 validates and reports the boundary composition") {
    const auto x = fig2();
    const auto r = validate(x);
    CHECK(r.ok);
    REQUIRE(r.boundary_squared_zero.contains(1));

    // Multiply the shipped I_0 and I_1 directly.
    const auto i0 = testing::level_grid(x, 0);
    const auto i1 = testing::level_grid(x, 1);
    const auto product = testing::rect_multiply(i0, i1, x.counts[1], x.counts[2]);
    bool zero = true;
    for (const auto& row : product)
        for (auto v : row)
            zero = zero && v == 0;
    CHECK(zero);
    CHECK(r.boundary_squared_zero.at(1) == zero);
}

TEST_CASE("nonzero boundary composition is a warning, not an error") {
    auto x = fig2();
    x.levels[1][0].sign = -x.levels[1][0].sign;
    const auto r = validate(x);
    CHECK(r.ok);
    CHECK_FALSE(r.boundary_squared_zero.at(1));
    REQUIRE(r.issues.size() == 1);
    CHECK(r.issues[0].severity == Severity::warning);
}

TEST_CASE("CW-hypergraph invariants") {
    CWHypergraph x;
    x.counts = {2, 1};
    x.levels = {{{1, 1, 1}, {2, 1, -1}}};
    CHECK(validate(x).ok);

    SUBCASE("index out of range") {
        x.levels[0].push_back({3, 1, 1});
        CHECK(has_error_containing(validate(x), "out of range"));
    }
    SUBCASE("duplicate pair") {
        x.levels[0].push_back({1, 1, -1});
        CHECK(has_error_containing(validate(x), "duplicate"));
    }
    SUBCASE("bad sign") {
        x.levels[0][0].sign = 0;
        CHECK(has_error_containing(validate(x), "sign"));
    }
    SUBCASE("skeleton outside the vertex range") {
        x.skeletons[{1, 1}] = {1, 3};
        CHECK(has_error_containing(validate(x), "out of range"));
    }
    SUBCASE("empty skeleton") {
        x.skeletons[{1, 1}] = {};
        CHECK(has_error_containing(validate(x), "empty skeleton"));
    }
    SUBCASE("skeleton on a 0-cell") {
        x.skeletons[{0, 1}] = {1};
        CHECK_FALSE(validate(x).ok);
    }
    SUBCASE("level count mismatch") {
        x.levels.clear();
        CHECK_FALSE(validate(x).ok);
    }
}

TEST_CASE("project fig2 onto the fig1 hypergraph") {
    const auto projected = project_hypergraph(fig2());
    const auto fig1 = std::get<Hypergraph>(builtin_fixture("fig1"));
    CHECK(projected.n == 4);
    CHECK(projected.edge_count() == 9);
    CHECK(projected.edges == fig1.edges);
    CHECK(projected == fig1);
    std::size_t pairs = 0, triples = 0;
    for (const auto& e : projected.edges) {
        pairs += e.size() == 2;
        triples += e.size() == 3;
    }
    CHECK(pairs == 6);
    CHECK(triples == 3);
}

TEST_CASE("project a complex of 0-cells only") {
    CWHypergraph x;
    x.counts = {3};
    const auto h = project_hypergraph(x);
    CHECK(h.n == 3);
    CHECK(h.edges.empty());
}

TEST_CASE("projection without skeletons names the first bare cell") {
    auto x = fig2();
    x.skeletons.erase({1, 3});
    try {
        project_hypergraph(x);
        FAIL("expected missing_skeleton_error");
    } catch (const missing_skeleton_error& e) {
        CHECK(std::string(e.what()).find("e^1_3") != std::string::npos);
    }
    x.skeletons.clear();
    CHECK_THROWS_AS(project_hypergraph(x), missing_skeleton_error);
}

TEST_CASE("projection of valid complexes validates and is deterministic") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testing::random_cw(rng, true);
        REQUIRE(validate(x).ok);
        const auto h = project_hypergraph(x);
        CHECK(validate(h).ok);
        CHECK(h == project_hypergraph(x));
        CHECK(h.edge_count() == x.counts[1] + x.counts[2]);
    }
}
