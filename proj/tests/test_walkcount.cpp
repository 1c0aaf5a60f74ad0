#include "doctest.h"

#include <random>

#include "hyperlap/enumerate.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/formats.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/walkcount.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace hyperlap;

namespace {

Hypergraph fig1() {
    return std::get<Hypergraph>(builtin_fixture("fig1"));
}

CWHypergraph fig2() {
    return std::get<CWHypergraph>(builtin_fixture("fig2"));
}

} // namespace

TEST_CASE("zeroth power is the identity") {
    const auto m = hypergraph_laplacian(fig1(), Parity::odd);
    const auto id = matrix_power(m, 0);
    CHECK(id == ExactMatrix::identity(9));
    CHECK(matrix_power(ExactMatrix(0), 0).dim() == 0);
}

TEST_CASE("fig1 even Laplacian squared") {
    const auto sq = matrix_power(hypergraph_laplacian(fig1(), Parity::even), 2);
    CHECK(sq.tag() == MatrixTag::power);
    CHECK(sq(0, 0) == 42);
    CHECK(sq(0, 3) == 45);
    CHECK(sq(3, 3) == 63);
    CHECK(sq.is_symmetric());
}

TEST_CASE("fig1 fourth power gives 5886") {
    const auto p4 = matrix_power(hypergraph_laplacian(fig1(), Parity::even), 4);
    CHECK(p4(0, 2) == 5886);
    // independent route: naive int64 powers of the counted Laplacian
    CHECK(testing::grid_power(testing::even_by_counting(fig1()), 4)[0][2] == 5886);
}

TEST_CASE("binary exponentiation matches the power table") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = hypergraph_laplacian(testing::random_hypergraph(rng), Parity::even);
        const auto table = power_table(m, 9);
        for (unsigned k = 1; k <= 9; ++k)
            CHECK(matrix_power(m, k) == table[k - 1]);
    }
}

TEST_CASE("powers outgrow 64 bits without losing precision") {
    // Row sums of Delta+ for fig1 are all at least 12, so the spectral
    // radius is too and entries at k = 20 pass 2^64.
    const auto p = matrix_power(hypergraph_laplacian(fig1(), Parity::even), 20);
    const auto p19 = matrix_power(hypergraph_laplacian(fig1(), Parity::even), 19);
    CHECK(p(0, 0) > BigInt("18446744073709551616"));
    CHECK(p == multiply(p19, hypergraph_laplacian(fig1(), Parity::even)));
}

TEST_CASE("count_walks reproduces the example values") {
    const auto h = fig1();
    const auto vertex = count_walks(h, {WalkKind::vertex, 0, 1, 3, 4});
    CHECK(vertex.value == 5886);
    CHECK(vertex.family == "even");
    const auto edge = count_walks(h, {WalkKind::edge, 0, 7, 9, 3});
    CHECK(edge.value == 384);
    CHECK(edge.family == "odd");
    CHECK(testing::grid_power(testing::odd_by_counting(h), 3)[6][8] == 384);
}

TEST_CASE("length zero counts") {
    const auto h = fig1();
    CHECK(count_walks(h, {WalkKind::vertex, 0, 2, 2, 0}).value == 1);
    CHECK(count_walks(h, {WalkKind::vertex, 0, 2, 3, 0}).value == 0);
    CHECK(count_walks(h, {WalkKind::edge, 0, 5, 5, 0}).value == 1);
    CHECK(signed_count(fig2(), {WalkKind::lower, 1, 4, 4, 0}).value == 1);
    CHECK(signed_count(fig2(), {WalkKind::upper, 1, 1, 2, 0}).value == 0);
}

TEST_CASE("index errors name the offending index") {
    const auto h = fig1();
    try {
        count_walks(h, {WalkKind::vertex, 0, 1, 7, 2});
        FAIL("expected index_error");
    } catch (const index_error& e) {
        CHECK(std::string(e.what()).find("to index 7") != std::string::npos);
    }
    CHECK_THROWS_AS(count_walks(h, {WalkKind::edge, 0, 0, 1, 2}), index_error);
    CHECK_THROWS_AS(count_walks(h, {WalkKind::edge, 0, 10, 1, 2}), index_error);
    CHECK_THROWS_AS(count_walks(h, {WalkKind::lower, 0, 1, 1, 2}), input_error);
    CHECK_THROWS_AS(signed_count(fig2(), {WalkKind::lower, 2, 1, 1, 1}), level_error);
    CHECK_THROWS_AS(signed_count(fig2(), {WalkKind::upper, 1, 4, 1, 1}), index_error);
    CHECK_THROWS_AS(signed_count(fig2(), {WalkKind::vertex, 1, 1, 1, 1}), input_error);
}

TEST_CASE("fig2 signed sums") {
    const auto x = fig2();
    const auto lower = signed_count(x, {WalkKind::lower, 1, 1, 6, 4});
    CHECK(lower.value == 0);
    CHECK(lower.family == "even[d=1]");

    // One shared boundary edge (e^1_6) between e^2_1 and e^2_3.
    const auto k1 = signed_count(x, {WalkKind::upper, 1, 1, 3, 1});
    CHECK(k1.value == x.sign_of(1, 6, 1) * x.sign_of(1, 6, 3));
    CHECK(k1.value == 1);

    const auto k2 = signed_count(x, {WalkKind::upper, 1, 1, 3, 2});
    CHECK(k2.value == 5);
}

TEST_CASE("matrix counts agree with enumeration on random hypergraphs") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const auto h = testing::random_hypergraph(rng);
        const auto report = cross_check(h, 4);
        CHECK(report.ok());
    }
}

TEST_CASE("signed sums agree with enumeration on random complexes") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 25; ++trial) {
        const auto x = testing::random_cw(rng);
        const auto report = cross_check(x, 4);
        CHECK(report.ok());
    }
}

TEST_CASE("power traces of the two parities coincide") {
    std::mt19937_64 rng(55);
    auto check_pair = [](const ExactMatrix& a, const ExactMatrix& b) {
        const auto ta = power_table(a, 6);
        const auto tb = power_table(b, 6);
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(ta[k - 1].trace() == tb[k - 1].trace());
    };
    check_pair(hypergraph_laplacian(fig1(), Parity::even), hypergraph_laplacian(fig1(), Parity::odd));
    for (std::size_t d = 0; d < 2; ++d)
        check_pair(cw_laplacian(fig2(), d, Parity::even), cw_laplacian(fig2(), d, Parity::odd));
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = testing::random_hypergraph(rng);
        check_pair(hypergraph_laplacian(h, Parity::even), hypergraph_laplacian(h, Parity::odd));
        const auto x = testing::random_cw(rng);
        for (std::size_t d = 0; d < 2; ++d)
            check_pair(cw_laplacian(x, d, Parity::even), cw_laplacian(x, d, Parity::odd));
    }
}

TEST_CASE("closed walks never get rarer two steps later") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = testing::random_hypergraph(rng);
        const auto table = power_table(hypergraph_laplacian(h, Parity::even), 8);
        for (std::size_t i = 1; i <= h.n; ++i) {
            bool covered = false;
            for (const auto& e : h.edges)
                covered = covered || testing::contains(e, i);
            if (!covered)
                continue;
            for (unsigned k = 1; k + 2 <= 8; ++k)
                CHECK(table[k + 1](i - 1, i - 1) >= table[k - 1](i - 1, i - 1));
        }
    }
}
