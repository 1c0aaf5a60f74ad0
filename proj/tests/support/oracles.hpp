#ifndef HYPERLAP_TESTS_ORACLES_HPP
#define HYPERLAP_TESTS_ORACLES_HPP

// Test-only reference computations. They work from membership data with
// plain 64-bit integers and never call into the library's matrix code.

#include <cstdint>
#include <vector>

#include "hyperlap/model.hpp"

namespace hyperlap::testing {

using IntGrid = std::vector<std::vector<std::int64_t>>;

inline bool contains(const VertexSet& edge, std::size_t v) {
    for (std::size_t u : edge)
        if (u == v)
            return true;
    return false;
}

// Delta+(i,j) = number of edges holding both v_i and v_j.
inline IntGrid even_by_counting(const Hypergraph& h) {
    IntGrid out(h.n, std::vector<std::int64_t>(h.n, 0));
    for (std::size_t i = 1; i <= h.n; ++i)
        for (std::size_t j = 1; j <= h.n; ++j)
            for (const auto& e : h.edges)
                out[i - 1][j - 1] += contains(e, i) && contains(e, j);
    return out;
}

// Delta-(i,j) = |e_i intersect e_j|.
inline IntGrid odd_by_counting(const Hypergraph& h) {
    const std::size_t m = h.edges.size();
    IntGrid out(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t v : h.edges[i])
                out[i][j] += contains(h.edges[j], v);
    return out;
}

inline IntGrid grid_multiply(const IntGrid& a, const IntGrid& b) {
    const std::size_t n = a.size();
    IntGrid out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < n; ++c)
                out[r][c] += a[r][k] * b[k][c];
    return out;
}

// Repeated multiplication, M^0 = identity.
inline IntGrid grid_power(const IntGrid& m, unsigned k) {
    const std::size_t n = m.size();
    IntGrid out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        out[i][i] = 1;
    for (unsigned step = 0; step < k; ++step)
        out = grid_multiply(out, m);
    return out;
}

// Dense signed incidence matrix of one level, built directly from triples.
inline IntGrid level_grid(const CWHypergraph& x, std::size_t d) {
    IntGrid out(x.counts[d], std::vector<std::int64_t>(x.counts[d + 1], 0));
    for (const auto& inc : x.levels[d])
        out[inc.lower - 1][inc.upper - 1] = inc.sign;
    return out;
}

inline IntGrid rect_multiply(const IntGrid& a, const IntGrid& b, std::size_t inner, std::size_t cols) {
    IntGrid out(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t c = 0; c < cols; ++c)
                out[r][c] += a[r][k] * b[k][c];
    return out;
}

} // namespace hyperlap::testing

#endif
