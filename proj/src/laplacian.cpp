#include "hyperlap/laplacian.hpp"

#include "hyperlap/errors.hpp"

namespace hyperlap {

const char* to_string(Parity p) noexcept {
    return p == Parity::even ? "even" : "odd";
}

IncidenceMatrix incidence(const Hypergraph& h) {
    require_valid(h);
    IncidenceMatrix inc(h.n, h.edges.size(), 0);
    for (std::size_t j = 0; j < h.edges.size(); ++j)
        for (std::size_t v : h.edges[j])
            inc(v - 1, j) = 1;
    return inc;
}

ExactMatrix hypergraph_laplacian(const Hypergraph& h, Parity parity) {
    const auto inc = incidence(h);
    if (parity == Parity::even)
        return ExactMatrix(gram_rows(inc), MatrixTag::even);
    return ExactMatrix(gram_cols(inc), MatrixTag::odd);
}

SignedIncidenceMatrix d_incidence(const CWHypergraph& x, std::size_t d) {
    require_valid(x);
    if (d >= x.top_dimension())
        throw level_error("level " + std::to_string(d) + " out of range: expected 0.." +
                          (x.top_dimension() == 0 ? std::string("(none, no cells above dimension 0)")
                                                  : std::to_string(x.top_dimension() - 1)));
    SignedIncidenceMatrix out{d, Matrix<int>(x.counts[d], x.counts[d + 1], 0)};
    for (const auto& inc : x.levels[d])
        out.entries(inc.lower - 1, inc.upper - 1) = inc.sign;
    return out;
}

ExactMatrix cw_laplacian(const CWHypergraph& x, std::size_t d, Parity parity) {
    const auto inc = d_incidence(x, d);
    if (parity == Parity::even)
        return ExactMatrix(gram_rows(inc.entries), MatrixTag::even);
    return ExactMatrix(gram_cols(inc.entries), MatrixTag::odd);
}

ExactMatrix susy_laplacian(const Hypergraph& h) {
    const auto plus = hypergraph_laplacian(h, Parity::even);
    const auto minus = hypergraph_laplacian(h, Parity::odd);
    const std::size_t n = plus.dim();
    ExactMatrix out(n + minus.dim(), MatrixTag::supersymmetric);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = plus(r, c);
    for (std::size_t r = 0; r < minus.dim(); ++r)
        for (std::size_t c = 0; c < minus.dim(); ++c)
            out(n + r, n + c) = minus(r, c);
    return out;
}

} // namespace hyperlap
