#include "hyperlap/walkcount.hpp"

#include "hyperlap/errors.hpp"
#include "hyperlap/laplacian.hpp"

namespace hyperlap {

namespace {

void check_index(const char* which, std::size_t value, std::size_t limit, const char* space) {
    if (value < 1 || value > limit)
        throw index_error(std::string(which) + " index " + std::to_string(value) +
                          " out of range for " + space + ": expected 1.." + std::to_string(limit));
}

ExactMatrix tagged(ExactMatrix m, MatrixTag tag) {
    return ExactMatrix(m.entries(), tag);
}

} // namespace

const char* to_string(WalkKind kind) noexcept {
    switch (kind) {
    case WalkKind::vertex: return "vertex";
    case WalkKind::edge: return "edge";
    case WalkKind::lower: return "lower";
    case WalkKind::upper: return "upper";
    }
    return "vertex";
}

WalkKind parse_walk_kind(const std::string& name) {
    if (name == "vertex") return WalkKind::vertex;
    if (name == "edge") return WalkKind::edge;
    if (name == "lower") return WalkKind::lower;
    if (name == "upper") return WalkKind::upper;
    throw input_error("unknown walk kind '" + name + "' (expected vertex, edge, lower or upper)");
}

ExactMatrix matrix_power(const ExactMatrix& m, unsigned k) {
    ExactMatrix result = ExactMatrix::identity(m.dim());
    if (k == 0)
        return result;
    ExactMatrix base = m;
    bool first = true;
    while (k > 0) {
        if (k & 1u) {
            result = first ? base : multiply(result, base);
            first = false;
        }
        k >>= 1u;
        if (k > 0)
            base = multiply(base, base);
    }
    return tagged(std::move(result), MatrixTag::power);
}

std::vector<ExactMatrix> power_table(const ExactMatrix& m, unsigned kmax) {
    std::vector<ExactMatrix> table;
    table.reserve(kmax);
    for (unsigned k = 1; k <= kmax; ++k)
        table.push_back(k == 1 ? tagged(m, MatrixTag::power)
                               : tagged(multiply(table.back(), m), MatrixTag::power));
    return table;
}

void check_query(const Hypergraph& h, const WalkQuery& q) {
    if (q.kind == WalkKind::vertex) {
        check_index("from", q.from, h.vertex_count(), "vertices");
        check_index("to", q.to, h.vertex_count(), "vertices");
    } else if (q.kind == WalkKind::edge) {
        check_index("from", q.from, h.edge_count(), "edges");
        check_index("to", q.to, h.edge_count(), "edges");
    } else {
        throw input_error(std::string("walk kind '") + to_string(q.kind) +
                          "' needs a CW-hypergraph");
    }
}

void check_query(const CWHypergraph& x, const WalkQuery& q) {
    if (!is_signed(q.kind))
        throw input_error(std::string("walk kind '") + to_string(q.kind) +
                          "' needs a plain hypergraph");
    if (q.level >= x.top_dimension())
        throw level_error("level " + std::to_string(q.level) + " out of range: the complex has " +
                          std::to_string(x.top_dimension()) + " incidence level(s)");
    const bool lower = q.kind == WalkKind::lower;
    const std::size_t dim = lower ? q.level : q.level + 1;
    const std::string space = std::to_string(dim) + "-cells";
    check_index("from", q.from, x.cell_count(dim), space.c_str());
    check_index("to", q.to, x.cell_count(dim), space.c_str());
}

CountResult count_walks(const Hypergraph& h, const WalkQuery& q) {
    require_valid(h);
    check_query(h, q);
    const Parity parity = q.kind == WalkKind::vertex ? Parity::even : Parity::odd;
    const auto power = matrix_power(hypergraph_laplacian(h, parity), q.length);
    return {power(q.from - 1, q.to - 1), q, to_string(parity)};
}

CountResult signed_count(const CWHypergraph& x, const WalkQuery& q) {
    require_valid(x);
    check_query(x, q);
    const Parity parity = q.kind == WalkKind::lower ? Parity::even : Parity::odd;
    const auto power = matrix_power(cw_laplacian(x, q.level, parity), q.length);
    return {power(q.from - 1, q.to - 1), q,
            std::string(to_string(parity)) + "[d=" + std::to_string(q.level) + "]"};
}

} // namespace hyperlap
