#ifndef HYPERLAP_MODEL_HPP
#define HYPERLAP_MODEL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hyperlap {

// All indices held by these types are 1-based, matching the v_1, e_1 labels
// used at every external surface.

using VertexSet = std::vector<std::size_t>;

// A finite hypergraph: n vertices plus an ordered list of edges. Edge order
// is significant (the Laplacians depend on it) and is never re-sorted.
struct Hypergraph {
    std::size_t n = 0;
    std::vector<VertexSet> edges;
    // Empty, or one display name per edge.
    std::vector<std::string> edge_names;

    std::size_t vertex_count() const noexcept { return n; }
    std::size_t edge_count() const noexcept { return edges.size(); }
    std::string edge_name(std::size_t j) const;

    bool operator==(const Hypergraph&) const = default;
};

// e_lower^d is incident to e_upper^{d+1} with the given sign.
struct Incidence {
    std::size_t lower = 0;
    std::size_t upper = 0;
    int sign = 1;

    bool operator==(const Incidence&) const = default;
};

using CellId = std::pair<std::size_t, std::size_t>; // (dimension, index)

// Combinatorial data of a finite CW-complex. counts[d] is the number of
// d-cells; levels[d] holds the signed incidences between d- and (d+1)-cells.
struct CWHypergraph {
    std::vector<std::size_t> counts;
    std::vector<std::vector<Incidence>> levels;
    // Optional 0-skeleton of each cell of dimension >= 1.
    std::map<CellId, VertexSet> skeletons;

    // D, the highest cell dimension. Requires counts to be non-empty.
    std::size_t top_dimension() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    std::size_t cell_count(std::size_t d) const noexcept { return d < counts.size() ? counts[d] : 0; }
    // Sign of e_i^d in e_j^{d+1}, or 0 if they are not incident.
    int sign_of(std::size_t d, std::size_t i, std::size_t j) const;

    bool operator==(const CWHypergraph&) const = default;
};

enum class Severity { warning, error };

struct Issue {
    Severity severity = Severity::error;
    std::string location;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;
    // Keyed by d >= 1: whether I_{d-1} * I_d is the zero matrix.
    std::map<std::size_t, bool> boundary_squared_zero;

    void add(Severity severity, std::string location, std::string message);
    // First error-level issue rendered as "location: message".
    std::string first_error() const;
};

ValidationReport validate(const Hypergraph& h);
ValidationReport validate(const CWHypergraph& x);

// Throws input_error carrying the first error-level issue.
void require_valid(const Hypergraph& h);
void require_valid(const CWHypergraph& x);

// The underlying plain hypergraph: one edge per cell of dimension >= 1,
// ordered by dimension then index. Edges are named e1, e2, ...
Hypergraph project_hypergraph(const CWHypergraph& x);

} // namespace hyperlap

#endif
