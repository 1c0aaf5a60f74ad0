#include "hyperlap/model.hpp"

#include <set>

#include "hyperlap/errors.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

namespace {

std::string cell_label(std::size_t d, std::size_t j) {
    return "e^" + std::to_string(d) + "_" + std::to_string(j);
}

// Checks a vertex set against [1..n] and strict increase.
void check_vertex_set(ValidationReport& report, const std::string& where, const VertexSet& set,
                      std::size_t n, const char* what) {
    if (set.empty()) {
        report.add(Severity::error, where, std::string("empty ") + what);
        return;
    }
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (set[k] < 1 || set[k] > n)
            report.add(Severity::error, where,
                       "vertex index out of range: " + std::to_string(set[k]) + " not in [1.." +
                           std::to_string(n) + "]");
        if (k > 0 && set[k] <= set[k - 1])
            report.add(Severity::error, where, "vertex indices must be strictly increasing");
    }
}

Matrix<int> level_matrix(const CWHypergraph& x, std::size_t d) {
    Matrix<int> m(x.counts[d], x.counts[d + 1], 0);
    for (const auto& inc : x.levels[d])
        m(inc.lower - 1, inc.upper - 1) = inc.sign;
    return m;
}

bool product_is_zero(const Matrix<int>& a, const Matrix<int>& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            long sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                sum += a(r, k) * b(k, c);
            if (sum != 0)
                return false;
        }
    return true;
}

} // namespace

std::string Hypergraph::edge_name(std::size_t j) const {
    if (j >= 1 && j <= edge_names.size())
        return edge_names[j - 1];
    return "e" + std::to_string(j);
}

int CWHypergraph::sign_of(std::size_t d, std::size_t i, std::size_t j) const {
    if (d >= levels.size())
        return 0;
    for (const auto& inc : levels[d])
        if (inc.lower == i && inc.upper == j)
            return inc.sign;
    return 0;
}

void ValidationReport::add(Severity severity, std::string location, std::string message) {
    if (severity == Severity::error)
        ok = false;
    issues.push_back({severity, std::move(location), std::move(message)});
}

std::string ValidationReport::first_error() const {
    for (const auto& issue : issues)
        if (issue.severity == Severity::error)
            return issue.location.empty() ? issue.message : issue.location + ": " + issue.message;
    return {};
}

ValidationReport validate(const Hypergraph& h) {
    ValidationReport report;
    if (h.n == 0)
        report.add(Severity::error, "vertices", "vertex count must be positive");
    if (!h.edge_names.empty() && h.edge_names.size() != h.edges.size())
        report.add(Severity::error, "edges", "edge name count does not match edge count");
    for (std::size_t j = 0; j < h.edges.size(); ++j)
        check_vertex_set(report, "edge " + std::to_string(j + 1), h.edges[j], h.n, "edge");
    return report;
}

ValidationReport validate(const CWHypergraph& x) {
    ValidationReport report;
    if (x.counts.empty()) {
        report.add(Severity::error, "cells", "no cell dimensions declared");
        return report;
    }
    if (x.counts[0] == 0)
        report.add(Severity::error, "cells 0", "at least one 0-cell is required");
    if (x.levels.size() != x.counts.size() - 1) {
        report.add(Severity::error, "inc",
                   "expected " + std::to_string(x.counts.size() - 1) + " incidence levels, found " +
                       std::to_string(x.levels.size()));
        return report;
    }

    bool levels_ok = true;
    for (std::size_t d = 0; d < x.levels.size(); ++d) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& inc : x.levels[d]) {
            const std::string where = "inc " + std::to_string(d) + " " + std::to_string(inc.lower) +
                                      " " + std::to_string(inc.upper);
            if (inc.lower < 1 || inc.lower > x.counts[d] || inc.upper < 1 ||
                inc.upper > x.counts[d + 1]) {
                report.add(Severity::error, where, "cell index out of range");
                levels_ok = false;
            }
            if (inc.sign != 1 && inc.sign != -1) {
                report.add(Severity::error, where, "sign must be +1 or -1");
                levels_ok = false;
            }
            if (!seen.insert({inc.lower, inc.upper}).second) {
                report.add(Severity::error, where, "duplicate incidence pair");
                levels_ok = false;
            }
        }
    }

    for (const auto& [cell, skeleton] : x.skeletons) {
        const auto [d, j] = cell;
        const std::string where = "skel " + cell_label(d, j);
        if (d == 0 || d >= x.counts.size() || j < 1 || j > x.counts[d]) {
            report.add(Severity::error, where, "skeleton attached to a cell that does not exist");
            continue;
        }
        check_vertex_set(report, where, skeleton, x.counts[0], "skeleton");
    }

    if (levels_ok) {
        for (std::size_t d = 1; d < x.levels.size(); ++d) {
            const bool zero = product_is_zero(level_matrix(x, d - 1), level_matrix(x, d));
            report.boundary_squared_zero[d] = zero;
            if (!zero)
                report.add(Severity::warning,
                           "levels " + std::to_string(d - 1) + "," + std::to_string(d),
                           "I_" + std::to_string(d - 1) + " * I_" + std::to_string(d) +
                               " is not zero");
        }
    }
    return report;
}

void require_valid(const Hypergraph& h) {
    const auto report = validate(h);
    if (!report.ok)
        throw input_error("invalid hypergraph: " + report.first_error());
}

void require_valid(const CWHypergraph& x) {
    const auto report = validate(x);
    if (!report.ok)
        throw input_error("invalid CW-hypergraph: " + report.first_error());
}

Hypergraph project_hypergraph(const CWHypergraph& x) {
    require_valid(x);
    Hypergraph h;
    h.n = x.counts[0];
    for (std::size_t d = 1; d < x.counts.size(); ++d) {
        for (std::size_t j = 1; j <= x.counts[d]; ++j) {
            auto it = x.skeletons.find({d, j});
            if (it == x.skeletons.end())
                throw missing_skeleton_error("cell " + cell_label(d, j) + " has no 0-skeleton");
            h.edges.push_back(it->second);
            h.edge_names.push_back("e" + std::to_string(h.edges.size()));
        }
    }
    return h;
}

} // namespace hyperlap
