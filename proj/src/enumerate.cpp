#include "hyperlap/enumerate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hyperlap/errors.hpp"
#include "hyperlap/laplacian.hpp"

namespace hyperlap {

namespace {

// Two-tier incidence structure walked by the enumerator. Outer elements are
// the walk's endpoints (vertices, edges, d-cells or (d+1)-cells); middle
// elements sit between them. Both are 1-based, index 0 unused.
struct Tiers {
    std::vector<std::vector<std::size_t>> out_to_mid;
    std::vector<std::vector<std::size_t>> mid_to_out;
    std::map<std::pair<std::size_t, std::size_t>, int> sign; // (outer, middle)
};

Tiers tiers_for(const Hypergraph& h, WalkKind kind) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    std::vector<std::vector<std::size_t>> vertex_edges(n + 1), edge_vertices(m + 1);
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t v : h.edges[j - 1]) {
            vertex_edges[v].push_back(j);
            edge_vertices[j].push_back(v);
        }
    for (auto& list : edge_vertices)
        std::sort(list.begin(), list.end());
    if (kind == WalkKind::vertex)
        return {std::move(vertex_edges), std::move(edge_vertices), {}};
    return {std::move(edge_vertices), std::move(vertex_edges), {}};
}

Tiers tiers_for(const CWHypergraph& x, std::size_t d, WalkKind kind) {
    const std::size_t low = x.counts[d];
    const std::size_t high = x.counts[d + 1];
    std::vector<std::vector<std::size_t>> low_to_high(low + 1), high_to_low(high + 1);
    Tiers t;
    for (const auto& inc : x.levels[d]) {
        low_to_high[inc.lower].push_back(inc.upper);
        high_to_low[inc.upper].push_back(inc.lower);
        if (kind == WalkKind::lower)
            t.sign[{inc.lower, inc.upper}] = inc.sign;
        else
            t.sign[{inc.upper, inc.lower}] = inc.sign;
    }
    for (auto& list : low_to_high)
        std::sort(list.begin(), list.end());
    for (auto& list : high_to_low)
        std::sort(list.begin(), list.end());
    if (kind == WalkKind::lower) {
        t.out_to_mid = std::move(low_to_high);
        t.mid_to_out = std::move(high_to_low);
    } else {
        t.out_to_mid = std::move(high_to_low);
        t.mid_to_out = std::move(low_to_high);
    }
    return t;
}

int sign_along(const Tiers& t, const std::vector<std::size_t>& steps) {
    int sign = 1;
    for (std::size_t p = 1; p + 1 < steps.size(); p += 2) {
        sign *= t.sign.at({steps[p - 1], steps[p]});
        sign *= t.sign.at({steps[p + 1], steps[p]});
    }
    return sign;
}

// Depth-first generation over an explicit stack. Children are tried in
// ascending (middle, outer) order, which yields lexicographic output.
std::uint64_t generate(const Tiers& t, std::size_t from, std::size_t to, unsigned k,
                       std::uint64_t budget,
                       const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::uint64_t produced = 0;
    auto accept = [&](const std::vector<std::size_t>& steps) {
        if (produced >= budget)
            throw budget_error("walk enumeration exceeds the budget of " + std::to_string(budget) +
                               " walks");
        ++produced;
        emit(steps);
    };

    std::vector<std::size_t> steps{from};
    if (k == 0) {
        if (from == to)
            accept(steps);
        return produced;
    }

    struct Frame {
        std::size_t mid = 0;
        std::size_t out = 0;
    };
    std::vector<Frame> frames(1);
    while (!frames.empty()) {
        const std::size_t depth = frames.size() - 1;
        const std::size_t current = steps[2 * depth];
        const auto& mids = t.out_to_mid[current];
        bool descended = false;
        while (!descended && frames.back().mid < mids.size()) {
            Frame& f = frames.back();
            const std::size_t m = mids[f.mid];
            const auto& outs = t.mid_to_out[m];
            if (f.out >= outs.size()) {
                ++f.mid;
                f.out = 0;
                continue;
            }
            const std::size_t next = outs[f.out++];
            if (depth + 1 == k) {
                if (next != to)
                    continue;
                steps.push_back(m);
                steps.push_back(next);
                accept(steps);
                steps.resize(steps.size() - 2);
                continue;
            }
            steps.push_back(m);
            steps.push_back(next);
            frames.emplace_back();
            descended = true;
        }
        if (!descended) {
            frames.pop_back();
            if (steps.size() > 1)
                steps.resize(steps.size() - 2);
        }
    }
    return produced;
}

std::string cell_name(std::size_t dim, std::size_t index) {
    return "e^" + std::to_string(dim) + "_" + std::to_string(index);
}

} // namespace

std::string format_walk(const Walk& w) {
    std::string out;
    for (std::size_t p = 0; p < w.steps.size(); ++p) {
        if (p > 0)
            out += ',';
        const bool outer = p % 2 == 0;
        const std::size_t idx = w.steps[p];
        switch (w.kind) {
        case WalkKind::vertex: out += (outer ? "v" : "e") + std::to_string(idx); break;
        case WalkKind::edge: out += (outer ? "e" : "v") + std::to_string(idx); break;
        case WalkKind::lower: out += cell_name(outer ? w.level : w.level + 1, idx); break;
        case WalkKind::upper: out += cell_name(outer ? w.level + 1 : w.level, idx); break;
        }
    }
    return out;
}

std::string format_walk(const SignedWalk& w) {
    return format_walk(w.walk) + (w.sign > 0 ? "[+1]" : "[-1]");
}

std::uint64_t for_each_walk(const Hypergraph& h, const WalkQuery& q, std::uint64_t budget,
                            const std::function<void(const Walk&)>& visit) {
    require_valid(h);
    check_query(h, q);
    const Tiers t = tiers_for(h, q.kind);
    Walk w{q.kind, 0, {}};
    return generate(t, q.from, q.to, q.length, budget, [&](const std::vector<std::size_t>& steps) {
        w.steps = steps;
        visit(w);
    });
}

std::uint64_t for_each_signed_walk(const CWHypergraph& x, const WalkQuery& q, std::uint64_t budget,
                                   const std::function<void(const Walk&, int)>& visit) {
    require_valid(x);
    check_query(x, q);
    const Tiers t = tiers_for(x, q.level, q.kind);
    Walk w{q.kind, q.level, {}};
    return generate(t, q.from, q.to, q.length, budget, [&](const std::vector<std::size_t>& steps) {
        w.steps = steps;
        visit(w, sign_along(t, steps));
    });
}

std::vector<Walk> enum_walks(const Hypergraph& h, WalkKind kind, std::size_t i, std::size_t j,
                             unsigned k, std::uint64_t budget) {
    std::vector<Walk> walks;
    for_each_walk(h, {kind, 0, i, j, k}, budget, [&](const Walk& w) { walks.push_back(w); });
    return walks;
}

std::vector<SignedWalk> enum_signed_walks(const CWHypergraph& x, std::size_t d, WalkKind kind,
                                          std::size_t i, std::size_t j, unsigned k,
                                          std::uint64_t budget) {
    std::vector<SignedWalk> walks;
    for_each_signed_walk(x, {kind, d, i, j, k}, budget,
                         [&](const Walk& w, int sign) { walks.push_back({w, sign}); });
    return walks;
}

int walk_sign(const CWHypergraph& x, const Walk& w) {
    if (!is_signed(w.kind))
        throw invalid_walk_error("only lower and upper walks carry a sign");
    if (w.steps.empty() || w.steps.size() % 2 == 0)
        throw invalid_walk_error("a walk must have an odd number of steps");
    require_valid(x);
    check_query(x, {w.kind, w.level, w.steps.front(), w.steps.back(), w.length()});
    const Tiers t = tiers_for(x, w.level, w.kind);
    for (std::size_t p = 1; p < w.steps.size(); p += 2)
        for (std::size_t side : {w.steps[p - 1], w.steps[p + 1]})
            if (!t.sign.contains({side, w.steps[p]}))
                throw invalid_walk_error("walk " + format_walk(w) + " uses a missing incidence at step " +
                                         std::to_string(p + 1));
    return sign_along(t, w.steps);
}

CrossCheckReport cross_check(const Hypergraph& h, unsigned kmax, std::uint64_t budget) {
    require_valid(h);
    CrossCheckReport report;
    report.description = "hypergraph n=" + std::to_string(h.vertex_count()) +
                         " m=" + std::to_string(h.edge_count()) + " kmax=" + std::to_string(kmax);
    for (WalkKind kind : {WalkKind::vertex, WalkKind::edge}) {
        const Parity parity = kind == WalkKind::vertex ? Parity::even : Parity::odd;
        const auto lap = hypergraph_laplacian(h, parity);
        const auto table = power_table(lap, kmax);
        for (unsigned k = 0; k <= kmax; ++k) {
            const ExactMatrix power = k == 0 ? ExactMatrix::identity(lap.dim()) : table[k - 1];
            for (std::size_t i = 1; i <= lap.dim(); ++i)
                for (std::size_t j = 1; j <= lap.dim(); ++j) {
                    const WalkQuery q{kind, 0, i, j, k};
                    const auto count = for_each_walk(h, q, budget, [](const Walk&) {});
                    Comparison c{q, power(i - 1, j - 1), BigInt(static_cast<unsigned long>(count))};
                    if (c.matrix_value != c.oracle_value)
                        report.mismatches.push_back(c);
                    report.comparisons.push_back(std::move(c));
                }
        }
    }
    return report;
}

CrossCheckReport cross_check(const CWHypergraph& x, unsigned kmax, std::uint64_t budget) {
    require_valid(x);
    CrossCheckReport report;
    report.description = "CW-hypergraph D=" + std::to_string(x.top_dimension()) +
                         " kmax=" + std::to_string(kmax);
    for (std::size_t d = 0; d < x.top_dimension(); ++d)
        for (WalkKind kind : {WalkKind::lower, WalkKind::upper}) {
            const Parity parity = kind == WalkKind::lower ? Parity::even : Parity::odd;
            const auto lap = cw_laplacian(x, d, parity);
            const auto table = power_table(lap, kmax);
            for (unsigned k = 0; k <= kmax; ++k) {
                const ExactMatrix power = k == 0 ? ExactMatrix::identity(lap.dim()) : table[k - 1];
                for (std::size_t i = 1; i <= lap.dim(); ++i)
                    for (std::size_t j = 1; j <= lap.dim(); ++j) {
                        const WalkQuery q{kind, d, i, j, k};
                        long sum = 0;
                        for_each_signed_walk(x, q, budget, [&](const Walk&, int s) { sum += s; });
                        Comparison c{q, power(i - 1, j - 1), BigInt(sum)};
                        if (c.matrix_value != c.oracle_value)
                            report.mismatches.push_back(c);
                        report.comparisons.push_back(std::move(c));
                    }
            }
        }
    return report;
}

} // namespace hyperlap
