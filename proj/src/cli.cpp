#include "hyperlap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperlap/enumerate.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/evolve.hpp"
#include "hyperlap/formats.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/walkcount.hpp"

namespace hyperlap {

namespace {

struct CliConfig {
    std::string input;
    std::string fixture;
    bool machine = false;

    std::string which;
    std::optional<std::size_t> dim;
    std::string kind;
    std::size_t from = 0;
    std::size_t to = 0;
    unsigned length = 0;
    unsigned max_length = 0;
    double theta = 0.0;
    bool trace = false;
    std::string fixture_name;
    bool emit = false;
};

// Output sink that renders either "label: value" style human text or
// key=value records.
class Printer {
public:
    Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    bool machine() const noexcept { return machine_; }
    std::ostream& raw() { return out_; }

    void record(const std::string& key, const std::string& value) {
        out_ << key << '=' << value << '\n';
    }
    void human(const std::string& line) { out_ << line << '\n'; }

private:
    std::ostream& out_;
    bool machine_;
};

std::uint64_t walk_budget() {
    const char* env = std::getenv("HYPERLAP_BUDGET");
    if (env == nullptr || *env == '\0')
        return default_walk_budget;
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw input_error("HYPERLAP_BUDGET must be a non-negative integer, got '" + std::string(text) +
                          "'");
    return value;
}

AnyObject load_source(const CliConfig& cfg) {
    if (!cfg.input.empty() && !cfg.fixture.empty())
        throw input_error("give either --input or --fixture, not both");
    if (!cfg.fixture.empty())
        return builtin_fixture(cfg.fixture);
    if (!cfg.input.empty())
        return load_file(cfg.input);
    throw input_error("no input: pass --input <file> or --fixture fig1|fig2");
}

Hypergraph as_hypergraph(const AnyObject& obj) {
    if (const auto* h = std::get_if<Hypergraph>(&obj))
        return *h;
    return project_hypergraph(std::get<CWHypergraph>(obj));
}

const CWHypergraph& as_complex(const AnyObject& obj, const char* command) {
    if (const auto* x = std::get_if<CWHypergraph>(&obj))
        return *x;
    throw input_error(std::string(command) + " needs a CW-hypergraph input (.cw)");
}

std::string row_text(const ExactMatrix& m, std::size_t r, std::size_t width) {
    std::string line;
    for (std::size_t c = 0; c < m.dim(); ++c) {
        std::string cell = m(r, c).get_str();
        if (c > 0)
            line += ' ';
        if (cell.size() < width)
            line.append(width - cell.size(), ' ');
        line += cell;
    }
    return line;
}

void print_matrix(Printer& p, const ExactMatrix& m, const std::string& family) {
    if (p.machine()) {
        p.record("family", family);
        p.record("dim", std::to_string(m.dim()));
        for (std::size_t r = 0; r < m.dim(); ++r)
            p.record("row" + std::to_string(r + 1), row_text(m, r, 0));
        return;
    }
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            width = std::max(width, m(r, c).get_str().size());
    p.human(family + " (" + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + ")");
    for (std::size_t r = 0; r < m.dim(); ++r)
        p.human(row_text(m, r, width));
}

std::string complex_text(Complex z) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g%+.12gi", z.real(), z.imag());
    return buffer;
}

void level_zero_note(Printer& p, std::size_t d) {
    if (d != 0)
        return;
    if (p.machine())
        p.record("note", "level-0");
    else
        p.human("note: level 0 treats the vertices as 0-cells");
}

int cmd_validate(const CliConfig& cfg, Printer& p) {
    const auto obj = load_source(cfg);
    const ValidationReport report =
        std::visit([](const auto& o) { return validate(o); }, obj);
    if (p.machine())
        p.record("ok", report.ok ? "true" : "false");
    else
        p.human(report.ok ? "ok" : "invalid");
    for (const auto& issue : report.issues) {
        const char* severity = issue.severity == Severity::error ? "error" : "warning";
        if (p.machine())
            p.record("issue", std::string(severity) + "|" + issue.location + "|" + issue.message);
        else
            p.human(std::string(severity) + ": " + issue.location + ": " + issue.message);
    }
    for (const auto& [d, zero] : report.boundary_squared_zero) {
        const std::string value = zero ? "true" : "false";
        if (p.machine())
            p.record("boundary_squared_zero." + std::to_string(d), value);
        else
            p.human("I_" + std::to_string(d - 1) + " * I_" + std::to_string(d) +
                    " = 0: " + (zero ? "yes" : "no"));
    }
    return report.ok ? 0 : 1;
}

int cmd_laplacian(const CliConfig& cfg, Printer& p) {
    const auto obj = load_source(cfg);
    if (cfg.which == "susy") {
        if (cfg.dim)
            throw input_error("--which susy takes no --dim");
        print_matrix(p, susy_laplacian(as_hypergraph(obj)), "supersymmetric");
        return 0;
    }
    const Parity parity = cfg.which == "even" ? Parity::even : Parity::odd;
    if (const auto* x = std::get_if<CWHypergraph>(&obj)) {
        if (!cfg.dim)
            throw input_error("a CW-hypergraph input needs --dim");
        level_zero_note(p, *cfg.dim);
        print_matrix(p, cw_laplacian(*x, *cfg.dim, parity),
                     std::string(to_string(parity)) + "[d=" + std::to_string(*cfg.dim) + "]");
        return 0;
    }
    if (cfg.dim)
        throw input_error("--dim applies to CW-hypergraph inputs only");
    print_matrix(p, hypergraph_laplacian(std::get<Hypergraph>(obj), parity), to_string(parity));
    return 0;
}

WalkQuery query_from(const CliConfig& cfg) {
    WalkQuery q;
    q.kind = parse_walk_kind(cfg.kind);
    q.from = cfg.from;
    q.to = cfg.to;
    q.length = cfg.length;
    if (is_signed(q.kind)) {
        if (!cfg.dim)
            throw input_error(std::string("kind '") + cfg.kind + "' needs --dim");
        q.level = *cfg.dim;
    } else if (cfg.dim) {
        throw input_error(std::string("kind '") + cfg.kind + "' takes no --dim");
    }
    return q;
}

void print_count(Printer& p, const CountResult& r) {
    if (!p.machine()) {
        p.human(r.value.get_str());
        return;
    }
    p.record("kind", to_string(r.query.kind));
    if (is_signed(r.query.kind))
        p.record("dim", std::to_string(r.query.level));
    p.record("from", std::to_string(r.query.from));
    p.record("to", std::to_string(r.query.to));
    p.record("length", std::to_string(r.query.length));
    p.record("family", r.family);
    p.record("value", r.value.get_str());
}

int cmd_count(const CliConfig& cfg, Printer& p) {
    const auto q = query_from(cfg);
    if (is_signed(q.kind))
        throw input_error("count takes --kind vertex|edge; use signed-count for lower/upper");
    print_count(p, count_walks(as_hypergraph(load_source(cfg)), q));
    return 0;
}

int cmd_signed_count(const CliConfig& cfg, Printer& p) {
    const auto q = query_from(cfg);
    if (!is_signed(q.kind))
        throw input_error("signed-count takes --kind lower|upper; use count for vertex/edge");
    const auto obj = load_source(cfg);
    level_zero_note(p, q.level);
    print_count(p, signed_count(as_complex(obj, "signed-count"), q));
    return 0;
}

int cmd_enumerate(const CliConfig& cfg, Printer& p) {
    const auto q = query_from(cfg);
    const auto obj = load_source(cfg);
    const std::uint64_t budget = walk_budget();
    std::uint64_t count = 0;
    long sum = 0;
    if (is_signed(q.kind)) {
        level_zero_note(p, q.level);
        for (const auto& w : enum_signed_walks(as_complex(obj, "enumerate"), q.level, q.kind, q.from,
                                               q.to, q.length, budget)) {
            p.machine() ? p.record("walk", format_walk(w)) : p.human(format_walk(w));
            ++count;
            sum += w.sign;
        }
    } else {
        for (const auto& w : enum_walks(as_hypergraph(obj), q.kind, q.from, q.to, q.length, budget)) {
            p.machine() ? p.record("walk", format_walk(w)) : p.human(format_walk(w));
            ++count;
        }
    }
    if (p.machine()) {
        p.record("count", std::to_string(count));
        if (is_signed(q.kind))
            p.record("signed_sum", std::to_string(sum));
    } else {
        p.human(std::to_string(count) + " walks");
        if (is_signed(q.kind))
            p.human("signed sum " + std::to_string(sum));
    }
    return 0;
}

int cmd_check(const CliConfig& cfg, Printer& p) {
    if (cfg.max_length < 1)
        throw input_error("--max-length must be at least 1");
    const auto obj = load_source(cfg);
    const std::uint64_t budget = walk_budget();
    const CrossCheckReport report =
        std::visit([&](const auto& o) { return cross_check(o, cfg.max_length, budget); }, obj);
    if (p.machine()) {
        p.record("description", report.description);
        p.record("comparisons", std::to_string(report.comparisons.size()));
        p.record("mismatches", std::to_string(report.mismatches.size()));
    } else {
        p.human(report.description);
        p.human(std::to_string(report.comparisons.size()) + " comparisons");
        p.human(std::to_string(report.mismatches.size()) + " mismatches");
    }
    for (const auto& c : report.mismatches) {
        std::ostringstream line;
        line << to_string(c.query.kind) << " d=" << c.query.level << " " << c.query.from << "->"
             << c.query.to << " k=" << c.query.length << " matrix=" << c.matrix_value.get_str()
             << " oracle=" << c.oracle_value.get_str();
        p.machine() ? p.record("mismatch", line.str()) : p.human("mismatch: " + line.str());
    }
    return report.ok() ? 0 : 2;
}

int cmd_evolve(const CliConfig& cfg, Printer& p) {
    const Hypergraph h = as_hypergraph(load_source(cfg));
    if (cfg.trace) {
        const Complex z = partition_trace(h, cfg.theta);
        if (p.machine()) {
            char theta[32];
            std::snprintf(theta, sizeof theta, "%.12g", cfg.theta);
            p.record("theta", theta);
            p.record("trace", complex_text(z));
        } else {
            p.human(complex_text(z));
        }
        return 0;
    }
    const ComplexMatrix u = evolution_operator(susy_laplacian(h), cfg.theta);
    if (!p.machine())
        p.human("exp(-i*theta*Delta) (" + std::to_string(u.rows()) + "x" +
                std::to_string(u.cols()) + ")");
    else
        p.record("dim", std::to_string(u.rows()));
    for (std::size_t r = 0; r < u.rows(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < u.cols(); ++c) {
            if (c > 0)
                line += ' ';
            line += complex_text(u(r, c));
        }
        p.machine() ? p.record("row" + std::to_string(r + 1), line) : p.human(line);
    }
    return 0;
}

int cmd_fixture(const CliConfig& cfg, Printer& p) {
    const auto obj = builtin_fixture(cfg.fixture_name);
    if (cfg.emit) {
        p.raw() << (cfg.fixture_name == "fig1" ? fig1_text : fig2_text);
        return 0;
    }
    if (const auto* h = std::get_if<Hypergraph>(&obj)) {
        if (p.machine()) {
            p.record("type", "hypergraph");
            p.record("vertices", std::to_string(h->vertex_count()));
            p.record("edges", std::to_string(h->edge_count()));
        } else {
            p.human(cfg.fixture_name + ": hypergraph with " + std::to_string(h->vertex_count()) +
                    " vertices and " + std::to_string(h->edge_count()) + " edges");
        }
        return 0;
    }
    const auto& x = std::get<CWHypergraph>(obj);
    std::string counts;
    for (std::size_t d = 0; d < x.counts.size(); ++d)
        counts += (d ? "," : "") + std::to_string(x.counts[d]);
    if (p.machine()) {
        p.record("type", "cw-hypergraph");
        p.record("counts", counts);
    } else {
        p.human(cfg.fixture_name + ": CW-hypergraph with cell counts (" + counts + ")");
    }
    return 0;
}

void add_source_options(CLI::App* sub, CliConfig& cfg) {
    auto* input = sub->add_option("--input,-i", cfg.input, "Input file (.hg or .cw)");
    auto* fixture = sub->add_option("--fixture", cfg.fixture, "Built-in fixture: fig1 or fig2")
                        ->check(CLI::IsMember({"fig1", "fig2"}));
    input->excludes(fixture);
    sub->add_flag("--machine", cfg.machine, "Print key=value records");
}

void add_walk_options(CLI::App* sub, CliConfig& cfg, bool with_dim) {
    if (with_dim)
        sub->add_option("--dim", cfg.dim, "Level d (lower: d-cells, upper: (d+1)-cells)");
    sub->add_option("--from", cfg.from, "Start index (1-based)")->required();
    sub->add_option("--to", cfg.to, "End index (1-based)")->required();
    sub->add_option("--length", cfg.length, "Walk length k")->required();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Hypergraph and CW-hypergraph Laplacians, walk counts and their brute-force check",
                 "hyperlap"};
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "Check an input for structural errors");
    add_source_options(validate_cmd, cfg);

    auto* laplacian_cmd = app.add_subcommand("laplacian", "Print a Laplacian matrix");
    add_source_options(laplacian_cmd, cfg);
    laplacian_cmd->add_option("--which", cfg.which, "even, odd or susy")
        ->required()
        ->check(CLI::IsMember({"even", "odd", "susy"}));
    laplacian_cmd->add_option("--dim", cfg.dim, "Level d for CW-hypergraph inputs");

    auto* count_cmd = app.add_subcommand("count", "Count hyperwalks or edge-hyperwalks");
    add_source_options(count_cmd, cfg);
    count_cmd->add_option("--kind", cfg.kind, "vertex or edge")
        ->required()
        ->check(CLI::IsMember({"vertex", "edge"}));
    add_walk_options(count_cmd, cfg, false);

    auto* signed_cmd = app.add_subcommand("signed-count", "Signed sum over CW-hypergraph walks");
    add_source_options(signed_cmd, cfg);
    signed_cmd->add_option("--kind", cfg.kind, "lower or upper")
        ->required()
        ->check(CLI::IsMember({"lower", "upper"}));
    add_walk_options(signed_cmd, cfg, true);
    signed_cmd->get_option("--dim")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List walks by brute force");
    add_source_options(enumerate_cmd, cfg);
    enumerate_cmd->add_option("--kind", cfg.kind, "vertex, edge, lower or upper")
        ->required()
        ->check(CLI::IsMember({"vertex", "edge", "lower", "upper"}));
    add_walk_options(enumerate_cmd, cfg, true);

    auto* check_cmd = app.add_subcommand("check", "Compare matrix powers with enumeration");
    add_source_options(check_cmd, cfg);
    check_cmd->add_option("--max-length", cfg.max_length, "Largest walk length checked")->required();

    auto* evolve_cmd = app.add_subcommand("evolve", "Evolution operator exp(-i theta Delta)");
    add_source_options(evolve_cmd, cfg);
    evolve_cmd->add_option("--theta", cfg.theta, "theta = t / hbar")->required();
    evolve_cmd->add_flag("--trace", cfg.trace, "Print the partition trace only");

    auto* fixture_cmd = app.add_subcommand("fixture", "Show or emit a built-in fixture");
    fixture_cmd->add_option("--name", cfg.fixture_name, "fig1 or fig2")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2"}));
    fixture_cmd->add_flag("--emit", cfg.emit, "Print the fixture file");
    fixture_cmd->add_flag("--machine", cfg.machine, "Print key=value records");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << "run 'hyperlap --help' for usage\n";
        return 1;
    }

    Printer printer(out, cfg.machine);
    try {
        if (validate_cmd->parsed()) return cmd_validate(cfg, printer);
        if (laplacian_cmd->parsed()) return cmd_laplacian(cfg, printer);
        if (count_cmd->parsed()) return cmd_count(cfg, printer);
        if (signed_cmd->parsed()) return cmd_signed_count(cfg, printer);
        if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, printer);
        if (check_cmd->parsed()) return cmd_check(cfg, printer);
        if (evolve_cmd->parsed()) return cmd_evolve(cfg, printer);
        if (fixture_cmd->parsed()) return cmd_fixture(cfg, printer);
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << " (raise HYPERLAP_BUDGET to allow more)\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    err << "usage error: no command given\n";
    return 1;
}

} // namespace hyperlap
