#include "tfse/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace tfse {

namespace {

const std::vector<std::string> commands = {"solve",    "table1",    "table2",
                                           "two-mesh", "stability", "probe-kernel"};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(trim(cur));
    return parts;
}

double parse_double(const std::string& key, const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw UsageError(key + ": not a number: '" + s + "'");
    return v;
}

long long parse_int(const std::string& key, const std::string& s) {
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw UsageError(key + ": not an integer: '" + s + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw UsageError(key + ": expected true or false, got '" + s + "'");
}

/// Apply one key=value (shared by config file and flags).
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "alpha") {
        cfg.alpha.clear();
        for (const std::string& p : split_commas(value))
            cfg.alpha.push_back(parse_double("alpha", p));
        if (cfg.alpha.empty()) throw UsageError("alpha: empty list");
        cfg.alpha_set = true;
    } else if (key == "nsteps") {
        cfg.nsteps.clear();
        for (const std::string& p : split_commas(value))
            cfg.nsteps.push_back(int(parse_int("nsteps", p)));
        if (cfg.nsteps.empty()) throw UsageError("nsteps: empty list");
        cfg.nsteps_set = true;
    } else if (key == "mgrid") {
        cfg.mgrid = int(parse_int("mgrid", value));
        cfg.mgrid_set = true;
    } else if (key == "example") {
        cfg.example = int(parse_int("example", value));
        cfg.example_set = true;
    } else if (key == "backend") {
        if (value == "dst")
            cfg.backend = Backend::dst;
        else if (value == "dense")
            cfg.backend = Backend::dense;
        else
            throw UsageError("backend: expected dst or dense, got '" + value + "'");
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "plot") {
        cfg.plot = parse_bool("plot", value);
    } else if (key == "extended") {
        cfg.extended = parse_bool("extended", value);
    } else if (key == "memory_cap_bytes") {
        const long long v = parse_int("memory_cap_bytes", value);
        if (v <= 0) throw UsageError("memory_cap_bytes must be positive");
        cfg.memory_cap_bytes = std::uint64_t(v);
    } else {
        throw UsageError("unknown config key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path, bool required) {
    std::ifstream in(path);
    if (!in) {
        if (required) throw UsageError("config file not found: " + path);
        return;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_key(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

int effective_mgrid(const RunConfig& cfg) {
    if (cfg.command == "solve") return cfg.mgrid_set ? cfg.mgrid : ceil_sqrt(cfg.nsteps.front());
    if (cfg.command == "table1") {
        int worst = 2;
        for (int n : cfg.nsteps) worst = std::max(worst, ceil_sqrt(n));
        return worst;
    }
    if (cfg.command == "table2") return 200;  // finest built-in pair, h = 0.005
    if (cfg.command == "two-mesh") return cfg.mgrid_set ? cfg.mgrid : 50;
    if (cfg.command == "stability") return cfg.mgrid_set ? cfg.mgrid : 32;
    return 0;  // probe-kernel: no spatial grid
}

void validate(RunConfig& cfg) {
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
        throw UsageError("unknown command '" + cfg.command + "'");
    for (double a : cfg.alpha)
        if (!(a > 0.0) || !(a < 1.0))
            throw UsageError("alpha must lie in (0,1), got " + fmt_param(a));
    for (int n : cfg.nsteps)
        if (n < 1) throw UsageError("nsteps must be >= 1, got " + std::to_string(n));
    if (cfg.example_set && (cfg.example < 1 || cfg.example > 3))
        throw UsageError("example must be 1, 2 or 3, got " + std::to_string(cfg.example));
    if (cfg.mgrid_set && cfg.mgrid < 2)
        throw UsageError("mgrid must be >= 2, got " + std::to_string(cfg.mgrid));

    if (cfg.command == "table1") {
        if (cfg.mgrid_set)
            throw UsageError("mgrid is not applicable to table1 (M is derived from N)");
        if (cfg.example_set && cfg.example != 1)
            throw UsageError("table1 runs example 1 only");
        if (cfg.extended &&
            std::find(cfg.nsteps.begin(), cfg.nsteps.end(), 8192) == cfg.nsteps.end())
            cfg.nsteps.push_back(8192);
    } else if (cfg.command == "table2") {
        if (cfg.nsteps_set) throw UsageError("nsteps is not applicable to table2 (pairs are built in)");
        if (cfg.mgrid_set) throw UsageError("mgrid is not applicable to table2 (pairs are built in)");
        if (cfg.example_set && cfg.example != 1)
            throw UsageError("table2 runs example 1 only");
    } else if (cfg.command == "two-mesh") {
        if (!cfg.example_set || (cfg.example != 2 && cfg.example != 3))
            throw UsageError("two-mesh needs --example 2 or 3");
        for (int n : cfg.nsteps)
            if (n < 2 || n % 2 != 0)
                throw UsageError("two-mesh nsteps must be even and >= 2, got " +
                                 std::to_string(n));
    } else if (cfg.command == "stability") {
        if (cfg.example_set && cfg.example != 2)
            throw UsageError("stability runs example 2 only");
    } else if (cfg.command == "probe-kernel") {
        if (cfg.mgrid_set) throw UsageError("mgrid is not applicable to probe-kernel");
        if (cfg.example_set) throw UsageError("example is not applicable to probe-kernel");
    } else if (cfg.command == "solve") {
        if (cfg.alpha.size() != 1) throw UsageError("solve takes a single alpha");
        if (cfg.nsteps.size() != 1) throw UsageError("solve takes a single nsteps value");
    }

    if (cfg.plot) {
        if (cfg.command != "table1" && cfg.command != "two-mesh" && cfg.command != "probe-kernel")
            throw UsageError("plot is not supported for " + cfg.command);
        if (cfg.nsteps.size() < 2)
            throw UsageError("plot needs at least two nsteps values");
    }

    if (cfg.backend == Backend::dense) {
        const int m = effective_mgrid(cfg);
        if (m > 24)
            throw UsageError("dense backend supports M <= 24; this run needs M = " +
                             std::to_string(m));
    }

    if (cfg.out.empty()) cfg.out = cfg.command + ".csv";
}

std::string svg_path(const std::string& out) {
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".csv")
        return out.substr(0, out.size() - 4) + ".svg";
    return out + ".svg";
}

std::string alpha_label(double a) { return "alpha=" + fmt_param(a); }

} // namespace

std::string usage_text() {
    return R"(usage: tfse <command> [flags]

commands:
  solve         run one configuration, report final norms (and errors for example 1)
  table1        example-1 error ladder with spatial coupling M = ceil(sqrt(N))
  table2        example-1 local errors for the built-in (tau,h) pairs
                (0.01,0.1) (0.005,0.05) (0.1,0.01) (0.05,0.005)
  two-mesh      self-convergence ladder for example 2 or 3 (no exact solution)
  stability     initial-data perturbation amplification for example 2
  probe-kernel  truncation decay of the fractional-derivative kernel on t^alpha

flags:
  --alpha A[,A...]        fractional orders in (0,1)        [default 0.5]
  --nsteps N[,N...]       time-step counts                  [default 512]
  --mgrid M               spatial subdivisions (solve, two-mesh, stability)
  --example {1,2,3}       problem id (solve; required 2|3 for two-mesh)
  --backend {dst,dense}   linear solver backend             [default dst]
  --out PATH              output CSV path                   [default <command>.csv]
  --plot                  also write an SVG convergence plot (table1, two-mesh, probe-kernel)
  --extended              include the long-running N=8192 rows (table1)
  --memory-cap-bytes B    history memory cap                [default 4 GiB]
  --config PATH           key=value config file             [default ./tfse.conf if present]
  --help                  this text

Flags override config-file keys. Exit codes: 0 ok, 2 usage, 3 I/O, 4 numeric failure.
)";
}

RunConfig parse_config(int argc, const char* const* argv) {
    RunConfig cfg;
    std::vector<std::string> args(argv + 1, argv + argc);
    for (const std::string& a : args)
        if (a == "--help" || a == "-h") {
            cfg.help = true;
            return cfg;
        }
    if (args.empty()) throw UsageError("missing command");
    cfg.command = args[0];
    if (!cfg.command.empty() && cfg.command[0] == '-')
        throw UsageError("expected a command before flags, got '" + cfg.command + "'");

    std::string config_path;
    bool config_given = false;
    for (std::size_t i = 1; i < args.size(); ++i)
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a path");
            config_path = args[i + 1];
            config_given = true;
        }
    load_config_file(cfg, config_given ? config_path : "tfse.conf", config_given);

    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value_of = [&](const char* flag) -> std::string {
            if (i + 1 >= args.size()) throw UsageError(std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--alpha") apply_key(cfg, "alpha", value_of("--alpha"));
        else if (a == "--nsteps") apply_key(cfg, "nsteps", value_of("--nsteps"));
        else if (a == "--mgrid") apply_key(cfg, "mgrid", value_of("--mgrid"));
        else if (a == "--example") apply_key(cfg, "example", value_of("--example"));
        else if (a == "--backend") apply_key(cfg, "backend", value_of("--backend"));
        else if (a == "--out") apply_key(cfg, "out", value_of("--out"));
        else if (a == "--memory-cap-bytes") apply_key(cfg, "memory_cap_bytes", value_of("--memory-cap-bytes"));
        else if (a == "--plot") cfg.plot = true;
        else if (a == "--extended") cfg.extended = true;
        else if (a == "--config") ++i;  // handled above
        else throw UsageError("unknown flag '" + a + "'");
    }

    validate(cfg);
    return cfg;
}

int dispatch(const RunConfig& cfg) {
    const ExperimentOptions opts{cfg.backend, cfg.memory_cap_bytes};
    std::string csv;
    std::vector<PlotSeries> series;
    bool guide = true;

    if (cfg.command == "solve") {
        const double alpha = cfg.alpha.front();
        const int N = cfg.nsteps.front();
        const int M = cfg.mgrid_set ? cfg.mgrid : ceil_sqrt(N);
        RunOptions ropts;
        ropts.backend = cfg.backend;
        ropts.memory_cap_bytes = cfg.memory_cap_bytes;
        const History hist = run(example_problem(cfg.example, alpha, M, N), ropts);
        const ComplexField last = hist.field(N);
        SolveRow row{alpha, N, M, cfg.example, cfg.backend, l2_norm(last), linf_norm(last)};
        if (cfg.example == 1) {
            const ErrorReport err = measure_errors(hist, alpha, 1.0);
            row.E_l = err.E_l;
            row.E_g = err.E_g;
        }
        csv = solve_csv(row);
    } else if (cfg.command == "table1") {
        const auto rows = convergence_table(cfg.alpha, cfg.nsteps, opts);
        csv = table1_csv(rows);
        for (double a : cfg.alpha) {
            PlotSeries s{alpha_label(a), {}};
            for (const auto& r : rows)
                if (r.alpha == a) s.pts.emplace_back(std::log2(double(r.N)), std::log2(r.E_l));
            series.push_back(std::move(s));
        }
    } else if (cfg.command == "table2") {
        const std::vector<std::pair<double, double>> pairs = {
            {0.01, 0.1}, {0.005, 0.05}, {0.1, 0.01}, {0.05, 0.005}};
        std::vector<GridRatioRow> rows;
        for (double a : cfg.alpha) {
            const auto part = grid_ratio_study(a, pairs, opts);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        csv = table2_csv(rows);
    } else if (cfg.command == "two-mesh") {
        const int M = cfg.mgrid_set ? cfg.mgrid : 50;
        const auto rows = two_mesh_table(cfg.example, cfg.alpha, cfg.nsteps, M, opts);
        csv = two_mesh_csv(cfg.example, rows);
        for (double a : cfg.alpha) {
            PlotSeries s{alpha_label(a), {}};
            for (const auto& r : rows)
                if (r.alpha == a) s.pts.emplace_back(std::log2(double(r.N)), std::log2(r.e_L));
            series.push_back(std::move(s));
        }
    } else if (cfg.command == "stability") {
        const int M = cfg.mgrid_set ? cfg.mgrid : 32;
        const auto rows = stability_table(cfg.alpha, cfg.nsteps, M, {1e-3, 1e-6}, opts);
        csv = stability_csv(rows);
    } else {  // probe-kernel
        const auto rows = probe_table(cfg.alpha, cfg.nsteps);
        csv = probe_csv(rows);
        for (double a : cfg.alpha) {
            PlotSeries s{alpha_label(a), {}};
            for (const auto& r : rows)
                if (r.alpha == a) s.pts.emplace_back(std::log2(double(r.N)), std::log2(r.error));
            series.push_back(std::move(s));
        }
        guide = false;
    }

    atomic_write_file(cfg.out, csv);
    const std::size_t rows_written = std::count(csv.begin(), csv.end(), '\n') - 1;
    std::cout << "wrote " << rows_written << " row" << (rows_written == 1 ? "" : "s") << " to "
              << cfg.out << "\n";
    if (cfg.plot) {
        const std::string p = svg_path(cfg.out);
        atomic_write_file(p, convergence_svg(series, guide));
        std::cout << "wrote plot to " << p << "\n";
    }
    return 0;
}

int cli_main(int argc, const char* const* argv) {
    try {
        const RunConfig cfg = parse_config(argc, argv);
        if (cfg.help) {
            std::cout << usage_text();
            return 0;
        }
        return dispatch(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n(try 'tfse --help')\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    }
}

} // namespace tfse
