#pragma once

#include <string>

#include "tfse/output.hpp"

namespace tfse {

/// Parsed command line + config file. Defaults: alpha 0.5, N 512, dst backend,
/// example 1, 4 GiB history cap, output "<command>.csv".
struct RunConfig {
    std::string command;
    std::vector<double> alpha{0.5};
    std::vector<int> nsteps{512};
    int mgrid = 0;  ///< 0 = per-command default (solve: ceil(sqrt N), two-mesh: 50, stability: 32)
    int example = 1;
    Backend backend = Backend::dst;
    std::string out;
    bool plot = false;
    bool extended = false;  ///< table1: append the long-running N=8192 rows
    std::uint64_t memory_cap_bytes = default_memory_cap;
    bool help = false;

    // which keys were given explicitly (flag or config file)
    bool alpha_set = false;
    bool nsteps_set = false;
    bool mgrid_set = false;
    bool example_set = false;
};

std::string usage_text();

/// Parse argv plus the config file (--config PATH, else ./tfse.conf if present;
/// flags override file keys). Validates everything up front. Throws UsageError.
RunConfig parse_config(int argc, const char* const* argv);

/// Execute a parsed config: run the experiment, write CSV (and SVG when
/// requested) atomically. Returns 0; errors are thrown.
int dispatch(const RunConfig& cfg);

/// Complete CLI entry: parse, dispatch, map errors to exit codes
/// (0 ok, 2 usage, 3 I/O, 4 numeric failure).
int cli_main(int argc, const char* const* argv);

} // namespace tfse
