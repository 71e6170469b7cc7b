#pragma once

#include <string>

#include "tfse/experiments.hpp"

namespace tfse {

/// Computed values: %.4e, lowercase e, two-digit exponent (e.g. 2.0332e-05).
std::string fmt_sci(double x);
/// Parameter echoes (alpha, tau, h, epsilon): shortest %g form.
std::string fmt_param(double x);
/// Like fmt_sci but NaN becomes the empty cell.
std::string fmt_cell(double x);

/// Write content to path via a temp file in the same directory plus rename.
/// Throws IoError on any failure.
void atomic_write_file(const std::string& path, const std::string& content);

/// One row of the `solve` command.
struct SolveRow {
    double alpha;
    int N;
    int M;
    int example;
    Backend backend;
    double final_l2;
    double final_linf;
    double E_l = blank;  ///< blank unless the problem has a known solution
    double E_g = blank;
};

// CSV builders: header line then data rows, LF newlines, no trailing spaces.
std::string table1_csv(const std::vector<ErrorReport>& rows);
std::string table2_csv(const std::vector<GridRatioRow>& rows);
std::string two_mesh_csv(int example_id, const std::vector<TwoMeshReport>& rows);
std::string stability_csv(const std::vector<StabilityRow>& rows);
std::string probe_csv(const std::vector<ProbeRow>& rows);
std::string solve_csv(const SolveRow& row);

/// One polyline of a log-log convergence plot.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> pts;  ///< (log2 N, log2 error)
};

/// Deterministic SVG: log2 N on x, log2 error on y, one polyline per series,
/// optional dashed slope -1 guide. Byte-identical output for identical input.
std::string convergence_svg(const std::vector<PlotSeries>& series, bool slope_guide);

} // namespace tfse
