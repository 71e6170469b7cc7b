#include "tfse/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tfse {

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", x);
    return buf;
}

std::string fmt_param(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string fmt_cell(double x) { return std::isnan(x) ? std::string{} : fmt_sci(x); }

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out.write(content.data(), std::streamsize(content.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write to " + tmp + " failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

std::string table1_csv(const std::vector<ErrorReport>& rows) {
    std::string s = "alpha,N,M,E_l,rate_l,E_g,rate_g\n";
    for (const auto& r : rows)
        s += fmt_param(r.alpha) + "," + std::to_string(r.N) + "," + std::to_string(r.M) + "," +
             fmt_sci(r.E_l) + "," + fmt_cell(r.rate_l) + "," + fmt_sci(r.E_g) + "," +
             fmt_cell(r.rate_g) + "\n";
    return s;
}

std::string table2_csv(const std::vector<GridRatioRow>& rows) {
    std::string s = "alpha,tau,h,E_l\n";
    for (const auto& r : rows)
        s += fmt_param(r.alpha) + "," + fmt_param(r.tau) + "," + fmt_param(r.h) + "," +
             fmt_sci(r.E_l) + "\n";
    return s;
}

std::string two_mesh_csv(int example_id, const std::vector<TwoMeshReport>& rows) {
    std::string s = "example,alpha,N,M,e_L,rate\n";
    for (const auto& r : rows)
        s += std::to_string(example_id) + "," + fmt_param(r.alpha) + "," + std::to_string(r.N) +
             "," + std::to_string(r.M) + "," + fmt_sci(r.e_L) + "," + fmt_cell(r.rate) + "\n";
    return s;
}

std::string stability_csv(const std::vector<StabilityRow>& rows) {
    std::string s = "alpha,N,M,epsilon,amplification\n";
    for (const auto& r : rows)
        s += fmt_param(r.alpha) + "," + std::to_string(r.N) + "," + std::to_string(r.M) + "," +
             fmt_param(r.epsilon) + "," + fmt_sci(r.amplification) + "\n";
    return s;
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::string s = "alpha,gamma,N,error,slope\n";
    for (const auto& r : rows)
        s += fmt_param(r.alpha) + "," + fmt_param(r.gamma) + "," + std::to_string(r.N) + "," +
             fmt_sci(r.error) + "," + fmt_cell(r.slope) + "\n";
    return s;
}

std::string solve_csv(const SolveRow& r) {
    std::string s = "alpha,N,M,example,backend,final_l2,final_linf,E_l,E_g\n";
    s += fmt_param(r.alpha) + "," + std::to_string(r.N) + "," + std::to_string(r.M) + "," +
         std::to_string(r.example) + "," + (r.backend == Backend::dst ? "dst" : "dense") + "," +
         fmt_sci(r.final_l2) + "," + fmt_sci(r.final_linf) + "," + fmt_cell(r.E_l) + "," +
         fmt_cell(r.E_g) + "\n";
    return s;
}

namespace {

std::string num2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* series_color(std::size_t i) {
    static const char* palette[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400"};
    return palette[i % 5];
}

} // namespace

std::string convergence_svg(const std::vector<PlotSeries>& series, bool slope_guide) {
    constexpr double width = 640, height = 480;
    constexpr double ml = 70, mr = 150, mt = 20, mb = 50;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.pts) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (series.empty() || !(x0 <= x1)) throw DomainError("plot needs at least one point");
    if (x1 - x0 < 1.0) x1 = x0 + 1.0;
    if (y1 - y0 < 1.0) y1 = y0 + 1.0;
    x0 -= 0.25;
    x1 += 0.25;
    y0 -= 0.5;
    y1 += 0.5;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return mt + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << num2(ml) << "\" y1=\"" << num2(mt + ph) << "\" x2=\""
        << num2(ml + pw) << "\" y2=\"" << num2(mt + ph)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num2(ml) << "\" y1=\"" << num2(mt) << "\" x2=\"" << num2(ml)
        << "\" y2=\"" << num2(mt + ph) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int xt = int(std::ceil(x0)); xt <= int(std::floor(x1)); ++xt) {
        svg << "<line x1=\"" << num2(px(xt)) << "\" y1=\"" << num2(mt + ph) << "\" x2=\""
            << num2(px(xt)) << "\" y2=\"" << num2(mt + ph + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num2(px(xt)) << "\" y=\"" << num2(mt + ph + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << xt << "</text>\n";
    }
    for (int yt = int(std::ceil(y0)); yt <= int(std::floor(y1)); ++yt) {
        svg << "<line x1=\"" << num2(ml - 5) << "\" y1=\"" << num2(py(yt)) << "\" x2=\""
            << num2(ml) << "\" y2=\"" << num2(py(yt)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << num2(ml - 10) << "\" y=\"" << num2(py(yt) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << yt << "</text>\n";
    }
    svg << "<text x=\"" << num2(ml + pw / 2) << "\" y=\"" << num2(height - 10)
        << "\" font-size=\"13\" text-anchor=\"middle\">log2 N</text>\n";
    svg << "<text x=\"15\" y=\"" << num2(mt + ph / 2)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
        << num2(mt + ph / 2) << ")\">log2 error</text>\n";

    if (slope_guide && !series.front().pts.empty()) {
        const auto [gx, gy] = series.front().pts.front();
        const double off = 0.7;
        auto guide_y = [&](double x) { return gy + off - (x - gx); };
        svg << "<line x1=\"" << num2(px(x0)) << "\" y1=\"" << num2(py(guide_y(x0))) << "\" x2=\""
            << num2(px(x1)) << "\" y2=\"" << num2(py(guide_y(x1)))
            << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";
        svg << "<text x=\"" << num2(px(x1) - 4) << "\" y=\"" << num2(py(guide_y(x1)) - 6)
            << "\" font-size=\"12\" text-anchor=\"end\" fill=\"#888888\">slope -1</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.pts.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << series_color(i)
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < s.pts.size(); ++p) {
            if (p) svg << ' ';
            svg << num2(px(s.pts[p].first)) << ',' << num2(py(s.pts[p].second));
        }
        svg << "\"/>\n";
        for (const auto& [x, y] : s.pts)
            svg << "<circle cx=\"" << num2(px(x)) << "\" cy=\"" << num2(py(y))
                << "\" r=\"2.5\" fill=\"" << series_color(i) << "\"/>\n";
        const auto& last = s.pts.back();
        svg << "<text x=\"" << num2(px(last.first) + 8) << "\" y=\"" << num2(py(last.second) + 4)
            << "\" font-size=\"12\" fill=\"" << series_color(i) << "\">" << s.label
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tfse
