#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "tfse/cli.hpp"

using namespace tfse;
namespace fs = std::filesystem;

namespace {

RunConfig parse(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"tfse"};
    argv.insert(argv.end(), args.begin(), args.end());
    return parse_config(int(argv.size()), argv.data());
}

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"tfse"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_main(int(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("tfse_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("defaults") {
    const RunConfig c = parse({"solve"});
    CHECK(c.command == "solve");
    REQUIRE(c.alpha.size() == 1);
    CHECK(c.alpha[0] == 0.5);
    REQUIRE(c.nsteps.size() == 1);
    CHECK(c.nsteps[0] == 512);
    CHECK(c.example == 1);
    CHECK(c.backend == Backend::dst);
    CHECK(c.out == "solve.csv");
    CHECK(!c.plot);
    CHECK(!c.mgrid_set);
}

TEST_CASE("comma lists and value flags") {
    const RunConfig c = parse({"table1", "--alpha", "0.3,0.5,0.7", "--nsteps", "512,1024",
                               "--backend", "dst", "--out", "x.csv"});
    CHECK(c.alpha == std::vector<double>{0.3, 0.5, 0.7});
    CHECK(c.nsteps == std::vector<int>{512, 1024});
    CHECK(c.out == "x.csv");
}

TEST_CASE("extended appends the deep ladder row once") {
    const RunConfig a = parse({"table1", "--nsteps", "512,1024", "--extended"});
    CHECK(a.nsteps == std::vector<int>{512, 1024, 8192});
    const RunConfig b = parse({"table1", "--nsteps", "512,8192", "--extended"});
    CHECK(b.nsteps == std::vector<int>{512, 8192});
}

TEST_CASE("config file feeds defaults, flags win") {
    TempDir tmp;
    const fs::path conf = tmp.path / "run.conf";
    {
        std::ofstream out(conf);
        out << "# comment line\n\nalpha = 0.3\nnsteps=64,128\nbackend = dense\n";
    }
    const RunConfig c =
        parse({"table1", "--config", conf.string().c_str(), "--alpha", "0.7"});
    CHECK(c.alpha == std::vector<double>{0.7});          // flag beats file
    CHECK(c.nsteps == std::vector<int>{64, 128});        // file value survives
    CHECK(c.backend == Backend::dense);
}

TEST_CASE("config file problems are reported by name") {
    TempDir tmp;
    const fs::path conf = tmp.path / "bad.conf";
    { std::ofstream(conf) << "granularity=9\n"; }
    CHECK_THROWS_WITH_AS(parse({"solve", "--config", conf.string().c_str()}),
                         doctest::Contains("granularity"), UsageError);
    { std::ofstream(conf) << "no equals sign here\n"; }
    CHECK_THROWS_AS(parse({"solve", "--config", conf.string().c_str()}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--config", (tmp.path / "absent.conf").string().c_str()}),
                    UsageError);
}

TEST_CASE("flag and value validation") {
    CHECK_THROWS_WITH_AS(parse({"frobnicate"}), doctest::Contains("frobnicate"), UsageError);
    CHECK_THROWS_WITH_AS(parse({"solve", "--frobnicate"}), doctest::Contains("--frobnicate"),
                         UsageError);
    CHECK_THROWS_AS(parse({}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--alpha", "1.5"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--alpha", "0"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--alpha", "zebra"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--nsteps", "0"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--nsteps"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--mgrid", "1"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--example", "5"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--backend", "sparse"}), UsageError);
}

TEST_CASE("per-command constraints") {
    CHECK_THROWS_AS(parse({"solve", "--alpha", "0.3,0.5"}), UsageError);
    CHECK_THROWS_AS(parse({"table1", "--mgrid", "10"}), UsageError);
    CHECK_THROWS_AS(parse({"table1", "--example", "2"}), UsageError);
    CHECK_THROWS_AS(parse({"table2", "--nsteps", "64"}), UsageError);
    CHECK_THROWS_AS(parse({"two-mesh"}), UsageError);            // example required
    CHECK_THROWS_AS(parse({"two-mesh", "--example", "1"}), UsageError);
    CHECK_THROWS_AS(parse({"two-mesh", "--example", "2", "--nsteps", "63"}), UsageError);
    CHECK_THROWS_AS(parse({"stability", "--example", "3"}), UsageError);
    CHECK_THROWS_AS(parse({"probe-kernel", "--mgrid", "8"}), UsageError);
    CHECK_THROWS_AS(parse({"probe-kernel", "--example", "2"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--plot"}), UsageError);
    CHECK_THROWS_AS(parse({"two-mesh", "--example", "2", "--nsteps", "64", "--plot"}),
                    UsageError);  // a one-row series cannot show a rate
    CHECK_NOTHROW(parse({"two-mesh", "--example", "2", "--nsteps", "64,128", "--plot"}));
}

TEST_CASE("dense backend is refused when the effective grid is too large") {
    CHECK_NOTHROW(parse({"solve", "--backend", "dense"}));  // N=512 -> M=23
    CHECK_THROWS_AS(parse({"solve", "--backend", "dense", "--mgrid", "25"}), UsageError);
    CHECK_THROWS_AS(parse({"solve", "--backend", "dense", "--nsteps", "1024"}), UsageError);
    CHECK_THROWS_AS(parse({"table2", "--backend", "dense"}), UsageError);
    CHECK_THROWS_AS(parse({"two-mesh", "--example", "2", "--backend", "dense"}), UsageError);
    CHECK_NOTHROW(
        parse({"two-mesh", "--example", "2", "--backend", "dense", "--mgrid", "12"}));
}

TEST_CASE("cell and parameter formatting") {
    CHECK(fmt_sci(2.0332e-05) == "2.0332e-05");
    CHECK(fmt_sci(6.5287e-03) == "6.5287e-03");
    CHECK(fmt_cell(blank).empty());
    CHECK(fmt_param(0.001) == "0.001");
    CHECK(fmt_param(1e-6) == "1e-06");
    CHECK(fmt_param(0.3) == "0.3");
}

TEST_CASE("ladder table serialization round trip") {
    ErrorReport first{0.5, 512, 23, 2.0332e-05, 6.5287e-03};
    ErrorReport second{0.5, 1024, 32, 1.0409e-05, 4.6379e-03};
    second.rate_l = 0.9660;
    second.rate_g = 0.4933;
    const std::string csv = table1_csv({first, second});
    CHECK(csv == "alpha,N,M,E_l,rate_l,E_g,rate_g\n"
                 "0.5,512,23,2.0332e-05,,6.5287e-03,\n"
                 "0.5,1024,32,1.0409e-05,9.6600e-01,4.6379e-03,4.9330e-01\n");
    CHECK(table1_csv({}) == "alpha,N,M,E_l,rate_l,E_g,rate_g\n");

    // every printed value parses back to a double that prints identically
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (int col = 0; std::getline(cells, cell, ','); ++col) {
            if (col < 3 || cell.empty()) continue;
            CHECK(fmt_sci(std::strtod(cell.c_str(), nullptr)) == cell);
        }
    }
}

TEST_CASE("remaining table headers") {
    CHECK(table2_csv({}) == "alpha,tau,h,E_l\n");
    CHECK(two_mesh_csv(2, {}) == "example,alpha,N,M,e_L,rate\n");
    CHECK(stability_csv({}) == "alpha,N,M,epsilon,amplification\n");
    CHECK(probe_csv({}) == "alpha,gamma,N,error,slope\n");
    const std::string one = two_mesh_csv(2, {{0.5, 256, 50, 1.3342e-05, 1.0048}});
    CHECK(one == "example,alpha,N,M,e_L,rate\n2,0.5,256,50,1.3342e-05,1.0048e+00\n");
}

TEST_CASE("atomic file writing") {
    TempDir tmp;
    const fs::path target = tmp.path / "out.csv";
    atomic_write_file(target.string(), "a,b\n1,2\n");
    CHECK(slurp(target) == "a,b\n1,2\n");
    CHECK(!fs::exists(target.string() + ".tmp"));
    atomic_write_file(target.string(), "new\n");  // overwrite is atomic too
    CHECK(slurp(target) == "new\n");
    CHECK_THROWS_AS(atomic_write_file((tmp.path / "no_dir" / "x.csv").string(), "z"), IoError);
}

TEST_CASE("plot bytes are deterministic and structured") {
    const PlotSeries s{"alpha=0.5", {{9.0, -15.6}, {10.0, -16.5}, {11.0, -17.5}}};
    const std::string a = convergence_svg({s}, true);
    const std::string b = convergence_svg({s}, true);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("alpha=0.5") != std::string::npos);
    CHECK(a.find("slope -1") != std::string::npos);
    CHECK(convergence_svg({s}, false).find("slope -1") == std::string::npos);
    CHECK_THROWS_AS(convergence_svg({}, true), DomainError);
}

TEST_CASE("entry point maps failures to exit codes") {
    TempDir tmp;
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"solve", "--alpha", "1.5"}) == 2);
    CHECK(run_cli({"bogus"}) == 2);
    const fs::path out = tmp.path / "probe.csv";
    CHECK(run_cli({"probe-kernel", "--nsteps", "64,128", "--out", out.string().c_str()}) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.substr(0, 26) == "alpha,gamma,N,error,slope\n");
    CHECK(run_cli({"probe-kernel", "--out", (tmp.path / "nowhere" / "p.csv").string().c_str()}) ==
          3);
    // memory-cap refusal surfaces as a numeric failure
    CHECK(run_cli({"solve", "--nsteps", "65536", "--out", out.string().c_str()}) == 4);
}

TEST_CASE("plot files land next to the table") {
    TempDir tmp;
    const fs::path out = tmp.path / "probe.csv";
    CHECK(run_cli({"probe-kernel", "--nsteps", "64,128,256", "--plot", "--out",
                   out.string().c_str()}) == 0);
    const fs::path svg = tmp.path / "probe.svg";
    REQUIRE(fs::exists(svg));
    CHECK(slurp(svg).find("<svg") != std::string::npos);
}
