#include "gkpw/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using gkpw::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"gkpw"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = gkpw::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::initializer_list<const char*> args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gkpw_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, CoeffsForT) {
  const auto j = run_json({"coeffs", "--state", "T"});
  EXPECT_NEAR(j["sqrtpi_abs_integral"].get<double>(), 1.0 + std::sqrt(3.0), 1e-12);
  EXPECT_EQ(j["negative_sites"], 6);
  EXPECT_EQ(j["nonzero_sites"], 16);
}

TEST(Cli, CoeffsCsvForZero) {
  const auto r = run({"coeffs", "--theta", "0", "--phi", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "l,m,w");
  int rows = 0, negative = 0;
  while (std::getline(in, line)) {
    ++rows;
    negative += std::stod(line.substr(line.rfind(',') + 1)) < 0;
  }
  EXPECT_EQ(rows, 16);
  EXPECT_EQ(negative, 2);
}

TEST(Cli, CellWithSqueezing) {
  const auto j = run_json({"cell", "--state", "H", "--sigma", "0.2"});
  EXPECT_NEAR(j["sqrtpi_abs_integral"].get<double>(), 1.0 + std::sqrt(2.0), 1e-12);
  const auto& sq = j["squeezed"];
  EXPECT_EQ(sq["kappa"].get<double>(), 0.2);
  EXPECT_GT(sq["ratio"].get<double>(), 1.0);
  EXPECT_LT(sq["ratio"].get<double>(), sq["ideal_ratio"].get<double>());
}

TEST(Cli, WignerGridSummary) {
  const auto z = run_json({"wigner-grid", "--state", "ZERO", "--grid", "121x121"});
  EXPECT_NEAR(z["full_plane_integral"].get<double>(), 1.0, 1e-4);
  EXPECT_TRUE(z["within_pure_state_bound"].get<bool>());
  EXPECT_EQ(z["state"]["label"], "ZERO");
  EXPECT_EQ(z["peak_sites_per_cell"], 8);

  const auto h = run_json({"wigner-grid", "--state", "H", "--grid", "121x121"});
  EXPECT_GT(h["peak_sites_per_cell"].get<int>(), 8);
}

TEST(Cli, WignerGridFilesAndPgm) {
  const auto prefix = scratch("wg").string();
  const auto r = run({"wigner-grid", "--state", "T", "--grid", "41x31", "--range", "-3:3", "--out", prefix.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pgm = slurp(prefix + ".pgm");
  EXPECT_EQ(pgm.substr(0, 13), "P5\n41 31\n255\n");
  EXPECT_EQ(pgm.size(), 13u + 41u * 31u);
  const auto csv = slurp(prefix + ".csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 41 * 31);
  EXPECT_EQ(json::parse(slurp(prefix + ".json")), json::parse(r.out));
}

TEST(Cli, Sweep) {
  const auto j = run_json({"sweep"});
  EXPECT_EQ(j["minima"].size(), 6u);
  EXPECT_EQ(j["maxima"].size(), 8u);
  EXPECT_EQ(j["equatorial_maxima"].size(), 4u);

  const auto e = run_json({"sweep", "--grid", "181x360", "--equator"});
  EXPECT_EQ(e["equatorial_maxima"].size(), 4u);
  EXPECT_FALSE(e.contains("minima"));

  EXPECT_EQ(run({"sweep", "--grid", "90x180", "--equator"}).code, 2);
  EXPECT_EQ(run({"sweep", "--measure", "entropy"}).code, 2);
}

TEST(Cli, Table1) {
  const auto r = run({"table1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  const auto j = run_json({"table1", "--format", "json"});
  EXPECT_EQ(j.size(), 5u);
}

TEST(Cli, Gate) {
  const auto f = run_json({"gate", "--state", "ZERO", "--word", "F"});
  EXPECT_EQ(f["final"]["label"], "PLUS");
  EXPECT_EQ(f["stabilizer_label"], "PLUS");
  EXPECT_TRUE(f["square_ok"].get<bool>());

  const auto ffff = run_json({"gate", "--state", "T", "--word", "FFFF"});
  EXPECT_EQ(ffff["final"]["label"], "T_MAGIC");
  EXPECT_FALSE(ffff["stabilizer_pattern"].get<bool>());

  const auto fp = run_json({"gate", "--state", "ZERO", "--word", "FP"});
  EXPECT_EQ(fp["final"]["label"], "PLUS_I");
  EXPECT_EQ(fp["lattice_state"]["label"], "PLUS_I");
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"coeffs"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--state", "Q"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--state", "T", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"gate", "--state", "ZERO", "--word", "FX"}).code, 2);
  EXPECT_EQ(run({"wigner-grid", "--state", "ZERO", "--sigma", "-1"}).code, 2);
  EXPECT_EQ(run({"wigner-grid", "--state", "ZERO", "--grid", "1x5"}).code, 2);
  EXPECT_EQ(run({"wigner-grid", "--state", "ZERO", "--format", "pgm"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--state", "T", "--format", "pgm", "--out", "x"}).code, 2);
}

TEST(Cli, NumericDomainError) {
  const auto r = run({"cell", "--state", "ZERO", "--sigma", "0.2", "--origin", "200:200"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("undefined"), std::string::npos);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  const auto a = run({"wigner-grid", "--state", "H", "--grid", "61x61"});
  const auto b = run({"wigner-grid", "--state", "H", "--grid", "61x61"});
  EXPECT_EQ(a.out, b.out);
  const auto s1 = run({"sweep", "--format", "csv"});
  const auto s2 = run({"sweep", "--format", "csv"});
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, BinaryMatchesInProcess) {
  const auto path = scratch("coeffs.json").string();
  const std::string cmd = std::string(GKPW_BINARY) + " coeffs --state H > " + path;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(path), run({"coeffs", "--state", "H"}).out);
}
