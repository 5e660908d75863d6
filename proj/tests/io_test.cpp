#include "gkpw/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace gkpw;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Fmt, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, kPeakWeight, -2.5e-300, 1e300}) EXPECT_EQ(std::strtod(io::fmt(v).c_str(), nullptr), v);
}

TEST(Csv, CoefficientsShape) {
  const auto csv = io::coefficients_csv(cell_coefficients(named_state(StateLabel::kZero).angles));
  EXPECT_EQ(csv.rfind("l,m,w\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 17u);
}

TEST(Csv, SurfaceAndTable) {
  const auto s = sweep(SweepSpec{5, 8});
  EXPECT_EQ(count_lines(io::surface_csv(s)), 41u);
  const auto t = io::table1_csv(table1_report());
  EXPECT_EQ(count_lines(t), 6u);
  EXPECT_NE(t.find("|T>,"), std::string::npos);
}

TEST(Csv, GridRowOrder) {
  WignerGrid g{0.0, 10.0, 1.0, 0.5, 2, 3, {1, 2, 3, 4, 5, 6}};
  EXPECT_EQ(io::grid_csv(g), "q,p,W\n0,10,1\n0,10.5,2\n0,11,3\n1,10,4\n1,10.5,5\n1,11,6\n");
}

TEST(Json, ReportFieldNames) {
  const auto j = io::to_json(cell_report(named_state(StateLabel::kTMagic).angles));
  const char* names[] = {"theta", "phi", "signed_integral", "abs_integral", "wln",
                         "sqrtpi_abs_integral", "sqrtpi_signed_integral", "abs_to_signed_ratio",
                         "min_abs_integral"};
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) EXPECT_EQ(it.key(), names[i]);
  EXPECT_EQ(i, 9u);
  EXPECT_NEAR(j["sqrtpi_abs_integral"].get<double>(), 1.0 + std::sqrt(3.0), 1e-12);
}

TEST(Json, CoefficientsAreFourByFour) {
  const auto j = io::to_json(cell_coefficients(named_state(StateLabel::kHMagic).angles));
  ASSERT_EQ(j.size(), 4u);
  for (const auto& row : j) EXPECT_EQ(row.size(), 4u);
}

TEST(Pgm, HeaderAndSize) {
  const io::GrayImage img{3, 2, {0, 1, 2, 3, 4, 255}};
  const auto b = io::pgm_bytes(img);
  EXPECT_EQ(b.substr(0, 11), "P5\n3 2\n255\n");
  EXPECT_EQ(b.size(), 11u + 6u);
  EXPECT_EQ(static_cast<unsigned char>(b.back()), 255);
  EXPECT_THROW(io::pgm_bytes(io::GrayImage{3, 3, {0}}), std::invalid_argument);
}

TEST(Pgm, WignerMapping) {
  // q_count = 2, p_count = 2: values (q0,p0)=-1, (q0,p1)=0, (q1,p0)=0.5, (q1,p1)=1
  WignerGrid g{0.0, 0.0, 1.0, 1.0, 2, 2, {-1.0, 0.0, 0.5, 1.0}};
  const auto img = io::wigner_heatmap(g);
  ASSERT_EQ(img.pixels.size(), 4u);
  // top row is the largest p
  EXPECT_EQ(img.pixels[0], 128);  // W = 0
  EXPECT_EQ(img.pixels[1], 255);  // W = +max
  EXPECT_EQ(img.pixels[2], 0);    // W = -max
  EXPECT_EQ(img.pixels[3], 191);  // round(127.5 * 1.5)
}

TEST(Pgm, SurfaceMapping) {
  SweepSurface s{SweepSpec{2, 4}, {2.0, 3.0, 4.0, 2.0, 2.0, 2.0, 2.0, 4.0}};
  const auto img = io::surface_heatmap(s);
  EXPECT_EQ(img.width, 4u);
  EXPECT_EQ(img.height, 2u);
  EXPECT_EQ(img.pixels[0], 0);
  EXPECT_EQ(img.pixels[1], 128);
  EXPECT_EQ(img.pixels[2], 255);
  EXPECT_EQ(img.pixels[7], 255);
}
