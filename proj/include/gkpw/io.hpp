// io.hpp
// CSV / JSON / binary PGM rendering for lattice fields, Wigner grids and
// sweep surfaces. All renderers are pure functions of their input, so the
// same data always produces the same bytes.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkpw/analysis.hpp"
#include "gkpw/lattice.hpp"
#include "gkpw/squeezed.hpp"

namespace gkpw::io {

using json = nlohmann::ordered_json;

// 17 significant digits: round-trips every double.
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::invalid_argument("failed writing '" + path + "'");
}

// ---- CSV ----

inline std::string coefficients_csv(const LatticeCoefficients& c) {
  std::string out = "l,m,w\n";
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      out += std::to_string(l) + "," + std::to_string(m) + "," + fmt(c.values()[l][m]) + "\n";
  return out;
}

inline std::string report_csv(const CellNegativityReport& r) {
  return "theta,phi,signed_integral,abs_integral,wln,sqrtpi_abs_integral\n" + fmt(r.angles.theta()) + "," +
         fmt(r.angles.phi()) + "," + fmt(r.signed_integral) + "," + fmt(r.abs_integral) + "," + fmt(r.wln) +
         "," + fmt(r.sqrtpi_abs_integral) + "\n";
}

inline std::string grid_csv(const WignerGrid& g) {
  std::string out = "q,p,W\n";
  out.reserve(g.values.size() * 64);
  for (std::size_t i = 0; i < g.q_count; ++i)
    for (std::size_t j = 0; j < g.p_count; ++j)
      out += fmt(g.q(i)) + "," + fmt(g.p(j)) + "," + fmt(g.at(i, j)) + "\n";
  return out;
}

inline std::string surface_csv(const SweepSurface& s) {
  std::string out = "theta,phi,value\n";
  for (std::size_t i = 0; i < s.spec.n_theta; ++i)
    for (std::size_t j = 0; j < s.spec.n_phi; ++j)
      out += fmt(s.spec.theta(i)) + "," + fmt(s.spec.phi(j)) + "," + fmt(s.at(i, j)) + "\n";
  return out;
}

inline std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "state,theta,phi,sqrtpi_abs_integral,exact\n";
  for (const auto& r : rows)
    out += r.display + "," + fmt(r.theta) + "," + fmt(r.phi) + "," + fmt(r.sqrtpi_abs_integral) + "," +
           r.symbolic + "\n";
  return out;
}

// ---- JSON ----

inline json to_json(const LatticeCoefficients& c) {
  json rows = json::array();
  for (const auto& row : c.values()) rows.push_back(json(row));
  return rows;
}

// Field names are part of the documented output schema.
inline json to_json(const CellNegativityReport& r) {
  return json{{"theta", r.angles.theta()},
              {"phi", r.angles.phi()},
              {"signed_integral", r.signed_integral},
              {"abs_integral", r.abs_integral},
              {"wln", r.wln},
              {"sqrtpi_abs_integral", r.sqrtpi_abs_integral},
              {"sqrtpi_signed_integral", r.sqrtpi_signed_integral},
              {"abs_to_signed_ratio", r.abs_to_signed_ratio},
              {"min_abs_integral", r.min_abs_integral}};
}

inline json to_json(const ExtremumCluster& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back(json{{"theta", m.theta}, {"phi", m.phi}});
  return json{{"theta", c.representative.theta},
              {"phi", c.representative.phi},
              {"value", c.representative.value},
              {"size", c.members.size()},
              {"members", std::move(members)}};
}

inline json clusters_json(const std::vector<ExtremumCluster>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

inline json to_json(const ExtremaReport& r) {
  return json{{"global_min", r.global_min},
              {"global_max", r.global_max},
              {"equatorial_max", r.equatorial_max},
              {"minima", clusters_json(r.minima)},
              {"maxima", clusters_json(r.maxima)},
              {"equatorial_maxima", clusters_json(r.equatorial_maxima)}};
}

inline json to_json(const std::vector<Table1Row>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back(json{{"state", r.display},
                     {"label", std::string(label_name(r.label))},
                     {"theta", r.theta},
                     {"phi", r.phi},
                     {"sqrtpi_abs_integral", r.sqrtpi_abs_integral},
                     {"exact", r.symbolic}});
  return a;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- PGM (P5, maxval 255) ----

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, top row first
};

inline std::string pgm_bytes(const GrayImage& img) {
  if (img.pixels.size() != img.width * img.height) throw std::invalid_argument("pgm: size mismatch");
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  return out;
}

// Linear signed map: W = 0 -> 128 (mid-gray), +max|W| -> 255, -max|W| -> 0,
// byte = round(127.5 * (1 + W / max|W|)). Columns are q ascending; rows are
// p descending (largest p on the top row).
inline GrayImage wigner_heatmap(const WignerGrid& g) {
  GrayImage img{g.q_count, g.p_count, std::vector<std::uint8_t>(g.q_count * g.p_count, 128)};
  const double scale = g.max_abs();
  if (scale == 0.0) return img;
  for (std::size_t r = 0; r < g.p_count; ++r) {
    const std::size_t j = g.p_count - 1 - r;
    for (std::size_t i = 0; i < g.q_count; ++i) {
      const long v = std::lround(127.5 * (1.0 + g.at(i, j) / scale));
      img.pixels[r * g.q_count + i] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }
  }
  return img;
}

// Linear map of the surface range onto [0, 255]: min -> black, max -> white.
// Columns are phi ascending, rows theta ascending (theta = 0 on top).
inline GrayImage surface_heatmap(const SweepSurface& s) {
  const std::size_t w = s.spec.n_phi, h = s.spec.n_theta;
  GrayImage img{w, h, std::vector<std::uint8_t>(w * h, 128)};
  const double lo = s.min(), hi = s.max();
  if (hi <= lo) return img;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) {
      const long v = std::lround(255.0 * (s.at(i, j) - lo) / (hi - lo));
      img.pixels[i * w + j] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }
  return img;
}

}  // namespace gkpw::io
