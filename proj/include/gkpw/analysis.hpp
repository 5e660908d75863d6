// analysis.hpp
// Bloch-sphere sweeps of the cell negativity, degenerate extremum detection,
// the stabilizer/magic reference table and the finite-squeezing convergence
// study.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkpw/bloch.hpp"
#include "gkpw/constants.hpp"
#include "gkpw/lattice.hpp"
#include "gkpw/parallel.hpp"
#include "gkpw/squeezed.hpp"

namespace gkpw {

enum class SweepMeasure { kSqrtPiAbsCell, kWlnCell };

// theta_i = i pi / (n_theta - 1), i = 0..n_theta-1 (both poles included);
// phi_j = 2 pi j / n_phi (periodic, 2 pi excluded).
struct SweepSpec {
  std::size_t n_theta = 91;
  std::size_t n_phi = 180;
  SweepMeasure measure = SweepMeasure::kSqrtPiAbsCell;

  void validate() const {
    if (n_theta < 2) throw std::invalid_argument("sweep needs n_theta >= 2");
    if (n_phi < 4) throw std::invalid_argument("sweep needs n_phi >= 4");
  }
  double theta(std::size_t i) const { return i + 1 == n_theta ? kPi : kPi * double(i) / double(n_theta - 1); }
  double phi(std::size_t j) const { return kTwoPi * double(j) / double(n_phi); }
  double theta_step() const { return kPi / double(n_theta - 1); }
  double phi_step() const { return kTwoPi / double(n_phi); }
};

inline double sweep_measure(SweepMeasure measure, const BlochAngles& s) {
  return measure == SweepMeasure::kWlnCell ? wln_cell(s) : kSqrtPi * cell_abs_integral(s);
}

struct SweepSurface {
  SweepSpec spec;
  std::vector<double> values;  // values[i * n_phi + j]

  double at(std::size_t i, std::size_t j) const { return values[i * spec.n_phi + j]; }
  double min() const { return *std::min_element(values.begin(), values.end()); }
  double max() const { return *std::max_element(values.begin(), values.end()); }
};

inline SweepSurface sweep(const SweepSpec& spec) {
  spec.validate();
  SweepSurface surf{spec, std::vector<double>(spec.n_theta * spec.n_phi)};
  parallel_for(spec.n_theta, [&](std::size_t i) {
    for (std::size_t j = 0; j < spec.n_phi; ++j) {
      surf.values[i * spec.n_phi + j] =
          sweep_measure(spec.measure, BlochAngles{spec.theta(i), spec.phi(j)});
    }
  });
  return surf;
}

struct SweepPoint {
  double theta;
  double phi;
  double value;
};

// A connected set of grid points sharing the extremal value.
struct ExtremumCluster {
  SweepPoint representative;
  std::vector<SweepPoint> members;
};

struct ExtremaReport {
  double global_min = 0.0;
  double global_max = 0.0;
  double equatorial_max = 0.0;
  std::vector<ExtremumCluster> minima;
  std::vector<ExtremumCluster> maxima;
  std::vector<ExtremumCluster> equatorial_maxima;  // empty without a theta = pi/2 row
};

namespace detail {

// Flood fill over grid points whose value is within tol of target.
// Neighbors: theta +-1, phi +-1 (periodic). A pole row is a single physical
// point, so all its members are mutually connected through the phi wrap.
inline std::vector<ExtremumCluster> cluster_level_set(const SweepSurface& surf, double target,
                                                      double tol, std::size_t row_lo,
                                                      std::size_t row_hi) {
  const auto& sp = surf.spec;
  const std::size_t nt = sp.n_theta, nf = sp.n_phi;
  std::vector<char> seen(nt * nf, 0);
  auto hit = [&](std::size_t i, std::size_t j) { return std::abs(surf.at(i, j) - target) <= tol; };
  std::vector<ExtremumCluster> clusters;
  for (std::size_t i0 = row_lo; i0 <= row_hi; ++i0) {
    for (std::size_t j0 = 0; j0 < nf; ++j0) {
      if (seen[i0 * nf + j0] || !hit(i0, j0)) continue;
      ExtremumCluster cl;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{i0, j0}};
      seen[i0 * nf + j0] = 1;
      while (!stack.empty()) {
        const auto [i, j] = stack.back();
        stack.pop_back();
        cl.members.push_back({sp.theta(i), sp.phi(j), surf.at(i, j)});
        std::pair<std::size_t, std::size_t> nbrs[4] = {
            {i, (j + 1) % nf}, {i, (j + nf - 1) % nf}, {i + 1, j}, {i - 1, j}};
        for (const auto& [a, b] : nbrs) {
          if (a < row_lo || a > row_hi || a >= nt) continue;  // i - 1 wraps to SIZE_MAX
          if (seen[a * nf + b] || !hit(a, b)) continue;
          seen[a * nf + b] = 1;
          stack.push_back({a, b});
        }
      }
      std::sort(cl.members.begin(), cl.members.end(), [](const SweepPoint& x, const SweepPoint& y) {
        return x.theta != y.theta ? x.theta < y.theta : x.phi < y.phi;
      });
      cl.representative = cl.members.front();
      clusters.push_back(std::move(cl));
    }
  }
  return clusters;
}

inline std::size_t equator_row(const SweepSpec& sp) {
  if ((sp.n_theta - 1) % 2 != 0) return sp.n_theta;  // no row at theta = pi/2
  return (sp.n_theta - 1) / 2;
}

}  // namespace detail

inline ExtremaReport find_extrema(const SweepSurface& surf, double tol = kExtremumTolerance) {
  ExtremaReport rep;
  rep.global_min = surf.min();
  rep.global_max = surf.max();
  const std::size_t last = surf.spec.n_theta - 1;
  rep.minima = detail::cluster_level_set(surf, rep.global_min, tol, 0, last);
  rep.maxima = detail::cluster_level_set(surf, rep.global_max, tol, 0, last);
  const std::size_t eq = detail::equator_row(surf.spec);
  if (eq < surf.spec.n_theta) {
    double m = surf.at(eq, 0);
    for (std::size_t j = 0; j < surf.spec.n_phi; ++j) m = std::max(m, surf.at(eq, j));
    rep.equatorial_max = m;
    rep.equatorial_maxima = detail::cluster_level_set(surf, m, tol, eq, eq);
  }
  return rep;
}

struct Table1Row {
  StateLabel label;
  std::string display;   // ket notation
  std::string symbolic;  // exact value of sqrt(pi) int |W_cell|
  double theta;
  double phi;
  double sqrtpi_abs_integral;
};

inline std::vector<Table1Row> table1_report() {
  struct Entry {
    StateLabel label;
    const char* display;
    const char* symbolic;
  };
  static constexpr Entry kRows[] = {
      {StateLabel::kZero, "|0>", "2"},          {StateLabel::kPlus, "|+>", "2"},
      {StateLabel::kPlusI, "|i>", "2"},         {StateLabel::kHMagic, "|H>", "1+sqrt(2)"},
      {StateLabel::kTMagic, "|T>", "1+sqrt(3)"},
  };
  std::vector<Table1Row> rows;
  for (const auto& e : kRows) {
    const auto s = named_state(e.label).angles;
    rows.push_back({e.label, e.display, e.symbolic, s.theta(), s.phi(), kSqrtPi * cell_abs_integral(s)});
  }
  return rows;
}

struct ConvergenceRow {
  double sigma;
  double ratio;
  double error;  // |ratio - ideal|
};

// Ideal limit of negativity_ratio_cell: the cell absolute integral over the
// (state-independent) signed one.
inline double ideal_negativity_ratio(const BlochAngles& s) {
  return cell_abs_integral(s) / cell_signed_integral(s);
}

// negativity_ratio_cell at kappa = sigma for each sigma (strictly decreasing).
inline std::vector<ConvergenceRow> convergence_study(const BlochAngles& s, const std::vector<double>& sigmas) {
  if (sigmas.empty()) throw std::invalid_argument("convergence_study: no sigmas");
  for (std::size_t i = 1; i < sigmas.size(); ++i) {
    if (!(sigmas[i] < sigmas[i - 1])) {
      throw std::invalid_argument("convergence_study: sigmas must be strictly decreasing");
    }
  }
  const double ideal = ideal_negativity_ratio(s);
  std::vector<ConvergenceRow> rows;
  for (double sigma : sigmas) {
    const SqueezedGkpState state{SqueezedGkpParams{sigma, sigma}, s};
    const double r = negativity_ratio_cell(state);
    rows.push_back({sigma, r, std::abs(r - ideal)});
  }
  return rows;
}

}  // namespace gkpw
