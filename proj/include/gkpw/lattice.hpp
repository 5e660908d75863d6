// lattice.hpp
// Ideal (infinitely squeezed) GKP qubit states in phase space.
//
// The Wigner function of cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> is a
// comb of delta peaks on the square lattice (q, p) = (l, m) * sqrt(pi)/2.
// The peak weight w_lm only depends on (l mod 4, m mod 4), so a state is
// fully described by the 16 weights of one unit cell. With the Bloch vector
// (x, y, z) = (sin th cos ph, sin th sin ph, cos th) the weights are, in
// units of 1/(4 sqrt(pi)):
//
//   l \ m |  0    1    2    3
//   ------+--------------------
//     0   |  1    z    1    z
//     1   |  x    y   -x   -y
//     2   |  1   -z    1   -z
//     3   |  x   -y   -x    y
//
// Signs of the y entries follow from W(q,p) = 1/(2 pi) int dx e^{ipx}
// psi*(q + x/2) psi(q - x/2), which is also what the squeezed-state
// numerics in squeezed.hpp evaluate.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gkpw/bloch.hpp"
#include "gkpw/constants.hpp"

namespace gkpw {

// Lattice site (q, p) = (l, m) * sqrt(pi)/2.
struct LatticeSite {
  std::int64_t l = 0;
  std::int64_t m = 0;

  double q() const { return static_cast<double>(l) * kLatticeSpacing; }
  double p() const { return static_cast<double>(m) * kLatticeSpacing; }
};

inline int mod4(std::int64_t n) {
  const auto r = static_cast<int>(n % 4);
  return r < 0 ? r + 4 : r;
}

// Bloch-vector component carried by a cell site, with its sign.
// Returns {component index (0=x, 1=y, 2=z, 3=constant), sign}.
struct SiteCategory {
  int component;
  int sign;
};

inline constexpr std::array<std::array<SiteCategory, 4>, 4> kCellCategories = {{
    {{{3, +1}, {2, +1}, {3, +1}, {2, +1}}},
    {{{0, +1}, {1, +1}, {0, -1}, {1, -1}}},
    {{{3, +1}, {2, -1}, {3, +1}, {2, -1}}},
    {{{0, +1}, {1, -1}, {0, -1}, {1, +1}}},
}};

using CellTable = std::array<std::array<double, 4>, 4>;

// Periodic field of delta-peak weights, stored as the 4x4 residue table
// values[l mod 4][m mod 4] with the 1/(4 sqrt(pi)) prefactor included.
class LatticeCoefficients {
 public:
  LatticeCoefficients() = default;
  explicit LatticeCoefficients(const CellTable& values) : values_(values) {}

  static LatticeCoefficients from_state(const BlochAngles& s) {
    const auto v = s.bloch_vector();
    const std::array<double, 4> comp = {v[0], v[1], v[2], 1.0};
    CellTable t{};
    for (int l = 0; l < 4; ++l) {
      for (int m = 0; m < 4; ++m) {
        const auto [c, sign] = kCellCategories[l][m];
        t[l][m] = sign * comp[c] * kPeakWeight;
      }
    }
    return LatticeCoefficients{t};
  }

  double at(std::int64_t l, std::int64_t m) const { return values_[mod4(l)][mod4(m)]; }
  double at(const LatticeSite& site) const { return at(site.l, site.m); }
  const CellTable& values() const { return values_; }

  // The state whose field this is; the cell encodes its Bloch vector directly.
  BlochAngles source() const {
    const double x = values_[1][0] / kPeakWeight;
    const double y = values_[1][1] / kPeakWeight;
    const double z = values_[0][1] / kPeakWeight;
    const double r = std::hypot(x, y);
    return BlochAngles{std::atan2(r, z), r == 0.0 ? 0.0 : std::atan2(y, x)};
  }

  double signed_sum() const {
    double acc = 0.0;
    for (const auto& row : values_)
      for (double w : row) acc += w;
    return acc;
  }

  double abs_sum() const {
    double acc = 0.0;
    for (const auto& row : values_)
      for (double w : row) acc += std::abs(w);
    return acc;
  }

  int count_negative(double tol = kFieldTolerance) const {
    int n = 0;
    for (const auto& row : values_)
      for (double w : row) n += w < -tol;
    return n;
  }

  int count_nonzero(double tol = kFieldTolerance) const {
    int n = 0;
    for (const auto& row : values_)
      for (double w : row) n += std::abs(w) > tol;
    return n;
  }

  double max_abs_diff(const LatticeCoefficients& other) const {
    double d = 0.0;
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m) d = std::max(d, std::abs(values_[l][m] - other.values_[l][m]));
    return d;
  }

  bool approx_equal(const LatticeCoefficients& other, double tol = kFieldTolerance) const {
    return max_abs_diff(other) <= tol;
  }

 private:
  CellTable values_{};
};

// Peak weight w_lm of the ideal state at an arbitrary lattice site.
inline double coeff_at(const LatticeSite& site, const BlochAngles& s) {
  const auto v = s.bloch_vector();
  const std::array<double, 4> comp = {v[0], v[1], v[2], 1.0};
  const auto [c, sign] = kCellCategories[mod4(site.l)][mod4(site.m)];
  return sign * comp[c] * kPeakWeight;
}

// The 16 weights of the unit cell q, p in [0, 2 sqrt(pi)).
inline LatticeCoefficients cell_coefficients(const BlochAngles& s) {
  return LatticeCoefficients::from_state(s);
}

// Integral of W over the unit cell. The state-dependent entries cancel in
// pairs, leaving 1/sqrt(pi) for every state.
inline double cell_signed_integral(const BlochAngles& s) {
  return cell_coefficients(s).signed_sum();
}

// Integral of |W| over the unit cell,
// (1 + |cos th| + |sin th cos ph| + |sin th sin ph|) / sqrt(pi).
inline double cell_abs_integral(const BlochAngles& s) {
  const auto v = s.bloch_vector();
  return (1.0 + std::abs(v[2]) + std::abs(v[0]) + std::abs(v[1])) / kSqrtPi;
}

// Wigner logarithmic negativity of one unit cell, in bits.
inline double wln_cell(const BlochAngles& s) { return std::log2(cell_abs_integral(s)); }

// Smallest value of cell_abs_integral over all states, reached by the six
// stabilizer states. Note it is twice the (state-independent) signed integral.
inline constexpr double kMinCellAbsIntegral = 2.0 / kSqrtPi;

struct CellNegativityReport {
  BlochAngles angles;
  double signed_integral = 0.0;
  double abs_integral = 0.0;
  double wln = 0.0;
  double sqrtpi_abs_integral = 0.0;
  double sqrtpi_signed_integral = 0.0;
  double abs_to_signed_ratio = 0.0;
  double min_abs_integral = kMinCellAbsIntegral;
};

inline CellNegativityReport cell_report(const BlochAngles& s) {
  CellNegativityReport r;
  r.angles = s;
  r.signed_integral = cell_signed_integral(s);
  r.abs_integral = cell_abs_integral(s);
  r.wln = std::log2(r.abs_integral);
  r.sqrtpi_abs_integral = kSqrtPi * r.abs_integral;
  r.sqrtpi_signed_integral = kSqrtPi * r.signed_integral;
  r.abs_to_signed_ratio = r.abs_integral / r.signed_integral;
  return r;
}

// Linear phase-space maps implementing the Clifford generators on the code:
//   FOURIER  (q, p) -> (p, -q)     realizes H
//   SHEAR    (q, p) -> (q, p - q)  realizes R_{pi/2}
// The transformed Wigner function is W'(q, p) = W(q, p - q) for SHEAR and
// W'(q, p) = W(-p, q) for FOURIER, i.e. on sites
//   SHEAR:   w'[l][m] = w[l][m - l]
//   FOURIER: w'[l][m] = w[-m][l]
// (residues mod 4). This is the direction under which
// cell_coefficients(gate(s)) == map(cell_coefficients(s)).
enum class SymplecticMap { kFourier, kShear };

inline LatticeCoefficients apply_symplectic_lattice(const LatticeCoefficients& field,
                                                    SymplecticMap map) {
  for (int l : {0, 2}) {
    for (int m : {0, 2}) {
      if (std::abs(field.values()[l][m] - kPeakWeight) > kFieldTolerance) {
        throw std::invalid_argument(
            "apply_symplectic_lattice: even-even weights must equal 1/(4 sqrt(pi))");
      }
    }
  }
  CellTable out{};
  for (int l = 0; l < 4; ++l) {
    for (int m = 0; m < 4; ++m) {
      out[l][m] = map == SymplecticMap::kFourier ? field.at(-m, l) : field.at(l, m - l);
    }
  }
  return LatticeCoefficients{out};
}

inline SymplecticMap symplectic_for(CliffordGate gate) {
  return gate == CliffordGate::kHadamard ? SymplecticMap::kFourier : SymplecticMap::kShear;
}

}  // namespace gkpw
