// squeezed.hpp
// Finitely squeezed GKP qubit states: a comb of Gaussian peaks of width
// sigma at q = n sqrt(pi) (even n for |0>, odd n for |1>), weighted by the
// envelope exp(-2 pi kappa^2 s^2) with s the comb index.
//
// Wigner functions are evaluated in closed form. For two real Gaussian peaks
// g_a(x) = exp(-(x - a)^2 / (2 sigma^2)),
//
//   int dx e^{ipx} g_a(q + x/2) g_b(q - x/2)
//     = 2 sigma sqrt(pi) exp(-(q - (a+b)/2)^2 / sigma^2) exp(-sigma^2 p^2) e^{ip(a-b)},
//
// so with psi = sum_a alpha_a g_a,
//
//   W(q,p) = sigma/sqrt(pi) e^{-sigma^2 p^2} sum_{a,b} conj(alpha_a) alpha_b
//            exp(-(q - (a+b)/2)^2 / sigma^2) e^{ip(a-b)}.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkpw/bloch.hpp"
#include "gkpw/constants.hpp"
#include "gkpw/lattice.hpp"
#include "gkpw/parallel.hpp"

namespace gkpw {

// Raised when a requested quantity is mathematically undefined for the input
// (as opposed to malformed arguments, which raise std::invalid_argument).
class NumericDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Envelope weight below which comb terms are dropped.
inline constexpr double kEnvelopeCutoff = 1e-12;
inline constexpr std::int64_t kMaxCombIndex = 5000;

class SqueezedGkpParams {
 public:
  SqueezedGkpParams(double sigma, double kappa) : sigma_(sigma), kappa_(kappa) {
    if (!(sigma > 0.0) || !(kappa > 0.0) || !std::isfinite(sigma) || !std::isfinite(kappa)) {
      throw std::invalid_argument("sigma and kappa must be positive and finite");
    }
    if (sigma >= kSqrtPi / 2.0) {
      throw std::invalid_argument("sigma must be below sqrt(pi)/2, otherwise the peaks merge");
    }
    // Smallest s_max with exp(-2 pi kappa^2 (s_max + 1)^2) < cutoff.
    const double bound = std::sqrt(-std::log(kEnvelopeCutoff) / (kTwoPi * kappa * kappa));
    if (bound > static_cast<double>(kMaxCombIndex)) {
      throw std::invalid_argument("kappa too small: comb would need more than 5000 terms per side");
    }
    s_max_ = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(bound)) - 1);
    while (std::exp(-kTwoPi * kappa * kappa * double(s_max_ + 1) * double(s_max_ + 1)) >=
           kEnvelopeCutoff)
      ++s_max_;
  }

  double sigma() const { return sigma_; }
  double kappa() const { return kappa_; }
  std::int64_t s_max() const { return s_max_; }

  double envelope(std::int64_t s) const {
    return std::exp(-kTwoPi * kappa_ * kappa_ * double(s) * double(s));
  }

 private:
  double sigma_;
  double kappa_;
  std::int64_t s_max_ = 0;
};

// <g_a|g_b> for unit-height Gaussians of width sigma.
inline double gaussian_overlap(double sigma, double a, double b) {
  const double d = a - b;
  return sigma * kSqrtPi * std::exp(-d * d / (4.0 * sigma * sigma));
}

namespace detail {

// Unnormalized comb overlap sum_{s,t} env_s env_t <g_{x0 + 2 sqrt(pi) s}|g_{x1 + 2 sqrt(pi) t}>.
inline double comb_overlap(const SqueezedGkpParams& prm, int j, int k) {
  const std::int64_t S = prm.s_max();
  double acc = 0.0;
  for (std::int64_t s = -S; s <= S; ++s) {
    const double a = kSqrtPi * double(2 * s + j);
    for (std::int64_t t = -S; t <= S; ++t) {
      const double b = kSqrtPi * double(2 * t + k);
      acc += prm.envelope(s) * prm.envelope(t) * gaussian_overlap(prm.sigma(), a, b);
    }
  }
  return acc;
}

}  // namespace detail

// |<0bar|1bar>| for the normalized logical states.
inline double overlap_01(const SqueezedGkpParams& prm) {
  const double n00 = detail::comb_overlap(prm, 0, 0);
  const double n11 = detail::comb_overlap(prm, 1, 1);
  return std::abs(detail::comb_overlap(prm, 0, 1)) / std::sqrt(n00 * n11);
}

// One Gaussian peak of the superposition wavefunction.
struct CombPeak {
  double x;       // center
  Complex alpha;  // amplitude (includes normalization and qubit amplitude)
};

class SqueezedGkpState {
 public:
  SqueezedGkpState(const SqueezedGkpParams& params, const BlochAngles& angles)
      : params_(params), angles_(angles) {
    const double n00 = detail::comb_overlap(params_, 0, 0);
    const double n11 = detail::comb_overlap(params_, 1, 1);
    norm_[0] = 1.0 / std::sqrt(n00);
    norm_[1] = 1.0 / std::sqrt(n11);
    overlap_ = detail::comb_overlap(params_, 0, 1) * norm_[0] * norm_[1];

    // <psi|psi> = |c0|^2 + |c1|^2 + 2 Re(conj(c0) c1) <0bar|1bar>.
    const auto [c0, c1] = angles_.amplitudes();
    const double norm2 = std::norm(c0) + std::norm(c1) + 2.0 * (std::conj(c0) * c1).real() * overlap_;
    const double scale = 1.0 / std::sqrt(norm2);
    amp_ = {c0 * scale, c1 * scale};

    const std::int64_t S = params_.s_max();
    peaks_.reserve(static_cast<std::size_t>(4 * S + 2));
    for (std::int64_t n = -2 * S; n <= 2 * S + 1; ++n) {
      const int j = static_cast<int>(((n % 2) + 2) % 2);
      const std::int64_t s = (n - j) / 2;
      peaks_.push_back({kSqrtPi * double(n), amp_[j] * (norm_[j] * params_.envelope(s))});
    }
  }

  const SqueezedGkpParams& params() const { return params_; }
  const BlochAngles& angles() const { return angles_; }
  // Normalization constants of |0bar>, |1bar> multiplying the unnormalized combs.
  const std::array<double, 2>& norm_constants() const { return norm_; }
  // Superposition amplitudes after re-normalization with the overlap term.
  const std::array<Complex, 2>& amplitudes() const { return amp_; }
  double logical_overlap() const { return overlap_; }
  // Peaks ordered by center; peaks()[i] sits at (i - 2 s_max) sqrt(pi).
  const std::vector<CombPeak>& peaks() const { return peaks_; }

  // Normalized logical wavefunction psi_j(q), j in {0, 1}.
  double logical_wavefunction(int j, double q) const {
    if (j != 0 && j != 1) throw std::invalid_argument("logical index must be 0 or 1");
    const double sig2 = 2.0 * params_.sigma() * params_.sigma();
    const std::int64_t S = params_.s_max();
    double acc = 0.0;
    for (std::int64_t s = -S; s <= S; ++s) {
      const double d = q - kSqrtPi * double(2 * s + j);
      acc += params_.envelope(s) * std::exp(-d * d / sig2);
    }
    return norm_[j] * acc;
  }

 private:
  SqueezedGkpParams params_;
  BlochAngles angles_;
  std::array<double, 2> norm_{};
  std::array<Complex, 2> amp_{};
  double overlap_ = 0.0;
  std::vector<CombPeak> peaks_;
};

inline Complex wavefunction_eval(const SqueezedGkpState& state, double q) {
  const double sig2 = 2.0 * state.params().sigma() * state.params().sigma();
  Complex acc{};
  for (const auto& pk : state.peaks()) {
    const double d = q - pk.x;
    acc += pk.alpha * std::exp(-d * d / sig2);
  }
  return acc;
}

// Momentum-space wavefunction (1/sqrt(2 pi)) int dx e^{-ipx} psi(x).
inline Complex momentum_wavefunction(const SqueezedGkpState& state, double p) {
  const double sigma = state.params().sigma();
  Complex acc{};
  for (const auto& pk : state.peaks()) acc += pk.alpha * std::polar(1.0, -p * pk.x);
  return sigma * std::exp(-0.5 * sigma * sigma * p * p) * acc;
}

// Full pairwise double sum, before projecting onto the real axis.
inline Complex wigner_point_complex(const SqueezedGkpState& state, double q, double p) {
  const double sigma = state.params().sigma();
  const double inv_s2 = 1.0 / (sigma * sigma);
  const auto& pk = state.peaks();
  Complex acc{};
  for (const auto& a : pk) {
    const Complex ca = std::conj(a.alpha);
    for (const auto& b : pk) {
      const double d = q - 0.5 * (a.x + b.x);
      const double g = d * d * inv_s2;
      if (g > 745.0) continue;  // exp underflows to zero
      acc += ca * b.alpha * std::exp(-g) * std::polar(1.0, p * (a.x - b.x));
    }
  }
  return (sigma / kSqrtPi) * std::exp(-sigma * sigma * p * p) * acc;
}

inline double wigner_point(const SqueezedGkpState& state, double q, double p) {
  return wigner_point_complex(state, q, p).real();
}

// Uniform axis with endpoints included.
struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;

  double step() const { return (max - min) / double(count - 1); }
  double at(std::size_t i) const { return i + 1 == count ? max : min + double(i) * step(); }
};

struct GridSpec {
  GridAxis q;
  GridAxis p;

  void validate() const {
    for (const GridAxis* ax : {&q, &p}) {
      if (ax->count < 2) throw std::invalid_argument("grid needs at least 2 samples per axis");
      if (!std::isfinite(ax->min) || !std::isfinite(ax->max) || !(ax->max > ax->min)) {
        throw std::invalid_argument("grid spacing must be positive");
      }
    }
  }
};

// Samples W(q_i, p_j) on a rectangular grid; values[i * p_count + j].
struct WignerGrid {
  double q_min = 0.0;
  double p_min = 0.0;
  double dq = 0.0;
  double dp = 0.0;
  std::size_t q_count = 0;
  std::size_t p_count = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * p_count + j]; }
  double q(std::size_t i) const { return q_min + double(i) * dq; }
  double p(std::size_t j) const { return p_min + double(j) * dp; }

  // Trapezoidal double integral of W (or |W|), summed row by row.
  double integral(bool absolute = false) const {
    double total = 0.0;
    for (std::size_t i = 0; i < q_count; ++i) {
      const double wi = (i == 0 || i + 1 == q_count) ? 0.5 : 1.0;
      double row = 0.0;
      for (std::size_t j = 0; j < p_count; ++j) {
        const double wj = (j == 0 || j + 1 == p_count) ? 0.5 : 1.0;
        const double v = at(i, j);
        row += wj * (absolute ? std::abs(v) : v);
      }
      total += wi * row;
    }
    return total * dq * dp;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

namespace detail {

// Evaluates W on the tensor grid qs x ps through the factorization
//   W = sigma/sqrt(pi) e^{-sigma^2 p^2} sum_k G_k(q) F_k(p),
// k = n_a + n_b indexing the pair midpoint k sqrt(pi)/2,
//   G_k(q) = exp(-(q - k sqrt(pi)/2)^2 / sigma^2),
//   F_k(p) = sum_{n_a + n_b = k} Re(conj(alpha_a) alpha_b e^{ip(x_a - x_b)}).
inline std::vector<double> evaluate_tensor(const SqueezedGkpState& state,
                                           const std::vector<double>& qs,
                                           const std::vector<double>& ps) {
  const double sigma = state.params().sigma();
  const auto& pk = state.peaks();
  const auto n_peaks = static_cast<std::int64_t>(pk.size());
  const std::int64_t offset = 2 * state.params().s_max();  // peak i sits at n = i - offset
  const std::int64_t k_lo = -2 * offset;
  const std::int64_t n_classes = 2 * n_peaks - 1;
  const std::size_t np = ps.size();

  // F_k(p_j), one row per class.
  std::vector<double> f(static_cast<std::size_t>(n_classes) * np, 0.0);
  parallel_for(static_cast<std::size_t>(n_classes), [&](std::size_t ci) {
    const std::int64_t sum_idx = static_cast<std::int64_t>(ci);  // i_a + i_b
    double* row = &f[ci * np];
    const std::int64_t a_lo = std::max<std::int64_t>(0, sum_idx - (n_peaks - 1));
    const std::int64_t a_hi = std::min<std::int64_t>(n_peaks - 1, sum_idx);
    for (std::int64_t ia = a_lo; ia <= a_hi; ++ia) {
      const std::int64_t ib = sum_idx - ia;
      if (ib < ia) break;
      const Complex c = std::conj(pk[ia].alpha) * pk[ib].alpha;
      const double dx = pk[ia].x - pk[ib].x;
      const double mult = ia == ib ? 1.0 : 2.0;
      for (std::size_t j = 0; j < np; ++j) {
        const double ph = ps[j] * dx;
        row[j] += mult * (c.real() * std::cos(ph) - c.imag() * std::sin(ph));
      }
    }
  });

  std::vector<double> p_env(np);
  for (std::size_t j = 0; j < np; ++j) {
    p_env[j] = (sigma / kSqrtPi) * std::exp(-sigma * sigma * ps[j] * ps[j]);
  }

  // Beyond 27 sigma from the midpoint G_k < 1e-316.
  const double reach = 27.0 * sigma;
  std::vector<double> out(qs.size() * np, 0.0);
  parallel_for(qs.size(), [&](std::size_t i) {
    const double q = qs[i];
    const auto k_min = std::max<std::int64_t>(
        k_lo, static_cast<std::int64_t>(std::ceil((q - reach) / kLatticeSpacing)));
    const auto k_max = std::min<std::int64_t>(
        k_lo + n_classes - 1, static_cast<std::int64_t>(std::floor((q + reach) / kLatticeSpacing)));
    double* row = &out[i * np];
    for (std::int64_t k = k_min; k <= k_max; ++k) {
      const double d = q - double(k) * kLatticeSpacing;
      const double g = std::exp(-d * d / (sigma * sigma));
      if (g == 0.0) continue;
      const double* fk = &f[static_cast<std::size_t>(k - k_lo) * np];
      for (std::size_t j = 0; j < np; ++j) row[j] += g * fk[j];
    }
    for (std::size_t j = 0; j < np; ++j) row[j] *= p_env[j];
  });
  return out;
}

inline std::vector<double> axis_samples(const GridAxis& ax) {
  std::vector<double> v(ax.count);
  for (std::size_t i = 0; i < ax.count; ++i) v[i] = ax.at(i);
  return v;
}

}  // namespace detail

inline WignerGrid wigner_grid(const SqueezedGkpState& state, const GridSpec& spec) {
  spec.validate();
  WignerGrid g;
  g.q_min = spec.q.min;
  g.p_min = spec.p.min;
  g.dq = spec.q.step();
  g.dp = spec.p.step();
  g.q_count = spec.q.count;
  g.p_count = spec.p.count;
  g.values = detail::evaluate_tensor(state, detail::axis_samples(spec.q), detail::axis_samples(spec.p));
  return g;
}

// Window used for figures: two unit cells around the origin plus 3 sigma.
inline GridSpec default_figure_grid(const SqueezedGkpParams& prm, std::size_t samples = 241) {
  const double half = 2.0 * kSqrtPi + 3.0 * prm.sigma();
  return {{-half, half, samples}, {-half, half, samples}};
}

// Square grid wide enough to hold the envelope in both quadratures
// (|q| <= 6/kappa, |p| <= 6/sigma, plus a cell of margin).
inline GridSpec default_full_plane_grid(const SqueezedGkpParams& prm, double samples_per_width = 8.0) {
  const double half_q = 6.0 / prm.kappa() + kCellSide + 6.0 * prm.sigma();
  const double half_p = 6.0 / prm.sigma() + kCellSide + 6.0 * prm.kappa();
  const double h = std::min(prm.sigma(), prm.kappa()) / samples_per_width;
  const auto nq = static_cast<std::size_t>(std::ceil(2.0 * half_q / h)) + 1;
  const auto np = static_cast<std::size_t>(std::ceil(2.0 * half_p / h)) + 1;
  return {{-half_q, half_q, nq}, {-half_p, half_p, np}};
}

// Probability mass of the state lying outside the grid window, estimated
// from the position and momentum marginals: (1 - P_q[inside]) + (1 - P_p[inside]).
inline double envelope_leakage(const SqueezedGkpState& state, const GridSpec& spec) {
  const double h = std::min(state.params().sigma(), state.params().kappa()) / 16.0;
  auto inside = [h](const GridAxis& ax, auto&& density) {
    const auto n = static_cast<std::size_t>(std::ceil((ax.max - ax.min) / h));
    const double step = (ax.max - ax.min) / double(n);
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 0.5 : 1.0;
      acc += w * density(ax.min + double(i) * step);
    }
    return acc * step;
  };
  const double in_q = inside(spec.q, [&](double x) { return std::norm(wavefunction_eval(state, x)); });
  const double in_p = inside(spec.p, [&](double p) { return std::norm(momentum_wavefunction(state, p)); });
  return std::max(0.0, 1.0 - in_q) + std::max(0.0, 1.0 - in_p);
}

inline constexpr double kMaxLeakage = 1e-6;

// log2 of the full-plane integral of |W|.
inline double wln_numeric(const SqueezedGkpState& state, const GridSpec& spec) {
  spec.validate();
  const double leak = envelope_leakage(state, spec);
  if (leak > kMaxLeakage) {
    throw std::invalid_argument("grid too small: envelope leakage " + std::to_string(leak) +
                                " exceeds 1e-6");
  }
  return std::log2(wigner_grid(state, spec).integral(/*absolute=*/true));
}

struct CellOrigin {
  double q = -kSqrtPi / 4.0;
  double p = -kSqrtPi / 4.0;
};

struct CellIntegrals {
  double signed_integral = 0.0;
  double abs_integral = 0.0;
};

inline constexpr double kMinSamplesPerWidth = 20.0;

// Midpoint-rule integrals of W and |W| over [origin, origin + 2 sqrt(pi))^2.
inline CellIntegrals cell_integrals(const SqueezedGkpState& state, CellOrigin origin = {},
                                    double samples_per_width = kMinSamplesPerWidth) {
  if (samples_per_width < kMinSamplesPerWidth) {
    throw std::invalid_argument("cell integration needs at least 20 samples per peak width");
  }
  const double width = std::min(state.params().sigma(), state.params().kappa());
  const auto n = static_cast<std::size_t>(std::ceil(kCellSide * samples_per_width / width));
  const double h = kCellSide / double(n);
  std::vector<double> qs(n), ps(n);
  for (std::size_t i = 0; i < n; ++i) {
    qs[i] = origin.q + (double(i) + 0.5) * h;
    ps[i] = origin.p + (double(i) + 0.5) * h;
  }
  const auto w = detail::evaluate_tensor(state, qs, ps);
  CellIntegrals out;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0, a = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += w[i * n + j];
      a += std::abs(w[i * n + j]);
    }
    out.signed_integral += s;
    out.abs_integral += a;
  }
  out.signed_integral *= h * h;
  out.abs_integral *= h * h;
  return out;
}

// R = int_cell |W| / int_cell W. Tends to the ideal sqrt(pi) int|W_cell|
// (the signed ideal value being 1 in those units) as sigma, kappa -> 0.
inline double negativity_ratio_cell(const SqueezedGkpState& state, CellOrigin origin = {},
                                    double samples_per_width = kMinSamplesPerWidth) {
  const auto ci = cell_integrals(state, origin, samples_per_width);
  if (std::abs(ci.signed_integral) < 1e-9) {
    throw NumericDomainError("negativity ratio undefined: cell integral of W is ~0");
  }
  return ci.abs_integral / ci.signed_integral;
}

// Number of lattice sites (l, m in 0..3) of the unit cell at the origin where
// |W| exceeds threshold_fraction * reference_max.
inline int count_peak_sites(const SqueezedGkpState& state, double reference_max,
                            double threshold_fraction = 1e-3) {
  int n = 0;
  for (int l = 0; l < 4; ++l) {
    for (int m = 0; m < 4; ++m) {
      const double w = wigner_point(state, l * kLatticeSpacing, m * kLatticeSpacing);
      n += std::abs(w) > threshold_fraction * reference_max;
    }
  }
  return n;
}

}  // namespace gkpw
