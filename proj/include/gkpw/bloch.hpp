// bloch.hpp
// Pure qubit states on the Bloch sphere, the named-state catalog and the
// single-qubit Clifford generators acting on Bloch angles.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gkpw/constants.hpp"

namespace gkpw {

using Complex = std::complex<double>;

// Pure qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
//
// theta is clamped to [0, pi] and phi reduced into [0, 2 pi). On the poles
// phi carries no physical information and is set to 0, so two BlochAngles
// describing the same state compare equal.
class BlochAngles {
 public:
  BlochAngles() = default;
  BlochAngles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
      throw std::invalid_argument("BlochAngles: theta and phi must be finite");
    }
    theta_ = std::clamp(theta, 0.0, kPi);
    phi_ = std::fmod(phi, kTwoPi);
    if (phi_ < 0.0) phi_ += kTwoPi;
    if (phi_ >= kTwoPi) phi_ = 0.0;
    if (theta_ == 0.0 || theta_ == kPi) phi_ = 0.0;
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  // Amplitudes (c0, c1) of the logical basis states.
  std::array<Complex, 2> amplitudes() const {
    return {Complex{std::cos(theta_ / 2.0), 0.0},
            std::polar(std::sin(theta_ / 2.0), phi_)};
  }

  // Cartesian Bloch vector.
  std::array<double, 3> bloch_vector() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
  }

  friend bool operator==(const BlochAngles&, const BlochAngles&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

// Angle between the Bloch vectors of two states (0 for identical states).
inline double bloch_distance(const BlochAngles& a, const BlochAngles& b) {
  const auto u = a.bloch_vector();
  const auto v = b.bloch_vector();
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

// Re-extracts canonical Bloch angles from an (unnormalized) state vector,
// discarding the global phase.
inline BlochAngles from_state_vector(Complex c0, Complex c1) {
  const double a = std::abs(c0);
  const double b = std::abs(c1);
  if (a == 0.0 && b == 0.0) {
    throw std::invalid_argument("from_state_vector: zero vector");
  }
  double theta = 2.0 * std::atan2(b, a);
  // Amplitudes of exactly-zero components come out as ~1e-17 after a gate;
  // snap those onto the pole so the phase is canonicalized.
  const double rel = std::min(a, b) / std::max(a, b);
  if (rel < 1e-13) {
    return b < a ? BlochAngles{0.0, 0.0} : BlochAngles{kPi, 0.0};
  }
  const double phi = std::arg(c1) - std::arg(c0);
  return BlochAngles{theta, phi};
}

enum class StateLabel { kZero, kOne, kPlus, kMinus, kPlusI, kMinusI, kHMagic, kTMagic };

inline constexpr std::array<StateLabel, 8> kAllLabels = {
    StateLabel::kZero,  StateLabel::kOne,    StateLabel::kPlus,   StateLabel::kMinus,
    StateLabel::kPlusI, StateLabel::kMinusI, StateLabel::kHMagic, StateLabel::kTMagic};

inline constexpr std::array<StateLabel, 6> kStabilizerLabels = {
    StateLabel::kZero,  StateLabel::kOne,   StateLabel::kPlus,
    StateLabel::kMinus, StateLabel::kPlusI, StateLabel::kMinusI};

struct NamedState {
  StateLabel label;
  BlochAngles angles;
};

inline std::string_view label_name(StateLabel label) {
  switch (label) {
    case StateLabel::kZero: return "ZERO";
    case StateLabel::kOne: return "ONE";
    case StateLabel::kPlus: return "PLUS";
    case StateLabel::kMinus: return "MINUS";
    case StateLabel::kPlusI: return "PLUS_I";
    case StateLabel::kMinusI: return "MINUS_I";
    case StateLabel::kHMagic: return "H_MAGIC";
    case StateLabel::kTMagic: return "T_MAGIC";
  }
  return "?";
}

// arccos(1/sqrt(3)), polar angle of the T-type magic state.
inline double t_magic_theta() { return std::acos(1.0 / std::sqrt(3.0)); }

inline NamedState named_state(StateLabel label) {
  switch (label) {
    case StateLabel::kZero: return {label, {0.0, 0.0}};
    case StateLabel::kOne: return {label, {kPi, 0.0}};
    case StateLabel::kPlus: return {label, {kPi / 2, 0.0}};
    case StateLabel::kMinus: return {label, {kPi / 2, kPi}};
    case StateLabel::kPlusI: return {label, {kPi / 2, kPi / 2}};
    case StateLabel::kMinusI: return {label, {kPi / 2, 3 * kPi / 2}};
    case StateLabel::kHMagic: return {label, {kPi / 2, kPi / 4}};
    case StateLabel::kTMagic: return {label, {t_magic_theta(), kPi / 4}};
  }
  throw std::invalid_argument("named_state: unknown label");
}

// Accepts the canonical names plus the short aliases used on the command line
// (0, 1, +, -, i, -i, H, T).
inline StateLabel parse_label(std::string_view text) {
  struct Alias {
    std::string_view name;
    StateLabel label;
  };
  static constexpr std::array<Alias, 20> kAliases = {{
      {"ZERO", StateLabel::kZero},      {"0", StateLabel::kZero},
      {"ONE", StateLabel::kOne},        {"1", StateLabel::kOne},
      {"PLUS", StateLabel::kPlus},      {"+", StateLabel::kPlus},
      {"MINUS", StateLabel::kMinus},    {"-", StateLabel::kMinus},
      {"PLUS_I", StateLabel::kPlusI},   {"i", StateLabel::kPlusI},
      {"+i", StateLabel::kPlusI},       {"MINUS_I", StateLabel::kMinusI},
      {"-i", StateLabel::kMinusI},      {"H_MAGIC", StateLabel::kHMagic},
      {"H", StateLabel::kHMagic},       {"T_MAGIC", StateLabel::kTMagic},
      {"T", StateLabel::kTMagic},       {"zero", StateLabel::kZero},
      {"one", StateLabel::kOne},        {"plus", StateLabel::kPlus},
  }};
  for (const auto& alias : kAliases) {
    if (alias.name == text) return alias.label;
  }
  throw std::invalid_argument("unknown state label '" + std::string(text) + "'");
}

inline NamedState named_state(std::string_view text) { return named_state(parse_label(text)); }

// Catalog label of a state, if it coincides with one within tol (Bloch-vector angle).
inline std::optional<StateLabel> match_catalog(const BlochAngles& s, double tol = 1e-9) {
  for (StateLabel label : kAllLabels) {
    if (bloch_distance(s, named_state(label).angles) <= tol) return label;
  }
  return std::nullopt;
}

enum class CliffordGate { kHadamard, kPhasePi2 };

// Applies H or R_{pi/2} = diag(1, i) to the state vector and returns the
// canonical angles of the result.
inline BlochAngles apply_gate_bloch(const BlochAngles& s, CliffordGate gate) {
  const auto [c0, c1] = s.amplitudes();
  switch (gate) {
    case CliffordGate::kHadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      return from_state_vector(r * (c0 + c1), r * (c0 - c1));
    }
    case CliffordGate::kPhasePi2:
      return from_state_vector(c0, Complex{0.0, 1.0} * c1);
  }
  throw std::invalid_argument("apply_gate_bloch: unknown gate");
}

}  // namespace gkpw
