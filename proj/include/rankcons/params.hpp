#ifndef RANKCONS_PARAMS_HPP
#define RANKCONS_PARAMS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "rankcons/error.hpp"

namespace rankcons {

// How the spread d of an item's positions is measured:
//   mad      mean absolute deviation, (1/N) sum |eta_k - mu|
//   sqrt_mad square root of the mean absolute deviation
//   stddev   population standard deviation, sqrt((1/N) sum (eta_k - mu)^2)
// stddev is the default; it is the variant that reproduces the bundled
// reference kappa grids.
enum class Deviation { mad, sqrt_mad, stddev };

inline std::string_view to_string(Deviation d) noexcept {
  switch (d) {
    case Deviation::mad: return "mad";
    case Deviation::sqrt_mad: return "sqrt-mad";
    case Deviation::stddev: return "stddev";
  }
  return "?";
}

inline Deviation parse_deviation(std::string_view s) {
  if (s == "mad") return Deviation::mad;
  if (s == "sqrt-mad" || s == "sqrt_mad") return Deviation::sqrt_mad;
  if (s == "stddev" || s == "std") return Deviation::stddev;
  throw InvalidArgument("unknown deviation variant '" + std::string(s) +
                        "' (expected mad, sqrt-mad or stddev)");
}

inline constexpr double kDefaultEpsilon = 1e-12;

struct MeasureParams {
  double gamma = 1.0;    // item weight base, theta = gamma^d
  double lambda = 1.0;   // edge weight base, psi = lambda^g
  double epsilon = kDefaultEpsilon;  // weighted series stops once kappa_p <= epsilon
  Deviation deviation = Deviation::stddev;
  std::optional<double> zeta;  // top-k position cut-off
  std::optional<double> beta;  // top-k weight base, 0 < beta < 1

  /// gamma = lambda = 1: every weight is exactly 1 and counts are integers.
  bool is_exact() const noexcept { return gamma == 1.0 && lambda == 1.0; }

  void validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
      throw InvalidArgument("gamma must be in (0,1]");
    }
    if (!(lambda > 0.0 && lambda <= 1.0)) {
      throw InvalidArgument("lambda must be in (0,1]");
    }
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
      throw InvalidArgument("epsilon must be a finite non-negative number");
    }
    if (zeta && !(*zeta > 0.0 && std::isfinite(*zeta))) {
      throw InvalidArgument("zeta must be positive");
    }
    if (beta && !(*beta > 0.0 && *beta < 1.0)) {
      throw InvalidArgument("beta must be in (0,1)");
    }
  }
};

}  // namespace rankcons

#endif  // RANKCONS_PARAMS_HPP
