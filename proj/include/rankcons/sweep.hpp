#ifndef RANKCONS_SWEEP_HPP
#define RANKCONS_SWEEP_HPP

// (gamma, lambda) grid evaluation. Grid points are independent and may run
// on several threads; results are stored by grid index, so the output does
// not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rankcons/consensus_graph.hpp"
#include "rankcons/error.hpp"
#include "rankcons/measures.hpp"
#include "rankcons/params.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

namespace sweep_detail {

inline double parse_double(std::string_view s, std::string_view spec) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw InvalidArgument("malformed grid '" + std::string(spec) +
                          "' (expected start:stop:step)");
  }
  return v;
}

inline double snap(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace sweep_detail

/// Parses "start:stop:step" (either direction; step is a positive magnitude,
/// or 0 when start == stop). A bare number is a single point.
inline std::vector<double> parse_grid(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = spec.find(':', pos);
    parts.push_back(spec.substr(pos, colon == std::string_view::npos
                                         ? std::string_view::npos
                                         : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() == 1) return {sweep_detail::parse_double(parts[0], spec)};
  if (parts.size() != 3) {
    throw InvalidArgument("malformed grid '" + std::string(spec) +
                          "' (expected start:stop:step)");
  }
  const double start = sweep_detail::parse_double(parts[0], spec);
  const double stop = sweep_detail::parse_double(parts[1], spec);
  const double step = sweep_detail::parse_double(parts[2], spec);
  const double span = std::abs(stop - start);
  if (step < 0.0 || (step == 0.0 && span != 0.0)) {
    throw InvalidArgument("malformed grid '" + std::string(spec) +
                          "': step must be positive");
  }
  if (span == 0.0) return {start};
  const double count = span / step;
  const double whole = std::round(count);
  if (std::abs(count - whole) > 1e-9 || whole > 1e6) {
    throw InvalidArgument("malformed grid '" + std::string(spec) +
                          "': step does not divide the range");
  }
  const double dir = stop >= start ? 1.0 : -1.0;
  std::vector<double> out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(whole); ++i) {
    out.push_back(sweep_detail::snap(start + dir * step * static_cast<double>(i)));
  }
  return out;
}

struct SweepCell {
  double gamma = 1.0;
  double lambda = 1.0;
  KappaProfile profile;
  double closed_total = 0.0;  // forward-substitution total, for cross-checks
};

struct SweepResult {
  std::vector<double> gammas;
  std::vector<double> lambdas;
  std::vector<SweepCell> cells;  // row-major: gamma outer, lambda inner

  const SweepCell& at(std::size_t gi, std::size_t li) const {
    return cells.at(gi * lambdas.size() + li);
  }
};

inline SweepResult run_sweep(const RankingSet& set, const MeasureParams& base,
                             std::vector<double> gammas,
                             std::vector<double> lambdas,
                             unsigned threads = 0) {
  SweepResult out;
  out.gammas = std::move(gammas);
  out.lambdas = std::move(lambdas);
  out.cells.resize(out.gammas.size() * out.lambdas.size());
  // Reject bad points before any work.
  for (double g : out.gammas) {
    MeasureParams p = base;
    p.gamma = g;
    p.validate();
  }
  for (double l : out.lambdas) {
    MeasureParams p = base;
    p.lambda = l;
    p.validate();
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < out.cells.size(); idx = next++) {
      MeasureParams p = base;
      p.gamma = out.gammas[idx / out.lambdas.size()];
      p.lambda = out.lambdas[idx % out.lambdas.size()];
      const auto matrix = build_matrix(set, p);
      auto& cell = out.cells[idx];
      cell.gamma = p.gamma;
      cell.lambda = p.lambda;
      cell.profile = kappa_series(matrix, p);
      cell.closed_total = kappa_total_closed(matrix);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, out.cells.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return out;
}

}  // namespace rankcons

#endif  // RANKCONS_SWEEP_HPP
