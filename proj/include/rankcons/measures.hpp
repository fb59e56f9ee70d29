#ifndef RANKCONS_MEASURES_HPP
#define RANKCONS_MEASURES_HPP

/**
 * @file measures.hpp
 * @brief kappa_p series, total kappa, ell and their variants.
 *
 * kappa_1 is the trace of A; for p >= 2, kappa_p = z^T L^{p-1} z with z the
 * all-ones vector, accumulated as y <- L y. The total also has a closed form,
 * kappa = tr(A) + z^T (I - L)^{-1} z - n, evaluated by one forward
 * substitution over the edges of L.
 *
 * When gamma = lambda = 1 every weight is 1 and the counts are computed with
 * arbitrary-precision integers (kappa can reach 2^n - 1).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankcons/consensus_graph.hpp"
#include "rankcons/error.hpp"
#include "rankcons/params.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

using BigCount = boost::multiprecision::cpp_int;

struct KappaProfile {
  std::vector<double> series;  // kappa_1 .. kappa_ell
  std::size_t ell = 0;
  double total = 0.0;

  // Filled only when `exact`.
  bool exact = false;
  std::vector<BigCount> exact_series;
  BigCount exact_total = 0;

  /// kappa_p for any p >= 1 (zero beyond ell).
  double kappa(std::size_t p) const {
    return (p >= 1 && p <= series.size()) ? series[p - 1] : 0.0;
  }
};

namespace detail {

inline KappaProfile exact_series(const ConsensusMatrix& m) {
  KappaProfile out;
  out.exact = true;
  const std::size_t n = m.order();
  BigCount k1 = 0;
  for (double d : m.diagonal()) {
    if (d > 0.0) ++k1;
  }
  if (k1 == 0) return out;
  out.exact_series.push_back(k1);

  std::vector<BigCount> y(n, 1), next(n);
  for (;;) {
    BigCount kp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigCount acc = 0;
      m.for_each_in_row(i, [&](std::uint32_t j, double) { acc += y[j]; });
      kp += acc;
      next[i] = std::move(acc);
    }
    if (kp == 0) break;
    out.exact_series.push_back(kp);
    y.swap(next);
  }
  for (const auto& v : out.exact_series) {
    out.exact_total += v;
    out.series.push_back(v.convert_to<double>());
  }
  out.ell = out.exact_series.size();
  out.total = out.exact_total.convert_to<double>();
  return out;
}

inline KappaProfile weighted_series(const ConsensusMatrix& m, double epsilon) {
  KappaProfile out;
  const std::size_t n = m.order();
  std::vector<double> all{m.trace()};
  std::vector<double> y(n, 1.0), next(n);
  // kappa_2 is always evaluated so that a tiny trace cannot hide the edges.
  for (std::size_t p = 2; p <= n; ++p) {
    double kp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      m.for_each_in_row(i, [&](std::uint32_t j, double w) { acc += w * y[j]; });
      next[i] = acc;
      kp += acc;
    }
    all.push_back(kp);
    if (kp <= epsilon) break;
    y.swap(next);
  }
  std::size_t ell = 0;
  for (std::size_t p = 1; p <= all.size(); ++p) {
    if (all[p - 1] > epsilon) ell = p;
  }
  out.series.assign(all.begin(), all.begin() + static_cast<long>(ell));
  out.ell = ell;
  for (double v : out.series) out.total += v;
  return out;
}

}  // namespace detail

/// Series kappa_1..kappa_ell from the matrix. On the exact path the iteration
/// stops at the first zero; otherwise at the first kappa_p <= epsilon.
inline KappaProfile kappa_series(const ConsensusMatrix& m,
                                 const MeasureParams& params) {
  params.validate();
  if (params.is_exact()) return detail::exact_series(m);
  return detail::weighted_series(m, params.epsilon);
}

inline KappaProfile kappa_series(const RankingSet& set,
                                 const MeasureParams& params) {
  return kappa_series(build_matrix(set, params), params);
}

/// Forward substitution for (I - L) v = z; returns sum(v).
template <class T>
T unit_lower_solve_sum(const ConsensusMatrix& m) {
  const std::size_t n = m.order();
  std::vector<T> v(n);
  T sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    T acc = 1;
    m.for_each_in_row(i, [&](std::uint32_t j, double w) {
      if constexpr (std::is_same_v<T, double>) {
        acc += w * v[j];
      } else {
        acc += v[j];
      }
    });
    sum += acc;
    v[i] = std::move(acc);
  }
  return sum;
}

/// kappa = tr(A) + z^T (I - L)^{-1} z - n in O(n + |E|).
inline double kappa_total_closed(const ConsensusMatrix& m) {
  return m.trace() + unit_lower_solve_sum<double>(m) -
         static_cast<double>(m.order());
}

/// Integer closed form; only meaningful for a matrix built with
/// gamma = lambda = 1.
inline BigCount kappa_total_closed_exact(const ConsensusMatrix& m) {
  BigCount trace = 0;
  for (double d : m.diagonal()) {
    if (d > 0.0) ++trace;
  }
  return trace + unit_lower_solve_sum<BigCount>(m) - BigCount(m.order());
}

/// Length of the longest common subsequence: max{p : kappa_p > 0}.
inline std::size_t longest_common_length(const KappaProfile& profile) noexcept {
  return profile.ell;
}

/// Duplicate-adjusted consensus: kappa(distinct) + |R'| * s / |distinct|.
inline double kappa_dup(const RankingSet& set, const MeasureParams& params) {
  const auto [distinct, s] = distinct_rankings(set);
  const auto profile = kappa_series(distinct, params);
  return profile.total + static_cast<double>(set.size()) *
                             static_cast<double>(s) /
                             static_cast<double>(distinct.size());
}

/// Top-k weighted kappa_1:
///   sum over common items of H(zeta - mu - d) * beta^mu * gamma^d.
inline double kappa1_topk(const RankingSet& set, const MeasureParams& params) {
  if (!params.zeta || !params.beta) {
    throw InvalidArgument("kappa1_topk requires zeta and beta");
  }
  params.validate();
  const auto stats = position_stats(set, params);
  double sum = 0.0;
  for (ItemId id : common_items(set)) {
    const auto& s = *stats[id];
    if (heaviside(*params.zeta - s.mu - s.dev) == 0) continue;
    sum += std::pow(*params.beta, s.mu) * std::pow(params.gamma, s.dev);
  }
  return sum;
}

}  // namespace rankcons

#endif  // RANKCONS_MEASURES_HPP
