#ifndef RANKCONS_BASELINES_HPP
#define RANKCONS_BASELINES_HPP

// Pairwise rank correlation indices (Kendall tau and distance, Spearman rho
// and footrule) and their aggregation over a ranking set. All four require
// full, untied rankings over the same items with at least two items.
//
// The footrule is normalised by n(n^2 - 1), the same denominator as rho,
// rather than the more common floor(n^2 / 2).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "rankcons/error.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

enum class PairwiseKind { kendall_tau, kendall_distance, spearman_rho, footrule };
enum class Aggregate { sum, mean, min };

inline std::string_view to_string(PairwiseKind k) noexcept {
  switch (k) {
    case PairwiseKind::kendall_tau: return "kendall-tau";
    case PairwiseKind::kendall_distance: return "kendall-distance";
    case PairwiseKind::spearman_rho: return "spearman-rho";
    case PairwiseKind::footrule: return "footrule";
  }
  return "?";
}

inline PairwiseKind parse_pairwise_kind(std::string_view s) {
  if (s == "tau" || s == "kendall-tau") return PairwiseKind::kendall_tau;
  if (s == "kendall-distance" || s == "dtau") return PairwiseKind::kendall_distance;
  if (s == "rho" || s == "spearman-rho") return PairwiseKind::spearman_rho;
  if (s == "footrule" || s == "drho") return PairwiseKind::footrule;
  throw InvalidArgument("unknown index '" + std::string(s) + "'");
}

inline Aggregate parse_aggregate(std::string_view s) {
  if (s == "sum") return Aggregate::sum;
  if (s == "mean") return Aggregate::mean;
  if (s == "min") return Aggregate::min;
  throw InvalidArgument("unknown aggregate '" + std::string(s) + "'");
}

namespace detail {

inline void require_conjoint(const Ranking& a, const Ranking& b) {
  if (!a.is_untied() || !b.is_untied()) {
    throw UnsupportedInput("index requires untied rankings");
  }
  if (a.size() != b.size()) {
    throw UnsupportedInput("index requires rankings over the same items");
  }
  for (const auto& g : a.groups()) {
    if (!b.contains(g.front())) {
      throw UnsupportedInput("index requires rankings over the same items");
    }
  }
  if (a.size() < 2) {
    throw InvalidArgument("index is undefined for rankings of fewer than 2 items");
  }
}

struct PairCounts {
  std::size_t concordant = 0;
  std::size_t discordant = 0;
};

inline PairCounts count_pairs(const Ranking& a, const Ranking& b) {
  const auto items = a.items();
  PairCounts c;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      // a ranks items[i] before items[j]
      if (b.position(items[i]) < b.position(items[j])) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  }
  return c;
}

inline double pairs_of(std::size_t n) {
  return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
}

}  // namespace detail

inline double kendall_tau(const Ranking& a, const Ranking& b) {
  detail::require_conjoint(a, b);
  const auto c = detail::count_pairs(a, b);
  return (static_cast<double>(c.concordant) - static_cast<double>(c.discordant)) /
         detail::pairs_of(a.size());
}

inline double kendall_distance(const Ranking& a, const Ranking& b) {
  detail::require_conjoint(a, b);
  const auto c = detail::count_pairs(a, b);
  return static_cast<double>(c.discordant) / detail::pairs_of(a.size());
}

inline double spearman_rho(const Ranking& a, const Ranking& b) {
  detail::require_conjoint(a, b);
  double sq = 0.0;
  for (const auto& g : a.groups()) {
    const double d = static_cast<double>(a.position(g.front())) -
                     static_cast<double>(b.position(g.front()));
    sq += d * d;
  }
  const auto n = static_cast<double>(a.size());
  return 1.0 - 6.0 * sq / (n * (n * n - 1.0));
}

inline double spearman_footrule(const Ranking& a, const Ranking& b) {
  detail::require_conjoint(a, b);
  double abs_sum = 0.0;
  for (const auto& g : a.groups()) {
    const double d = static_cast<double>(a.position(g.front())) -
                     static_cast<double>(b.position(g.front()));
    abs_sum += d < 0 ? -d : d;
  }
  const auto n = static_cast<double>(a.size());
  return abs_sum / (n * (n * n - 1.0));
}

inline double pairwise(PairwiseKind kind, const Ranking& a, const Ranking& b) {
  switch (kind) {
    case PairwiseKind::kendall_tau: return kendall_tau(a, b);
    case PairwiseKind::kendall_distance: return kendall_distance(a, b);
    case PairwiseKind::spearman_rho: return spearman_rho(a, b);
    case PairwiseKind::footrule: return spearman_footrule(a, b);
  }
  return 0.0;
}

/// Aggregates the index over all ordered pairs (i, j), i != j. Errors from
/// the index are rethrown with the offending pair (0-based) prefixed.
inline double pairwise_aggregate(const RankingSet& set, PairwiseKind kind,
                                 Aggregate mode) {
  if (set.size() < 2) {
    throw InvalidArgument("pairwise aggregation needs at least 2 rankings");
  }
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      double v = 0.0;
      const std::string where =
          "rankings " + std::to_string(i) + " and " + std::to_string(j) + ": ";
      try {
        v = pairwise(kind, set[i], set[j]);
      } catch (const UnsupportedInput& e) {
        throw UnsupportedInput(where + e.what());
      } catch (const InvalidArgument& e) {
        throw InvalidArgument(where + e.what());
      }
      sum += v;
      lo = std::min(lo, v);
    }
  }
  switch (mode) {
    case Aggregate::sum: return sum;
    case Aggregate::mean:
      return sum / (static_cast<double>(set.size()) *
                    static_cast<double>(set.size() - 1));
    case Aggregate::min: return lo;
  }
  return sum;
}

}  // namespace rankcons

#endif  // RANKCONS_BASELINES_HPP
