#ifndef RANKCONS_ORACLE_HPP
#define RANKCONS_ORACLE_HPP

// Brute-force enumeration of the common subsequences of a ranking set.
//
// This is the ground truth the matrix path is checked against, so it shares
// nothing with consensus_graph.hpp or measures.hpp: positions, weights and
// orderings are recomputed here from the rankings themselves. Not for
// production use; the search is exponential in the length of the shortest
// ranking and refuses inputs beyond kOracleLimit items.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rankcons/error.hpp"
#include "rankcons/measures.hpp"
#include "rankcons/params.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

inline constexpr std::size_t kOracleLimit = 20;

struct CommonSubsequence {
  std::vector<ItemId> items;
  double weight;
};

namespace oracle_detail {

class Enumerator {
 public:
  Enumerator(const RankingSet& set, const MeasureParams& params)
      : set_(set), params_(params) {
    std::size_t shortest = set.rankings().front().size();
    std::size_t ref = 0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (set.rankings()[k].size() < shortest) {
        shortest = set.rankings()[k].size();
        ref = k;
      }
    }
    if (shortest > kOracleLimit) {
      throw SizeLimitError("shortest ranking has " + std::to_string(shortest) +
                           " items; brute-force enumeration is limited to " +
                           std::to_string(kOracleLimit) +
                           " (use the matrix path instead)");
    }
    for (const auto& group : set.rankings()[ref].groups()) {
      for (ItemId id : group) {
        bool everywhere = true;
        for (const auto& r : set.rankings()) everywhere = everywhere && r.contains(id);
        if (everywhere) candidates_.push_back(id);
      }
    }
  }

  /// Depth-first over candidates; calls visit(prefix, weight) for every common
  /// subsequence, parents before children.
  template <class Visit>
  void run(std::optional<std::size_t> max_len, Visit&& visit) {
    std::vector<ItemId> prefix;
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      prefix.assign(1, candidates_[c]);
      extend(prefix, c, theta(candidates_[c]), 1.0, max_len, visit);
    }
  }

 private:
  template <class Visit>
  void extend(std::vector<ItemId>& prefix, std::size_t last, double single,
              double path, std::optional<std::size_t> max_len, Visit& visit) {
    visit(prefix, prefix.size() == 1 ? single : path);
    if (max_len && prefix.size() >= *max_len) return;
    for (std::size_t c = last + 1; c < candidates_.size(); ++c) {
      if (!precedes_everywhere(prefix.back(), candidates_[c])) continue;
      prefix.push_back(candidates_[c]);
      extend(prefix, c, single, path * psi(prefix[prefix.size() - 2], candidates_[c]),
             max_len, visit);
      prefix.pop_back();
    }
  }

  bool precedes_everywhere(ItemId a, ItemId b) const {
    for (const auto& r : set_.rankings()) {
      if (!(r.position(a) < r.position(b))) return false;
    }
    return true;
  }

  double theta(ItemId id) const {
    if (params_.gamma == 1.0) return 1.0;
    const auto n = static_cast<double>(set_.size());
    double mean = 0.0;
    for (const auto& r : set_.rankings()) mean += r.position(id);
    mean /= n;
    double spread = 0.0;
    switch (params_.deviation) {
      case Deviation::mad:
      case Deviation::sqrt_mad:
        for (const auto& r : set_.rankings()) spread += std::fabs(r.position(id) - mean);
        spread /= n;
        if (params_.deviation == Deviation::sqrt_mad) spread = std::sqrt(spread);
        break;
      case Deviation::stddev:
        for (const auto& r : set_.rankings()) {
          spread += (r.position(id) - mean) * (r.position(id) - mean);
        }
        spread = std::sqrt(spread / n);
        break;
    }
    return std::pow(params_.gamma, spread);
  }

  double psi(ItemId a, ItemId b) const {
    if (params_.lambda == 1.0) return 1.0;
    double total = 0.0;
    for (const auto& r : set_.rankings()) {
      total += std::fabs(static_cast<double>(r.position(b)) -
                         static_cast<double>(r.position(a)));
    }
    return std::pow(params_.lambda, total / static_cast<double>(set_.size()));
  }

  const RankingSet& set_;
  const MeasureParams& params_;
  std::vector<ItemId> candidates_;
};

}  // namespace oracle_detail

/// All common subsequences, ordered by length and then lexicographically by
/// reference-ranking index; truncated at `max_len` when given.
inline std::vector<CommonSubsequence> enumerate_common(
    const RankingSet& set, std::optional<std::size_t> max_len = std::nullopt,
    const MeasureParams& params = {}) {
  params.validate();
  oracle_detail::Enumerator e(set, params);
  std::vector<CommonSubsequence> out;
  e.run(max_len, [&](const std::vector<ItemId>& seq, double w) {
    out.push_back({seq, w});
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.items.size() < b.items.size();
  });
  return out;
}

/// kappa_p as the weighted count of length-p common subsequences.
inline KappaProfile oracle_profile(const RankingSet& set,
                                   const MeasureParams& params) {
  params.validate();
  oracle_detail::Enumerator e(set, params);
  std::vector<double> sums;
  std::vector<std::uint64_t> counts;
  e.run(std::nullopt, [&](const std::vector<ItemId>& seq, double w) {
    if (sums.size() < seq.size()) {
      sums.resize(seq.size(), 0.0);
      counts.resize(seq.size(), 0);
    }
    sums[seq.size() - 1] += w;
    ++counts[seq.size() - 1];
  });
  KappaProfile out;
  out.ell = sums.size();
  out.exact = params.is_exact();
  for (std::size_t p = 0; p < sums.size(); ++p) {
    if (out.exact) {
      out.exact_series.emplace_back(counts[p]);
      out.exact_total += counts[p];
      out.series.push_back(static_cast<double>(counts[p]));
    } else {
      out.series.push_back(sums[p]);
    }
    out.total += out.series.back();
  }
  return out;
}

/// One subsequence per line: item tokens separated by spaces, then weight.
inline void write_subsequences(std::ostream& os, const RankingSet& set,
                               const std::vector<CommonSubsequence>& seqs) {
  char buf[64];
  for (const auto& s : seqs) {
    for (ItemId id : s.items) os << set.items().token(id) << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", s.weight);
    os << buf << '\n';
  }
}

}  // namespace rankcons

#endif  // RANKCONS_ORACLE_HPP
