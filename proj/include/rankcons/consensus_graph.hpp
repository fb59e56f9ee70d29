#ifndef RANKCONS_CONSENSUS_GRAPH_HPP
#define RANKCONS_CONSENSUS_GRAPH_HPP

/**
 * @file consensus_graph.hpp
 * @brief Weighted consensus adjacency matrix of a ranking set.
 *
 * Rows and columns are the items of a reference ranking r_x (n = |r_x|), in
 * listed order. With eta_k the position map of ranking k and H the
 * left-continuous Heaviside step:
 *
 *   A_ii = gamma^d(x_i) * prod_k H(eta_k(x_i))
 *   A_ij = lambda^g(x_i, x_j) * prod_k H(eta_k(x_i) - eta_k(x_j))
 *          * H(A_ii) * H(A_jj)                                   (i > j)
 *   A_ij = 0                                                     (i < j)
 *
 * so the diagonal keeps the items common to all rankings and the strict lower
 * part L keeps the ordered pairs (x_j before x_i) that hold in every ranking.
 * Tied items have a position difference of 0 and never get an edge.
 *
 * Rows of non-common items are kept as zero rows. The strict lower part is
 * stored densely (packed) up to kDenseLimit rows and as per-row adjacency
 * lists above; both are traversed in the same order so sums agree bit for bit.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rankcons/error.hpp"
#include "rankcons/params.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

/// Left-continuous Heaviside step: 1 for x > 0, else 0 (H(0) = 0).
template <class T>
constexpr int heaviside(T x) noexcept {
  return x > T{0} ? 1 : 0;
}

struct ItemStats {
  double mu;   // mean position over all rankings
  double dev;  // spread d under the chosen Deviation
};

/// Position statistics indexed by item id; nullopt for items missing from at
/// least one ranking.
struct PositionStats {
  std::vector<std::optional<ItemStats>> by_item;

  const std::optional<ItemStats>& operator[](ItemId id) const {
    return by_item.at(id);
  }
};

inline double deviation_of(std::span<const double> positions, double mu,
                           Deviation variant) {
  const double n = static_cast<double>(positions.size());
  double acc = 0.0;
  if (variant == Deviation::stddev) {
    for (double p : positions) acc += (p - mu) * (p - mu);
    return std::sqrt(acc / n);
  }
  for (double p : positions) acc += std::abs(p - mu);
  const double mad = acc / n;
  return variant == Deviation::sqrt_mad ? std::sqrt(mad) : mad;
}

inline PositionStats position_stats(const RankingSet& set,
                                    const MeasureParams& params) {
  PositionStats out;
  out.by_item.resize(set.universe());
  std::vector<double> pos(set.size());
  for (ItemId id = 0; id < set.universe(); ++id) {
    if (!set.is_common(id)) continue;
    double sum = 0.0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      pos[k] = set.position(k, id);
      sum += pos[k];
    }
    const double mu = sum / static_cast<double>(set.size());
    out.by_item[id] = ItemStats{mu, deviation_of(pos, mu, params.deviation)};
  }
  return out;
}

/// g(i, j) = (1/N) sum_k |eta_k(j) - eta_k(i)|. Both items must be common.
inline double gap_mean(const RankingSet& set, ItemId i, ItemId j) {
  set.items().check(i);
  set.items().check(j);
  if (!set.is_common(i) || !set.is_common(j)) {
    throw InvalidArgument("gap_mean: item '" +
                          set.items().token(set.is_common(i) ? j : i) +
                          "' is not present in every ranking");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto a = static_cast<double>(set.position(k, i));
    const auto b = static_cast<double>(set.position(k, j));
    acc += std::abs(b - a);
  }
  return acc / static_cast<double>(set.size());
}

enum class Storage { automatic, dense, sparse };

struct BuildOptions {
  std::optional<std::size_t> reference;  // default: shortest ranking
  Storage storage = Storage::automatic;
};

class ConsensusMatrix {
 public:
  static constexpr std::size_t kDenseLimit = 512;

  struct Entry {
    std::uint32_t col;
    double weight;
  };

  std::size_t order() const noexcept { return items_.size(); }
  std::size_t reference() const noexcept { return reference_; }
  /// Item id of row i.
  ItemId item(std::size_t i) const { return items_.at(i); }
  const std::vector<ItemId>& row_items() const noexcept { return items_; }
  const std::vector<double>& diagonal() const noexcept { return diag_; }
  double diag(std::size_t i) const { return diag_.at(i); }
  /// |E|: positive strictly-lower entries.
  std::size_t edge_count() const noexcept { return edges_; }
  bool is_dense() const noexcept {
    return std::holds_alternative<Dense>(lower_);
  }

  double trace() const noexcept {
    double t = 0.0;
    for (double d : diag_) t += d;
    return t;
  }

  /// A_ij for any i, j < order().
  double at(std::size_t i, std::size_t j) const {
    if (i >= order() || j >= order()) {
      throw InvalidArgument("matrix index out of range");
    }
    if (i == j) return diag_[i];
    if (i < j) return 0.0;
    if (const auto* d = std::get_if<Dense>(&lower_)) {
      return d->values[packed(i, j)];
    }
    for (const Entry& e : std::get<Sparse>(lower_).rows[i]) {
      if (e.col == j) return e.weight;
    }
    return 0.0;
  }

  /// Calls f(col, weight) for every positive entry of row i of L, in
  /// increasing column order.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    if (const auto* d = std::get_if<Dense>(&lower_)) {
      const std::size_t base = packed(i, 0);
      for (std::size_t j = 0; j < i; ++j) {
        const double w = d->values[base + j];
        if (w > 0.0) f(static_cast<std::uint32_t>(j), w);
      }
    } else {
      for (const Entry& e : std::get<Sparse>(lower_).rows[i]) f(e.col, e.weight);
    }
  }

  /// Nonzero entries as "row,col,value" lines (1-based), diagonal included.
  void write_csv(std::ostream& os) const {
    os << "row,col,value\n";
    char buf[64];
    for (std::size_t i = 0; i < order(); ++i) {
      for_each_in_row(i, [&](std::uint32_t j, double w) {
        std::snprintf(buf, sizeof buf, "%.17g", w);
        os << i + 1 << ',' << j + 1 << ',' << buf << '\n';
      });
      if (diag_[i] > 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", diag_[i]);
        os << i + 1 << ',' << i + 1 << ',' << buf << '\n';
      }
    }
  }

 private:
  struct Dense {
    std::vector<double> values;  // row i holds columns 0..i-1
  };
  struct Sparse {
    std::vector<std::vector<Entry>> rows;
  };

  static std::size_t packed(std::size_t i, std::size_t j) noexcept {
    return i * (i == 0 ? 0 : i - 1) / 2 + j;
  }

  friend ConsensusMatrix build_matrix(const RankingSet&, const MeasureParams&,
                                      const BuildOptions&);

  std::size_t reference_ = 0;
  std::vector<ItemId> items_;
  std::vector<double> diag_;
  std::variant<Dense, Sparse> lower_;
  std::size_t edges_ = 0;
};

inline ConsensusMatrix build_matrix(const RankingSet& set,
                                    const MeasureParams& params,
                                    const BuildOptions& options = {}) {
  params.validate();
  const std::size_t ref = options.reference.value_or(set.reference_index());
  if (ref >= set.size()) throw InvalidArgument("reference index out of range");

  ConsensusMatrix m;
  m.reference_ = ref;
  m.items_ = set[ref].items();
  const std::size_t n = m.items_.size();
  const std::size_t N = set.size();
  const auto stats = position_stats(set, params);

  m.diag_.assign(n, 0.0);
  std::vector<bool> alive(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = stats[m.items_[i]];
    if (!s) continue;
    alive[i] = true;
    m.diag_[i] = params.gamma == 1.0 ? 1.0 : std::pow(params.gamma, s->dev);
  }

  const bool dense =
      options.storage == Storage::dense ||
      (options.storage == Storage::automatic && n <= ConsensusMatrix::kDenseLimit);
  ConsensusMatrix::Dense d;
  ConsensusMatrix::Sparse sp;
  if (dense) {
    d.values.assign(n * (n > 0 ? n - 1 : 0) / 2, 0.0);
  } else {
    sp.rows.resize(n);
  }

  for (std::size_t i = 1; i < n; ++i) {
    if (!alive[i]) continue;
    const ItemId xi = m.items_[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (!alive[j]) continue;
      const ItemId xj = m.items_[j];
      bool ordered = true;
      double gap = 0.0;
      for (std::size_t k = 0; k < N && ordered; ++k) {
        const auto pi = static_cast<long>(set.position(k, xi));
        const auto pj = static_cast<long>(set.position(k, xj));
        ordered = heaviside(pi - pj) == 1;
        gap += static_cast<double>(pi > pj ? pi - pj : pj - pi);
      }
      if (!ordered) continue;
      const double w = params.lambda == 1.0
                           ? 1.0
                           : std::pow(params.lambda, gap / static_cast<double>(N));
      ++m.edges_;
      if (dense) {
        d.values[ConsensusMatrix::packed(i, j)] = w;
      } else {
        sp.rows[i].push_back({static_cast<std::uint32_t>(j), w});
      }
    }
  }
  if (dense) {
    m.lower_ = std::move(d);
  } else {
    m.lower_ = std::move(sp);
  }
  return m;
}

}  // namespace rankcons

#endif  // RANKCONS_CONSENSUS_GRAPH_HPP
