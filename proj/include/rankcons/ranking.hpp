#ifndef RANKCONS_RANKING_HPP
#define RANKCONS_RANKING_HPP

/**
 * @file ranking.hpp
 * @brief Item interning and the ranking / ranking-set data model.
 *
 * A Ranking is an ordered sequence of tie groups over interned item ids. An
 * untied ranking is one whose groups are all singletons. The position of an
 * item is the 1-based index of the tie group holding it, or 0 when the item
 * is absent from the ranking.
 *
 * A RankingSet is an ordered multiset of rankings sharing one ItemTable. It
 * precomputes the dense N x |items| position table used by every measure.
 * All types are immutable once constructed and safe to share across threads.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankcons/error.hpp"

namespace rankcons {

using ItemId = std::uint32_t;
using Position = std::uint32_t;

/// Token groups as they come out of a parser, before interning.
using TokenGroups = std::vector<std::vector<std::string>>;

/// True for tokens usable as items: non-empty, no whitespace, no braces.
inline bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f' || c == '{' || c == '}';
  });
}

/// Bijection between item tokens and contiguous ids starting at 0.
class ItemTable {
 public:
  ItemId intern(std::string_view token) {
    if (!is_valid_token(token)) {
      throw ValidationError("invalid item token '" + std::string(token) + "'");
    }
    auto it = ids_.find(std::string(token));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<ItemId>(tokens_.size());
    tokens_.emplace_back(token);
    ids_.emplace(tokens_.back(), id);
    return id;
  }

  /// Id of an already interned token; throws InvalidArgument otherwise.
  ItemId id_of(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end()) {
      throw InvalidArgument("unknown item '" + std::string(token) + "'");
    }
    return it->second;
  }

  bool contains(std::string_view token) const {
    return ids_.find(std::string(token)) != ids_.end();
  }

  const std::string& token(ItemId id) const {
    check(id);
    return tokens_[id];
  }

  void check(ItemId id) const {
    if (id >= tokens_.size()) {
      throw InvalidArgument("unknown item id " + std::to_string(id));
    }
  }

  std::size_t size() const noexcept { return tokens_.size(); }

  friend bool operator==(const ItemTable& a, const ItemTable& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, ItemId> ids_;
};

class Ranking {
 public:
  Ranking() = default;

  /// Throws ValidationError on an empty group or a repeated item.
  explicit Ranking(std::vector<std::vector<ItemId>> groups)
      : groups_(std::move(groups)) {
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (groups_[g].empty()) {
        throw ValidationError("empty tie group at position " +
                              std::to_string(g + 1));
      }
      for (ItemId id : groups_[g]) {
        index_.emplace_back(id, static_cast<Position>(g + 1));
      }
    }
    std::sort(index_.begin(), index_.end());
    auto dup = std::adjacent_find(
        index_.begin(), index_.end(),
        [](const auto& a, const auto& b) { return a.first == b.first; });
    if (dup != index_.end()) {
      throw ValidationError("duplicate item id " + std::to_string(dup->first));
    }
  }

  const std::vector<std::vector<ItemId>>& groups() const noexcept {
    return groups_;
  }
  std::size_t group_count() const noexcept { return groups_.size(); }
  /// Number of items m = |r|.
  std::size_t size() const noexcept { return index_.size(); }
  bool empty() const noexcept { return index_.empty(); }

  bool is_untied() const noexcept { return groups_.size() == index_.size(); }

  /// Tie-group index of `id` (1-based), 0 when absent.
  Position position(ItemId id) const noexcept {
    auto it = std::lower_bound(
        index_.begin(), index_.end(), id,
        [](const auto& entry, ItemId key) { return entry.first < key; });
    return (it != index_.end() && it->first == id) ? it->second : 0;
  }

  bool contains(ItemId id) const noexcept { return position(id) != 0; }

  /// Items in listed order, tie groups flattened.
  std::vector<ItemId> items() const {
    std::vector<ItemId> out;
    out.reserve(size());
    for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  Ranking reversed() const {
    return Ranking(std::vector<std::vector<ItemId>>(groups_.rbegin(),
                                                    groups_.rend()));
  }

  /// Structural equality: same groups in the same order. Member order inside
  /// a tie group is not significant.
  friend bool operator==(const Ranking& a, const Ranking& b) {
    if (a.groups_.size() != b.groups_.size() || a.size() != b.size()) {
      return false;
    }
    return a.index_ == b.index_;
  }

 private:
  std::vector<std::vector<ItemId>> groups_;
  std::vector<std::pair<ItemId, Position>> index_;  // sorted by id
};

/// Interns `groups` into `table` and builds a validated Ranking. Error
/// messages name the offending token.
inline Ranking validate_ranking(const TokenGroups& groups, ItemTable& table) {
  std::vector<std::vector<ItemId>> ids;
  ids.reserve(groups.size());
  std::vector<ItemId> seen;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      throw ValidationError("empty tie group at position " +
                            std::to_string(g + 1));
    }
    auto& out = ids.emplace_back();
    for (const auto& token : groups[g]) {
      const ItemId id = table.intern(token);
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
        throw ValidationError("duplicate item " + token);
      }
      seen.push_back(id);
      out.push_back(id);
    }
  }
  return Ranking(std::move(ids));
}

/// Position of `item` in `ranking` (see Ranking::position); throws
/// InvalidArgument when the id is not in `table`.
inline Position position_of(const ItemTable& table, const Ranking& ranking,
                            ItemId item) {
  table.check(item);
  return ranking.position(item);
}

/// Ordered multiset of rankings over one shared item table.
class RankingSet {
 public:
  RankingSet(ItemTable table, std::vector<Ranking> rankings)
      : table_(std::move(table)), rankings_(std::move(rankings)) {
    if (rankings_.empty()) throw InvalidArgument("empty ranking set");
    const std::size_t u = table_.size();
    positions_.assign(rankings_.size() * u, 0);
    for (std::size_t k = 0; k < rankings_.size(); ++k) {
      const auto& groups = rankings_[k].groups();
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (ItemId id : groups[g]) {
          table_.check(id);
          positions_[k * u + id] = static_cast<Position>(g + 1);
        }
      }
    }
  }

  /// Interns every ranking into a fresh table, in order.
  static RankingSet from_groups(std::span<const TokenGroups> rankings) {
    ItemTable table;
    std::vector<Ranking> out;
    out.reserve(rankings.size());
    for (const auto& r : rankings) out.push_back(validate_ranking(r, table));
    return RankingSet(std::move(table), std::move(out));
  }

  const ItemTable& items() const noexcept { return table_; }
  const std::vector<Ranking>& rankings() const noexcept { return rankings_; }
  const Ranking& operator[](std::size_t k) const { return rankings_.at(k); }
  /// N, duplicates included.
  std::size_t size() const noexcept { return rankings_.size(); }
  std::size_t universe() const noexcept { return table_.size(); }

  /// eta_k(item): 1-based tie-group index in ranking k, 0 when absent.
  Position position(std::size_t k, ItemId item) const noexcept {
    return positions_[k * table_.size() + item];
  }

  /// True when `item` occurs in every ranking.
  bool is_common(ItemId item) const noexcept {
    for (std::size_t k = 0; k < rankings_.size(); ++k) {
      if (position(k, item) == 0) return false;
    }
    return true;
  }

  /// Index of the ranking with the fewest items, ties broken by input order.
  std::size_t reference_index() const noexcept {
    std::size_t best = 0;
    for (std::size_t k = 1; k < rankings_.size(); ++k) {
      if (rankings_[k].size() < rankings_[best].size()) best = k;
    }
    return best;
  }

  friend bool operator==(const RankingSet& a, const RankingSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const auto& ga = a.rankings_[k].groups();
      const auto& gb = b.rankings_[k].groups();
      if (ga.size() != gb.size()) return false;
      for (std::size_t g = 0; g < ga.size(); ++g) {
        if (ga[g].size() != gb[g].size()) return false;
        for (std::size_t i = 0; i < ga[g].size(); ++i) {
          if (a.table_.token(ga[g][i]) != b.table_.token(gb[g][i])) {
            return false;
          }
        }
      }
    }
    return true;
  }

 private:
  ItemTable table_;
  std::vector<Ranking> rankings_;
  std::vector<Position> positions_;  // row-major N x |items|
};

/// Items present in every ranking, in the order they are listed in the
/// ranking at `reference` (default: RankingSet::reference_index()).
inline std::vector<ItemId> common_items(const RankingSet& set,
                                        std::size_t reference) {
  std::vector<ItemId> out;
  for (ItemId id : set[reference].items()) {
    if (set.is_common(id)) out.push_back(id);
  }
  return out;
}

inline std::vector<ItemId> common_items(const RankingSet& set) {
  return common_items(set, set.reference_index());
}

struct DistinctRankings {
  RankingSet distinct;
  /// s: the largest number of occurrences of any single ranking.
  std::size_t max_multiplicity;
};

/// Keeps the first occurrence of every structurally distinct ranking.
inline DistinctRankings distinct_rankings(const RankingSet& set) {
  std::vector<Ranking> unique;
  std::vector<std::size_t> counts;
  for (const auto& r : set.rankings()) {
    auto it = std::find(unique.begin(), unique.end(), r);
    if (it == unique.end()) {
      unique.push_back(r);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - unique.begin())];
    }
  }
  const std::size_t s = *std::max_element(counts.begin(), counts.end());
  return {RankingSet(set.items(), std::move(unique)), s};
}

}  // namespace rankcons

#endif  // RANKCONS_RANKING_HPP
