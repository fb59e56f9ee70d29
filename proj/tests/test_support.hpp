#ifndef RANKCONS_TEST_SUPPORT_HPP
#define RANKCONS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rankcons.hpp"

namespace rctest {

using namespace rankcons;

/// "a{bc}d": every character is an item, braces enclose a tie group.
inline TokenGroups letter_groups(std::string_view s) {
  TokenGroups out;
  bool open = false;
  for (char c : s) {
    if (c == '{') {
      open = true;
      out.emplace_back();
    } else if (c == '}') {
      open = false;
    } else if (open) {
      out.back().push_back(std::string(1, c));
    } else {
      out.push_back({std::string(1, c)});
    }
  }
  return out;
}

inline RankingSet letters(std::initializer_list<std::string_view> rankings) {
  std::vector<TokenGroups> groups;
  for (auto r : rankings) groups.push_back(letter_groups(r));
  return RankingSet::from_groups(groups);
}

inline RankingSet letters(const std::vector<std::string>& rankings) {
  std::vector<TokenGroups> groups;
  for (const auto& r : rankings) groups.push_back(letter_groups(r));
  return RankingSet::from_groups(groups);
}

inline MeasureParams weighted(double gamma, double lambda) {
  MeasureParams p;
  p.gamma = gamma;
  p.lambda = lambda;
  return p;
}

/// The four-ranking worked example with five common items.
inline RankingSet example_set() {
  return letters({"abcdef", "bdcefa", "bcdeghijkf", "badefc"});
}

inline ItemId id(const RankingSet& set, std::string_view token) {
  return set.items().id_of(token);
}

/// Random ranking set: N rankings drawn from a universe of up to `universe`
/// letters, optionally partial (random subsets) and tied (random groupings).
inline RankingSet random_set(std::mt19937_64& rng, std::size_t n_rankings,
                             std::size_t universe, bool partial, bool ties) {
  std::vector<TokenGroups> out;
  for (std::size_t k = 0; k < n_rankings; ++k) {
    std::vector<std::string> items;
    for (std::size_t u = 0; u < universe; ++u) {
      items.push_back(std::string(1, static_cast<char>('a' + u)));
    }
    std::shuffle(items.begin(), items.end(), rng);
    if (partial) {
      std::uniform_int_distribution<std::size_t> keep(1, universe);
      items.resize(keep(rng));
    }
    TokenGroups groups;
    std::bernoulli_distribution join(ties ? 0.3 : 0.0);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0 && join(rng)) {
        groups.back().push_back(items[i]);
      } else {
        groups.push_back({items[i]});
      }
    }
    out.push_back(std::move(groups));
  }
  return RankingSet::from_groups(out);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline std::string data_path(std::string_view name) {
  return std::string(RANKCONS_DATA_DIR) + "/" + std::string(name);
}

}  // namespace rctest

#endif  // RANKCONS_TEST_SUPPORT_HPP
