#ifndef RANKCONS_DATASETS_HPP
#define RANKCONS_DATASETS_HPP

// Bundled ranking sets. The same text ships under data/; the copies here let
// the library and the CLI load them without touching the filesystem.

#include <array>
#include <string>
#include <string_view>

#include "rankcons/error.hpp"
#include "rankcons/io.hpp"

namespace rankcons {

enum class Dataset { clustering, clustering_ga, clustering_ce, search_google, search_bing };

namespace dataset_text {

inline constexpr std::string_view kClustering = R"(# Rankings of ten clustering algorithms under seven cluster validation measures.
APN: SM FN ST KM PM HR AG CL DI MO
AD: SM FN KM PM CL ST DI HR AG MO
ADM: FN SM ST KM CL PM DI HR AG MO
FOM: SM CL KM PM FN ST DI HR AG MO
Connectivity: HR AG DI KM MO SM FN CL PM ST
Dunn: HR AG KM PM DI SM CL MO FN ST
Silhouette: HR AG KM SM CL PM ST DI FN MO
)";

inline constexpr std::string_view kClusteringGa = R"(# Rankings of ten clustering algorithms under seven cluster validation measures.
APN: SM FN ST KM PM HR AG CL DI MO
AD: SM FN KM PM CL ST DI HR AG MO
ADM: FN SM ST KM CL PM DI HR AG MO
FOM: SM CL KM PM FN ST DI HR AG MO
Connectivity: HR AG DI KM MO SM FN CL PM ST
Dunn: HR AG KM PM DI SM CL MO FN ST
Silhouette: HR AG KM SM CL PM ST DI FN MO
# Aggregate produced by a genetic algorithm.
GA: SM HR KM FN AG PM CL DI ST MO
)";

inline constexpr std::string_view kClusteringCe = R"(# Rankings of ten clustering algorithms under seven cluster validation measures.
APN: SM FN ST KM PM HR AG CL DI MO
AD: SM FN KM PM CL ST DI HR AG MO
ADM: FN SM ST KM CL PM DI HR AG MO
FOM: SM CL KM PM FN ST DI HR AG MO
Connectivity: HR AG DI KM MO SM FN CL PM ST
Dunn: HR AG KM PM DI SM CL MO FN ST
Silhouette: HR AG KM SM CL PM ST DI FN MO
# Aggregate produced by cross-entropy Monte Carlo.
CE: KM SM PM FN HR AG CL DI ST MO
)";

inline constexpr std::string_view kSearchGoogle = R"(# Top 25 result links from Google, as link ids, for six related queries.
# BF = "bond films"
BF: 0 68 9 59 11 5 3 69 79 70 21 4 36 32 76 40 60 51 80 81 42 29 82 83 73
# BM = "bond movies"
BM: 5 0 9 11 59 76 3 36 21 79 90 70 4 60 93 35 50 40 42 92 86 87 73 98 94
# 0M = "007 movies"
0M: 0 9 11 5 3 59 70 84 85 21 76 4 32 42 51 62 12 80 67 60 55 86 87 73 29
# 0F = "007 films"
0F: 0 9 3 11 5 2 59 4 32 21 60 35 42 61 62 12 51 17 63 64 55 65 66 40 67
# JF = "james bond films"
JF: 5 0 68 9 3 11 59 69 70 71 4 21 60 32 36 61 65 72 73 58 74 75 76 77 78
# JM = "james bond movies"
JM: 0 9 59 5 11 3 88 60 89 69 90 70 32 91 75 92 93 94 61 40 86 87 95 96 97
)";

inline constexpr std::string_view kSearchBing = R"(# Top 25 result links from Bing, as link ids, for six related queries.
# BF = "bond films"
BF: 0 9 1 11 36 8 4 2 22 5 37 15 38 6 28 34 29 19 39 40 35 24 41 32 42
# BM = "bond movies"
BM: 0 1 9 2 11 5 50 8 4 56 57 22 3 40 51 7 41 15 19 37 36 55 42 58 38
# 0M = "007 movies"
0M: 0 7 9 2 10 8 4 6 5 1 11 14 3 40 13 43 19 44 45 46 47 48 49 17 28
# 0F = "007 films"
0F: 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24
# JF = "james bond films"
JF: 9 1 25 4 7 2 0 26 5 11 15 8 27 10 28 29 30 31 6 19 32 22 33 34 35
# JM = "james bond movies"
JM: 0 9 3 1 2 11 50 4 8 7 6 38 40 25 10 51 15 19 52 36 53 14 54 55 28
)";

}  // namespace dataset_text

struct DatasetInfo {
  Dataset id;
  std::string_view name;
  std::string_view file;
  std::string_view text;
};

inline constexpr std::array<DatasetInfo, 5> kDatasets{{
    {Dataset::clustering, "clustering", "clustering.txt", dataset_text::kClustering},
    {Dataset::clustering_ga, "clustering-ga", "clustering_ga.txt", dataset_text::kClusteringGa},
    {Dataset::clustering_ce, "clustering-ce", "clustering_ce.txt", dataset_text::kClusteringCe},
    {Dataset::search_google, "search-google", "search_google.txt", dataset_text::kSearchGoogle},
    {Dataset::search_bing, "search-bing", "search_bing.txt", dataset_text::kSearchBing},
}};

inline const DatasetInfo& dataset_info(Dataset d) {
  for (const auto& info : kDatasets) {
    if (info.id == d) return info;
  }
  throw InvalidArgument("unknown dataset");
}

/// Accepts "clustering-ce", "clustering_ce" and "CLUSTERING_CE".
inline Dataset parse_dataset(std::string_view name) {
  std::string norm;
  for (char c : name) {
    norm += c == '_' ? '-' : static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  }
  for (const auto& info : kDatasets) {
    if (info.name == norm) return info.id;
  }
  throw InvalidArgument("unknown dataset '" + std::string(name) + "'");
}

inline RankingDocument load_dataset(Dataset d) {
  const auto& info = dataset_info(d);
  return parse_text(info.text, std::string(info.name));
}

}  // namespace rankcons

#endif  // RANKCONS_DATASETS_HPP
