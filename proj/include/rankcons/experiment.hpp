#ifndef RANKCONS_EXPERIMENT_HPP
#define RANKCONS_EXPERIMENT_HPP

// Reproduction of the reference kappa grids: sweeps each bundled dataset over
// gamma, lambda = 1, 0.95, ..., 0.45 under every deviation variant and
// compares against the reference values.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rankcons/datasets.hpp"
#include "rankcons/io.hpp"
#include "rankcons/measures.hpp"
#include "rankcons/reference_tables.hpp"
#include "rankcons/results.hpp"
#include "rankcons/sweep.hpp"

namespace rankcons {

inline constexpr std::array<Deviation, 3> kAllDeviations{
    Deviation::mad, Deviation::sqrt_mad, Deviation::stddev};

inline std::vector<double> reference_axis() {
  std::vector<double> axis;
  for (std::size_t i = 0; i < 12; ++i) axis.push_back(sweep_detail::snap(ReferenceGrid::axis(i)));
  return axis;
}

struct GridComparison {
  Deviation deviation;
  SweepResult sweep;
  std::array<std::array<double, 12>, 12> abs_dev{};
  double max_abs_dev = 0.0;
  std::size_t cells_within = 0;  // cells with |kappa - reference| <= tolerance
};

struct DatasetComparison {
  Dataset dataset;
  const ReferenceGrid* reference;
  std::vector<GridComparison> variants;

  const GridComparison& best() const {
    const GridComparison* b = &variants.front();
    for (const auto& v : variants) {
      if (v.max_abs_dev < b->max_abs_dev) b = &v;
    }
    return *b;
  }
};

inline constexpr double kReferenceTolerance = 1e-3;

inline DatasetComparison compare_with_reference(Dataset d, unsigned threads = 0) {
  const auto& info = dataset_info(d);
  DatasetComparison out{d, nullptr, {}};
  for (const auto* g : kReferenceGrids) {
    if (g->dataset == info.name) out.reference = g;
  }
  if (!out.reference) {
    throw InvalidArgument("no reference grid for dataset " + std::string(info.name));
  }
  const auto set = to_ranking_set(load_dataset(d));
  for (Deviation dev : kAllDeviations) {
    MeasureParams params;
    params.deviation = dev;
    GridComparison cmp{dev, run_sweep(set, params, reference_axis(), reference_axis(), threads)};
    for (std::size_t gi = 0; gi < 12; ++gi) {
      for (std::size_t li = 0; li < 12; ++li) {
        const double diff =
            std::abs(cmp.sweep.at(gi, li).profile.total - out.reference->kappa[gi][li]);
        cmp.abs_dev[gi][li] = diff;
        cmp.max_abs_dev = std::max(cmp.max_abs_dev, diff);
        if (diff <= kReferenceTolerance) ++cmp.cells_within;
      }
    }
    out.variants.push_back(std::move(cmp));
  }
  return out;
}

/// Human-readable report: per-variant max deviation, best variant, its grid,
/// and the per-cell deviations of the best variant.
inline std::string comparison_report(const DatasetComparison& c) {
  std::string out = "== " + std::string(dataset_info(c.dataset).name) + " ==\n";
  for (const auto& v : c.variants) {
    out += "variant " + std::string(to_string(v.deviation)) +
           ": max |kappa - reference| = " + format_number(v.max_abs_dev) + ", " +
           std::to_string(v.cells_within) + "/144 cells within 0.001\n";
  }
  const auto& best = c.best();
  out += "best variant: " + std::string(to_string(best.deviation)) + "\n";
  out += write_results(best.sweep, OutputFormat::table);
  out += "per-cell |deviation| (best variant):\n";
  for (std::size_t gi = 0; gi < 12; ++gi) {
    out += format_3dp(best.sweep.gammas[gi]);
    for (std::size_t li = 0; li < 12; ++li) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "\t%.1e", best.abs_dev[gi][li]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rankcons

#endif  // RANKCONS_EXPERIMENT_HPP
