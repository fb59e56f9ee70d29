#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace {

using namespace rctest;

TEST(ParseGrid, Descending) {
  const auto g = parse_grid("1:0.45:0.05");
  ASSERT_EQ(g.size(), 12u);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g[1], 0.95);
  EXPECT_EQ(g.back(), 0.45);
}

TEST(ParseGrid, AscendingAndDegenerate) {
  EXPECT_EQ(parse_grid("0.5:1:0.25"), (std::vector<double>{0.5, 0.75, 1.0}));
  EXPECT_EQ(parse_grid("1:1:0"), std::vector<double>{1.0});
  EXPECT_EQ(parse_grid("0.7"), std::vector<double>{0.7});
}

TEST(ParseGrid, Malformed) {
  for (const char* bad : {"", "1:0.5", "a:b:c", "1:0.5:-0.1", "1:0.5:0", "1:0.5:0.3",
                          "1:0.5:0.1:0.1", "1::0.1"}) {
    EXPECT_THROW(parse_grid(bad), InvalidArgument) << bad;
  }
}

TEST(Sweep, InvalidGridPointRejected) {
  EXPECT_THROW(run_sweep(example_set(), MeasureParams{}, {1.0, 0.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(run_sweep(example_set(), MeasureParams{}, {1.0}, {1.2}), InvalidArgument);
}

TEST(Sweep, SinglePointEqualsMeasure) {
  const auto set = example_set();
  const auto s = run_sweep(set, MeasureParams{}, parse_grid("1:1:0"), parse_grid("1:1:0"));
  ASSERT_EQ(s.cells.size(), 1u);
  EXPECT_EQ(s.cells[0].profile.exact_series, kappa_series(set, MeasureParams{}).exact_series);
}

TEST(Sweep, CellsMatchPointwiseMeasure) {
  const auto set = example_set();
  const auto axis = parse_grid("1:0.5:0.25");
  const auto s = run_sweep(set, MeasureParams{}, axis, axis);
  for (std::size_t gi = 0; gi < axis.size(); ++gi) {
    for (std::size_t li = 0; li < axis.size(); ++li) {
      MeasureParams p;
      p.gamma = axis[gi];
      p.lambda = axis[li];
      EXPECT_EQ(s.at(gi, li).profile.total, kappa_series(set, p).total);
      EXPECT_EQ(s.at(gi, li).gamma, axis[gi]);
      EXPECT_EQ(s.at(gi, li).lambda, axis[li]);
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const auto set = to_ranking_set(load_dataset(Dataset::search_google));
  const auto axis = reference_axis();
  const auto one = run_sweep(set, MeasureParams{}, axis, axis, 1);
  const auto four = run_sweep(set, MeasureParams{}, axis, axis, 4);
  EXPECT_EQ(write_results(one, OutputFormat::csv, {1, 2, 3}),
            write_results(four, OutputFormat::csv, {1, 2, 3}));
  EXPECT_EQ(write_results(one, OutputFormat::json), write_results(four, OutputFormat::json));
}

TEST(Sweep, ConsensusTableCell) {
  const auto set = to_ranking_set(load_dataset(Dataset::clustering_ce));
  const auto s = run_sweep(set, MeasureParams{}, {1.0}, {1.0, 0.95});
  const auto table = write_results(s, OutputFormat::table);
  EXPECT_EQ(table, "gamma\\lambda\t1\t0.95\n1\t19\t17.589\n");
}

TEST(Sweep, CsvLayout) {
  const auto s = run_sweep(letters({"ab"}), MeasureParams{}, {1.0}, {1.0, 0.5});
  EXPECT_EQ(write_results(s, OutputFormat::csv, {1, 2, 3}),
            "gamma,lambda,kappa,kappa_1,kappa_2,kappa_3\n"
            "1,1,3,2,1,0\n"
            "1,0.5,2.5,2,0.5,0\n");
}

TEST(Experiment, ReportNamesBestVariant) {
  const auto c = compare_with_reference(Dataset::clustering_ce, 1);
  EXPECT_EQ(c.variants.size(), 3u);
  const auto report = comparison_report(c);
  EXPECT_NE(report.find("best variant: "), std::string::npos);
  EXPECT_NE(report.find("variant mad: "), std::string::npos);
  EXPECT_NE(report.find("variant sqrt-mad: "), std::string::npos);
}

}  // namespace
