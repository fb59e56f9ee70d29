// rankcons: command-line front end for the consensus measures.
//
// Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid
// parameters or flags, 4 input unsupported by the chosen index, 5 oracle and
// matrix disagree, 6 input too large for the oracle.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankcons.hpp"

namespace {

using namespace rankcons;

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kParams = 3,
  kUnsupported = 4,
  kMismatch = 5,
  kSizeLimit = 6,
};

struct ExitError {
  int code;
  std::string message;
};

struct InputOptions {
  std::string file;
  std::string dataset;
};

struct ParamOptions {
  double gamma = 1.0;
  double lambda = 1.0;
  double epsilon = kDefaultEpsilon;
  std::string deviation = "stddev";
};

struct OutputOptions {
  std::string format;
  std::string output;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.file, "Ranking file (text or JSON)");
  cmd->add_option("--dataset", in.dataset,
                  "Bundled dataset: clustering, clustering-ga, clustering-ce, "
                  "search-google, search-bing");
}

void add_params(CLI::App* cmd, ParamOptions& p, bool with_point = true) {
  if (with_point) {
    cmd->add_option("--gamma", p.gamma, "Item weight base, in (0,1]");
    cmd->add_option("--lambda", p.lambda, "Edge weight base, in (0,1]");
  }
  cmd->add_option("--epsilon", p.epsilon, "Series termination threshold");
  cmd->add_option("--deviation", p.deviation,
                  "Position spread: stddev (default), mad, sqrt-mad");
}

void add_output(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "json, csv or table");
  cmd->add_option("--output,-o", o.output, "Write to this file instead of stdout");
}

RankingSet load_input(const InputOptions& in) {
  if (in.file.empty() == in.dataset.empty()) {
    throw ExitError{kParams, "exactly one of an input file or --dataset is required"};
  }
  if (!in.dataset.empty()) {
    Dataset d;
    try {
      d = parse_dataset(in.dataset);
    } catch (const InvalidArgument& e) {
      throw ExitError{kParams, e.what()};
    }
    return to_ranking_set(load_dataset(d));
  }
  std::ifstream f(in.file, std::ios::binary);
  if (!f) throw ExitError{kParse, "cannot read " + in.file};
  std::stringstream buf;
  buf << f.rdbuf();
  return to_ranking_set(parse_any(buf.str(), in.file));
}

MeasureParams make_params(const ParamOptions& o) {
  MeasureParams p;
  p.gamma = o.gamma;
  p.lambda = o.lambda;
  p.epsilon = o.epsilon;
  p.deviation = parse_deviation(o.deviation);
  return p;
}

OutputFormat pick_format(const OutputOptions& o) {
  if (!o.format.empty()) return parse_format(o.format);
  return (o.output.empty() && ::isatty(::fileno(stdout))) ? OutputFormat::table
                                                          : OutputFormat::csv;
}

void emit(const OutputOptions& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ExitError{kParse, "cannot write " + o.output};
  f << text;
}

std::vector<std::size_t> parse_per_p(const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size() || v == 0) {
      throw InvalidArgument("--per-p expects a comma-separated list of lengths >= 1");
    }
    out.push_back(v);
  }
  return out;
}

bool close_enough(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-wise consensus measures of rankings"};
  app.require_subcommand(1);

  InputOptions in;
  ParamOptions po;
  OutputOptions out;

  auto* measure = app.add_subcommand("measure", "kappa_1..kappa_ell, ell and kappa");
  add_input(measure, in);
  add_params(measure, po);
  add_output(measure, out);
  bool dedup = false;
  std::optional<double> zeta, beta;
  std::string dump_matrix;
  measure->add_flag("--dedup", dedup, "Also report the duplicate-adjusted kappa");
  measure->add_option("--topk-zeta", zeta, "Top-k position cut-off");
  measure->add_option("--topk-beta", beta, "Top-k weight base, in (0,1)");
  measure->add_option("--dump-matrix", dump_matrix,
                      "Write the consensus matrix as row,col,value CSV");

  auto* sweep = app.add_subcommand("sweep", "Evaluate kappa over a (gamma, lambda) grid");
  add_input(sweep, in);
  add_params(sweep, po, false);
  add_output(sweep, out);
  std::string gamma_grid = "1:0.45:0.05", lambda_grid = "1:0.45:0.05", per_p;
  unsigned threads = 0;
  sweep->add_option("--gamma-grid", gamma_grid, "start:stop:step");
  sweep->add_option("--lambda-grid", lambda_grid, "start:stop:step");
  sweep->add_option("--per-p", per_p, "Extra kappa_p columns, e.g. 1,2,3");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* baseline = app.add_subcommand("baseline", "Pairwise Kendall/Spearman indices");
  add_input(baseline, in);
  add_output(baseline, out);
  std::string index = "tau", mode = "mean";
  baseline->add_option("--index", index, "tau, kendall-distance, rho or footrule");
  baseline->add_option("--mode", mode, "sum, mean or min");

  auto* oracle = app.add_subcommand("oracle-check",
                                    "Compare the matrix path with brute-force enumeration");
  add_input(oracle, in);
  add_params(oracle, po);
  std::string dump_subsequences;
  oracle->add_option("--dump", dump_subsequences,
                     "Write the enumerated common subsequences to this file");

  auto* experiment = app.add_subcommand("experiment", "Reproduce the reference kappa grids");
  std::string experiment_name;
  experiment->add_option("name", experiment_name, "clustering or search")->required();
  experiment->add_option("--threads", threads, "Worker threads (0 = all cores)");
  experiment->add_option("--output,-o", out.output, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParams;
  }

  try {
    if (measure->parsed()) {
      MeasureParams params = make_params(po);
      params.zeta = zeta;
      params.beta = beta;
      params.validate();
      if (zeta.has_value() != beta.has_value()) {
        throw InvalidArgument("--topk-zeta and --topk-beta must be given together");
      }
      const OutputFormat fmt = pick_format(out);
      const auto set = load_input(in);
      const auto matrix = build_matrix(set, params);
      MeasureReport report{params, kappa_series(matrix, params), {}, {}};
      if (dedup) report.kappa_hat = kappa_dup(set, params);
      if (zeta) report.topk_kappa1 = kappa1_topk(set, params);
      if (!dump_matrix.empty()) {
        std::ofstream f(dump_matrix, std::ios::binary);
        if (!f) throw ExitError{kParse, "cannot write " + dump_matrix};
        matrix.write_csv(f);
      }
      emit(out, write_results(report, fmt));
      return kOk;
    }

    if (sweep->parsed()) {
      const MeasureParams params = make_params(po);
      const auto gammas = parse_grid(gamma_grid);
      const auto lambdas = parse_grid(lambda_grid);
      const auto columns = per_p.empty() ? std::vector<std::size_t>{} : parse_per_p(per_p);
      const OutputFormat fmt = pick_format(out);
      const auto set = load_input(in);
      const auto result = run_sweep(set, params, gammas, lambdas, threads);
      emit(out, write_results(result, fmt, columns));
      return kOk;
    }

    if (baseline->parsed()) {
      const auto kind = parse_pairwise_kind(index);
      const auto agg = parse_aggregate(mode);
      const OutputFormat fmt = pick_format(out);
      const auto set = load_input(in);
      const double value = pairwise_aggregate(set, kind, agg);
      std::string text;
      if (fmt == OutputFormat::json) {
        nlohmann::json m = nlohmann::json::array();
        for (std::size_t i = 0; i < set.size(); ++i) {
          auto& row = m.emplace_back(nlohmann::json::array());
          for (std::size_t j = 0; j < set.size(); ++j) {
            row.push_back(pairwise(kind, set[i], set[j]));
          }
        }
        text = nlohmann::json{{"index", std::string(to_string(kind))},
                              {"mode", mode},
                              {"matrix", m},
                              {"aggregate", value}}
                   .dump(2) +
               "\n";
      } else {
        const char sep = fmt == OutputFormat::csv ? ',' : '\t';
        for (std::size_t i = 0; i < set.size(); ++i) {
          for (std::size_t j = 0; j < set.size(); ++j) {
            if (j) text += sep;
            text += format_number(pairwise(kind, set[i], set[j]));
          }
          text += '\n';
        }
        text += std::string(to_string(kind)) + sep + mode + sep + format_number(value) + "\n";
      }
      emit(out, text);
      return kOk;
    }

    if (oracle->parsed()) {
      const MeasureParams params = make_params(po);
      params.validate();
      const auto set = load_input(in);
      const auto brute = oracle_profile(set, params);
      const auto matrix = kappa_series(set, params);
      if (!dump_subsequences.empty()) {
        std::ofstream f(dump_subsequences, std::ios::binary);
        if (!f) throw ExitError{kParse, "cannot write " + dump_subsequences};
        write_subsequences(f, set, enumerate_common(set, std::nullopt, params));
      }
      bool equal = true;
      std::string text;
      const std::size_t len = std::max(brute.ell, matrix.ell);
      for (std::size_t p = 1; p <= len; ++p) {
        bool same;
        if (params.is_exact()) {
          same = p <= brute.ell && p <= matrix.ell &&
                 brute.exact_series[p - 1] == matrix.exact_series[p - 1];
        } else {
          same = close_enough(matrix.kappa(p), brute.kappa(p));
        }
        equal = equal && same;
        text += "p=" + std::to_string(p) + " matrix=" + format_number(matrix.kappa(p)) +
                " oracle=" + format_number(brute.kappa(p)) + (same ? "" : "  MISMATCH") +
                "\n";
      }
      const bool totals = params.is_exact() ? brute.exact_total == matrix.exact_total
                                            : close_enough(matrix.total, brute.total);
      equal = equal && totals && (!params.is_exact() || brute.ell == matrix.ell);
      text += "kappa matrix=" + format_number(matrix.total) +
              " oracle=" + format_number(brute.total) + "\n";
      text += equal ? "OK\n" : "MISMATCH\n";
      std::cout << text;
      return equal ? kOk : kMismatch;
    }

    if (experiment->parsed()) {
      std::vector<Dataset> datasets;
      if (experiment_name == "clustering") {
        datasets = {Dataset::clustering_ga, Dataset::clustering_ce};
      } else if (experiment_name == "search") {
        datasets = {Dataset::search_google, Dataset::search_bing};
      } else {
        throw InvalidArgument("unknown experiment '" + experiment_name +
                              "' (expected clustering or search)");
      }
      std::string text;
      for (Dataset d : datasets) {
        text += comparison_report(compare_with_reference(d, threads));
        const auto set = to_ranking_set(load_dataset(d));
        const auto unit = kappa_series(set, MeasureParams{});
        text += "kappa(1,1) = " + format_number(unit.total) + "\n";
        if (experiment_name == "search") {
          text += "kappa_1 at gamma=1 = " + format_number(unit.kappa(1)) + "\n";
        }
        text += "\n";
      }
      emit(out, text);
      return kOk;
    }
  } catch (const ExitError& e) {
    std::cerr << "rankcons: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "rankcons: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "rankcons: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "rankcons: " << e.what() << '\n';
    return kParams;
  } catch (const UnsupportedInput& e) {
    std::cerr << "rankcons: " << e.what() << '\n';
    return kUnsupported;
  } catch (const SizeLimitError& e) {
    std::cerr << "rankcons: " << e.what() << '\n';
    return kSizeLimit;
  }
  return kOk;
}
