#ifndef RANKCONS_RESULTS_HPP
#define RANKCONS_RESULTS_HPP

// Serialisation of measurement results and sweeps as JSON, CSV or a plain
// text table. Numbers in JSON and CSV use the shortest representation that
// round-trips; exact counts are printed as integers. Tables show 3 decimals,
// rounded half away from zero, with trailing zeros dropped.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rankcons/error.hpp"
#include "rankcons/measures.hpp"
#include "rankcons/params.hpp"
#include "rankcons/sweep.hpp"

namespace rankcons {

enum class OutputFormat { json, csv, table };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  throw InvalidArgument("unknown format '" + std::string(s) + "'");
}

struct MeasureReport {
  MeasureParams params;
  KappaProfile profile;
  std::optional<double> kappa_hat;   // duplicate-adjusted total
  std::optional<double> topk_kappa1; // top-k weighted kappa_1
};

inline std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

inline std::string format_count(const BigCount& v) { return v.str(); }

/// 3 decimals, half away from zero, trailing zeros removed ("13.05", "19").
inline std::string format_3dp(double v) {
  const double r = std::round(v * 1000.0) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r == 0.0 ? 0.0 : r);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

namespace results_detail {

inline nlohmann::json number_json(const KappaProfile& p, std::size_t i) {
  if (p.exact) {
    const auto& v = p.exact_series[i];
    if (v <= BigCount(std::numeric_limits<std::uint64_t>::max())) {
      return v.convert_to<std::uint64_t>();
    }
    return v.str();
  }
  return p.series[i];
}

inline nlohmann::json total_json(const KappaProfile& p) {
  if (p.exact) {
    if (p.exact_total <= BigCount(std::numeric_limits<std::uint64_t>::max())) {
      return p.exact_total.convert_to<std::uint64_t>();
    }
    return p.exact_total.str();
  }
  return p.total;
}

inline std::string value_text(const KappaProfile& p, std::size_t i) {
  return p.exact ? format_count(p.exact_series[i]) : format_number(p.series[i]);
}

inline std::string total_text(const KappaProfile& p) {
  return p.exact ? format_count(p.exact_total) : format_number(p.total);
}

inline nlohmann::json params_json(const MeasureParams& p) {
  nlohmann::json j{{"gamma", p.gamma},
                   {"lambda", p.lambda},
                   {"epsilon", p.epsilon},
                   {"deviation", std::string(to_string(p.deviation))}};
  if (p.zeta) j["zeta"] = *p.zeta;
  if (p.beta) j["beta"] = *p.beta;
  return j;
}

inline nlohmann::json series_json(const KappaProfile& p) {
  nlohmann::json s = nlohmann::json::array();
  for (std::size_t i = 0; i < p.series.size(); ++i) {
    s.push_back(nlohmann::json::array({i + 1, number_json(p, i)}));
  }
  return s;
}

}  // namespace results_detail

/// JSON: {params, kappa_series: [[p, kappa_p], ...], ell, kappa_total}.
/// CSV: one row "gamma,lambda,kappa,ell,kappa_1,...".
/// TABLE: one "name  value" line per quantity.
inline std::string write_results(const MeasureReport& r, OutputFormat fmt) {
  using namespace results_detail;
  const auto& p = r.profile;
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::json j{{"params", params_json(r.params)},
                       {"kappa_series", series_json(p)},
                       {"ell", p.ell},
                       {"kappa_total", total_json(p)}};
      if (r.kappa_hat) j["kappa_hat"] = *r.kappa_hat;
      if (r.topk_kappa1) j["topk_kappa_1"] = *r.topk_kappa1;
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string head = "gamma,lambda,kappa,ell";
      std::string row = format_number(r.params.gamma) + "," +
                        format_number(r.params.lambda) + "," + total_text(p) +
                        "," + std::to_string(p.ell);
      for (std::size_t i = 0; i < p.series.size(); ++i) {
        head += ",kappa_" + std::to_string(i + 1);
        row += "," + value_text(p, i);
      }
      if (r.kappa_hat) {
        head += ",kappa_hat";
        row += "," + format_number(*r.kappa_hat);
      }
      if (r.topk_kappa1) {
        head += ",topk_kappa_1";
        row += "," + format_number(*r.topk_kappa1);
      }
      return head + "\n" + row + "\n";
    }
    case OutputFormat::table: {
      std::string out;
      char line[160];
      std::snprintf(line, sizeof line, "gamma=%s lambda=%s deviation=%s\n",
                    format_number(r.params.gamma).c_str(),
                    format_number(r.params.lambda).c_str(),
                    std::string(to_string(r.params.deviation)).c_str());
      out += line;
      for (std::size_t i = 0; i < p.series.size(); ++i) {
        const std::string v = p.exact ? value_text(p, i) : format_3dp(p.series[i]);
        std::snprintf(line, sizeof line, "kappa_%-5zu %s\n", i + 1, v.c_str());
        out += line;
      }
      std::snprintf(line, sizeof line, "ell         %zu\n", p.ell);
      out += line;
      out += "kappa       " + (p.exact ? total_text(p) : format_3dp(p.total)) + "\n";
      if (r.kappa_hat) out += "kappa_hat   " + format_3dp(*r.kappa_hat) + "\n";
      if (r.topk_kappa1) out += "topk_k1     " + format_3dp(*r.topk_kappa1) + "\n";
      return out;
    }
  }
  return {};
}

/// CSV: header "gamma,lambda,kappa" plus a kappa_p column per entry of
/// `per_p`, one row per grid point in grid order.
/// TABLE: gamma rows by lambda columns of kappa.
/// JSON: {gammas, lambdas, cells: [{gamma, lambda, kappa, ell, kappa_series}]}.
inline std::string write_results(const SweepResult& s, OutputFormat fmt,
                                 const std::vector<std::size_t>& per_p = {}) {
  using namespace results_detail;
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::json cells = nlohmann::json::array();
      for (const auto& c : s.cells) {
        cells.push_back({{"gamma", c.gamma},
                         {"lambda", c.lambda},
                         {"kappa", total_json(c.profile)},
                         {"ell", c.profile.ell},
                         {"kappa_series", series_json(c.profile)}});
      }
      return nlohmann::json{{"gammas", s.gammas},
                            {"lambdas", s.lambdas},
                            {"cells", std::move(cells)}}
                 .dump(2) +
             "\n";
    }
    case OutputFormat::csv: {
      std::string out = "gamma,lambda,kappa";
      for (std::size_t p : per_p) out += ",kappa_" + std::to_string(p);
      out += '\n';
      for (const auto& c : s.cells) {
        out += format_number(c.gamma) + "," + format_number(c.lambda) + "," +
               total_text(c.profile);
        for (std::size_t p : per_p) {
          out += ",";
          out += (c.profile.exact && p >= 1 && p <= c.profile.ell)
                     ? value_text(c.profile, p - 1)
                     : format_number(c.profile.kappa(p));
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::table: {
      std::string out = "gamma\\lambda";
      for (double l : s.lambdas) out += "\t" + format_3dp(l);
      out += '\n';
      for (std::size_t gi = 0; gi < s.gammas.size(); ++gi) {
        out += format_3dp(s.gammas[gi]);
        for (std::size_t li = 0; li < s.lambdas.size(); ++li) {
          out += "\t" + format_3dp(s.at(gi, li).profile.total);
        }
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

}  // namespace rankcons

#endif  // RANKCONS_RESULTS_HPP
