#ifndef RANKCONS_IO_HPP
#define RANKCONS_IO_HPP

/**
 * @file io.hpp
 * @brief Ranking documents: text and JSON formats.
 *
 * Text format, one ranking per line:
 *
 *     # comment
 *     label: a b {c d} e
 *
 * Tokens are separated by whitespace, a brace pair encloses one tie group,
 * the optional leading `label:` names the ranking and `#` starts a comment.
 * Blank lines are ignored.
 *
 * JSON format:
 *
 *     {"rankings": [{"label": "r1", "groups": [["a"], ["b", "c"]]}]}
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rankcons/error.hpp"
#include "rankcons/ranking.hpp"

namespace rankcons {

struct RawRanking {
  std::optional<std::string> label;
  TokenGroups groups;
  std::size_t line = 0;  // 1-based source line, 0 if not from text

  friend bool operator==(const RawRanking& a, const RawRanking& b) {
    return a.label == b.label && a.groups == b.groups;
  }
};

struct RankingDocument {
  std::vector<RawRanking> rankings;
  std::string source;
};

namespace io_detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

inline RawRanking parse_line(std::string_view line, std::size_t lineno) {
  RawRanking out;
  out.line = lineno;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " at line " + std::to_string(lineno), lineno);
  };

  std::vector<std::string> seen;
  std::optional<std::vector<std::string>> open;  // current tie group
  bool first_token = true;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '{') {
      if (open) throw fail("nested '{'");
      open.emplace();
      first_token = false;
      ++i;
      continue;
    }
    if (c == '}') {
      if (!open) throw fail("unbalanced '}'");
      if (open->empty()) throw fail("empty tie group");
      out.groups.push_back(std::move(*open));
      open.reset();
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != '{' &&
           line[j] != '}') {
      ++j;
    }
    std::string token(line.substr(i, j - i));
    i = j;
    if (first_token && token.size() > 1 && token.back() == ':') {
      token.pop_back();
      out.label = std::move(token);
      first_token = false;
      continue;
    }
    first_token = false;
    for (const auto& s : seen) {
      if (s == token) throw fail("duplicate item " + token);
    }
    seen.push_back(token);
    if (open) {
      open->push_back(std::move(token));
    } else {
      out.groups.push_back({std::move(token)});
    }
  }
  if (open) throw fail("unbalanced '{'");
  if (out.groups.empty()) throw fail("empty ranking");
  return out;
}

inline void check_labels(const RankingDocument& doc) {
  std::set<std::string> labels;
  for (const auto& r : doc.rankings) {
    if (r.label && !labels.insert(*r.label).second) {
      if (r.line != 0) {
        throw ParseError("duplicate label " + *r.label + " at line " +
                             std::to_string(r.line),
                         r.line);
      }
      throw ParseError("duplicate label " + *r.label);
    }
  }
}

}  // namespace io_detail

inline RankingDocument parse_text(std::string_view content,
                                  std::string source = {}) {
  RankingDocument doc;
  doc.source = std::move(source);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t end = std::min(content.find('\n', pos), content.size());
    std::string_view line = content.substr(pos, end - pos);
    ++lineno;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) blank = blank && io_detail::is_space(c);
    if (!blank) doc.rankings.push_back(io_detail::parse_line(line, lineno));
    if (end == content.size()) break;
  }
  if (doc.rankings.empty()) throw ParseError("empty ranking set");
  io_detail::check_labels(doc);
  return doc;
}

inline RankingDocument parse_json(std::string_view content,
                                  std::string source = {}) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("rankings")) {
    throw ParseError("$: expected an object with a \"rankings\" member");
  }
  const json& list = root.at("rankings");
  if (!list.is_array()) throw ParseError("$.rankings: expected an array");
  if (list.empty()) throw ParseError("empty ranking set");

  RankingDocument doc;
  doc.source = std::move(source);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "$.rankings[" + std::to_string(k) + "]";
    const json& r = list[k];
    if (!r.is_object()) throw ParseError(at + ": expected an object");
    RawRanking raw;
    if (r.contains("label")) {
      if (!r["label"].is_string() || r["label"].get<std::string>().empty()) {
        throw ParseError(at + ".label: expected a non-empty string");
      }
      raw.label = r["label"].get<std::string>();
    }
    if (!r.contains("groups") || !r["groups"].is_array()) {
      throw ParseError(at + ".groups: expected an array");
    }
    const json& groups = r["groups"];
    if (groups.empty()) throw ParseError(at + ".groups: empty ranking");
    std::vector<std::string> seen;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const std::string gat = at + ".groups[" + std::to_string(g) + "]";
      if (!groups[g].is_array()) throw ParseError(gat + ": expected an array");
      if (groups[g].empty()) throw ParseError(gat + ": empty tie group");
      auto& out = raw.groups.emplace_back();
      for (std::size_t t = 0; t < groups[g].size(); ++t) {
        const json& tok = groups[g][t];
        const std::string tat = gat + "[" + std::to_string(t) + "]";
        if (!tok.is_string()) throw ParseError(tat + ": expected a string");
        auto s = tok.get<std::string>();
        if (!is_valid_token(s)) {
          throw ParseError(tat + ": invalid item token '" + s + "'");
        }
        for (const auto& prev : seen) {
          if (prev == s) throw ParseError(tat + ": duplicate item " + s);
        }
        seen.push_back(s);
        out.push_back(std::move(s));
      }
    }
    doc.rankings.push_back(std::move(raw));
  }
  io_detail::check_labels(doc);
  return doc;
}

/// Picks the parser from the first non-blank character ('{' means JSON).
inline RankingDocument parse_any(std::string_view content,
                                 std::string source = {}) {
  for (char c : content) {
    if (io_detail::is_space(c) || c == '\n') continue;
    if (c == '{') {
      // A text line may also start with a tie group; only a JSON object has
      // a quoted key right after the brace.
      const auto rest = content.substr(content.find('{') + 1);
      for (char d : rest) {
        if (io_detail::is_space(d) || d == '\n') continue;
        if (d == '"') return parse_json(content, std::move(source));
        break;
      }
    }
    break;
  }
  return parse_text(content, std::move(source));
}

inline std::string to_text(const RankingDocument& doc) {
  std::string out;
  for (const auto& r : doc.rankings) {
    if (r.label) {
      if (!is_valid_token(*r.label)) {
        throw InvalidArgument("label '" + *r.label +
                              "' cannot be written in the text format");
      }
      out += *r.label;
      out += ": ";
    }
    for (std::size_t g = 0; g < r.groups.size(); ++g) {
      if (g) out += ' ';
      const auto& group = r.groups[g];
      if (group.size() == 1) {
        out += group.front();
        continue;
      }
      out += '{';
      for (std::size_t t = 0; t < group.size(); ++t) {
        if (t) out += ' ';
        out += group[t];
      }
      out += '}';
    }
    out += '\n';
  }
  return out;
}

inline std::string to_json(const RankingDocument& doc, int indent = -1) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : doc.rankings) {
    nlohmann::json entry;
    if (r.label) entry["label"] = *r.label;
    entry["groups"] = r.groups;
    list.push_back(std::move(entry));
  }
  return nlohmann::json{{"rankings", std::move(list)}}.dump(indent);
}

inline RankingSet to_ranking_set(const RankingDocument& doc) {
  ItemTable table;
  std::vector<Ranking> rankings;
  rankings.reserve(doc.rankings.size());
  for (const auto& r : doc.rankings) {
    try {
      rankings.push_back(validate_ranking(r.groups, table));
    } catch (const ValidationError& e) {
      throw ParseError(r.line ? std::string(e.what()) + " at line " +
                                    std::to_string(r.line)
                              : std::string(e.what()),
                       r.line);
    }
  }
  if (rankings.empty()) throw ParseError("empty ranking set");
  return RankingSet(std::move(table), std::move(rankings));
}

/// Inverse of to_ranking_set (labels are lost).
inline RankingDocument to_document(const RankingSet& set) {
  RankingDocument doc;
  for (const auto& r : set.rankings()) {
    RawRanking raw;
    for (const auto& g : r.groups()) {
      auto& out = raw.groups.emplace_back();
      for (ItemId id : g) out.push_back(set.items().token(id));
    }
    doc.rankings.push_back(std::move(raw));
  }
  return doc;
}

}  // namespace rankcons

#endif  // RANKCONS_IO_HPP
