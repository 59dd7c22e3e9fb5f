#pragma once

// Input files and report rendering for the command-line front end.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/profile.hpp"
#include "clc/rational.hpp"
#include "clc/tally.hpp"

namespace clc {

namespace detail {

inline std::vector<std::string> split_cells(std::string_view line) {
  if (line.find('\t') == std::string_view::npos) return split_words(line);
  std::vector<std::string> cells;
  for (auto cell : split(line, '\t')) cells.emplace_back(trim(cell));
  return cells;
}

}  // namespace detail

/// Reads a pair matrix: a header row of candidate names, then one row per
/// candidate (name first) in the same order. Cells are tab-separated, or
/// whitespace-separated when a line has no tab. The header may start with
/// a corner cell. Diagonal cells are ignored. With `total_weight`, entries
/// are counts and get divided by it. No Gamma validation happens here.
inline RawMatrix read_matrix_tsv(std::string_view text, std::optional<Rational> total_weight = std::nullopt) {
  if (total_weight && *total_weight <= 0) throw ParseError(0, "total weight must be positive");

  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::optional<std::vector<std::string>> header;
  auto lines = detail::split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto trimmed = detail::trim(lines[i]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::string_view raw = lines[i];
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto cells = detail::split_cells(raw);
    if (!header) {
      header = std::move(cells);
    } else {
      rows.emplace_back(i + 1, std::move(cells));
    }
  }
  if (!header) throw ParseError(0, "empty matrix file");

  const std::size_t n = rows.size();
  auto names = *header;
  if (names.size() == n + 1) names.erase(names.begin());
  if (names.size() != n)
    throw ParseError(0, "header lists " + std::to_string(names.size()) + " candidates but there are " +
                            std::to_string(n) + " rows");

  CandidateSet candidates;
  try {
    candidates = CandidateSet(names);
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }

  SquareTable<Rational> values(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& [lineno, cells] = rows[x];
    if (cells.size() != n + 1)
      throw ParseError(lineno, "expected " + std::to_string(n + 1) + " cells, found " + std::to_string(cells.size()));
    if (cells[0] != names[x])
      throw ParseError(lineno, "row name '" + cells[0] + "' does not match header name '" + names[x] + "'");
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      auto value = parse_rational(cells[y + 1]);
      if (!value)
        throw ParseError(lineno, "invalid entry '" + cells[y + 1] + "' for pair (" + names[x] + ", " + names[y] + ")");
      values(x, y) = total_weight ? Rational(*value / *total_weight) : *value;
    }
  }
  return {std::move(candidates), std::move(values)};
}

/// Writes a matrix in the same format, tab-separated, entries as exact p/q.
template <MatrixKind K>
std::string write_matrix_tsv(const ScoreMatrix<K>& m) {
  std::ostringstream out;
  for (const auto& name : m.candidates().names()) out << '\t' << name;
  out << '\n';
  for (std::size_t x = 0; x < m.size(); ++x) {
    out << m.candidates().name(x);
    for (std::size_t y = 0; y < m.size(); ++y) {
      out << '\t';
      if (x == y) {
        out << '-';
      } else {
        auto v = m(x, y);
        out << (boost::multiprecision::denominator(v) == 1 ? boost::multiprecision::numerator(v).str()
                                                            : to_exact_string(v));
      }
    }
    out << '\n';
  }
  return out.str();
}

struct RenderOptions {
  bool detailed = false;
  int digits = 4;
  /// Show scores and margins multiplied by this (e.g. the number of votes),
  /// so that tables hold counts instead of fractions.
  std::optional<Rational> scale;
};

namespace detail {

inline std::string plain_number(const Rational& value, int digits) {
  if (boost::multiprecision::denominator(value) == 1) return boost::multiprecision::numerator(value).str();
  return to_decimal_string(value, digits);
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

/// Right-aligned grid with row labels; `cells` is rows x columns.
inline void write_grid(std::ostream& out, const std::vector<std::string>& columns, const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_width = 0, width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  for (const auto& c : columns) width = std::max(width, c.size());
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, c.size());
  width += 2;
  std::string head(label_width, ' ');
  for (const auto& c : columns) head += pad_left(c, width);
  while (!head.empty() && head.back() == ' ') head.pop_back();
  if (!head.empty()) out << head << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = pad_right(labels[r], label_width);
    for (const auto& c : cells[r]) line += pad_left(c, width);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

}  // namespace detail

class ReportRenderer {
 public:
  ReportRenderer(const TallyReport& report, RenderOptions options) : r_(report), opt_(std::move(options)) {}

  std::string text() const {
    std::ostringstream out;
    if (opt_.detailed) detailed_text(out);
    rates_text(out);
    return out.str();
  }

  nlohmann::ordered_json json() const {
    using nlohmann::ordered_json;
    const auto& names = r_.llull.candidates().names();
    const std::size_t n = names.size();
    ordered_json j;
    j["candidates"] = names;
    j["llull"] = matrix_json(r_.llull);
    j["indirect_scores"] = matrix_json(r_.indirect);
    j["indirect_margins"] = matrix_json(r_.indirect_margins);
    ordered_json ranks = ordered_json::array();
    for (std::size_t x = 0; x < n; ++x) ranks.push_back(named_number(names[x], r_.ranks[x]));
    j["ranks"] = ranks;
    j["order"] = order_names();
    ordered_json inter = ordered_json::array();
    for (std::size_t i = 0; i < r_.intermediate.size(); ++i) {
      ordered_json e = number(r_.intermediate[i]);
      e["pair"] = {names[r_.order[i]], names[r_.order[i + 1]]};
      inter.push_back(e);
    }
    j["intermediate"] = inter;
    j["projected_margins"] = matrix_json(r_.projected_margins.margins);
    j["projected"] = matrix_json(r_.projected);
    ordered_json rates = ordered_json::array();
    for (std::size_t x = 0; x < n; ++x) rates.push_back(named_number(names[x], r_.rates[x]));
    j["rates"] = rates;
    ordered_json preorder = ordered_json::array();
    for (const auto& cls : r_.preorder.classes) {
      ordered_json members = ordered_json::array();
      for (auto x : cls) members.push_back(names[x]);
      preorder.push_back(members);
    }
    j["preorder"] = preorder;
    return j;
  }

 private:
  nlohmann::ordered_json number(const Rational& value) const {
    nlohmann::ordered_json j;
    j["exact"] = to_exact_string(value);
    j["decimal"] = to_decimal_string(value, opt_.digits);
    return j;
  }

  nlohmann::ordered_json named_number(const std::string& name, const Rational& value) const {
    nlohmann::ordered_json j;
    j["candidate"] = name;
    auto num = number(value);
    j["exact"] = num["exact"];
    j["decimal"] = num["decimal"];
    return j;
  }

  template <MatrixKind K>
  nlohmann::ordered_json matrix_json(const ScoreMatrix<K>& m) const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < m.size(); ++x) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t y = 0; y < m.size(); ++y) row.push_back(x == y ? nlohmann::ordered_json(nullptr) : number(m(x, y)));
      rows.push_back(row);
    }
    return rows;
  }

  std::vector<std::string> order_names() const {
    std::vector<std::string> out;
    for (auto x : r_.order.sequence()) out.push_back(r_.llull.candidates().name(x));
    return out;
  }

  std::string cell(const Rational& value) const {
    return detail::plain_number(opt_.scale ? Rational(value * *opt_.scale) : value, opt_.digits);
  }

  // Declared order; '*' marks s_xy > s_yx.
  template <MatrixKind K>
  void score_table(std::ostream& out, const std::string& title, const ScoreMatrix<K>& s) const {
    const auto& names = s.candidates().names();
    const std::size_t n = names.size();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        cells[x][y] = x == y ? "-" : cell(s(x, y)) + (s.numerator(x, y) > s.numerator(y, x) ? "*" : " ");
    out << title << '\n';
    detail::write_grid(out, names, names, cells);
    out << '\n';
  }

  // Upper triangle in the admissible order.
  void ordered_margin_table(std::ostream& out, const std::string& title, const MarginMatrix& m) const {
    auto names = order_names();
    const std::size_t n = names.size();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        cells[i][j] = i == j ? "-" : i < j ? cell(m(r_.order[i], r_.order[j])) : "";
    out << title << '\n';
    detail::write_grid(out, names, names, cells);
    out << '\n';
  }

  void detailed_text(std::ostream& out) const {
    const auto& names = r_.llull.candidates().names();
    const std::size_t n = names.size();
    out << "Candidates:";
    for (const auto& name : names) out << ' ' << name;
    out << "\n";
    if (opt_.scale) out << "Scores and margins shown multiplied by " << detail::plain_number(*opt_.scale, opt_.digits) << "\n";
    out << "\n";

    score_table(out, "Original scores (* = beats the reverse pair)", r_.llull);
    score_table(out, "Indirect scores (* = beats the reverse pair)", r_.indirect);

    out << "Ranks\n";
    {
      std::vector<std::vector<std::string>> cells;
      for (std::size_t x = 0; x < n; ++x) cells.push_back({detail::plain_number(r_.ranks[x], 1)});
      detail::write_grid(out, {"r"}, names, cells);
    }
    out << "\nAdmissible order:";
    for (const auto& name : order_names()) out << ' ' << name;
    out << "\n\n";

    ordered_margin_table(out, "Indirect margins", r_.indirect_margins);

    out << "Intermediate margins\n";
    {
      std::vector<std::string> labels;
      std::vector<std::vector<std::string>> cells;
      for (std::size_t i = 0; i < r_.intermediate.size(); ++i) {
        labels.push_back(names[r_.order[i]] + " > " + names[r_.order[i + 1]]);
        cells.push_back({cell(r_.intermediate[i])});
      }
      detail::write_grid(out, {""}, labels, cells);
    }
    out << '\n';

    ordered_margin_table(out, "Projected margins", r_.projected_margins.margins);

    out << "Rates:";
    for (auto x : r_.order.sequence()) out << ' ' << to_decimal_string(r_.rates[x], opt_.digits);
    out << "\n\n";
  }

  void rates_text(std::ostream& out) const {
    const auto& names = r_.llull.candidates().names();
    std::size_t width = 0;
    for (const auto& name : names) width = std::max(width, name.size());
    for (const auto& cls : r_.preorder.classes)
      for (auto x : cls) out << detail::pad_right(names[x], width) << ' ' << to_decimal_string(r_.rates[x], opt_.digits) << '\n';
    if (opt_.detailed) {
      out << "\nSocial order:";
      for (std::size_t c = 0; c < r_.preorder.classes.size(); ++c) {
        if (c > 0) out << " >";
        const auto& cls = r_.preorder.classes[c];
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i > 0 ? " = " : " ") << names[cls[i]];
      }
      out << '\n';
    }
  }

  const TallyReport& r_;
  RenderOptions opt_;
};

}  // namespace clc
