// Marked-value information systems: a CSV table of objects against yes/no
// attribute marks, an optional yes/no decision column, the induced
// subset-of-marks relation, and decision analysis through the models.
//
// CSV dialect: comma-separated, no quoting, surrounding blanks trimmed.
// The first header cell must be "Person"; the remaining cells name the
// attribute columns, except that a final "Decision" column (exact spelling)
// is treated as the decision. Marks are Yes/No, case-insensitive. A parsed
// table serializes back to canonical form (Yes/No capitalized) and
// round-trips identically.
#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/models.hpp"
#include "primrose/primal.hpp"
#include "primrose/relation.hpp"
#include "primrose/universe.hpp"

namespace primrose {

struct InfoSystem {
  Universe objects;
  std::vector<std::string> attributes;
  /// Per object, the set of attributes it is marked with (width = attributes).
  std::vector<Subset> values;
  /// Objects marked Yes in the decision column, when the table has one.
  std::optional<Subset> decision;

  friend bool operator==(const InfoSystem& a, const InfoSystem& b) {
    return a.objects == b.objects && a.attributes == b.attributes && a.values == b.values &&
           a.decision == b.decision;
  }
};

namespace infosys_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) --e;
  return s.substr(b, e - b);
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::optional<bool> parse_mark(const std::string& cell) {
  std::string low;
  for (char c : cell) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "yes") return true;
  if (low == "no") return false;
  return std::nullopt;
}

}  // namespace infosys_detail

inline InfoSystem parse_infosystem(const std::string& text) {
  using namespace infosys_detail;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty()) continue;  // blank lines are ignored
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw ParseError("line 1: empty table, expected a header row");
  std::vector<std::string> head = split_csv(header);
  if (head.empty() || head[0] != "Person") {
    throw ParseError("line " + std::to_string(line_no) + ": first header cell must be 'Person'");
  }
  bool has_decision = head.size() >= 2 && head.back() == "Decision";
  std::vector<std::string> attributes(head.begin() + 1, head.end() - (has_decision ? 1 : 0));
  std::set<std::string> seen_attr;
  for (const std::string& a : attributes) {
    if (a.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty attribute name");
    }
    if (a == "Person" || a == "Decision") {
      throw ParseError("line " + std::to_string(line_no) + ": attribute may not be named '" + a +
                       "'");
    }
    if (!seen_attr.insert(a).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate attribute '" + a + "'");
    }
  }

  std::vector<std::string> labels;
  std::vector<Subset> values;
  std::vector<bool> decisions;
  std::set<std::string> seen_label;
  std::string row;
  while (next_line(row)) {
    std::vector<std::string> cells = split_csv(row);
    if (cells.size() != head.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(head.size()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    if (cells[0].empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty person label");
    }
    if (!seen_label.insert(cells[0]).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate person '" + cells[0] +
                       "'");
    }
    labels.push_back(cells[0]);
    Subset marks = Subset::empty(attributes.size());
    for (std::size_t a = 0; a < attributes.size(); ++a) {
      auto mark = parse_mark(cells[1 + a]);
      if (!mark) {
        throw ParseError("line " + std::to_string(line_no) + ": column '" + attributes[a] +
                         "': expected Yes or No, found '" + cells[1 + a] + "'");
      }
      if (*mark) marks = marks.with(a);
    }
    values.push_back(marks);
    if (has_decision) {
      auto mark = parse_mark(cells.back());
      if (!mark) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": column 'Decision': expected Yes or No, found '" + cells.back() + "'");
      }
      decisions.push_back(*mark);
    }
  }
  if (labels.empty()) throw ParseError("table has no data rows");

  InfoSystem out{Universe(labels), std::move(attributes), std::move(values), std::nullopt};
  if (has_decision) {
    Subset d = Subset::empty(labels.size());
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      if (decisions[i]) d = d.with(i);
    }
    out.decision = d;
  }
  return out;
}

inline InfoSystem load_infosystem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_infosystem(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string serialize_infosystem(const InfoSystem& s) {
  std::ostringstream out;
  out << "Person";
  for (const std::string& a : s.attributes) out << ',' << a;
  if (s.decision) out << ",Decision";
  out << '\n';
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    out << s.objects.label(i);
    for (std::size_t a = 0; a < s.attributes.size(); ++a) {
      out << ',' << (s.values[i].test(a) ? "Yes" : "No");
    }
    if (s.decision) out << ',' << (s.decision->test(i) ? "Yes" : "No");
    out << '\n';
  }
  return out.str();
}

/// The induced relation: m relates to n exactly when the marks of m form a
/// subset of the marks of n. Always reflexive and transitive.
inline Relation subset_relation(const InfoSystem& s) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t m = 0; m < s.objects.size(); ++m) {
    for (std::size_t n = 0; n < s.objects.size(); ++n) {
      if (s.values[m].subset_of(s.values[n])) pairs.emplace_back(m, n);
    }
  }
  return Relation(s.objects, pairs);
}

struct DecisionEntry {
  ModelId model = ModelId::Yao;
  ApproxResult result;
  /// Primary classification: the boundary is empty.
  bool definable = false;
  /// Reported alongside: the accuracy is defined and equals 1.
  bool accuracy_is_one = false;
};

struct DecisionReport {
  Subset target;
  NeighborhoodKind kind = NeighborhoodKind::A;
  std::vector<DecisionEntry> entries;
  std::vector<std::string> notes;
};

/// Approximates a target set of objects under the induced relation.
inline DecisionReport analyze_decision(const InfoSystem& s, const Subset& target,
                                       const Primal* primal, const std::vector<ModelId>& models,
                                       NeighborhoodKind kind) {
  if (target.width() != s.objects.size()) {
    throw StructuralError("target width does not match the object universe");
  }
  if (models.empty()) throw StructuralError("decision analysis requires at least one model");
  Relation relation = subset_relation(s);
  DecisionReport report;
  report.target = target;
  report.kind = kind;
  for (ModelId m : models) {
    if (m != ModelId::Yao && primal == nullptr) {
      throw StructuralError("model " + to_string(m) + " requires a primal");
    }
    DecisionEntry entry;
    entry.model = m;
    entry.result = approximate(relation, kind, m, primal, target);
    entry.definable = entry.result.boundary.is_empty();
    entry.accuracy_is_one =
        !entry.result.accuracy.is_undefined() && entry.result.accuracy == Rational::ratio(1, 1);
    report.entries.push_back(std::move(entry));
  }
  if (primal != nullptr && primal->level() == ValidationLevel::Weak) {
    report.notes.push_back(
        "the primal was validated at the weak level; splitting was not checked");
  }
  return report;
}

}  // namespace primrose
