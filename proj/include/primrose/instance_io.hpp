// Text format for instances.
//
//   # whole-line comment
//   universe = i1 i2 i3 i4
//   pairs = (i1,i1) (i1,i2)
//   pairs = (i2,i3)                  # repeatable, appends
//   primal.mode = weak               # or strict; required with a primal
//   primal.members = {} {i1} {i2}    # explicit member list, or:
//   primal.antichain = {i1,i3}       # maximal members, closed downward
//
// The universe line must precede pairs/primal lines. Labels may not contain
// whitespace or any of ( ) , { } = #. Serialization is canonical: one line
// each for universe, pairs (sorted), primal.mode, and primal.members in
// ascending bit-pattern order, so parse(serialize(x)) == x.
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/instance.hpp"

namespace primrose {

namespace io_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline void check_label(const std::string& label, std::size_t line_no) {
  if (label.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": empty label");
  }
  for (char c : label) {
    if (c == '(' || c == ')' || c == ',' || c == '{' || c == '}' || c == '=' || c == '#') {
      throw ParseError("line " + std::to_string(line_no) + ": label '" + label +
                       "' contains the reserved character '" + std::string(1, c) + "'");
    }
  }
}

/// "(a,b)" -> {a, b}.
inline std::pair<std::string, std::string> parse_pair_token(const std::string& tok,
                                                            std::size_t line_no) {
  if (tok.size() < 4 || tok.front() != '(' || tok.back() != ')') {
    throw ParseError("line " + std::to_string(line_no) + ": malformed pair '" + tok +
                     "' (expected (a,b))");
  }
  std::string inner = tok.substr(1, tok.size() - 2);
  auto parts = split_on(inner, ',');
  if (parts.size() != 2) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed pair '" + tok +
                     "' (expected exactly one comma)");
  }
  std::string a = trim(parts[0]);
  std::string b = trim(parts[1]);
  check_label(a, line_no);
  check_label(b, line_no);
  return {a, b};
}

/// "{a,b}" or "{}" -> label list.
inline std::vector<std::string> parse_set_token(const std::string& tok, std::size_t line_no) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') {
    throw ParseError("line " + std::to_string(line_no) + ": malformed set '" + tok +
                     "' (expected {a,b} or {})");
  }
  std::string inner = trim(tok.substr(1, tok.size() - 2));
  std::vector<std::string> out;
  if (inner.empty()) return out;
  for (const auto& part : split_on(inner, ',')) {
    std::string label = trim(part);
    check_label(label, line_no);
    out.push_back(label);
  }
  return out;
}

}  // namespace io_detail

inline Instance parse_instance(const std::string& text) {
  using io_detail::check_label;
  using io_detail::parse_pair_token;
  using io_detail::parse_set_token;
  using io_detail::split_ws;
  using io_detail::trim;

  std::optional<Universe> universe;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::optional<ValidationLevel> mode;
  std::optional<std::vector<std::vector<std::string>>> members;
  std::optional<std::vector<std::vector<std::string>>> antichain;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (key == "universe") {
      if (universe) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate universe line");
      }
      auto labels = split_ws(value);
      if (labels.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": universe must list at least one label");
      }
      for (const auto& l : labels) check_label(l, line_no);
      try {
        universe.emplace(labels);
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (key == "pairs") {
      if (!universe) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": universe must be declared before pairs");
      }
      for (const auto& tok : split_ws(value)) {
        auto [a, b] = parse_pair_token(tok, line_no);
        if (!universe->has(a) || !universe->has(b)) {
          throw ParseError("line " + std::to_string(line_no) + ": pair (" + a + "," + b +
                           ") uses a label outside the universe");
        }
        pairs.emplace_back(a, b);
      }
    } else if (key == "primal.mode") {
      if (mode) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate primal.mode line");
      }
      if (value == "weak") {
        mode = ValidationLevel::Weak;
      } else if (value == "strict") {
        mode = ValidationLevel::Strict;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": primal.mode must be weak or strict");
      }
    } else if (key == "primal.members" || key == "primal.antichain") {
      if (!universe) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": universe must be declared before the primal");
      }
      bool is_members = (key == "primal.members");
      if ((is_members && antichain) || (!is_members && members)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": primal.members and primal.antichain are mutually exclusive");
      }
      auto& slot = is_members ? members : antichain;
      if (!slot) slot.emplace();
      for (const auto& tok : split_ws(value)) {
        auto labels = parse_set_token(tok, line_no);
        for (const auto& l : labels) {
          if (!universe->has(l)) {
            throw ParseError("line " + std::to_string(line_no) + ": set " + tok +
                             " uses a label outside the universe");
          }
        }
        slot->push_back(std::move(labels));
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  if (!universe) throw ParseError("missing universe line");
  bool has_family = members.has_value() || antichain.has_value();
  if (mode && !has_family) {
    throw ParseError("primal.mode given without primal.members or primal.antichain");
  }
  if (has_family && !mode) {
    throw ParseError("primal.members/primal.antichain given without primal.mode");
  }

  Relation relation(*universe, pairs);

  std::optional<Primal> primal;
  if (has_family) {
    std::vector<Subset> sets;
    const auto& lists = members ? *members : *antichain;
    sets.reserve(lists.size());
    for (const auto& labels : lists) sets.push_back(universe->subset(labels));
    try {
      if (members) {
        primal.emplace(SetFamily(universe->size(), sets), *mode);
      } else {
        SetFamily closed = SetFamily::downward_closure(universe->size(), sets);
        primal.emplace(std::move(closed), *mode);
      }
    } catch (const CapacityError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("primal rejected: ") + e.what());
    }
  }

  return Instance{std::move(relation), std::move(primal)};
}

/// Canonical text form; parse(serialize(x)) == x.
inline std::string serialize_instance(const Instance& inst) {
  const Universe& u = inst.universe();
  std::string out = "universe =";
  for (const auto& l : u.labels()) {
    out += " ";
    out += l;
  }
  out += "\npairs =";
  for (const auto& [i, j] : inst.relation.pairs()) {
    out += " (" + u.label(i) + "," + u.label(j) + ")";
  }
  out += "\n";
  if (inst.primal) {
    out += "primal.mode = ";
    out += to_string(inst.primal->level());
    out += "\nprimal.members =";
    for (const auto& m : inst.primal->family().members()) {
      out += " " + u.format(m);
    }
    out += "\n";
  }
  return out;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace primrose
