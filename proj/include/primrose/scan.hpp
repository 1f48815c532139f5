// Whole-powerset scan: approximates every subset of the universe under a
// chosen neighborhood kind and model selection, producing one row per subset.
// Rows are ordered by (cardinality, then the element sequence lexicographically).
//
// Every cell is recomputed by the independent oracle; a divergence between
// the two implementations is an internal defect and throws. A scan can also
// be compared against a reference table (a JSON transcription of externally
// printed values); cells that disagree with the recomputed truth become
// erratum notes rather than errors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "primrose/errors.hpp"
#include "primrose/models.hpp"
#include "primrose/oracle.hpp"
#include "primrose/primal.hpp"
#include "primrose/rational.hpp"
#include "primrose/relation.hpp"

namespace primrose {

struct ScanRow {
  Subset v;
  /// One result per requested model, in the requested model order.
  std::vector<ApproxResult> cells;
};

/// One reference-table field that disagrees with the recomputed value.
struct ErratumNote {
  Subset v;
  ModelId model = ModelId::Yao;
  std::string field;  // "lower", "upper" or "sigma"
  std::string printed;
  std::string computed;
};

struct ScanTable {
  NeighborhoodKind kind = NeighborhoodKind::A;
  std::vector<ModelId> models;
  std::vector<ScanRow> rows;
  std::vector<ErratumNote> errata;
  bool reference_checked = false;
};

/// Externally printed approximation values for some rows/models/fields.
struct ReferenceCell {
  std::optional<std::vector<std::string>> lower;
  std::optional<std::vector<std::string>> upper;
  std::optional<std::string> sigma;
};

struct ReferenceRow {
  std::vector<std::string> set;
  std::vector<std::pair<std::string, ReferenceCell>> models;
};

struct ReferenceTable {
  NeighborhoodKind kind = NeighborhoodKind::A;
  std::vector<ReferenceRow> rows;
};

inline ReferenceTable parse_reference_table(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": invalid JSON: " + e.what());
  }
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(origin + ": " + msg);
  };
  if (!doc.is_object()) throw fail("top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw fail("missing string field 'kind'");
  }
  ReferenceTable table;
  table.kind = parse_kind(doc["kind"].get<std::string>());
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw fail("missing array field 'rows'");
  }
  auto read_labels = [&](const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw fail(std::string(what) + " must be an array of labels");
    std::vector<std::string> out;
    for (const auto& item : j) {
      if (!item.is_string()) throw fail(std::string(what) + " must contain only strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  };
  for (const auto& jrow : doc["rows"]) {
    if (!jrow.is_object()) throw fail("each row must be an object");
    if (!jrow.contains("set")) throw fail("row is missing 'set'");
    ReferenceRow row;
    row.set = read_labels(jrow["set"], "'set'");
    if (!jrow.contains("models") || !jrow["models"].is_object()) {
      throw fail("row is missing object field 'models'");
    }
    for (const auto& [name, jcell] : jrow["models"].items()) {
      if (!jcell.is_object()) throw fail("model entry '" + name + "' must be an object");
      ReferenceCell cell;
      if (jcell.contains("lower")) cell.lower = read_labels(jcell["lower"], "'lower'");
      if (jcell.contains("upper")) cell.upper = read_labels(jcell["upper"], "'upper'");
      if (jcell.contains("sigma")) {
        if (!jcell["sigma"].is_string()) throw fail("'sigma' must be a string");
        cell.sigma = jcell["sigma"].get<std::string>();
      }
      row.models.emplace_back(name, std::move(cell));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline ReferenceTable load_reference_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open reference table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_reference_table(buf.str(), path);
}

namespace scan_detail {

inline OracleInstance make_oracle_instance(const Relation& relation, const Primal* primal) {
  OracleInstance inst;
  inst.n = static_cast<int>(relation.universe().size());
  for (const auto& [from, to] : relation.pairs()) {
    inst.pairs.emplace_back(static_cast<int>(from), static_cast<int>(to));
  }
  if (primal != nullptr) {
    for (const Subset& m : primal->family().members()) {
      std::set<int> s;
      for (std::size_t e : m.elements()) s.insert(static_cast<int>(e));
      inst.family.push_back(std::move(s));
    }
  }
  return inst;
}

inline char oracle_model_tag(ModelId m) {
  switch (m) {
    case ModelId::Yao: return 'y';
    case ModelId::N1: return '1';
    case ModelId::N2: return '2';
    case ModelId::N3: return '3';
    default: return '4';
  }
}

inline std::set<int> to_int_set(const Subset& s) {
  std::set<int> out;
  for (std::size_t e : s.elements()) out.insert(static_cast<int>(e));
  return out;
}

inline Subset from_int_set(const std::set<int>& s, std::size_t width) {
  Subset out = Subset::empty(width);
  for (int e : s) out = out.with(static_cast<std::size_t>(e));
  return out;
}

}  // namespace scan_detail

/// Recompute one cell through the oracle and compare; throws on divergence.
inline void oracle_cross_check(const OracleInstance& oinst, const ApproxResult& cell) {
  using namespace scan_detail;
  OracleResult expect =
      oracle_approx(oinst, oracle_model_tag(cell.model), to_char(cell.kind), to_int_set(cell.v));
  std::size_t width = cell.v.width();
  bool same = from_int_set(expect.lower, width) == cell.lower &&
              from_int_set(expect.upper, width) == cell.upper &&
              from_int_set(expect.boundary, width) == cell.boundary &&
              ((expect.accuracy.is_undefined() && cell.accuracy.is_undefined()) ||
               expect.accuracy == cell.accuracy);
  if (!same) {
    throw StructuralError("oracle divergence on model " + to_string(cell.model) + ", kind " +
                          std::string(1, to_char(cell.kind)));
  }
}

inline ScanTable scan_table(const Relation& relation, const Primal* primal,
                            NeighborhoodKind kind, const std::vector<ModelId>& models,
                            bool include_empty, const ReferenceTable* reference = nullptr) {
  const Universe& uni = relation.universe();
  std::size_t n = uni.size();
  if (n > kEnumerationCap) {
    throw CapacityError("scan enumerates all subsets; universe size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(kEnumerationCap));
  }
  if (models.empty()) throw StructuralError("scan requires at least one model");
  for (ModelId m : models) {
    if (m != ModelId::Yao && primal == nullptr) {
      throw StructuralError("model " + to_string(m) + " requires a primal");
    }
  }
  if (primal != nullptr && primal->width() != n) {
    throw StructuralError("primal universe does not match the relation's");
  }

  ScanTable table;
  table.kind = kind;
  table.models = models;

  std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  for (std::uint64_t m = include_empty ? 0 : 1; m < count; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [n](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return Subset(a, n).elements() < Subset(b, n).elements();
  });

  bool cross_check = n <= 16;  // the oracle's own cap
  std::optional<OracleInstance> oinst;
  if (cross_check) oinst = scan_detail::make_oracle_instance(relation, primal);

  for (std::uint64_t mask : masks) {
    ScanRow row;
    row.v = Subset(mask, n);
    for (ModelId m : models) {
      ApproxResult cell = approximate(relation, kind, m, primal, row.v);
      if (cross_check) oracle_cross_check(*oinst, cell);
      row.cells.push_back(std::move(cell));
    }
    table.rows.push_back(std::move(row));
  }

  if (reference != nullptr) {
    if (reference->kind != kind) {
      throw StructuralError("reference table is for kind " +
                            std::string(1, to_char(reference->kind)) + ", scan ran kind " +
                            std::string(1, to_char(kind)));
    }
    auto subset_of_labels = [&](const std::vector<std::string>& labels,
                                const char* what) -> Subset {
      try {
        return uni.subset(labels);
      } catch (const Error& e) {
        throw ParseError(std::string("reference ") + what + ": " + e.what());
      }
    };
    // resolve each reference row to a scanned row up front
    struct Resolved {
      const ReferenceRow* ref;
      std::size_t row_index;
    };
    std::vector<std::optional<Resolved>> by_row(table.rows.size());
    for (const ReferenceRow& rrow : reference->rows) {
      Subset v = subset_of_labels(rrow.set, "row set");
      bool placed = false;
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (table.rows[i].v == v) {
          by_row[i] = Resolved{&rrow, i};
          placed = true;
          break;
        }
      }
      if (!placed) {
        throw StructuralError("reference row " + uni.format(v) + " has no scanned counterpart");
      }
    }
    // erratum notes in (row, canonical model order, lower/upper/sigma) order
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (!by_row[i]) continue;
      const ReferenceRow& rrow = *by_row[i]->ref;
      const ScanRow& srow = table.rows[i];
      for (ModelId m : kAllModels) {
        const ReferenceCell* rcell = nullptr;
        for (const auto& [name, cell] : rrow.models) {
          if (name == to_string(m)) {
            rcell = &cell;
            break;
          }
        }
        if (rcell == nullptr) continue;
        const ApproxResult* scell = nullptr;
        for (std::size_t c = 0; c < models.size(); ++c) {
          if (models[c] == m) {
            scell = &srow.cells[c];
            break;
          }
        }
        if (scell == nullptr) {
          throw StructuralError("reference row " + uni.format(srow.v) + " mentions model " +
                                to_string(m) + " which was not scanned");
        }
        auto note_set = [&](const char* field, const std::vector<std::string>& printed,
                            const Subset& computed) {
          Subset p = subset_of_labels(printed, field);
          if (p == computed) return;
          table.errata.push_back(
              ErratumNote{srow.v, m, field, uni.format(p), uni.format(computed)});
        };
        if (rcell->lower) note_set("lower", *rcell->lower, scell->lower);
        if (rcell->upper) note_set("upper", *rcell->upper, scell->upper);
        if (rcell->sigma) {
          Rational printed = Rational::parse(*rcell->sigma);
          bool same = (printed.is_undefined() && scell->accuracy.is_undefined()) ||
                      printed == scell->accuracy;
          if (!same) {
            table.errata.push_back(ErratumNote{srow.v, m, "sigma", printed.to_string(),
                                               scell->accuracy.to_string()});
          }
        }
      }
    }
    table.reference_checked = true;
  }

  return table;
}

}  // namespace primrose
