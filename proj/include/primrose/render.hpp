// Report rendering: every report type serializes to JSON (stable key order),
// TSV (one header row plus data rows; auxiliary blocks prefixed with '#'),
// and Markdown tables. Output is deterministic byte-for-byte for a given
// report: iteration follows the report's own ordering and nothing depends on
// locale, time, or addresses.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "primrose/errors.hpp"
#include "primrose/infosys.hpp"
#include "primrose/instance_io.hpp"
#include "primrose/laws.hpp"
#include "primrose/models.hpp"
#include "primrose/scan.hpp"
#include "primrose/search.hpp"

namespace primrose {

enum class Format { Json, Tsv, Md };

inline Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "tsv") return Format::Tsv;
  if (text == "md") return Format::Md;
  throw ParseError("unknown format '" + text + "', expected json, tsv or md");
}

namespace render_detail {

using ojson = nlohmann::ordered_json;

inline ojson labels_of(const Subset& s, const Universe& uni) {
  ojson arr = ojson::array();
  for (std::size_t e : s.elements()) arr.push_back(uni.label(e));
  return arr;
}

inline std::string kind_str(NeighborhoodKind k) { return std::string(1, to_char(k)); }

}  // namespace render_detail

// ---- JSON builders ---------------------------------------------------------

inline nlohmann::ordered_json approx_json(const ApproxResult& r, const Universe& uni) {
  using namespace render_detail;
  ojson out;
  out["model"] = to_string(r.model);
  out["kind"] = kind_str(r.kind);
  out["set"] = labels_of(r.v, uni);
  out["lower"] = labels_of(r.lower, uni);
  out["upper"] = labels_of(r.upper, uni);
  out["boundary"] = labels_of(r.boundary, uni);
  out["sigma"] = r.accuracy.to_string();
  return out;
}

inline nlohmann::ordered_json scan_json(const ScanTable& t, const Universe& uni) {
  using namespace render_detail;
  ojson out;
  out["kind"] = kind_str(t.kind);
  ojson models = ojson::array();
  for (ModelId m : t.models) models.push_back(to_string(m));
  out["models"] = models;
  ojson rows = ojson::array();
  for (const ScanRow& row : t.rows) {
    ojson jrow;
    jrow["set"] = labels_of(row.v, uni);
    ojson cells;
    for (const ApproxResult& cell : row.cells) {
      ojson jcell;
      jcell["lower"] = labels_of(cell.lower, uni);
      jcell["upper"] = labels_of(cell.upper, uni);
      jcell["boundary"] = labels_of(cell.boundary, uni);
      jcell["sigma"] = cell.accuracy.to_string();
      cells[to_string(cell.model)] = jcell;
    }
    jrow["cells"] = cells;
    rows.push_back(jrow);
  }
  out["rows"] = rows;
  if (t.reference_checked) {
    ojson errata = ojson::array();
    for (const ErratumNote& e : t.errata) {
      ojson je;
      je["set"] = labels_of(e.v, uni);
      je["model"] = to_string(e.model);
      je["field"] = e.field;
      je["printed"] = e.printed;
      je["computed"] = e.computed;
      errata.push_back(je);
    }
    out["errata"] = errata;
  }
  return out;
}

inline nlohmann::ordered_json law_reports_json(const std::vector<LawReport>& reports,
                                               const Universe& uni) {
  using namespace render_detail;
  ojson out;
  ojson jreports = ojson::array();
  std::size_t holds = 0, fails = 0, skipped = 0;
  for (const LawReport& r : reports) {
    ojson jr;
    jr["law"] = r.law;
    jr["category"] = to_string(r.law_kind);
    jr["kind"] = r.kind ? ojson(kind_str(*r.kind)) : ojson(nullptr);
    jr["verdict"] = to_string(r.verdict);
    if (r.verdict == Verdict::Skipped) jr["skip_reason"] = r.skip_reason;
    if (r.witness) {
      ojson jw;
      jw["kind"] = r.witness->kind ? ojson(kind_str(*r.witness->kind)) : ojson(nullptr);
      if (r.witness->v) jw["v"] = labels_of(*r.witness->v, uni);
      if (r.witness->w) jw["w"] = labels_of(*r.witness->w, uni);
      jw["detail"] = r.witness->detail;
      jr["witness"] = jw;
    }
    jreports.push_back(jr);
    switch (r.verdict) {
      case Verdict::Holds: ++holds; break;
      case Verdict::Fails: ++fails; break;
      default: ++skipped; break;
    }
  }
  out["reports"] = jreports;
  ojson summary;
  summary["holds"] = holds;
  summary["fails"] = fails;
  summary["skipped"] = skipped;
  out["summary"] = summary;
  return out;
}

inline nlohmann::ordered_json search_json(const CounterexampleReport& r) {
  using namespace render_detail;
  ojson out;
  out["target"] = r.target;
  ojson bounds;
  bounds["max_universe_size"] = r.bounds.max_universe_size;
  bounds["max_instances"] = r.bounds.max_instances;
  bounds["seed"] = r.bounds.seed;
  out["bounds"] = bounds;
  out["found"] = r.witness.has_value();
  out["instances_tried"] = r.instances_tried;
  out["exhausted"] = r.exhausted;
  if (r.witness) {
    const SearchWitness& w = *r.witness;
    const Universe& uni = w.instance.universe();
    ojson jw;
    jw["kind"] = kind_str(w.kind);
    jw["v"] = labels_of(w.v, uni);
    if (w.w) jw["w"] = labels_of(*w.w, uni);
    jw["detail"] = w.detail;
    jw["instance"] = serialize_instance(w.instance);
    out["witness"] = jw;
  }
  return out;
}

inline nlohmann::ordered_json decision_json(const DecisionReport& r, const InfoSystem& s) {
  using namespace render_detail;
  ojson out;
  out["kind"] = kind_str(r.kind);
  out["target"] = labels_of(r.target, s.objects);
  ojson entries = ojson::array();
  for (const DecisionEntry& e : r.entries) {
    ojson je;
    je["model"] = to_string(e.model);
    je["lower"] = labels_of(e.result.lower, s.objects);
    je["upper"] = labels_of(e.result.upper, s.objects);
    je["boundary"] = labels_of(e.result.boundary, s.objects);
    je["sigma"] = e.result.accuracy.to_string();
    je["definable"] = e.definable;
    je["accuracy_is_one"] = e.accuracy_is_one;
    entries.push_back(je);
  }
  out["entries"] = entries;
  ojson notes = ojson::array();
  for (const std::string& n : r.notes) notes.push_back(n);
  out["notes"] = notes;
  return out;
}

// ---- string renderers ------------------------------------------------------

namespace render_detail {

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

/// Markdown table row from cells.
inline std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const std::string& c : cells) out += " " + c + " |";
  return out + "\n";
}

inline std::string md_sep(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += " --- |";
  return out + "\n";
}

inline std::string tsv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += '\t';
    out += cells[i];
  }
  return out + "\n";
}

inline std::string witness_sets(const LawWitness& w, const Universe& uni) {
  std::string out;
  if (w.v) out += "V=" + uni.format(*w.v);
  if (w.w) out += (out.empty() ? "" : " ") + std::string("W=") + uni.format(*w.w);
  return out;
}

}  // namespace render_detail

inline std::string render_approx(const ApproxResult& r, const Universe& uni, Format f) {
  using namespace render_detail;
  if (f == Format::Json) return dump(approx_json(r, uni));
  std::vector<std::string> head = {"model", "kind", "set", "lower", "upper", "boundary", "sigma"};
  std::vector<std::string> row = {to_string(r.model),   kind_str(r.kind),
                                  uni.format(r.v),      uni.format(r.lower),
                                  uni.format(r.upper),  uni.format(r.boundary),
                                  r.accuracy.to_string()};
  if (f == Format::Tsv) return tsv_row(head) + tsv_row(row);
  return md_row(head) + md_sep(head.size()) + md_row(row);
}

inline std::string render_scan(const ScanTable& t, const Universe& uni, Format f) {
  using namespace render_detail;
  if (f == Format::Json) return dump(scan_json(t, uni));
  std::vector<std::string> head = {"set", "model", "lower", "upper", "boundary", "sigma"};
  std::string out;
  bool md = f == Format::Md;
  auto emit = [&](const std::vector<std::string>& cells) {
    out += md ? md_row(cells) : tsv_row(cells);
  };
  emit(head);
  if (md) out += md_sep(head.size());
  for (const ScanRow& row : t.rows) {
    for (const ApproxResult& cell : row.cells) {
      emit({uni.format(row.v), to_string(cell.model), uni.format(cell.lower),
            uni.format(cell.upper), uni.format(cell.boundary), cell.accuracy.to_string()});
    }
  }
  if (t.reference_checked) {
    if (md) {
      out += "\n### Errata\n\n";
      if (t.errata.empty()) {
        out += "No disagreements with the reference table.\n";
      } else {
        std::vector<std::string> ehead = {"set", "model", "field", "printed", "computed"};
        out += md_row(ehead) + md_sep(ehead.size());
        for (const ErratumNote& e : t.errata) {
          out += md_row(
              {uni.format(e.v), to_string(e.model), e.field, e.printed, e.computed});
        }
      }
    } else {
      out += "# errata: " + std::to_string(t.errata.size()) + "\n";
      if (!t.errata.empty()) {
        out += tsv_row({"set", "model", "field", "printed", "computed"});
        for (const ErratumNote& e : t.errata) {
          out += tsv_row({uni.format(e.v), to_string(e.model), e.field, e.printed, e.computed});
        }
      }
    }
  }
  return out;
}

inline std::string render_law_reports(const std::vector<LawReport>& reports, const Universe& uni,
                                      Format f) {
  using namespace render_detail;
  if (f == Format::Json) return dump(law_reports_json(reports, uni));
  std::vector<std::string> head = {"law", "category", "kind", "verdict", "detail"};
  std::string out;
  bool md = f == Format::Md;
  auto emit = [&](const std::vector<std::string>& cells) {
    out += md ? md_row(cells) : tsv_row(cells);
  };
  emit(head);
  if (md) out += md_sep(head.size());
  std::size_t holds = 0, fails = 0, skipped = 0;
  for (const LawReport& r : reports) {
    std::string detail;
    if (r.verdict == Verdict::Skipped) {
      detail = r.skip_reason;
      ++skipped;
    } else if (r.verdict == Verdict::Fails) {
      ++fails;
      if (r.witness) {
        std::string sets = witness_sets(*r.witness, uni);
        detail = sets.empty() ? r.witness->detail : sets + ": " + r.witness->detail;
      }
    } else {
      ++holds;
    }
    emit({r.law, to_string(r.law_kind), r.kind ? kind_str(*r.kind) : "-", to_string(r.verdict),
          detail});
  }
  std::string summary = "holds=" + std::to_string(holds) + " fails=" + std::to_string(fails) +
                        " skipped=" + std::to_string(skipped);
  out += md ? "\n" + summary + "\n" : "# " + summary + "\n";
  return out;
}

inline std::string render_search(const CounterexampleReport& r, Format f) {
  using namespace render_detail;
  if (f == Format::Json) return dump(search_json(r));
  if (f == Format::Tsv) {
    std::vector<std::string> head = {"target", "found", "instances_tried", "exhausted",
                                     "kind",   "v",     "w",               "detail"};
    std::vector<std::string> row = {r.target, r.witness ? "true" : "false",
                                    std::to_string(r.instances_tried),
                                    r.exhausted ? "true" : "false"};
    if (r.witness) {
      const Universe& uni = r.witness->instance.universe();
      row.push_back(kind_str(r.witness->kind));
      row.push_back(uni.format(r.witness->v));
      row.push_back(r.witness->w ? uni.format(*r.witness->w) : "-");
      row.push_back(r.witness->detail);
    } else {
      row.insert(row.end(), {"-", "-", "-", "-"});
    }
    return tsv_row(head) + tsv_row(row);
  }
  std::string out = "## Search: " + r.target + "\n\n";
  out += "- instances tried: " + std::to_string(r.instances_tried) + "\n";
  out += std::string("- exhausted: ") + (r.exhausted ? "yes" : "no") + "\n";
  if (r.witness) {
    const Universe& uni = r.witness->instance.universe();
    out += "- witness kind: " + kind_str(r.witness->kind) + "\n";
    out += "- witness V: " + uni.format(r.witness->v) + "\n";
    if (r.witness->w) out += "- witness W: " + uni.format(*r.witness->w) + "\n";
    out += "- detail: " + r.witness->detail + "\n\n";
    out += "```\n" + serialize_instance(r.witness->instance) + "```\n";
  } else {
    out += "- no witness found\n";
  }
  return out;
}

inline std::string render_decision(const DecisionReport& r, const InfoSystem& s, Format f) {
  using namespace render_detail;
  if (f == Format::Json) return dump(decision_json(r, s));
  const Universe& uni = s.objects;
  std::vector<std::string> head = {"model",    "lower", "upper",     "boundary",
                                   "sigma",    "definable", "accuracy_is_one"};
  std::string out;
  bool md = f == Format::Md;
  if (md) {
    out += "Target " + uni.format(r.target) + ", kind " + kind_str(r.kind) + "\n\n";
  } else {
    out += "# target=" + uni.format(r.target) + " kind=" + kind_str(r.kind) + "\n";
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    out += md ? md_row(cells) : tsv_row(cells);
  };
  emit(head);
  if (md) out += md_sep(head.size());
  for (const DecisionEntry& e : r.entries) {
    emit({to_string(e.model), uni.format(e.result.lower), uni.format(e.result.upper),
          uni.format(e.result.boundary), e.result.accuracy.to_string(),
          e.definable ? "true" : "false", e.accuracy_is_one ? "true" : "false"});
  }
  for (const std::string& n : r.notes) {
    out += md ? "\n> " + n + "\n" : "# note: " + n + "\n";
  }
  return out;
}

}  // namespace primrose
