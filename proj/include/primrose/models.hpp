// The five approximation models over neighborhood maps.
//
// Given a relation neighborhood w(x) of one kind and a target set V:
//   Yao: lower = { x : w(x) subseteq V },    upper = { x : w(x) meets V }
//   N1:  lower = { x : w(x) & V' in P },     upper = { x : w(x) & V not in P }
//   N2:  lower = N1 lower,                   upper = V | N1 upper
//   N3:  lower = union of w(x) with w(x) & V' in P,  upper = (lower(V'))'
//   N4:  upper = union of w(x) with w(x) & V not in P, lower = (upper(V'))'
//
// Accuracy:
//   Yao: |lower| / |upper|, undefined when upper is empty.
//   N1, N3, N4: |lower & V| / |upper | V|;  N2: |lower & V| / |upper|.
//   For V = {} the primal-based accuracies are 1 by convention (the only
//   raw 0/0 case); Yao keeps the undefined value whenever upper is empty.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/primal.hpp"
#include "primrose/rational.hpp"
#include "primrose/relation.hpp"
#include "primrose/universe.hpp"

namespace primrose {

enum class ModelId { Yao, N1, N2, N3, N4 };

inline constexpr ModelId kAllModels[] = {ModelId::Yao, ModelId::N1, ModelId::N2,
                                         ModelId::N3, ModelId::N4};
inline constexpr ModelId kPrimalModels[] = {ModelId::N1, ModelId::N2, ModelId::N3,
                                            ModelId::N4};

inline std::string to_string(ModelId m) {
  switch (m) {
    case ModelId::Yao: return "yao";
    case ModelId::N1: return "n1";
    case ModelId::N2: return "n2";
    case ModelId::N3: return "n3";
    case ModelId::N4: return "n4";
  }
  throw StructuralError("invalid model id");
}

inline ModelId parse_model(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (text == "yao") return ModelId::Yao;
  if (text == "n1") return ModelId::N1;
  if (text == "n2") return ModelId::N2;
  if (text == "n3") return ModelId::N3;
  if (text == "n4") return ModelId::N4;
  throw StructuralError("unknown model: " + text + " (expected yao, n1, n2, n3 or n4)");
}

/// Approximation of one target set under one model and kind.
struct ApproxResult {
  ModelId model = ModelId::Yao;
  NeighborhoodKind kind = NeighborhoodKind::A;
  Subset v;
  Subset lower;
  Subset upper;
  Subset boundary;  // upper - lower
  Rational accuracy;
};

/// A set is definable when its boundary region is empty.
inline bool definable(const ApproxResult& r) { return r.boundary.is_empty(); }

namespace detail {

inline void check_rows(const std::vector<Subset>& rows, const Subset& v) {
  if (rows.size() != v.width()) {
    throw StructuralError("neighborhood map width mismatch");
  }
}

inline Subset yao_lower_set(const std::vector<Subset>& rows, const Subset& v) {
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].subset_of(v)) out = out.with(i);
  }
  return out;
}

inline Subset yao_upper_set(const std::vector<Subset>& rows, const Subset& v) {
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].intersects(v)) out = out.with(i);
  }
  return out;
}

inline Subset n1_lower_set(const std::vector<Subset>& rows, const Primal& p, const Subset& v) {
  Subset cv = v.complement();
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (p.contains(rows[i] & cv)) out = out.with(i);
  }
  return out;
}

inline Subset n1_upper_set(const std::vector<Subset>& rows, const Primal& p, const Subset& v) {
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!p.contains(rows[i] & v)) out = out.with(i);
  }
  return out;
}

inline Subset n3_lower_set(const std::vector<Subset>& rows, const Primal& p, const Subset& v) {
  Subset cv = v.complement();
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (p.contains(rows[i] & cv)) out = out | rows[i];
  }
  return out;
}

inline Subset n4_upper_set(const std::vector<Subset>& rows, const Primal& p, const Subset& v) {
  Subset out = Subset::empty(v.width());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!p.contains(rows[i] & v)) out = out | rows[i];
  }
  return out;
}

inline Rational primal_accuracy(const Subset& lower, const Subset& upper_or_union,
                                const Subset& v) {
  if (v.is_empty()) return Rational::ratio(1, 1);
  return accuracy_ratio(lower & v, upper_or_union);
}

inline ApproxResult finish(ModelId model, NeighborhoodKind kind, Subset v, Subset lower,
                           Subset upper, Rational accuracy) {
  return ApproxResult{model, kind, v, lower, upper, upper - lower, accuracy};
}

}  // namespace detail

/// Yao approximation from a precomputed neighborhood map (rows[i] = w(i)).
inline ApproxResult yao_approx(const std::vector<Subset>& rows, NeighborhoodKind kind,
                               const Subset& v) {
  detail::check_rows(rows, v);
  Subset lower = detail::yao_lower_set(rows, v);
  Subset upper = detail::yao_upper_set(rows, v);
  Rational sigma = upper.is_empty() ? Rational::undefined() : accuracy_ratio(lower, upper);
  return detail::finish(ModelId::Yao, kind, v, lower, upper, sigma);
}

inline ApproxResult n1_approx(const std::vector<Subset>& rows, const Primal& p,
                              NeighborhoodKind kind, const Subset& v) {
  detail::check_rows(rows, v);
  Subset lower = detail::n1_lower_set(rows, p, v);
  Subset upper = detail::n1_upper_set(rows, p, v);
  return detail::finish(ModelId::N1, kind, v, lower, upper,
                        detail::primal_accuracy(lower, upper | v, v));
}

inline ApproxResult n2_approx(const std::vector<Subset>& rows, const Primal& p,
                              NeighborhoodKind kind, const Subset& v) {
  detail::check_rows(rows, v);
  Subset lower = detail::n1_lower_set(rows, p, v);
  Subset upper = v | detail::n1_upper_set(rows, p, v);
  return detail::finish(ModelId::N2, kind, v, lower, upper,
                        detail::primal_accuracy(lower, upper, v));
}

inline ApproxResult n3_approx(const std::vector<Subset>& rows, const Primal& p,
                              NeighborhoodKind kind, const Subset& v) {
  detail::check_rows(rows, v);
  Subset lower = detail::n3_lower_set(rows, p, v);
  Subset upper = detail::n3_lower_set(rows, p, v.complement()).complement();
  return detail::finish(ModelId::N3, kind, v, lower, upper,
                        detail::primal_accuracy(lower, upper | v, v));
}

inline ApproxResult n4_approx(const std::vector<Subset>& rows, const Primal& p,
                              NeighborhoodKind kind, const Subset& v) {
  detail::check_rows(rows, v);
  Subset upper = detail::n4_upper_set(rows, p, v);
  Subset lower = detail::n4_upper_set(rows, p, v.complement()).complement();
  return detail::finish(ModelId::N4, kind, v, lower, upper,
                        detail::primal_accuracy(lower, upper | v, v));
}

/// Dispatch on model id. The primal may be null for Yao and is required
/// (and must match the universe width) for N1 through N4.
inline ApproxResult approximate(const Relation& r, NeighborhoodKind kind, ModelId model,
                                const Primal* p, const Subset& v) {
  if (v.width() != r.universe().size()) {
    throw StructuralError("target set width does not match the universe");
  }
  auto rows = r.neighborhood_map(kind);
  if (model == ModelId::Yao) return yao_approx(rows, kind, v);
  if (p == nullptr) {
    throw StructuralError("model " + to_string(model) + " requires a primal");
  }
  if (p->width() != r.universe().size()) {
    throw StructuralError("primal width does not match the universe");
  }
  switch (model) {
    case ModelId::N1: return n1_approx(rows, *p, kind, v);
    case ModelId::N2: return n2_approx(rows, *p, kind, v);
    case ModelId::N3: return n3_approx(rows, *p, kind, v);
    case ModelId::N4: return n4_approx(rows, *p, kind, v);
    case ModelId::Yao: break;
  }
  throw StructuralError("invalid model id");
}

}  // namespace primrose
