// Independent reference implementation of all five models.
//
// This is a deliberate re-derivation used to cross-check the bitset-based
// models: it works on std::set<int> values and a plain pair list, shares
// nothing with Relation/Primal/models beyond the Rational value type, and
// favours a literal transcription of the defining formulas over speed.
// Intended for tests and scan cross-checks on small universes.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/rational.hpp"

namespace primrose {

/// Instance description for the oracle: n elements named 0..n-1, a relation
/// as an explicit pair list, and a primal as an explicit member list.
struct OracleInstance {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::set<int>> family;
};

struct OracleResult {
  std::set<int> lower;
  std::set<int> upper;
  std::set<int> boundary;
  Rational accuracy;
};

namespace oracle_detail {

inline std::set<int> neighborhood(const OracleInstance& inst, char kind, int x) {
  std::set<int> succ, pred;
  for (auto [from, to] : inst.pairs) {
    if (from == x) succ.insert(to);
    if (to == x) pred.insert(from);
  }
  std::set<int> out;
  switch (kind) {
    case 'a': return succ;
    case 'b': return pred;
    case 'i':
      std::set_intersection(succ.begin(), succ.end(), pred.begin(), pred.end(),
                            std::inserter(out, out.end()));
      return out;
    case 'u':
      std::set_union(succ.begin(), succ.end(), pred.begin(), pred.end(),
                     std::inserter(out, out.end()));
      return out;
    default: throw StructuralError("oracle: unknown kind");
  }
}

inline std::set<int> complement(const OracleInstance& inst, const std::set<int>& v) {
  std::set<int> out;
  for (int i = 0; i < inst.n; ++i) {
    if (v.count(i) == 0) out.insert(i);
  }
  return out;
}

inline std::set<int> intersect(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline std::set<int> unite(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline std::set<int> minus(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool in_family(const OracleInstance& inst, const std::set<int>& s) {
  return std::find(inst.family.begin(), inst.family.end(), s) != inst.family.end();
}

inline bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace oracle_detail

/// model: 'y' (Yao), '1'..'4' (the primal-based models). kind: a, b, i, u.
inline OracleResult oracle_approx(const OracleInstance& inst, char model, char kind,
                                  const std::set<int>& v) {
  using namespace oracle_detail;
  if (inst.n < 0 || inst.n > 16) throw CapacityError("oracle universe cap is 16");
  for (int x : v) {
    if (x < 0 || x >= inst.n) throw StructuralError("oracle: set element outside universe");
  }

  std::set<int> everything;
  for (int i = 0; i < inst.n; ++i) everything.insert(i);
  std::set<int> cv = complement(inst, v);

  std::set<int> lower, upper;
  switch (model) {
    case 'y': {
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (subset(w, v)) lower.insert(x);
        if (!intersect(w, v).empty()) upper.insert(x);
      }
      break;
    }
    case '1': {
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (in_family(inst, intersect(w, cv))) lower.insert(x);
        if (!in_family(inst, intersect(w, v))) upper.insert(x);
      }
      break;
    }
    case '2': {
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (in_family(inst, intersect(w, cv))) lower.insert(x);
        if (!in_family(inst, intersect(w, v))) upper.insert(x);
      }
      upper = unite(v, upper);
      break;
    }
    case '3': {
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (in_family(inst, intersect(w, cv))) lower = unite(lower, w);
      }
      // upper3(V) = (lower3(V'))'
      std::set<int> lower_of_cv;
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (in_family(inst, intersect(w, v))) lower_of_cv = unite(lower_of_cv, w);
      }
      upper = minus(everything, lower_of_cv);
      break;
    }
    case '4': {
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (!in_family(inst, intersect(w, v))) upper = unite(upper, w);
      }
      // lower4(V) = (upper4(V'))'
      std::set<int> upper_of_cv;
      for (int x = 0; x < inst.n; ++x) {
        std::set<int> w = neighborhood(inst, kind, x);
        if (!in_family(inst, intersect(w, cv))) upper_of_cv = unite(upper_of_cv, w);
      }
      lower = minus(everything, upper_of_cv);
      break;
    }
    default: throw StructuralError("oracle: unknown model");
  }

  OracleResult out;
  out.lower = lower;
  out.upper = upper;
  out.boundary = minus(upper, lower);
  if (model == 'y') {
    out.accuracy = upper.empty() ? Rational::undefined()
                                 : Rational::ratio(lower.size(), upper.size());
  } else if (v.empty()) {
    out.accuracy = Rational::ratio(1, 1);
  } else if (model == '2') {
    out.accuracy = Rational::ratio(intersect(lower, v).size(), upper.size());
  } else {
    out.accuracy = Rational::ratio(intersect(lower, v).size(), unite(upper, v).size());
  }
  return out;
}

}  // namespace primrose
