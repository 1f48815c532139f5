// A relation plus an optional primal over one universe: the unit every
// approximation query, law check, scan, and search operates on.
#pragma once

#include <optional>
#include <utility>

#include "primrose/primal.hpp"
#include "primrose/relation.hpp"

namespace primrose {

/// One approximation-space instance. The relation owns the universe; the
/// primal is absent for Yao-only instances.
struct Instance {
  Relation relation;
  std::optional<Primal> primal;

  const Universe& universe() const { return relation.universe(); }

  friend bool operator==(const Instance& a, const Instance& b) {
    if (!(a.relation.universe() == b.relation.universe())) return false;
    if (a.relation.pairs() != b.relation.pairs()) return false;
    if (a.primal.has_value() != b.primal.has_value()) return false;
    if (a.primal && !(*a.primal == *b.primal)) return false;
    return true;
  }
};

}  // namespace primrose
