// Binary relations over a universe and the four neighborhood operators.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/universe.hpp"

namespace primrose {

/// Neighborhood operators derived from a relation:
///   A: successors   w_a(x) = { y : (x,y) in R }
///   B: predecessors w_b(x) = { y : (y,x) in R }
///   I: w_a and w_b intersected
///   U: w_a and w_b united
enum class NeighborhoodKind { A, B, I, U };

inline constexpr NeighborhoodKind kAllKinds[] = {
    NeighborhoodKind::A, NeighborhoodKind::B, NeighborhoodKind::I,
    NeighborhoodKind::U};

inline char to_char(NeighborhoodKind k) {
  switch (k) {
    case NeighborhoodKind::A: return 'a';
    case NeighborhoodKind::B: return 'b';
    case NeighborhoodKind::I: return 'i';
    case NeighborhoodKind::U: return 'u';
  }
  throw StructuralError("invalid neighborhood kind");
}

inline NeighborhoodKind parse_kind(const std::string& text) {
  if (text == "a") return NeighborhoodKind::A;
  if (text == "b") return NeighborhoodKind::B;
  if (text == "i") return NeighborhoodKind::I;
  if (text == "u") return NeighborhoodKind::U;
  throw StructuralError("unknown neighborhood kind: " + text +
                        " (expected a, b, i or u)");
}

/// Binary relation stored as per-element successor and predecessor masks.
/// Duplicate pairs collapse; pair order never matters.
class Relation {
 public:
  Relation(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
      : universe_(std::move(universe)),
        succ_(universe_.size(), Subset::empty(universe_.size())),
        pred_(universe_.size(), Subset::empty(universe_.size())) {
    for (auto [from, to] : pairs) {
      if (from >= universe_.size() || to >= universe_.size()) {
        throw StructuralError("relation pair outside universe");
      }
      succ_[from] = succ_[from].with(to);
      pred_[to] = pred_[to].with(from);
    }
  }

  Relation(Universe universe, const std::vector<std::pair<std::string, std::string>>& pairs)
      : Relation(universe, to_indices(universe, pairs)) {}

  /// Relation from a row-major adjacency mask: bit i*n+j means (i,j).
  /// Usable for universes of at most 8 elements.
  static Relation from_mask(Universe universe, std::uint64_t mask) {
    std::size_t n = universe.size();
    if (n * n > 64) throw CapacityError("adjacency mask needs more than 64 bits");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> (i * n + j)) & 1u) pairs.emplace_back(i, j);
      }
    }
    return Relation(std::move(universe), pairs);
  }

  const Universe& universe() const { return universe_; }

  bool contains(std::size_t from, std::size_t to) const {
    if (from >= universe_.size()) throw StructuralError("element index outside universe");
    return succ_[from].test(to);
  }

  Subset successors(std::size_t i) const {
    check_index(i);
    return succ_[i];
  }

  Subset predecessors(std::size_t i) const {
    check_index(i);
    return pred_[i];
  }

  Subset neighborhood(NeighborhoodKind kind, std::size_t i) const {
    check_index(i);
    switch (kind) {
      case NeighborhoodKind::A: return succ_[i];
      case NeighborhoodKind::B: return pred_[i];
      case NeighborhoodKind::I: return succ_[i] & pred_[i];
      case NeighborhoodKind::U: return succ_[i] | pred_[i];
    }
    throw StructuralError("invalid neighborhood kind");
  }

  /// Neighborhoods of every element under one kind, indexed by element.
  std::vector<Subset> neighborhood_map(NeighborhoodKind kind) const {
    std::vector<Subset> rows;
    rows.reserve(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      rows.push_back(neighborhood(kind, i));
    }
    return rows;
  }

  bool reflexive() const {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (!succ_[i].test(i)) return false;
    }
    return true;
  }

  /// Every neighborhood of the given kind is nonempty.
  bool serial(NeighborhoodKind kind) const {
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (neighborhood(kind, i).is_empty()) return false;
    }
    return true;
  }

  /// Sorted pair list (lexicographic), the canonical external form.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      for (std::size_t j : succ_[i].elements()) out.emplace_back(i, j);
    }
    return out;
  }

 private:
  static std::vector<std::pair<std::size_t, std::size_t>> to_indices(
      const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(pairs.size());
    for (const auto& [from, to] : pairs) out.emplace_back(u.index(from), u.index(to));
    return out;
  }

  void check_index(std::size_t i) const {
    if (i >= universe_.size()) throw StructuralError("element index outside universe");
  }

  Universe universe_;
  std::vector<Subset> succ_;
  std::vector<Subset> pred_;
};

}  // namespace primrose
