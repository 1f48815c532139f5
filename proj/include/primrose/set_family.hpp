// Families of subsets over a fixed-width universe.
#pragma once

#include <set>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/universe.hpp"

namespace primrose {

/// Finite family of subsets, all of one width. Membership is by value;
/// iteration is always in ascending bit-pattern order, so every family
/// operation is deterministic.
class SetFamily {
 public:
  explicit SetFamily(std::size_t width) : width_(width) {
    if (width > 64) throw CapacityError("universe width exceeds 64 elements");
  }

  SetFamily(std::size_t width, const std::vector<Subset>& members) : SetFamily(width) {
    for (const auto& m : members) insert(m);
  }

  std::size_t width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  void insert(const Subset& s) {
    check_width(s);
    members_.insert(s.bits());
  }

  void erase(const Subset& s) {
    check_width(s);
    members_.erase(s.bits());
  }

  bool contains(const Subset& s) const {
    check_width(s);
    return members_.count(s.bits()) != 0;
  }

  /// Members in ascending bit-pattern order.
  std::vector<Subset> members() const {
    std::vector<Subset> out;
    out.reserve(members_.size());
    for (std::uint64_t bits : members_) out.emplace_back(bits, width_);
    return out;
  }

  /// Members with no proper superset in the family, ascending.
  std::vector<Subset> maximal_members() const {
    std::vector<Subset> out;
    for (std::uint64_t bits : members_) {
      bool maximal = true;
      for (std::uint64_t other : members_) {
        if (other != bits && (bits & ~other) == 0) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.emplace_back(bits, width_);
    }
    return out;
  }

  /// True if every subset of every member is itself a member.
  bool downward_closed() const {
    for (std::uint64_t bits : members_) {
      for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
        if (members_.count(sub & bits) == 0) return false;
      }
      if (bits != 0 && members_.count(0) == 0) return false;
    }
    return true;
  }

  /// Downward closure of the given seed sets. Each seed of k elements
  /// contributes 2^k subsets, so seeds are capped like other enumerations.
  static SetFamily downward_closure(std::size_t width, const std::vector<Subset>& seeds,
                                    std::size_t cap = kEnumerationCap) {
    SetFamily out(width);
    for (const auto& seed : seeds) {
      if (seed.width() != width) throw StructuralError("subset width mismatch");
      if (seed.count() > cap) {
        throw CapacityError("downward closure of a " + std::to_string(seed.count()) +
                            "-element set exceeds cap " + std::to_string(cap));
      }
      std::uint64_t bits = seed.bits();
      std::uint64_t sub = bits;
      while (true) {
        out.members_.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & bits;
      }
    }
    return out;
  }

  SetFamily united_with(const SetFamily& other) const {
    if (width_ != other.width_) throw StructuralError("family width mismatch");
    SetFamily out(width_);
    out.members_ = members_;
    out.members_.insert(other.members_.begin(), other.members_.end());
    return out;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.width_ == b.width_ && a.members_ == b.members_;
  }

 private:
  void check_width(const Subset& s) const {
    if (s.width() != width_) throw StructuralError("subset width mismatch");
  }

  std::size_t width_;
  std::set<std::uint64_t> members_;
};

}  // namespace primrose
