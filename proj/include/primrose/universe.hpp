// Finite universes (at most 64 labelled elements) and bitset-backed subsets.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/rational.hpp"

namespace primrose {

/// Default cap on universe size for operations that enumerate all subsets.
inline constexpr std::size_t kEnumerationCap = 20;

/// Subset of a fixed-width universe, stored as a 64-bit mask.
/// Element i corresponds to bit i. All binary operations require equal
/// widths; a mismatch is a structural error, not undefined behaviour.
class Subset {
 public:
  constexpr Subset() = default;

  constexpr Subset(std::uint64_t bits, std::size_t width) : bits_(bits), width_(check_width(width)) {
    if (width < 64 && (bits >> width) != 0) {
      throw StructuralError("subset has bits outside its universe");
    }
  }

  static constexpr Subset empty(std::size_t width) { return Subset(0, width); }

  static constexpr Subset full(std::size_t width) {
    return Subset(mask_of(width), width);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t width() const { return width_; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == mask_of(width_); }

  constexpr bool test(std::size_t i) const {
    check_index(i);
    return (bits_ >> i) & 1u;
  }

  /// Copy with element i added.
  constexpr Subset with(std::size_t i) const {
    check_index(i);
    return Subset(bits_ | (std::uint64_t{1} << i), width_);
  }

  /// Copy with element i removed.
  constexpr Subset without(std::size_t i) const {
    check_index(i);
    return Subset(bits_ & ~(std::uint64_t{1} << i), width_);
  }

  constexpr Subset complement() const {
    return Subset(~bits_ & mask_of(width_), width_);
  }

  constexpr bool subset_of(const Subset& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool intersects(const Subset& other) const {
    check_same(other);
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr Subset operator&(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & b.bits_, a.width_);
  }

  friend constexpr Subset operator|(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ | b.bits_, a.width_);
  }

  /// Set difference.
  friend constexpr Subset operator-(const Subset& a, const Subset& b) {
    a.check_same(b);
    return Subset(a.bits_ & ~b.bits_, a.width_);
  }

  friend constexpr bool operator==(const Subset& a, const Subset& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }

  /// Orders by width, then by mask value; usable as a map key.
  friend constexpr bool operator<(const Subset& a, const Subset& b) {
    if (a.width_ != b.width_) return a.width_ < b.width_;
    return a.bits_ < b.bits_;
  }

  /// Ascending element indices.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

 private:
  static constexpr std::uint64_t mask_of(std::size_t width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  static constexpr std::size_t check_width(std::size_t width) {
    if (width > 64) throw CapacityError("universe width exceeds 64 elements");
    return width;
  }

  constexpr void check_index(std::size_t i) const {
    if (i >= width_) throw StructuralError("element index outside universe");
  }

  constexpr void check_same(const Subset& other) const {
    if (width_ != other.width_) {
      throw StructuralError("subset width mismatch");
    }
  }

  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

/// Ordered list of distinct element labels; fixes the bit order of subsets.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw StructuralError("universe must contain at least one element");
    }
    if (labels_.size() > 64) {
      throw CapacityError("universe exceeds 64 elements");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw StructuralError("empty element label");
      auto [it, fresh] = index_.emplace(labels_[i], i);
      if (!fresh) throw StructuralError("duplicate element label: " + labels_[i]);
    }
  }

  std::size_t size() const { return labels_.size(); }

  const std::string& label(std::size_t i) const {
    if (i >= labels_.size()) throw StructuralError("element index outside universe");
    return labels_[i];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  bool has(const std::string& label) const { return index_.count(label) != 0; }

  std::size_t index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw StructuralError("unknown element label: " + label);
    return it->second;
  }

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }

  Subset subset(std::initializer_list<std::string> labels) const {
    std::uint64_t bits = 0;
    for (const auto& l : labels) bits |= std::uint64_t{1} << index(l);
    return Subset(bits, size());
  }

  Subset subset(const std::vector<std::string>& labels) const {
    std::uint64_t bits = 0;
    for (const auto& l : labels) bits |= std::uint64_t{1} << index(l);
    return Subset(bits, size());
  }

  /// "{a,b,c}" with elements in bit order; "{}" when empty.
  std::string format(const Subset& s) const {
    if (s.width() != size()) throw StructuralError("subset width mismatch");
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.elements()) {
      if (!first) out += ",";
      out += labels_[i];
      first = false;
    }
    out += "}";
    return out;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// All subsets of a width-n universe in ascending bit-pattern order.
/// Guarded by a cap because the result has 2^n entries.
inline std::vector<Subset> power_set(std::size_t width, std::size_t cap = kEnumerationCap) {
  if (width > cap) {
    throw CapacityError("power set enumeration over " + std::to_string(width) +
                        " elements exceeds cap " + std::to_string(cap));
  }
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
    out.emplace_back(bits, width);
  }
  return out;
}

inline std::vector<Subset> power_set(const Universe& u, std::size_t cap = kEnumerationCap) {
  return power_set(u.size(), cap);
}

/// |a| / |b| as an exact rational; undefined when b is empty.
inline Rational accuracy_ratio(const Subset& a, const Subset& b) {
  return Rational::ratio(a.count(), b.count());
}

}  // namespace primrose
