// Exact nonnegative rational numbers with an explicit undefined state.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "primrose/errors.hpp"

namespace primrose {

/// Value of an accuracy measure: an exact nonnegative rational in lowest
/// terms, or the distinguished undefined value (used when a denominator
/// such as |upper(V)| is zero).
///
/// Undefined values compare unordered against everything (including other
/// undefined values) under <=>, and equal only to other undefined values
/// under ==.
class Rational {
 public:
  /// Zero.
  constexpr Rational() = default;

  /// num/den reduced to lowest terms; den == 0 yields the undefined value.
  static constexpr Rational ratio(std::uint64_t num, std::uint64_t den) {
    Rational r;
    if (den == 0) {
      r.undefined_ = true;
      r.num_ = 0;
      r.den_ = 1;
      return r;
    }
    std::uint64_t g = std::gcd(num, den);
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }

  static constexpr Rational undefined() { return ratio(0, 0); }

  constexpr bool is_undefined() const { return undefined_; }

  /// Numerator in lowest terms. Throws for the undefined value.
  constexpr std::uint64_t num() const {
    require_defined();
    return num_;
  }

  /// Denominator in lowest terms (>= 1). Throws for the undefined value.
  constexpr std::uint64_t den() const {
    require_defined();
    return den_;
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    if (a.undefined_ || b.undefined_) return a.undefined_ && b.undefined_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Partial order: any comparison involving an undefined value is unordered.
  friend constexpr std::partial_ordering operator<=>(const Rational& a,
                                                     const Rational& b) {
    if (a.undefined_ || b.undefined_) return std::partial_ordering::unordered;
    // Cross-multiplication; operands here stay far below 2^64 but the
    // wide type keeps the comparison safe for arbitrary stored values.
    auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::partial_ordering::less;
    if (lhs > rhs) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }

  /// "undefined", "0", "1", "2/3", ... Integers print without a slash.
  std::string to_string() const {
    if (undefined_) return "undefined";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Inverse of to_string; accepts exactly its output grammar.
  static Rational parse(const std::string& text) {
    if (text == "undefined") return undefined();
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return ratio(parse_u64(text), 1);
      }
      std::uint64_t num = parse_u64(text.substr(0, slash));
      std::uint64_t den = parse_u64(text.substr(slash + 1));
      if (den == 0) throw ParseError("rational denominator is zero: " + text);
      return ratio(num, den);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational: " + text);
    } catch (const std::out_of_range&) {
      throw ParseError("rational out of range: " + text);
    }
  }

 private:
  constexpr void require_defined() const {
    if (undefined_) throw StructuralError("accuracy value is undefined");
  }

  static std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(s);
    }
    return std::stoull(s);
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  bool undefined_ = false;
};

}  // namespace primrose
