// Primal set families: validation, constructors, union.
//
// A family P of subsets of a universe X is a primal when
//   (a) X itself is not a member,
//   (b) A & B in P implies A in P or B in P (equivalently: non-members are
//       closed under pairwise intersection), and
//   (c) P is downward closed.
// The weak level checks (a) and (c) only; the strict level checks all three.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primrose/errors.hpp"
#include "primrose/set_family.hpp"
#include "primrose/universe.hpp"

namespace primrose {

/// Cap on universe width for the strict splitting check, which enumerates
/// every subset of the universe to find non-members.
inline constexpr std::size_t kStrictValidationCap = 16;

enum class ValidationLevel { Weak, Strict };

inline std::string to_string(ValidationLevel level) {
  return level == ValidationLevel::Strict ? "strict" : "weak";
}

/// Two non-members whose intersection is a member (axiom (b) violation).
struct SplittingWitness {
  Subset a;
  Subset b;
};

/// A member and one of its subsets that is missing (axiom (c) violation).
struct DownwardWitness {
  Subset member;
  Subset missing_subset;
};

struct ValidationReport {
  ValidationLevel level = ValidationLevel::Weak;
  bool proper = true;     // axiom (a)
  bool downward = true;   // axiom (c)
  bool splitting = true;  // axiom (b); only examined at the strict level
  bool splitting_checked = false;
  bool empty_family = false;  // valid but degenerate; worth surfacing
  std::optional<SplittingWitness> splitting_witness;
  std::optional<DownwardWitness> downward_witness;

  bool ok() const { return proper && downward && splitting; }
};

/// Validate the primal axioms at the requested level. Witnesses are the
/// first violations in ascending bit-pattern scan order.
inline ValidationReport validate_family(const SetFamily& family, ValidationLevel level,
                                        std::size_t strict_cap = kStrictValidationCap) {
  ValidationReport report;
  report.level = level;
  report.empty_family = family.empty();
  std::size_t n = family.width();

  report.proper = !family.contains(Subset::full(n));

  for (const Subset& member : family.members()) {
    std::uint64_t bits = member.bits();
    // Submasks in descending order, then the empty set.
    std::uint64_t sub = (bits - 1) & bits;
    for (; bits != 0; sub = (sub - 1) & bits) {
      if (!family.contains(Subset(sub, n))) {
        report.downward = false;
        report.downward_witness = DownwardWitness{member, Subset(sub, n)};
        break;
      }
      if (sub == 0) break;
    }
    if (!report.downward) break;
  }

  if (level == ValidationLevel::Strict) {
    if (n > strict_cap) {
      throw CapacityError("strict primal validation over " + std::to_string(n) +
                          " elements exceeds cap " + std::to_string(strict_cap));
    }
    report.splitting_checked = true;
    std::vector<std::uint64_t> non_members;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (!family.contains(Subset(bits, n))) non_members.push_back(bits);
    }
    for (std::size_t i = 0; i < non_members.size() && report.splitting; ++i) {
      for (std::size_t j = i; j < non_members.size(); ++j) {
        if (family.contains(Subset(non_members[i] & non_members[j], n))) {
          report.splitting = false;
          report.splitting_witness =
              SplittingWitness{Subset(non_members[i], n), Subset(non_members[j], n)};
          break;
        }
      }
    }
  }

  return report;
}

/// Two members whose union is missing (ideal union-closure violation).
struct UnionWitness {
  Subset a;
  Subset b;
};

struct IdealReport {
  bool union_closed = true;
  bool downward = true;
  std::optional<UnionWitness> union_witness;
  std::optional<DownwardWitness> downward_witness;

  bool ok() const { return union_closed && downward; }
};

/// Validate the ideal axioms: closure under pairwise union plus downward
/// closure. (No properness requirement; the full power set is an ideal.)
inline IdealReport validate_ideal(const SetFamily& family) {
  IdealReport report;
  std::size_t n = family.width();

  auto members = family.members();
  for (std::size_t i = 0; i < members.size() && report.union_closed; ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) {
        report.union_closed = false;
        report.union_witness = UnionWitness{members[i], members[j]};
        break;
      }
    }
  }

  ValidationReport weak = validate_family(family, ValidationLevel::Weak);
  report.downward = weak.downward;
  report.downward_witness = weak.downward_witness;
  // validate_family also checks properness, which ideals do not require.
  return report;
}

/// A validated primal family tagged with the level it was validated at.
class Primal {
 public:
  Primal(SetFamily family, ValidationLevel level) : family_(std::move(family)), level_(level) {
    ValidationReport report = validate_family(family_, level);
    if (!report.ok()) {
      throw StructuralError("family violates the " + to_string(level) +
                            " primal axioms: " + describe_failure(report));
    }
  }

  const SetFamily& family() const { return family_; }
  ValidationLevel level() const { return level_; }
  std::size_t width() const { return family_.width(); }
  bool contains(const Subset& s) const { return family_.contains(s); }

  /// True for the degenerate empty family (valid, but every lower
  /// approximation it induces is empty).
  bool degenerate() const { return family_.empty(); }

  friend bool operator==(const Primal& a, const Primal& b) {
    return a.family_ == b.family_ && a.level_ == b.level_;
  }

  /// Union of two primals over the same universe. The result carries the
  /// weaker of the two input levels and is re-validated at that level.
  /// Downward closure and properness are preserved by unions, and non-members
  /// of the union are non-members of both operands, so their intersections
  /// stay out of both; the strict tag therefore survives when both operands
  /// carry it. Above the strict enumeration cap that argument stands in for
  /// the axiom-(b) re-check.
  friend Primal union_primal(const Primal& a, const Primal& b) {
    if (a.width() != b.width()) {
      throw StructuralError("primal union across different universes");
    }
    SetFamily merged = a.family_.united_with(b.family_);
    ValidationLevel level = (a.level_ == ValidationLevel::Strict &&
                             b.level_ == ValidationLevel::Strict)
                                ? ValidationLevel::Strict
                                : ValidationLevel::Weak;
    ValidationLevel recheck = level;
    if (recheck == ValidationLevel::Strict && merged.width() > kStrictValidationCap) {
      recheck = ValidationLevel::Weak;
    }
    ValidationReport report = validate_family(merged, recheck);
    if (!report.ok()) {
      throw StructuralError("primal union lost the " + to_string(recheck) +
                            " axioms: " + describe_failure(report));
    }
    return Primal(std::move(merged), level, trusted_tag{});
  }

 private:
  struct trusted_tag {};
  Primal(SetFamily family, ValidationLevel level, trusted_tag)
      : family_(std::move(family)), level_(level) {}

  static std::string describe_failure(const ValidationReport& r) {
    if (!r.proper) return "the whole universe is a member";
    if (!r.downward) return "not downward closed";
    return "two non-members intersect to a member";
  }

  SetFamily family_;
  ValidationLevel level_;
};

/// Result of a non-throwing construction attempt.
struct PrimalResult {
  std::optional<Primal> primal;
  ValidationReport report;
};

inline PrimalResult make_primal(SetFamily family, ValidationLevel level) {
  ValidationReport report = validate_family(family, level);
  PrimalResult result{std::nullopt, report};
  if (report.ok()) result.primal = Primal(std::move(family), level);
  return result;
}

inline PrimalResult make_primal_from_antichain(std::size_t width, const std::vector<Subset>& seeds,
                                               ValidationLevel level) {
  return make_primal(SetFamily::downward_closure(width, seeds), level);
}

/// P(X) minus the universe itself: the unique maximal primal (strict).
inline Primal power_minus_universe(std::size_t width, std::size_t cap = kEnumerationCap) {
  SetFamily family(width);
  for (const Subset& s : power_set(width, cap)) {
    if (!s.is_full()) family.insert(s);
  }
  return Primal(std::move(family), ValidationLevel::Strict);
}

/// All subsets avoiding one fixed element (strict).
inline Primal fixed_point_free(std::size_t width, std::size_t element,
                               std::size_t cap = kEnumerationCap) {
  if (element >= width) throw StructuralError("element index outside universe");
  SetFamily family(width);
  for (const Subset& s : power_set(width, cap)) {
    if (!s.test(element)) family.insert(s);
  }
  return Primal(std::move(family), ValidationLevel::Strict);
}

}  // namespace primrose
