#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primrose/primal.hpp"

using namespace primrose;
using test_helpers::fixture;

namespace {

SetFamily family_of_masks(std::size_t width, std::initializer_list<std::uint64_t> masks) {
  SetFamily f(width);
  for (std::uint64_t m : masks) f.insert(Subset(m, width));
  return f;
}

/// Brute-force check of the intersection-splitting axiom (b).
bool splitting_by_brute_force(const SetFamily& f) {
  auto all = power_set(f.width());
  for (const Subset& a : all) {
    for (const Subset& b : all) {
      if (f.contains(a & b) && !f.contains(a) && !f.contains(b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("weak validation checks properness and downward closure", "[primal]") {
  SetFamily good = family_of_masks(3, {0b000, 0b001, 0b010});
  CHECK(validate_family(good, ValidationLevel::Weak).ok());

  SetFamily improper = family_of_masks(3, {0b000, 0b111});
  auto r1 = validate_family(improper, ValidationLevel::Weak);
  CHECK_FALSE(r1.ok());
  CHECK_FALSE(r1.proper);

  SetFamily gap = family_of_masks(3, {0b000, 0b011});  // missing {e1} and {e2}
  auto r2 = validate_family(gap, ValidationLevel::Weak);
  CHECK_FALSE(r2.ok());
  CHECK_FALSE(r2.downward);
  REQUIRE(r2.downward_witness.has_value());
  CHECK(r2.downward_witness->member.bits() == 0b011);
}

TEST_CASE("strict validation adds the intersection-splitting axiom", "[primal]") {
  // {}, {e1}, {e2} fails (b): {e1} and {e2} intersect to {} which is a member.
  SetFamily f = family_of_masks(2, {0b00});
  auto weak = validate_family(f, ValidationLevel::Weak);
  CHECK(weak.ok());
  CHECK_FALSE(weak.splitting_checked);

  auto strict = validate_family(f, ValidationLevel::Strict);
  CHECK(strict.splitting_checked);
  CHECK_FALSE(strict.ok());
  REQUIRE(strict.splitting_witness.has_value());
  const auto& w = *strict.splitting_witness;
  CHECK_FALSE(f.contains(w.a));
  CHECK_FALSE(f.contains(w.b));
  CHECK(f.contains(w.a & w.b));
}

TEST_CASE("the degenerate-at-empty family is strict only on one element", "[primal]") {
  CHECK(validate_family(family_of_masks(1, {0b0}), ValidationLevel::Strict).ok());
  CHECK_FALSE(validate_family(family_of_masks(2, {0b00}), ValidationLevel::Strict).ok());
  CHECK(validate_family(family_of_masks(2, {0b00}), ValidationLevel::Weak).ok());
}

TEST_CASE("marked-attribute family is weak but not strict", "[primal]") {
  Instance inst = fixture("ex21_primal.inst");
  REQUIRE(inst.primal.has_value());
  const SetFamily& f = inst.primal->family();
  CHECK(inst.primal->level() == ValidationLevel::Weak);
  CHECK(validate_family(f, ValidationLevel::Weak).ok());

  auto strict = validate_family(f, ValidationLevel::Strict);
  CHECK_FALSE(strict.ok());
  REQUIRE(strict.splitting_witness.has_value());
  CHECK_FALSE(f.contains(strict.splitting_witness->a));
  CHECK_FALSE(f.contains(strict.splitting_witness->b));
  CHECK(f.contains(strict.splitting_witness->a & strict.splitting_witness->b));
  CHECK_FALSE(splitting_by_brute_force(f));
}

TEST_CASE("proper-power-set and avoid-one-element families are strict", "[primal]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    INFO("n=" << n);
    Primal pmu = power_minus_universe(n);  // throws if the strict axioms fail
    CHECK(pmu.level() == ValidationLevel::Strict);
    CHECK(pmu.family().size() == (std::size_t{1} << n) - 1);
    CHECK(splitting_by_brute_force(pmu.family()));

    Primal fpf = fixed_point_free(n, 0);
    CHECK(fpf.level() == ValidationLevel::Strict);
    CHECK(fpf.family().size() == (std::size_t{1} << n) / 2);
    CHECK(splitting_by_brute_force(fpf.family()));
  }
}

TEST_CASE("the full power set is an ideal but not a primal", "[primal]") {
  SetFamily all(3);
  for (const Subset& s : power_set(3)) all.insert(s);
  CHECK(validate_ideal(all).ok());
  auto r = validate_family(all, ValidationLevel::Weak);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.proper);  // the whole universe is a member
}

TEST_CASE("ideal validation flags union gaps", "[primal]") {
  SetFamily f = family_of_masks(3, {0b000, 0b001, 0b010});  // {e0} | {e1} missing
  auto r = validate_ideal(f);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.union_closed);
  REQUIRE(r.union_witness.has_value());
  CHECK_FALSE(f.contains(r.union_witness->a | r.union_witness->b));
}

TEST_CASE("primal constructor validates and records the level", "[primal]") {
  SetFamily f = family_of_masks(2, {0b00, 0b01});
  Primal p(f, ValidationLevel::Weak);
  CHECK(p.level() == ValidationLevel::Weak);
  CHECK(p.width() == 2);
  CHECK(p.contains(Subset(0b01, 2)));
  CHECK_FALSE(p.degenerate());
  CHECK_THROWS_AS(Primal(family_of_masks(2, {0b11}), ValidationLevel::Weak), StructuralError);
  CHECK_THROWS_AS(Primal(family_of_masks(2, {0b00}), ValidationLevel::Strict), StructuralError);
}

TEST_CASE("empty families are degenerate but valid", "[primal]") {
  Primal p(SetFamily(2), ValidationLevel::Weak);
  CHECK(p.degenerate());
  CHECK(p.family().empty());
}

TEST_CASE("union of primals re-validates", "[primal]") {
  Primal a(family_of_masks(2, {0b00, 0b01}), ValidationLevel::Weak);
  Primal b(family_of_masks(2, {0b00, 0b10}), ValidationLevel::Weak);
  Primal u = union_primal(a, b);
  CHECK(u.family().size() == 3);
  // Union of the two one-element-avoiding primals covers every proper subset
  // only on two elements; on larger universes properness can break instead.
  Primal big_a(family_of_masks(2, {0b00, 0b01}), ValidationLevel::Strict);
  Primal big_b(family_of_masks(2, {0b00, 0b10}), ValidationLevel::Strict);
  CHECK(union_primal(big_a, big_b).family().size() == 3);
}

TEST_CASE("antichain closure builds the family", "[primal]") {
  SetFamily f = SetFamily::downward_closure(4, {Subset(0b0101, 4), Subset(0b0110, 4)});
  CHECK(f.size() == 6);
  CHECK(f.contains(Subset(0b0000, 4)));
  CHECK(f.contains(Subset(0b0100, 4)));
  CHECK_FALSE(f.contains(Subset(0b1000, 4)));
  auto maxes = f.maximal_members();
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0].bits() == 0b0101);
  CHECK(maxes[1].bits() == 0b0110);
}

TEST_CASE("strict validation past the cap is refused", "[primal]") {
  SetFamily f(17);
  f.insert(Subset::empty(17));
  CHECK_THROWS_AS(validate_family(f, ValidationLevel::Strict), CapacityError);
  CHECK_NOTHROW(validate_family(f, ValidationLevel::Weak));
}
