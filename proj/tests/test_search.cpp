#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primrose/laws.hpp"
#include "primrose/random_instance.hpp"
#include "primrose/search.hpp"

using namespace primrose;
using test_helpers::fixture;

TEST_CASE("target registry", "[search]") {
  const auto& targets = search_targets();
  CHECK(targets.size() == 51);
  std::set<std::string> ids;
  for (const auto& t : targets) {
    CHECK_FALSE(t.description.empty());
    ids.insert(t.id);
  }
  CHECK(ids.size() == targets.size());
  CHECK(find_target("N2-duality") != nullptr);
  CHECK(find_target("definability-converse") != nullptr);
  CHECK(find_target("made-up") == nullptr);
  CHECK_THROWS_AS(search_counterexample("made-up", SearchBounds{}), StructuralError);
}

TEST_CASE("widened-upper duality fails on the smallest degenerate instance", "[search]") {
  SearchBounds bounds;
  bounds.max_universe_size = 1;
  CounterexampleReport report = search_counterexample("N2-duality", bounds);
  REQUIRE(report.witness.has_value());
  CHECK(report.instances_tried == 2);
  const SearchWitness& w = *report.witness;
  CHECK(w.kind == NeighborhoodKind::A);
  CHECK(w.v.is_empty());
  CHECK_FALSE(w.detail.empty());
  // The witness instance: one element, no edges, the empty-at-empty family.
  CHECK(w.instance.universe().size() == 1);
  CHECK(w.instance.relation.pairs().empty());
  REQUIRE(w.instance.primal.has_value());
  CHECK(w.instance.primal->family().size() == 1);
  CHECK(w.instance.primal->family().contains(Subset(0, 1)));

  // A found witness must actually violate the target when re-checked.
  auto violation = find_violation_on_instance("N2-duality", w.instance);
  REQUIRE(violation.has_value());
  CHECK(violation->v == w.v);
}

TEST_CASE("one-element search space exhausts without a union-equality witness", "[search]") {
  SearchBounds bounds;
  bounds.max_universe_size = 1;
  CounterexampleReport report = search_counterexample("N1-lower-union-equality", bounds);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.exhausted);
  CHECK(report.instances_tried == 4);
}

TEST_CASE("an instance budget stops the search unexhausted", "[search]") {
  SearchBounds bounds;
  bounds.max_universe_size = 2;
  bounds.max_instances = 3;
  CounterexampleReport report = search_counterexample("N1-lower-union-equality", bounds);
  CHECK_FALSE(report.witness.has_value());
  CHECK_FALSE(report.exhausted);
  CHECK(report.instances_tried == 3);
}

TEST_CASE("size bounds are checked", "[search]") {
  SearchBounds bounds;
  bounds.max_universe_size = 0;
  CHECK_THROWS_AS(search_counterexample("N2-duality", bounds), CapacityError);
  bounds.max_universe_size = 9;
  CHECK_THROWS_AS(search_counterexample("N2-duality", bounds), CapacityError);
}

TEST_CASE("companion fixtures violate their targets", "[search]") {
  for (const auto& target : search_targets()) {
    if (target.companion_fixture.empty()) continue;
    INFO(target.id << " on " << target.companion_fixture);
    Instance inst = fixture(target.companion_fixture);
    auto violation = find_violation_on_instance(target.id, inst);
    CHECK(violation.has_value());
  }
}

TEST_CASE("fixtures that satisfy a claim yield no violation", "[search]") {
  Instance ex34 = fixture("ex34.inst");
  CHECK_FALSE(find_violation_on_instance("N3-lower-full-on-universe", ex34).has_value());
  Instance ex311 = fixture("ex311.inst");
  CHECK(find_violation_on_instance("N3-lower-full-on-universe", ex311).has_value());
}

TEST_CASE("cross-kind chain searches find small witnesses", "[search]") {
  const char* chain_targets[] = {"N3-kind-chain-lower", "N3-kind-chain-upper",
                                 "N3-boundary-chain", "N3-accuracy-chain"};
  for (const char* id : chain_targets) {
    INFO(id);
    SearchBounds bounds;
    bounds.max_universe_size = 3;
    CounterexampleReport report = search_counterexample(id, bounds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->instance.universe().size() <= 2);
    auto again = find_violation_on_instance(id, report.witness->instance);
    CHECK(again.has_value());
  }
}

TEST_CASE("search reports are deterministic", "[search]") {
  SearchBounds bounds;
  bounds.max_universe_size = 2;
  CounterexampleReport a = search_counterexample("N1-contraction", bounds);
  CounterexampleReport b = search_counterexample("N1-contraction", bounds);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.instances_tried == b.instances_tried);
  CHECK(a.witness->instance == b.witness->instance);
  CHECK(a.witness->v == b.witness->v);
  CHECK(a.witness->kind == b.witness->kind);
}

TEST_CASE("violations reported against instances without primals use the degenerate family",
          "[search]") {
  Instance bare = parse_instance("universe = x1 x2\npairs = (x1,x2)\n");
  CHECK_FALSE(bare.primal.has_value());
  CHECK_NOTHROW(find_violation_on_instance("N1-contraction", bare));
}

TEST_CASE("random instances are deterministic and within bounds", "[search]") {
  RandomInstance a = random_instance(4, 99);
  RandomInstance b = random_instance(4, 99);
  CHECK(a.instance == b.instance);
  CHECK(a.draws.seed == 99);
  CHECK(a.draws.size == 4);
  CHECK(a.instance.universe().size() == 4);
  REQUIRE(a.instance.primal.has_value());
  CHECK(a.instance.primal->level() == ValidationLevel::Weak);

  RandomInstance c = random_instance(4, 100);
  // Different seeds almost surely differ; these two do.
  CHECK_FALSE(a.instance == c.instance);

  auto suite = random_instance_suite(10, 3, 42);
  REQUIRE(suite.size() == 10);
  for (std::size_t i = 0; i < suite.size(); ++i) {
    CHECK(suite[i].draws.seed == 42 + i);
    CHECK(suite[i].draws.size == 1 + (i % 3));
    CHECK(suite[i].instance.universe().size() == suite[i].draws.size);
  }
  CHECK_THROWS_AS(random_instance(0, 1), CapacityError);
  CHECK_THROWS_AS(random_instance(17, 1), CapacityError);
}

TEST_CASE("random labels are x1 through xn", "[search]") {
  RandomInstance r = random_instance(3, 5);
  CHECK(r.instance.universe().labels() == std::vector<std::string>{"x1", "x2", "x3"});
}
