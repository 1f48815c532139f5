#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primrose/laws.hpp"
#include "primrose/models.hpp"

using namespace primrose;
using test_helpers::fixture;

namespace {

const std::vector<NeighborhoodKind> kAllKindList{NeighborhoodKind::A, NeighborhoodKind::B,
                                                 NeighborhoodKind::I, NeighborhoodKind::U};

std::vector<LawReport> run_all(const Instance& inst, const std::vector<std::string>& ids) {
  REQUIRE(inst.primal.has_value());
  return check_laws(inst.relation, *inst.primal, ids, kAllKindList);
}

int count(const std::vector<LawReport>& reports, Verdict v) {
  return static_cast<int>(
      std::count_if(reports.begin(), reports.end(), [&](const LawReport& r) { return r.verdict == v; }));
}

const LawReport* find_report(const std::vector<LawReport>& reports, const std::string& id,
                             std::optional<NeighborhoodKind> kind) {
  for (const auto& r : reports) {
    if (r.law == id && r.kind == kind) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("catalog inventory", "[laws]") {
  CHECK(law_catalog().size() == 95);
  CHECK(law_ids(LawKind::Derivable).size() == 71);
  CHECK(law_ids(LawKind::NonProperty).size() == 23);
  CHECK(all_law_ids().size() == 94);

  // The diagnostic hook is reachable by exact name but never listed.
  const LawDef* hook = find_law("corrupt-test-hook");
  REQUIRE(hook != nullptr);
  CHECK(hook->hidden);
  auto listed = all_law_ids();
  CHECK(std::find(listed.begin(), listed.end(), "corrupt-test-hook") == listed.end());

  CHECK(find_law("P3.1e-duality") != nullptr);
  CHECK(find_law("no-such-law") == nullptr);

  // Ids are unique.
  std::vector<std::string> ids;
  for (const auto& law : law_catalog()) ids.push_back(law.id);
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("derivable laws hold on the reflexive fixture", "[laws]") {
  Instance inst = fixture("ex34.inst");
  auto reports = run_all(inst, law_ids(LawKind::Derivable));
  CHECK(count(reports, Verdict::Fails) == 0);
  // The reflexive-gated chains must actually run here, not skip.
  const LawReport* chain = find_report(reports, "T4.2-chain-lower", NeighborhoodKind::A);
  REQUIRE(chain != nullptr);
  CHECK(chain->verdict == Verdict::Holds);
}

TEST_CASE("derivable laws hold on every fixture", "[laws]") {
  const char* names[] = {"ex21_primal.inst", "ex31.inst",      "ex31_alt1.inst", "ex31_alt2.inst",
                         "ex32.inst",        "ex33.inst",      "ex34.inst",      "ex36.inst",
                         "ex39.inst",        "ex39_alt.inst",  "ex311.inst",     "ex311_alt1.inst",
                         "ex311_alt2.inst",  "ex313.inst",     "ex313_alt.inst", "defconv.inst",
                         "s5.inst"};
  auto ids = law_ids(LawKind::Derivable);
  for (const char* name : names) {
    INFO(name);
    auto reports = run_all(fixture(name), ids);
    CHECK(count(reports, Verdict::Fails) == 0);
  }
}

TEST_CASE("non-property laws fail with witnesses where expected", "[laws]") {
  Instance ex32 = fixture("ex32.inst");
  auto reports = run_all(ex32, {"P3.1c-lower-union-equality"});
  const LawReport* rep = find_report(reports, "P3.1c-lower-union-equality", NeighborhoodKind::A);
  REQUIRE(rep != nullptr);
  CHECK(rep->verdict == Verdict::Fails);
  REQUIRE(rep->witness.has_value());
  const Universe& u = ex32.universe();
  // First failing ordered pair in ascending mask order.
  REQUIRE(rep->witness->v.has_value());
  REQUIRE(rep->witness->w.has_value());
  CHECK(*rep->witness->v == u.subset({"i2"}));
  CHECK(*rep->witness->w == u.subset({"i3"}));

  // A later pair fails the same equality; the harness just reports the first.
  Subset a = u.subset({"i1", "i2"});
  Subset b = u.subset({"i1", "i3"});
  const Primal* p = &*ex32.primal;
  Subset lower_union =
      approximate(ex32.relation, NeighborhoodKind::A, ModelId::N1, p, a | b).lower;
  Subset union_lower = approximate(ex32.relation, NeighborhoodKind::A, ModelId::N1, p, a).lower |
                       approximate(ex32.relation, NeighborhoodKind::A, ModelId::N1, p, b).lower;
  CHECK_FALSE(lower_union == union_lower);
}

TEST_CASE("gates skip with reasons instead of failing", "[laws]") {
  // ex33 is not reflexive and not serial, and its primal is not maximal.
  Instance inst = fixture("ex33.inst");
  auto reports =
      run_all(inst, {"T4.2-chain-lower", "INV-yao-accuracy-bound", "P3.2a-lower-empty"});
  const LawReport* chain = find_report(reports, "T4.2-chain-lower", NeighborhoodKind::A);
  REQUIRE(chain != nullptr);
  CHECK(chain->verdict == Verdict::Skipped);
  CHECK(chain->skip_reason == "not reflexive");

  const LawReport* serial = find_report(reports, "INV-yao-accuracy-bound", NeighborhoodKind::A);
  REQUIRE(serial != nullptr);
  CHECK(serial->verdict == Verdict::Skipped);
  CHECK(serial->skip_reason == "not serial");

  const LawReport* maximal = find_report(reports, "P3.2a-lower-empty", NeighborhoodKind::A);
  REQUIRE(maximal != nullptr);
  CHECK(maximal->verdict == Verdict::Skipped);
  CHECK(maximal->skip_reason == "not maximal");
}

TEST_CASE("maximal-primal laws run on the maximal fixture", "[laws]") {
  Instance inst = fixture("ex313.inst");
  auto reports = run_all(inst, {"P3.2a-maximal-degeneracy", "P3.2a-lower-empty"});
  const LawReport* degeneracy =
      find_report(reports, "P3.2a-maximal-degeneracy", NeighborhoodKind::A);
  REQUIRE(degeneracy != nullptr);
  CHECK(degeneracy->verdict == Verdict::Holds);

  // The printed lower-is-empty claim is false: lower is the whole universe.
  const LawReport* empty_claim = find_report(reports, "P3.2a-lower-empty", NeighborhoodKind::A);
  REQUIRE(empty_claim != nullptr);
  CHECK(empty_claim->verdict == Verdict::Fails);
  REQUIRE(empty_claim->witness.has_value());
}

TEST_CASE("the hidden hook reports a deliberate failure", "[laws]") {
  Instance inst = fixture("ex34.inst");
  auto reports = run_all(inst, {"corrupt-test-hook"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].verdict == Verdict::Fails);
  REQUIRE(reports[0].witness.has_value());
  CHECK_FALSE(reports[0].witness->detail.empty());
}

TEST_CASE("kind chains evaluate once across kinds", "[laws]") {
  Instance inst = fixture("ex34.inst");
  auto reports = run_all(inst, {"P3.3-kind-chain"});
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].kind.has_value());
  CHECK(reports[0].verdict == Verdict::Holds);
}

TEST_CASE("per-kind laws expand over the requested kinds in canonical order", "[laws]") {
  Instance inst = fixture("ex34.inst");
  std::vector<NeighborhoodKind> shuffled{NeighborhoodKind::U, NeighborhoodKind::A};
  auto reports = check_laws(inst.relation, *inst.primal, {"P3.1a-edge"}, shuffled);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].kind == NeighborhoodKind::A);
  CHECK(reports[1].kind == NeighborhoodKind::U);
}

TEST_CASE("selection errors", "[laws]") {
  Instance inst = fixture("ex34.inst");
  CHECK_THROWS_AS(check_laws(inst.relation, *inst.primal, {"nope"}, kAllKindList),
                  StructuralError);
  CHECK_THROWS_AS(check_laws(inst.relation, *inst.primal, {"P3.1a-edge"}, {}), StructuralError);
}

TEST_CASE("reports come out in catalog order regardless of selection order", "[laws]") {
  Instance inst = fixture("ex34.inst");
  auto reports =
      check_laws(inst.relation, *inst.primal, {"P3.1e-duality", "P3.1a-edge"}, {NeighborhoodKind::A});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].law == "P3.1a-edge");
  CHECK(reports[1].law == "P3.1e-duality");
}

TEST_CASE("cross-kind chains fail for the union-lower model", "[laws]") {
  // One directed edge, degenerate-at-empty primal: the union-kind lower
  // set escapes the successor-kind lower set.
  Instance tiny = parse_instance(
      "universe = x1 x2\n"
      "pairs = (x1,x2)\n"
      "primal.mode = weak\n"
      "primal.members = {}\n");
  auto reports =
      run_all(tiny, {"P3.9-kind-chain", "C3.7-boundary-chain", "C3.8-accuracy-chain"});
  REQUIRE(reports.size() == 3);
  for (const auto& rep : reports) {
    INFO(rep.law);
    CHECK(rep.verdict == Verdict::Fails);
    REQUIRE(rep.witness.has_value());
    CHECK_FALSE(rep.witness->detail.empty());
  }

  // The matching chains for the other primal models are derivable and hold
  // on the same instance.
  auto held = run_all(tiny, {"P3.3-kind-chain", "P3.6-kind-chain", "P3.12-kind-chain"});
  for (const auto& rep : held) {
    INFO(rep.law);
    CHECK(rep.verdict == Verdict::Holds);
  }
}

TEST_CASE("non-property catalog fails somewhere on the corpus", "[laws]") {
  // Every non-property law should be falsifiable; collect failures across
  // fixtures and require each law to fail at least once.
  const char* names[] = {"ex31.inst",  "ex32.inst", "ex33.inst",       "ex34.inst",
                         "ex36.inst",  "ex39.inst", "ex311.inst",      "ex311_alt2.inst",
                         "ex313.inst", "s5.inst",   "ex313_alt.inst",  "defconv.inst"};
  auto ids = law_ids(LawKind::NonProperty);
  std::set<std::string> failed_somewhere;
  for (const char* name : names) {
    for (const auto& rep : run_all(fixture(name), ids)) {
      if (rep.verdict == Verdict::Fails) failed_somewhere.insert(rep.law);
    }
  }
  Instance tiny = parse_instance(
      "universe = x1 x2\n"
      "pairs = (x1,x2)\n"
      "primal.mode = weak\n"
      "primal.members = {}\n");
  for (const auto& rep : run_all(tiny, ids)) {
    if (rep.verdict == Verdict::Fails) failed_somewhere.insert(rep.law);
  }
  for (const auto& id : ids) {
    INFO(id);
    CHECK(failed_somewhere.count(id) == 1);
  }
}
