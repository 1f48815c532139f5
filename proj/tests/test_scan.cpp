#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "primrose/scan.hpp"

using namespace primrose;
using test_helpers::data_path;
using test_helpers::fixture;

namespace {

const std::vector<ModelId> kEveryModel{ModelId::Yao, ModelId::N1, ModelId::N2, ModelId::N3,
                                       ModelId::N4};

const ApproxResult& cell(const ScanTable& t, const ScanRow& row, ModelId m) {
  for (std::size_t i = 0; i < t.models.size(); ++i) {
    if (t.models[i] == m) return row.cells[i];
  }
  FAIL("model not scanned");
  return row.cells[0];
}

const ScanRow& row_of(const ScanTable& t, const Subset& v) {
  for (const auto& row : t.rows) {
    if (row.v == v) return row;
  }
  FAIL("row not found");
  return t.rows[0];
}

}  // namespace

TEST_CASE("scan covers every nonempty subset in size-then-elements order", "[scan]") {
  Instance inst = fixture("ex34.inst");
  ScanTable t = scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                           false, nullptr);
  REQUIRE(t.rows.size() == 15);
  CHECK_FALSE(t.reference_checked);
  CHECK(t.errata.empty());
  // Singletons first, the whole universe last.
  CHECK(t.rows.front().v.count() == 1);
  CHECK(t.rows.back().v.is_full());
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    const Subset& a = t.rows[i].v;
    const Subset& b = t.rows[i + 1].v;
    bool ordered =
        a.count() < b.count() || (a.count() == b.count() && a.elements() < b.elements());
    CHECK(ordered);
  }
  for (const auto& row : t.rows) REQUIRE(row.cells.size() == kEveryModel.size());
}

TEST_CASE("spot values agree with the hand-checked table", "[scan]") {
  Instance inst = fixture("ex34.inst");
  const Universe& u = inst.universe();
  ScanTable t = scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                           false, nullptr);

  const ScanRow& r34 = row_of(t, u.subset({"i3", "i4"}));
  CHECK(cell(t, r34, ModelId::N1).lower == u.subset({"i2", "i3"}));
  CHECK(cell(t, r34, ModelId::N1).upper == u.subset({"i3", "i4"}));
  CHECK(cell(t, r34, ModelId::N1).accuracy == Rational::ratio(1, 2));
  CHECK(cell(t, r34, ModelId::N2).upper == u.subset({"i3", "i4"}));

  const ScanRow& r14 = row_of(t, u.subset({"i1", "i4"}));
  CHECK(cell(t, r14, ModelId::N3).lower == u.subset({"i1", "i3", "i4"}));
  CHECK(cell(t, r14, ModelId::N3).upper == u.subset({"i1", "i4"}));
  CHECK(cell(t, r14, ModelId::N4).lower == u.subset({"i4"}));
  CHECK(cell(t, r14, ModelId::N4).upper == u.full_set());
  CHECK(cell(t, r14, ModelId::N4).accuracy == Rational::ratio(1, 4));

  const ScanRow& r2 = row_of(t, u.subset({"i2"}));
  CHECK(cell(t, r2, ModelId::N1).lower == u.subset({"i2"}));
  CHECK(cell(t, r2, ModelId::N1).accuracy == Rational::ratio(1, 1));
  CHECK(cell(t, r2, ModelId::Yao).accuracy == Rational::ratio(0, 1));

  const ScanRow& rfull = row_of(t, u.full_set());
  for (ModelId m : kEveryModel) {
    CHECK(cell(t, rfull, m).lower == u.full_set());
    CHECK(cell(t, rfull, m).upper == u.full_set());
    CHECK(cell(t, rfull, m).accuracy == Rational::ratio(1, 1));
  }
}

TEST_CASE("the empty row is opt-in", "[scan]") {
  Instance inst = fixture("ex34.inst");
  ScanTable t = scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                           true, nullptr);
  REQUIRE(t.rows.size() == 16);
  CHECK(t.rows.front().v.is_empty());
  for (ModelId m : {ModelId::N1, ModelId::N2, ModelId::N3, ModelId::N4}) {
    CHECK(cell(t, t.rows.front(), m).accuracy == Rational::ratio(1, 1));
  }
  CHECK(cell(t, t.rows.front(), ModelId::Yao).accuracy.is_undefined());
}

TEST_CASE("primal models require a primal to scan", "[scan]") {
  Instance inst = fixture("ex34.inst");
  CHECK_THROWS_AS(
      scan_table(inst.relation, nullptr, NeighborhoodKind::A, {ModelId::N1}, false, nullptr),
      StructuralError);
  CHECK_NOTHROW(
      scan_table(inst.relation, nullptr, NeighborhoodKind::A, {ModelId::Yao}, false, nullptr));
}

TEST_CASE("reference comparison flags exactly the printed slips", "[scan]") {
  Instance inst = fixture("ex34.inst");
  const Universe& u = inst.universe();
  ReferenceTable ref = load_reference_table(data_path("table1_reference.json"));
  ScanTable t = scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                           false, &ref);
  CHECK(t.reference_checked);
  REQUIRE(t.errata.size() == 10);

  struct Expected {
    Subset v;
    ModelId model;
    const char* field;
  };
  const Expected expect[] = {
      {u.subset({"i1"}), ModelId::N1, "upper"},
      {u.subset({"i1"}), ModelId::N2, "upper"},
      {u.subset({"i2"}), ModelId::N1, "lower"},
      {u.subset({"i2"}), ModelId::N2, "lower"},
      {u.subset({"i1", "i2"}), ModelId::N4, "sigma"},
      {u.subset({"i1", "i2", "i3"}), ModelId::N4, "sigma"},
      {u.subset({"i1", "i3", "i4"}), ModelId::N1, "upper"},
      {u.subset({"i2", "i3", "i4"}), ModelId::N1, "lower"},
      {u.subset({"i2", "i3", "i4"}), ModelId::N2, "lower"},
      {u.subset({"i2", "i3", "i4"}), ModelId::N3, "sigma"},
  };
  for (std::size_t i = 0; i < 10; ++i) {
    INFO("erratum " << i);
    CHECK(t.errata[i].v == expect[i].v);
    CHECK(t.errata[i].model == expect[i].model);
    CHECK(t.errata[i].field == expect[i].field);
  }
  CHECK(t.errata[0].printed == "{i1,i3}");
  CHECK(t.errata[0].computed == "{i1,i4}");
  CHECK(t.errata[4].printed == "1/2");
  CHECK(t.errata[4].computed == "1/4");
  CHECK(t.errata[9].printed == "1");
  CHECK(t.errata[9].computed == "3/4");
}

TEST_CASE("six-object reference comparison", "[scan]") {
  Instance inst = fixture("s5.inst");
  const Universe& u = inst.universe();
  ReferenceTable ref = load_reference_table(data_path("s5_reference.json"));
  ScanTable t = scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A,
                           {ModelId::Yao, ModelId::N3}, false, &ref);
  REQUIRE(t.errata.size() == 4);
  Subset l = u.subset({"3", "4", "5"});
  CHECK(t.errata[0].v == l);
  CHECK(t.errata[0].model == ModelId::Yao);
  CHECK(t.errata[0].field == "upper");
  CHECK(t.errata[1].model == ModelId::Yao);
  CHECK(t.errata[1].field == "sigma");
  CHECK(t.errata[1].printed == "1/4");
  CHECK(t.errata[1].computed == "1/3");
  CHECK(t.errata[2].model == ModelId::N3);
  CHECK(t.errata[2].field == "lower");
  CHECK(t.errata[3].model == ModelId::N3);
  CHECK(t.errata[3].field == "upper");

  // The flagged row's accuracy figure itself is right.
  const ScanRow& lr = row_of(t, l);
  CHECK(cell(t, lr, ModelId::N3).accuracy == Rational::ratio(1, 1));
  // And the first row matches the reference on every compared field.
  Subset k = u.subset({"1", "2", "6"});
  for (const auto& e : t.errata) CHECK_FALSE(e.v == k);
}

TEST_CASE("reference mismatches in structure are errors", "[scan]") {
  Instance inst = fixture("ex34.inst");

  ReferenceTable wrong_kind = parse_reference_table(
      R"({"kind": "b", "rows": []})", "inline");
  CHECK_THROWS_AS(scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                             false, &wrong_kind),
                  StructuralError);

  ReferenceTable unknown_row = parse_reference_table(
      R"({"kind": "a", "rows": [{"set": ["i1"], "models": {"n1": {"sigma": "0"}}},
                                 {"set": [], "models": {}}]})",
      "inline");
  CHECK_THROWS_AS(scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, kEveryModel,
                             false, &unknown_row),
                  StructuralError);

  ReferenceTable unscanned_model = parse_reference_table(
      R"({"kind": "a", "rows": [{"set": ["i1"], "models": {"yao": {"sigma": "0"}}}]})",
      "inline");
  CHECK_THROWS_AS(scan_table(inst.relation, &*inst.primal, NeighborhoodKind::A, {ModelId::N1},
                             false, &unscanned_model),
                  StructuralError);
}

TEST_CASE("reference parsing rejects malformed documents", "[scan]") {
  CHECK_THROWS_AS(parse_reference_table("not json", "x"), ParseError);
  CHECK_THROWS_AS(parse_reference_table(R"({"rows": []})", "x"), ParseError);
  CHECK_THROWS_AS(parse_reference_table(R"({"kind": "a"})", "x"), ParseError);
  CHECK_THROWS_AS(parse_reference_table(R"({"kind": "a", "rows": [{}]})", "x"), ParseError);
  CHECK_THROWS_AS(
      parse_reference_table(R"({"kind": "a", "rows": [{"set": ["i1"], "models": {"n1": {"sigma": 1}}}]})",
                            "x"),
      ParseError);
  CHECK_THROWS_AS(load_reference_table(data_path("missing.json")), ParseError);
}

TEST_CASE("scans beyond the enumeration cap are refused", "[scan]") {
  std::vector<std::string> labels;
  for (int i = 0; i < 21; ++i) labels.push_back("e" + std::to_string(i));
  Relation big(Universe(labels), std::vector<std::pair<std::size_t, std::size_t>>{});
  CHECK_THROWS_AS(scan_table(big, nullptr, NeighborhoodKind::A, {ModelId::Yao}, false, nullptr),
                  CapacityError);
}
