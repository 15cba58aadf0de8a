#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dla/classify.hpp"
#include "dla/report.hpp"

using namespace dla;

static FamilyId F(const char* s) { return FamilyId::parse(s); }
static std::vector<PauliString> basis(const char* fam, unsigned n, Topology t = Topology::open) {
  return close(model_generators(make_model(F(fam), n, t))).basis();
}

TEST_CASE("predict examples") {
  CHECK(predict(F("a3"), Topology::open, 5) == IsoExpression::sp(8));
  CHECK(predict(F("a10"), Topology::periodic, 4) == IsoExpression::su(16));
  for (unsigned n = 3; n <= 7; ++n) CHECK(predict(F("b1"), Topology::permutation, n) == IsoExpression::u1(n * (n + 1) / 2));
  CHECK_THROWS_AS(predict(F("a11"), Topology::open, 3), OutOfRange);
  CHECK_THROWS_AS(predict(F("c0"), Topology::open, 4), OutOfRange);
  CHECK(predict(F("a11"), Topology::open, 4) == IsoExpression::so(16));
}

TEST_CASE("residue splits") {
  CHECK(predict(F("a3"), Topology::open, 8) == IsoExpression::so(64, 4));
  CHECK(predict(F("a3"), Topology::open, 7) == IsoExpression::so(64));
  CHECK(predict(F("a3"), Topology::open, 6) == IsoExpression::su(16, 2));
  CHECK(predict(F("a3"), Topology::open, 4) == IsoExpression::sp(2, 4));
  CHECK(predict(F("a5"), Topology::open, 6) == IsoExpression::so(16, 4));
  CHECK(predict(F("a5"), Topology::open, 3) == IsoExpression::sp(2));
  CHECK(predict(F("a5"), Topology::open, 4) == IsoExpression::su(4, 2));
  CHECK(predict(F("a3"), Topology::periodic, 4) == IsoExpression::sp(2, 4));
  CHECK(predict(F("a3"), Topology::periodic, 6) == IsoExpression::su(16, 4));
  CHECK(predict(F("a3"), Topology::periodic, 8) == IsoExpression::so(64, 4));
}

TEST_CASE("classify_one examples") {
  auto r7 = classify_one(make_model(F("a7"), 3, Topology::open));
  CHECK(r7.computed_dim == 15);
  CHECK(r7.predicted_dim == 15u);
  CHECK(r7.verdict == Verdict::match);
  auto r12 = classify_one(make_model(F("a12"), 4, Topology::open));
  CHECK(r12.computed_dim == 255);
  CHECK(r12.verdict == Verdict::match);
  auto r9 = classify_one(make_model(F("a9"), 3, Topology::periodic));
  CHECK(r9.computed_dim == 21);
  CHECK(r9.verdict == Verdict::out_of_range);
  auto r14 = classify_one(make_model(F("a14"), 4, Topology::open));
  CHECK(r14.computed_dim == 28);
  CHECK(r14.verdict == Verdict::match);
  CloseOptions cap;
  cap.max_elements = 20;
  CHECK(classify_one(make_model(F("a12"), 4, Topology::open), cap).verdict == Verdict::capped);
}

TEST_CASE("small sweeps") {
  SweepConfig cfg;
  cfg.n_max = 5;
  cfg.topologies = {Topology::open, Topology::periodic, Topology::permutation};
  auto rows = classify_sweep(cfg);
  CHECK(rows.size() == 28 * 3 * 3);
  CHECK_FALSE(any_mismatch(rows));
  for (const auto& r : rows) {
    CAPTURE(r.family.label());
    CAPTURE(r.n);
    if (r.verdict == Verdict::match) CHECK(r.component_consistent);
  }
  SweepConfig a11;
  a11.families = {F("a11")};
  a11.n_max = 5;
  auto ar = classify_sweep(a11);
  CHECK(ar[0].verdict == Verdict::out_of_range);
  CHECK(ar[1].verdict == Verdict::match);
  SweepConfig bad;
  bad.n_min = 2;
  CHECK_THROWS(classify_sweep(bad));
}

TEST_CASE("literal equalities") {
  for (unsigned n = 3; n <= 6; ++n) {
    CHECK(basis("a13", n) == basis("a20", n));
    CHECK(basis("a4", n, Topology::permutation) == basis("a7", n));
    if (n % 2) CHECK(basis("a6", n, Topology::periodic) == basis("a13", n));
    auto a2 = basis("a2", n);
    CHECK(SiteLetterMap::psi(n).apply(a2) == basis("a4", n));
    CHECK(SiteLetterMap::phi(n).apply(basis("a6", n)) == basis("a7", n));
    CHECK(SiteLetterMap::gamma(n).apply(basis("a10", n)) == basis("a7", n));
    for (const char* fam : {"a7", "a13", "a16", "a20"})
      CHECK(basis(fam, n, Topology::periodic) == basis(fam, n));
    auto b2 = basis("b2", n), a9 = basis("a9", n);
    a9.push_back(single('X', 1, n));
    sort_unique(a9);
    CHECK(b2 == a9);
    auto b4 = basis("b4", n), a15 = basis("a15", n);
    a15.push_back(single('X', 1, n));
    sort_unique(a15);
    CHECK(b4 == a15);
  }
}

TEST_CASE("topology dims are monotone") {
  for (const auto& f : all_families())
    for (unsigned n = 3; n <= 4; ++n) {
      auto o = basis(f.label().c_str(), n).size();
      auto p = basis(f.label().c_str(), n, Topology::periodic).size();
      auto q = basis(f.label().c_str(), n, Topology::permutation).size();
      CHECK(o <= p);
      CHECK(p <= q);
    }
}

TEST_CASE("scaling classes") {
  CHECK(scaling_class(F("a8"), Topology::open) == ScalingClass::quadratic);
  CHECK(scaling_class(F("a0"), Topology::open) == ScalingClass::linear);
  CHECK(scaling_class(F("a22"), Topology::open) == ScalingClass::exponential);
  CHECK(scaling_class(F("a3"), Topology::open) == ScalingClass::exponential);
  CHECK(scaling_class(F("b3"), Topology::permutation) == ScalingClass::linear);
  CHECK(scaling_class(F("a1"), Topology::permutation) == ScalingClass::exponential);
  SweepConfig cfg;
  cfg.families = {F("a14")};
  cfg.n_max = 5;
  CHECK(scaling_class(classify_sweep(cfg)) == ScalingClass::quadratic);
  CHECK_THROWS(scaling_class(std::vector<ClassificationRow>{}));
}

TEST_CASE("report serialization") {
  auto rows = classify_sweep(SweepConfig{3, 3, {Topology::open}, {F("a1"), F("a2")}, {}});
  auto j = to_json(rows);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["family"] == "a1");
  CHECK(j[0]["verdict"] == "match");
  auto csv = to_csv(rows);
  CHECK(csv.rfind("family,topology,n,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find('\r') == std::string::npos);
}
