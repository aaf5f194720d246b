#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "cw/bounds.hpp"
#include "cw/errors.hpp"
#include "cw/families.hpp"

using namespace cw;

namespace {

const FamilyAssessment* find_family(const FeasibilityReport& r,
                                    const std::string& name) {
  for (const FamilyAssessment& a : r.assessments)
    if (a.family == name) return &a;
  return nullptr;
}

int failed_checks(const std::vector<BoundCheck>& checks) {
  int k = 0;
  for (const BoundCheck& c : checks) k += c.holds ? 0 : 1;
  return k;
}

}  // namespace

TEST_CASE("support-array width and distance bounds") {
  // delta = 10, odd alphabet: three of the four applicable bounds fail.
  auto checks = moa_bounds(16, 5, 15, 3);
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].rule == "moa-width-bound-odd");
  CHECK_FALSE(checks[0].holds);
  CHECK(checks[1].rule == "moa-width-bound-small-alphabet");
  CHECK_FALSE(checks[1].holds);
  CHECK(checks[2].rule == "moa-distance-bound-odd");
  CHECK_FALSE(checks[2].holds);
  CHECK(checks[3].rule == "moa-length-bound");
  CHECK(checks[3].holds);  // 16 <= 3+15-2

  // delta = 1 on a large even alphabet: everything passes.
  auto ok = moa_bounds(6, 4, 5, 8);
  REQUIRE(ok.size() == 2);
  CHECK(ok[0].rule == "moa-width-bound");
  CHECK(ok[0].holds);
  CHECK(ok[1].rule == "moa-length-bound");
  CHECK(ok[1].holds);

  // The conditions constrain only d < w.
  CHECK(moa_bounds(5, 4, 4, 3).empty());
  CHECK(moa_bounds(5, 5, 4, 3).empty());

  // Width bound with delta = 1 catches w = q+1.
  auto tight = moa_bounds(8, 7, 8, 7);
  bool found = false;
  for (const auto& c : tight)
    if (c.rule == "moa-width-bound") {
      found = true;
      CHECK_FALSE(c.holds);  // w = 8 > q = 7
    }
  CHECK(found);

  // Even alphabets keep one more symbol of slack than odd ones.
  auto even = moa_bounds(6, 2, 5, 4);   // delta = 3, q even: w <= q+delta
  auto odd = moa_bounds(6, 2, 5, 5);    // delta = 3, q odd: w <= q+delta-1
  CHECK(even[0].rule == "moa-width-bound-even");
  CHECK(even[0].holds);  // 5 <= 7
  CHECK(odd[0].rule == "moa-width-bound-odd");
  CHECK(odd[0].holds);  // 5 <= 7
}

TEST_CASE("smallest-alphabet bounds for one word per support") {
  AlphabetBounds b37 = q0_bounds(3, 7);
  CHECK(b37.lower == 6);
  CHECK(b37.upper == 16);  // 1 + C(6,2)
  REQUIRE(b37.exact.has_value());
  CHECK(*b37.exact == 6);  // odd length: n-1

  AlphabetBounds b38 = q0_bounds(3, 8);
  REQUIRE(b38.exact.has_value());
  CHECK(*b38.exact == 8);  // even length: n

  AlphabetBounds b2 = q0_bounds(2, 7);
  REQUIRE(b2.exact.has_value());
  CHECK(*b2.exact == 7);

  AlphabetBounds tr = q0_bounds(4, 5);  // n = w+1
  REQUIRE(tr.exact.has_value());
  CHECK(*tr.exact == 5);

  AlphabetBounds open = q0_bounds(4, 10);
  CHECK(open.lower == 8);   // max(n-w+2, w+1)
  CHECK(open.upper == 85);  // 1 + C(9,3)
  CHECK_FALSE(open.exact.has_value());

  // Whenever exact is set it sits inside the bounds.
  for (int n = 2; n <= 20; ++n)
    for (int w = 1; w < n; ++w) {
      AlphabetBounds b = q0_bounds(w, n);
      CHECK(b.lower <= b.upper);
      if (b.exact) {
        CHECK(b.lower <= *b.exact);
        CHECK(*b.exact <= b.upper);
      }
    }

  CHECK_THROWS_AS(q0_bounds(3, 3), ParamsOutOfRange);
}

TEST_CASE("per-family feasibility of a constructible instance") {
  FeasibilityReport r = feasibility_report(4, 3, 3, 3);
  CHECK(r.violations() == 0);
  const FamilyAssessment* f2 = find_family(r, "F2");
  REQUIRE(f2);
  CHECK(f2->status == Feasibility::feasible);
  REQUIRE(f2->checks.size() == 1);
  CHECK(f2->checks[0].rule == "radius-one-counting");
  const FamilyAssessment* f4 = find_family(r, "F4");
  REQUIRE(f4);
  CHECK(f4->status == Feasibility::feasible);
  const FamilyAssessment* f3 = find_family(r, "F3");
  REQUIRE(f3);
  CHECK(f3->status == Feasibility::feasible);
  // A known-existence note is attached for this instance.
  REQUIRE(r.external_note.has_value());
  CHECK(r.external_note->find("existence") == 0);
}

TEST_CASE("violations count only when every family is closed") {
  // One family (F2) stays open here, so there are no violations even though
  // other families fail their checks; the verdict defers to the fact table.
  FeasibilityReport open = feasibility_report(16, 5, 15, 3);
  CHECK(open.violations() == 0);
  const FamilyAssessment* f2 = find_family(open, "F2");
  REQUIRE(f2);
  CHECK(f2->status == Feasibility::unknown);
  const FamilyAssessment* f6 = find_family(open, "F6");
  REQUIRE(f6);
  CHECK(f6->status == Feasibility::infeasible);
  CHECK(failed_checks(f6->checks) == 4);
  REQUIRE(open.external_note.has_value());
  CHECK(open.external_note->find("nonexistence") == 0);

  // Every family closes here: the failing checks become countable
  // violations.
  FeasibilityReport closed = feasibility_report(6, 2, 4, 3);
  CHECK(closed.violations() == 6);
  for (const FamilyAssessment& a : closed.assessments)
    CHECK(a.status == Feasibility::infeasible);
  CHECK_FALSE(closed.external_note.has_value());
}

TEST_CASE("binary parameters route through design divisibility") {
  FeasibilityReport fano = feasibility_report(7, 4, 3, 2);
  const FamilyAssessment* b = find_family(fano, "binary-steiner");
  REQUIRE(b);
  CHECK(b->status == Feasibility::feasible);
  CHECK(fano.assessments.size() == 1);  // no nonbinary families at q=2

  // Complementing every word is an isometry, so weight n-w behaves
  // identically to weight w.
  FeasibilityReport comp = feasibility_report(7, 4, 4, 2);
  const FamilyAssessment* bc = find_family(comp, "binary-steiner");
  REQUIRE(bc);
  CHECK(bc->status == Feasibility::feasible);

  // S(2,3,8) fails divisibility.
  FeasibilityReport bad = feasibility_report(8, 4, 3, 2);
  const FamilyAssessment* bb = find_family(bad, "binary-steiner");
  REQUIRE(bb);
  CHECK(bb->status == Feasibility::infeasible);

  // Odd distances cannot occur between binary words of equal weight.
  FeasibilityReport oddd = feasibility_report(7, 3, 3, 2);
  const FamilyAssessment* bo = find_family(oddd, "binary-steiner");
  REQUIRE(bo);
  CHECK(bo->status == Feasibility::infeasible);
  CHECK(bo->checks[0].rule == "even-distance");
}

TEST_CASE("report text carries one line per rule") {
  FeasibilityReport r = feasibility_report(6, 2, 4, 3);
  const std::string text = r.to_text();
  CHECK(text.find("FEASIBILITY n=6 d=2 w=4 q=3") == 0);
  CHECK(text.find("FAMILY F6 infeasible") != std::string::npos);
  CHECK(text.find("RULE moa-length-bound FAIL") != std::string::npos);
  CHECK(text.find("VIOLATIONS 6") != std::string::npos);
}

TEST_CASE("curated facts") {
  CHECK_FALSE(lookup_fact(12, 3, 3, 5).has_value());
  std::optional<KnownFact> kop = lookup_fact(16, 5, 15, 3);
  REQUIRE(kop.has_value());
  CHECK_FALSE(kop->exists);
  std::optional<KnownFact> small = lookup_fact(4, 3, 3, 3);
  REQUIRE(small.has_value());
  CHECK(small->exists);
  CHECK(known_facts().size() >= 6);
}

TEST_CASE("every constructed family instance passes the bounds") {
  struct P {
    int n, d, w;
    std::uint32_t q;
  };
  std::vector<P> params;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u})
    params.push_back({static_cast<int>(q) + 1, 3, 3, q});  // gs23
  params.push_back({4, 3, 3, 3});   // scalar family
  params.push_back({5, 3, 3, 4});
  params.push_back({6, 4, 4, 5});
  params.push_back({5, 4, 4, 6});   // grouped-array route
  params.push_back({6, 4, 5, 8});
  params.push_back({4, 3, 2, 4});   // one word per support
  params.push_back({6, 4, 3, 6});
  params.push_back({7, 4, 3, 6});
  for (const P& p : params) {
    FeasibilityReport r = feasibility_report(p.n, p.d, p.w, p.q);
    CHECK(r.violations() == 0);
  }
}
