#include "cw/bounds.hpp"

#include <algorithm>

#include "cw/designs.hpp"
#include "cw/errors.hpp"
#include "cw/galois.hpp"

namespace cw {

namespace {

std::string ineq(const std::string& lhs, const std::string& rel,
                 const std::string& rhs) {
  return lhs + " " + rel + " " + rhs;
}

BoundCheck le_check(const std::string& rule, long long lhs, long long rhs,
                    const std::string& lhs_name, const std::string& rhs_name) {
  BoundCheck c;
  c.rule = rule;
  c.detail = ineq(lhs_name + "=" + std::to_string(lhs), "<=",
                  rhs_name + "=" + std::to_string(rhs));
  c.holds = lhs <= rhs;
  return c;
}

}  // namespace

std::vector<BoundCheck> moa_bounds(int n, int d, int w, std::uint32_t q) {
  if (!(1 <= w && w <= n) || d < 1 || q < 2)
    throw ParamsOutOfRange("bounds need 1 <= w <= n, d >= 1, q >= 2");
  std::vector<BoundCheck> checks;
  if (d >= w) return checks;  // these conditions only constrain d < w
  const int delta = w - d;
  const long long qi = q;

  if (delta == 1)
    checks.push_back(le_check("moa-width-bound", w, qi, "w", "q"));
  if (2 <= delta && delta <= w - 1) {
    if (q % 2 == 0)
      checks.push_back(
          le_check("moa-width-bound-even", w, qi + delta, "w", "q+delta"));
    else
      checks.push_back(le_check("moa-width-bound-odd", w, qi + delta - 1, "w",
                                "q+delta-1"));
  }
  if (qi - 1 <= delta + 1)
    checks.push_back(le_check("moa-width-bound-small-alphabet", w, delta + 2,
                              "w", "delta+2"));
  if (d <= w - 2) {
    if (q % 2 == 0)
      checks.push_back(le_check("moa-distance-bound-even", d, qi, "d", "q"));
    else
      checks.push_back(
          le_check("moa-distance-bound-odd", d + 1, qi, "d+1", "q"));
  }
  checks.push_back(
      le_check("moa-length-bound", n, qi + w - 2, "n", "q+w-2"));
  return checks;
}

AlphabetBounds q0_bounds(int w, int n) {
  if (!(1 <= w && w + 1 <= n))
    throw ParamsOutOfRange("alphabet bounds need 1 <= w < n");
  AlphabetBounds b;
  b.upper = binomial(n - 1, w - 1) + 1;
  b.lower = w + 1;
  if (n > w + 1 && w >= 2)
    b.lower = std::max(b.lower, mpz_class(n - w + 2));

  if (n == w + 1)
    b.exact = w + 1;
  else if (w == 1)
    b.exact = 2;
  else if (w == 2)
    b.exact = n;
  else if (w == 3)
    b.exact = n % 2 == 1 ? n - 1 : n;
  return b;
}

const std::vector<KnownFact>& known_facts() {
  static const std::vector<KnownFact> facts = {
      {16, 5, 15, 3, false,
       "no radius-2 perfect code over a ternary alphabet exists at length 16;"
       " ruled out by a published classification"},
      {8, 5, 7, 3, true,
       "a radius-2 perfect code of length 8 over a ternary alphabet is known"},
      {64, 5, 63, 3, true,
       "a radius-2 perfect code of length 64 over a ternary alphabet is"
       " known"},
      {6, 4, 5, 3, false,
       "exhaustive search gives a maximum of 12 words, below the anticode"
       " quotient of 24"},
      {4, 3, 3, 3, true,
       "radius-1 ternary solution; the lengths that work are exactly the"
       " powers of two"},
      {8, 3, 7, 3, true,
       "radius-1 ternary solution; the lengths that work are exactly the"
       " powers of two"},
  };
  return facts;
}

std::optional<KnownFact> lookup_fact(int n, int d, int w, std::uint32_t q) {
  for (const KnownFact& f : known_facts())
    if (f.n == n && f.d == d && f.w == w && f.q == q) return f;
  return std::nullopt;
}

namespace {

FamilyAssessment shape_mismatch(const std::string& family,
                                const std::string& requirement) {
  FamilyAssessment a;
  a.family = family;
  a.status = Feasibility::infeasible;
  a.checks.push_back({"family-shape", requirement, false});
  return a;
}

FamilyAssessment assess_binary(int n, int d, int w) {
  FamilyAssessment a;
  a.family = "binary-steiner";
  a.note = "binary constant-weight route through block designs";
  if (d % 2 != 0) {
    a.status = Feasibility::infeasible;
    a.checks.push_back(
        {"even-distance", "binary constant-weight distances are even; d=" +
                              std::to_string(d),
         false});
    return a;
  }
  // Complementing every word is an isometry between the weight-w and the
  // weight-(n-w) spaces, so only the smaller weight needs analysis.
  const int wn = std::min(w, n - w);
  const int t = wn - d / 2 + 1;
  if (!(1 <= t && t <= wn)) {
    a.status = Feasibility::infeasible;
    a.checks.push_back({"design-order-range",
                        "t=w'-d/2+1=" + std::to_string(t) +
                            " outside 1..w'=" + std::to_string(wn) +
                            " (w' = min(w, n-w))",
                        false});
    return a;
  }
  const Divisibility direct = steiner_divisibility(t, wn, n);
  a.checks.push_back({"steiner-divisibility",
                      direct.pass
                          ? "all " + std::to_string(t) + " levels integral"
                          : "level " + std::to_string(direct.first_failed_level) +
                                " not integral",
                      direct.pass});

  if (!direct.pass) {
    a.status = Feasibility::infeasible;
  } else if (t == wn || t == 1 || (t == 2 && wn == 3)) {
    a.status = Feasibility::feasible;
    a.note = "a block design with these parameters is known to exist";
  } else {
    a.status = Feasibility::unknown;
  }
  return a;
}

FamilyAssessment assess_f1(int n, int d, int w) {
  if (w != n)
    return shape_mismatch("F1", "requires full weight w = n; w=" +
                                    std::to_string(w) +
                                    " n=" + std::to_string(n));
  FamilyAssessment a;
  a.family = "F1";
  if (d > n) {
    a.status = Feasibility::infeasible;
    a.checks.push_back({"distance-within-length",
                        ineq("d=" + std::to_string(d), "<=",
                             "n=" + std::to_string(n)),
                        false});
    return a;
  }
  a.status = Feasibility::unknown;
  a.note =
      "equivalent to an equal-length code over one fewer symbol; no closed"
      " rule here";
  return a;
}

FamilyAssessment assess_f2(int n, int d, int w, std::uint32_t q) {
  const std::uint32_t qm1 = q - 1;
  const bool pow2 = q >= 3 && (qm1 & (qm1 - 1)) == 0;
  if (w != n - 1 || !pow2 || d % 2 == 0)
    return shape_mismatch(
        "F2", "requires w = n-1, q = 2^k+1, odd d; w=" + std::to_string(w) +
                  " n=" + std::to_string(n) + " q=" + std::to_string(q) +
                  " d=" + std::to_string(d));
  FamilyAssessment a;
  a.family = "F2";
  a.note = "perfect-code route (balls of radius (d-1)/2)";
  if (d == 1) {
    a.status = Feasibility::feasible;
    a.note = "radius 0: the whole space is the code";
    return a;
  }
  if (d == 3) {
    mpz_class component;
    mpz_ui_pow_ui(component.get_mpz_t(), qm1, w);
    const mpz_class ball = 1 + mpz_class(w) * (q - 2);
    const bool divides = component % ball == 0;
    a.checks.push_back({"radius-one-counting",
                        "ball " + ball.get_str() +
                            (divides ? " divides " : " does not divide ") +
                            "component " + component.get_str(),
                        divides});
    a.status = divides ? Feasibility::feasible : Feasibility::infeasible;
    if (divides)
      a.note = "radius-1 counting is exact for this alphabet: a perfect code"
               " exists";
    return a;
  }
  a.status = Feasibility::unknown;
  a.note = "perfect codes of radius 2 or more are not decided by the rules"
           " here";
  return a;
}

FamilyAssessment assess_f3(int n, int d, int w, std::uint32_t q) {
  if (d % 2 == 0)
    return shape_mismatch("F3", "requires odd d; d=" + std::to_string(d));
  const int t = w - (d - 1) / 2;
  if (!(1 <= t && t <= w))
    return shape_mismatch("F3", "t=w-(d-1)/2=" + std::to_string(t) +
                                    " outside 1..w=" + std::to_string(w));
  FamilyAssessment a;
  a.family = "F3";
  a.note = "covering-design route (every weight-" + std::to_string(t) +
           " word exactly once)";
  const bool integral = gs_size_integral(t, w, n, q);
  a.checks.push_back({"design-counting",
                      "required size " + gs_size(t, w, n, q).get_str() +
                          (integral ? " is an integer" : " is not an integer"),
                      integral});
  if (!integral) {
    a.status = Feasibility::infeasible;
    return a;
  }
  if (t == w) {
    a.status = Feasibility::feasible;
    a.note = "distance 1: every weight-w word qualifies";
  } else if (t == 2 && w == 3 && n == static_cast<int>(q) + 1 &&
             is_prime_power(q)) {
    a.status = Feasibility::feasible;
    a.note = "constructible from the minimum-weight words of an extended"
             " polynomial-evaluation code";
  } else {
    a.status = Feasibility::unknown;
  }
  return a;
}

FamilyAssessment assess_f4(int n, int d, int w, std::uint32_t q) {
  if (d != w)
    return shape_mismatch("F4", "requires d = w; d=" + std::to_string(d) +
                                    " w=" + std::to_string(w));
  FamilyAssessment a;
  a.family = "F4";
  a.note = "one support, all nonzero multiples route";
  if (w == 1) {
    a.status = Feasibility::feasible;
    a.note = "weight 1: all weight-1 words form the code";
    return a;
  }
  if (n <= static_cast<int>(q) + 1 && is_prime_power(q)) {
    a.status = Feasibility::feasible;
    a.note = "constructible from a polynomial-evaluation parity check"
             " (n <= q+1)";
  } else {
    a.status = Feasibility::unknown;
    a.note = "beyond the known construction range n <= q+1 over a prime-power"
             " alphabet";
  }
  return a;
}

FamilyAssessment assess_f5(int n, int d, int w, std::uint32_t q) {
  if (d != w + 1)
    return shape_mismatch("F5", "requires d = w+1; d=" + std::to_string(d) +
                                    " w=" + std::to_string(w));
  FamilyAssessment a;
  a.family = "F5";
  a.note = "one word per support route";
  if (w == n) {
    a.status = Feasibility::infeasible;
    a.checks.push_back({"distance-within-length",
                        ineq("d=" + std::to_string(d), "<=",
                             "n=" + std::to_string(n)),
                        false});
    return a;
  }
  const AlphabetBounds b = q0_bounds(w, n);
  const bool above_lower = mpz_class(q) >= b.lower;
  a.checks.push_back({"alphabet-lower-bound",
                      "q=" + std::to_string(q) +
                          (above_lower ? " >= " : " < ") + b.lower.get_str(),
                      above_lower});
  if (!above_lower) {
    a.status = Feasibility::infeasible;
    return a;
  }
  if (b.exact) {
    const bool enough = mpz_class(q) >= *b.exact;
    a.checks.push_back({"alphabet-threshold",
                        "q=" + std::to_string(q) +
                            (enough ? " >= " : " < ") + "q0=" +
                            b.exact->get_str(),
                        enough});
    a.status = enough ? Feasibility::feasible : Feasibility::infeasible;
    return a;
  }
  if (mpz_class(q) >= b.upper) {
    a.status = Feasibility::feasible;
    a.note = "alphabet reaches the per-support counter construction";
  } else {
    a.status = Feasibility::unknown;
  }
  return a;
}

FamilyAssessment assess_f6(int n, int d, int w, std::uint32_t q) {
  if (!(1 <= d && d < w))
    return shape_mismatch("F6", "requires 1 <= d < w; d=" + std::to_string(d) +
                                    " w=" + std::to_string(w));
  FamilyAssessment a;
  a.family = "F6";
  a.note = "support-regular route with orthogonal-array projections";
  a.checks = moa_bounds(n, d, w, q);
  const FeasibilityVerdict oa = oa_feasible(w - d + 1, w, q - 1);
  if (oa.status == Feasibility::infeasible)
    a.checks.push_back({"support-oa-" + oa.rule, oa.detail, false});
  bool failed = false;
  for (const BoundCheck& c : a.checks) failed |= !c.holds;
  if (failed) {
    a.status = Feasibility::infeasible;
    return a;
  }
  const std::uint32_t base = q - 1;
  const bool constructible =
      w < n && is_prime_power(base) && n <= static_cast<int>(base) &&
      w - d + 2 >= 1 && binomial(n, n - w) <= base;
  if (constructible) {
    a.status = Feasibility::feasible;
    a.note = "constructible through the grouped orthogonal-array route";
  } else {
    a.status = Feasibility::unknown;
  }
  return a;
}

}  // namespace

int FeasibilityReport::violations() const {
  bool any_open = false;
  for (const FamilyAssessment& a : assessments)
    if (a.status != Feasibility::infeasible) any_open = true;
  if (any_open) return 0;
  int count = 0;
  for (const FamilyAssessment& a : assessments)
    for (const BoundCheck& c : a.checks)
      if (!c.holds) ++count;
  return count;
}

std::string FeasibilityReport::to_text() const {
  std::string out = "FEASIBILITY n=" + std::to_string(n) +
                    " d=" + std::to_string(d) + " w=" + std::to_string(w) +
                    " q=" + std::to_string(q) + "\n";
  for (const FamilyAssessment& a : assessments) {
    const char* status = a.status == Feasibility::feasible ? "feasible"
                         : a.status == Feasibility::infeasible ? "infeasible"
                                                               : "open";
    out += "FAMILY " + a.family + " " + status + "\n";
    if (!a.note.empty()) out += "  NOTE " + a.note + "\n";
    for (const BoundCheck& c : a.checks)
      out += "  RULE " + c.rule + (c.holds ? " PASS " : " FAIL ") + c.detail +
             "\n";
  }
  if (external_note) out += "EXTERNAL " + *external_note + "\n";
  out += "VIOLATIONS " + std::to_string(violations()) + "\n";
  return out;
}

FeasibilityReport feasibility_report(int n, int d, int w, std::uint32_t q) {
  if (!(1 <= w && w <= n) || d < 1 || q < 2)
    throw ParamsOutOfRange("feasibility needs 1 <= w <= n, d >= 1, q >= 2");
  FeasibilityReport rep;
  rep.n = n;
  rep.d = d;
  rep.w = w;
  rep.q = q;
  if (q == 2) {
    rep.assessments.push_back(assess_binary(n, d, w));
  } else {
    rep.assessments.push_back(assess_f1(n, d, w));
    rep.assessments.push_back(assess_f2(n, d, w, q));
    rep.assessments.push_back(assess_f3(n, d, w, q));
    rep.assessments.push_back(assess_f4(n, d, w, q));
    rep.assessments.push_back(assess_f5(n, d, w, q));
    rep.assessments.push_back(assess_f6(n, d, w, q));
  }
  if (const auto fact = lookup_fact(n, d, w, q))
    rep.external_note = std::string(fact->exists ? "existence" : "nonexistence") +
                        " (outside these rules): " + fact->note;
  return rep;
}

}  // namespace cw
