// Acceptance suite: one self-contained check per release criterion, each
// printing a single PASS/FAIL line with its wall-clock time.  The binary
// exits 0 only when every criterion passes.  Failures list what went wrong
// underneath the verdict line; nothing here depends on the unit tests.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cw/anticodes.hpp"
#include "cw/bounds.hpp"
#include "cw/designs.hpp"
#include "cw/families.hpp"
#include "cw/oracle.hpp"
#include "cw/ortharray.hpp"
#include "cw/space.hpp"
#include "cw/verifier.hpp"

namespace {

using cw::Code;

struct Failures {
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
  bool ok() const { return notes.empty(); }
};

// Parameters of every code the construction criteria emit, re-checked for
// bound soundness by the final criterion.
std::set<std::tuple<int, int, int, std::uint32_t>> g_emitted;

void record_emitted(int n, int d, int w, std::uint32_t q) {
  g_emitted.insert({n, d, w, q});
}

std::string show(const mpz_class& v) { return v.get_str(); }

// --- criterion bodies ------------------------------------------------------

// Weight-3 strength-2 family over alphabets 3,4,5,7,8: exact size formula,
// coverage verification, and the exact code-anticode product.
void crit_gs_family(Failures& f) {
  const std::vector<std::pair<std::uint32_t, unsigned long>> frozen = {
      {3, 8}, {4, 30}, {5, 80}, {7, 336}, {8, 588}};
  for (auto [q, expected_size] : frozen) {
    const int n = static_cast<int>(q) + 1;
    cw::FamilyCode fc = cw::gs23_family(q);
    std::ostringstream tag;
    tag << "gs23 q=" << q;
    f.expect(fc.code.n == n && fc.code.q == q,
             tag.str() + ": wrong ambient parameters");
    f.expect(fc.code.words.size() == expected_size,
             tag.str() + ": size " + std::to_string(fc.code.words.size()) +
                 " != " + std::to_string(expected_size));
    const mpz_class qm1(static_cast<unsigned long>(q - 1));
    mpz_class sz(static_cast<unsigned long>(fc.code.words.size()));
    f.expect(sz * 3 == cw::binomial(n, 2) * qm1 * qm1,
             tag.str() + ": size formula C(n,2)(q-1)^2/3 violated");
    f.expect(cw::gs_verify(fc.code, 2).pass(),
             tag.str() + ": strength-2 coverage verification failed");
    cw::Anticode a = cw::anticode_s(n, 3, 2, q);
    f.expect(cw::diameter_perfect_check(fc.code, a).pass(),
             tag.str() + ": diameter-perfect check failed");
    mpz_class product = sz * mpz_class(static_cast<unsigned long>(a.words.size()));
    f.expect(product == cw::space_size(n, 3, q),
             tag.str() + ": product " + show(product) +
                 " != space " + show(cw::space_size(n, 3, q)));
    f.expect(fc.certificate.pass(), tag.str() + ": certificate failed");
    record_emitted(n, 3, 3, q);
  }
}

// Distance-w one-scalar-per-support family over every prime-power alphabet
// up to 8, weights 2..4, all lengths up to q+1.
void crit_mds_sweep(Failures& f) {
  int instances = 0;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    for (int w = 2; w <= 4; ++w) {
      for (int n = w; n <= static_cast<int>(q) + 1; ++n) {
        cw::FamilyCode fc = cw::mds_cw_construct(n, w, q);
        std::ostringstream tag;
        tag << "mdscw n=" << n << " w=" << w << " q=" << q;
        f.expect(cw::min_distance(fc.code) == w,
                 tag.str() + ": minimum distance != w");
        f.expect(cw::support_regularity(fc.code,
                                        mpz_class(static_cast<unsigned long>(q - 1)))
                     .pass(),
                 tag.str() + ": per-support count != q-1");
        f.expect(cw::diameter_perfect_check(fc.code,
                                            cw::anticode_m(n, w, w - 1, q))
                     .pass(),
                 tag.str() + ": diameter-perfect check failed");
        f.expect(fc.certificate.pass(), tag.str() + ": certificate failed");
        record_emitted(n, w, w, q);
        ++instances;
      }
    }
  }
  // For each alphabet q the lengths w..q+1 contribute q+2-w instances,
  // so the sweep covers sum over q of (3q-3) = 66 codes.
  f.expect(instances == 66,
           "sweep covered " + std::to_string(instances) + " instances, not 66");
}

// Merging two copies of the alphabet-3 instance over disjoint nonzero
// symbols doubles the per-support count and lands on alphabet 5.
void crit_union(Failures& f) {
  cw::FamilyCode base = cw::mds_cw_construct(4, 3, 3);
  cw::FamilyCode u = cw::mds_cw_union(base.code, base.code);
  f.expect(u.code.n == 4 && u.code.q == 5, "merged code not over alphabet 5");
  f.expect(u.code.words.size() == 16,
           "merged size " + std::to_string(u.code.words.size()) + " != 16");
  f.expect(cw::min_distance(u.code) == 3, "merged minimum distance != 3");
  f.expect(cw::support_regularity(u.code, mpz_class(4)).pass(),
           "merged per-support count != 4");
  f.expect(cw::diameter_perfect_check(u.code, cw::anticode_m(4, 3, 2, 5)).pass(),
           "merged diameter-perfect check failed");
  f.expect(u.certificate.pass(), "merged certificate failed");
  record_emitted(4, 3, 3, 5);
}

// Orthogonal-array route: the two flagship instances, their support
// regularity at the dictated array strength, and their anticode products.
void crit_moa(Failures& f) {
  {
    cw::FamilyCode fc = cw::moa_cw_construct(6, 2, 1, 5);
    f.expect(fc.code.n == 5 && fc.code.q == 6 && fc.code.weight == 4,
             "moacw(6,2,1,5): wrong shape");
    f.expect(fc.code.words.size() == 25, "moacw(6,2,1,5): size != 25");
    f.expect(cw::min_distance(fc.code) == 4, "moacw(6,2,1,5): distance != 4");
    f.expect(cw::support_regularity(fc.code, mpz_class(5), 1).pass(),
             "moacw(6,2,1,5): strength-1 support regularity failed");
    f.expect(cw::diameter_perfect_check(fc.code, cw::anticode_m(5, 4, 3, 6)).pass(),
             "moacw(6,2,1,5): diameter-perfect check failed");
    record_emitted(5, 4, 4, 6);
  }
  {
    cw::FamilyCode fc = cw::moa_cw_construct(7, 3, 1, 7);
    f.expect(fc.code.n == 6 && fc.code.q == 8 && fc.code.weight == 5,
             "moacw(7,3,1,7): wrong shape");
    f.expect(fc.code.words.size() == 294, "moacw(7,3,1,7): size != 294");
    f.expect(cw::min_distance(fc.code) == 4, "moacw(7,3,1,7): distance != 4");
    f.expect(cw::support_regularity(fc.code, mpz_class(49), 2).pass(),
             "moacw(7,3,1,7): strength-2 support regularity failed");
    f.expect(cw::diameter_perfect_check(fc.code, cw::anticode_m(6, 5, 3, 8)).pass(),
             "moacw(7,3,1,7): diameter-perfect check failed");
    record_emitted(6, 4, 5, 8);
  }
}

// Dropping a coordinate from the 294-word code, both ways, re-verifies.
void crit_reduce(Failures& f) {
  Code base = cw::moa_cw_construct(7, 3, 1, 7).code;
  {
    cw::FamilyCode p = cw::moa_reduce(base, cw::Reduction::puncture);
    f.expect(p.code.n == 5 && p.code.q == 8 && p.code.weight == 5,
             "puncture: wrong shape");
    f.expect(p.code.words.size() == 49, "puncture: size != 49");
    f.expect(cw::min_distance(p.code) == 4, "puncture: distance != 4");
    f.expect(cw::diameter_perfect_check(p.code, cw::anticode_m(5, 5, 3, 8)).pass(),
             "puncture: diameter-perfect check failed");
    f.expect(p.certificate.pass(), "puncture: certificate failed");
    record_emitted(5, 4, 5, 8);
  }
  {
    cw::FamilyCode s = cw::moa_reduce(base, cw::Reduction::shorten);
    f.expect(s.code.n == 5 && s.code.q == 8 && s.code.weight == 4,
             "shorten: wrong shape");
    f.expect(s.code.words.size() == 245, "shorten: size != 245");
    f.expect(cw::min_distance(s.code) == 3, "shorten: distance != 3");
    f.expect(cw::diameter_perfect_check(s.code, cw::anticode_m(5, 4, 2, 8)).pass(),
             "shorten: diameter-perfect check failed");
    f.expect(s.certificate.pass(), "shorten: certificate failed");
    record_emitted(5, 3, 4, 8);
  }
}

// One-codeword-per-support family: the weight-3 specialisation reaches the
// optimal alphabet for every length, the generic weight-2 form uses n symbols.
void crit_one_per_support(Failures& f) {
  for (int n = 4; n <= 10; ++n) {
    cw::FamilyCode fc = cw::f5_construct_w3(n);
    std::ostringstream tag;
    tag << "w3 n=" << n;
    const std::uint32_t expected_q =
        static_cast<std::uint32_t>(n % 2 == 1 ? n - 1 : n);
    f.expect(fc.code.q == expected_q,
             tag.str() + ": alphabet " + std::to_string(fc.code.q) + " != " +
                 std::to_string(expected_q));
    f.expect(mpz_class(static_cast<unsigned long>(fc.code.words.size())) ==
                 cw::binomial(n, 3),
             tag.str() + ": size != C(n,3)");
    f.expect(cw::min_distance(fc.code) == 4, tag.str() + ": distance != 4");
    record_emitted(n, 4, 3, expected_q);
  }
  for (int n = 3; n <= 8; ++n) {
    cw::FamilyCode fc = cw::f5_construct(n, 2);
    std::ostringstream tag;
    tag << "w2 n=" << n;
    f.expect(fc.code.q == static_cast<std::uint32_t>(n),
             tag.str() + ": alphabet != n");
    f.expect(mpz_class(static_cast<unsigned long>(fc.code.words.size())) ==
                 cw::binomial(n, 2),
             tag.str() + ": size != C(n,2)");
    f.expect(cw::min_distance(fc.code) == 3, tag.str() + ": distance != 3");
    record_emitted(n, 3, 2, static_cast<std::uint32_t>(n));
  }
}

// Radius-1 perfect codes: the search finds a size-8 witness at (4,3,3) that
// covers exactly; the structured representative of that family additionally
// meets the ball anticode with the exact product; (5,4,3) is exhaustively
// impossible.
void crit_perfect(Failures& f) {
  cw::ExistenceResult r = cw::perfect_code_search(4, 3, 3, 1);
  f.expect(r.status == cw::SearchStatus::exact, "(4,3,3,1): not exact");
  f.expect(r.exists, "(4,3,3,1): no code found");
  f.expect(r.witness.size() == 8,
           "(4,3,3,1): witness size " + std::to_string(r.witness.size()) +
               " != 8");
  if (r.exists && !r.witness.empty()) {
    Code wc = cw::make_code(4, 3, r.witness);
    f.expect(cw::perfect_check(wc, 1).pass(),
             "(4,3,3,1): witness fails exact-coverage verification");
  }
  // The structured member of the same family (distance 3) also satisfies the
  // diameter-perfect pairing with the radius-1 ball.
  Code rep = cw::mds_cw_construct(4, 3, 3).code;
  f.expect(cw::perfect_check(rep, 1).pass(),
           "family representative fails radius-1 perfect verification");
  cw::Anticode ball = cw::ball_anticode(4, 3, 3, 1);
  f.expect(ball.words.size() == 4, "radius-1 ball size != 4");
  f.expect(cw::diameter_perfect_check(rep, ball).pass(),
           "family representative fails diameter-perfect check vs ball");
  cw::ExistenceResult none = cw::perfect_code_search(5, 4, 3, 1);
  f.expect(none.status == cw::SearchStatus::exact, "(5,4,3,1): not exact");
  f.expect(!none.exists, "(5,4,3,1): search claims a code exists");
}

// Exhaustive searches agree with the constructions and the anticode formula.
void crit_oracle(Failures& f) {
  {
    cw::SearchResult r = cw::max_code_search(4, 3, 3, 3);
    f.expect(r.status == cw::SearchStatus::exact && r.value == 8,
             "max code (4,3,3,3) != 8 exact");
    f.expect(r.proof_of_optimality, "max code (4,3,3,3): no optimality proof");
  }
  {
    cw::SearchResult r = cw::max_code_search(6, 4, 5, 3);
    f.expect(r.status == cw::SearchStatus::exact && r.value == 12,
             "max code (6,4,5,3) != 12 exact");
  }
  {
    cw::SearchResult r = cw::max_anticode_search(4, 2, 3, 3);
    f.expect(r.status == cw::SearchStatus::exact && r.value == 4,
             "max anticode (4,2,3,3) != 4 exact");
    f.expect(r.value == mpz_class(static_cast<unsigned long>(
                            cw::anticode_m(4, 3, 2, 3).words.size())),
             "max anticode (4,2,3,3) != constructed anticode size");
  }
}

// Block designs: the seven-point plane verifies, the failing divisibility
// level at (2,3,8) is detected, and one-point derivations re-verify at the
// reduced parameters for both plain and symbol-labelled systems.
void crit_designs(Failures& f) {
  cw::SteinerSystem fano = cw::fano_plane();
  f.expect(cw::steiner_verify(fano).pass(), "seven-point plane fails verification");
  cw::Divisibility div = cw::steiner_divisibility(2, 3, 8);
  f.expect(!div.pass && div.first_failed_level == 0,
           "(2,3,8) divisibility not rejected at level 0");
  cw::SteinerSystem derived = cw::steiner_derive(fano, 1);
  f.expect(derived.t == 1 && derived.w == 2 && derived.n == 6,
           "derived system has wrong parameters");
  f.expect(cw::steiner_verify(derived).pass(), "derived system fails verification");
  cw::GeneralizedSteiner g = cw::gs_construct_2_3(4);
  cw::GeneralizedSteiner dg = cw::gs_derive(g, 0, 1);
  f.expect(dg.t == 1 && dg.code.n == 4 && dg.code.q == 4 &&
               dg.code.weight == 2,
           "labelled derivation has wrong parameters");
  f.expect(dg.code.words.size() == 6, "labelled derivation size != 6");
  f.expect(cw::gs_verify(dg.code, 1).pass(),
           "labelled derivation fails strength-1 verification");
}

// Every parameter set emitted above survives the bound battery with zero
// violations, and the alphabet-width bound rejects OA(2, q+2, q).
void crit_bounds(Failures& f) {
  f.expect(!g_emitted.empty(), "no construction parameters were recorded");
  for (const auto& [n, d, w, q] : g_emitted) {
    cw::FeasibilityReport rep = cw::feasibility_report(n, d, w, q);
    if (rep.violations() != 0) {
      std::ostringstream tag;
      tag << "feasibility n=" << n << " d=" << d << " w=" << w << " q=" << q
          << ": " << rep.violations() << " violations";
      f.notes.push_back(tag.str());
    }
  }
  for (std::uint32_t q : {3u, 4u, 5u}) {
    cw::FeasibilityVerdict v = cw::oa_feasible(2, static_cast<int>(q) + 2, q);
    f.expect(v.status == cw::Feasibility::infeasible,
             "OA(2," + std::to_string(q + 2) + "," + std::to_string(q) +
                 ") not rejected");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*body)(Failures&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "weight-3 strength-2 family", 10.0, crit_gs_family},
      {2, "distance-w per-support family sweep", 30.0, crit_mds_sweep},
      {3, "disjoint-alphabet union", 1.0, crit_union},
      {4, "orthogonal-array route", 60.0, crit_moa},
      {5, "puncture and shorten", 30.0, crit_reduce},
      {6, "one-codeword-per-support family", 10.0, crit_one_per_support},
      {7, "radius-1 perfect codes", 60.0, crit_perfect},
      {8, "exhaustive-search concordance", 300.0, crit_oracle},
      {9, "block designs and derivations", 1.0, crit_designs},
      {10, "bound soundness", 1.0, crit_bounds},
  };

  int passed = 0;
  for (const Criterion& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.notes.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.limit_seconds) {
      std::ostringstream t;
      t << "over time budget: " << elapsed << "s > " << c.limit_seconds << "s";
      f.notes.push_back(t.str());
    }
    std::printf("CRITERION %d %s (%s, %.2fs)\n", c.id,
                f.ok() ? "PASS" : "FAIL", c.name, elapsed);
    for (const std::string& note : f.notes)
      std::printf("  - %s\n", note.c_str());
    if (f.ok()) ++passed;
  }
  std::printf("ACCEPTANCE %d/%zu\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
