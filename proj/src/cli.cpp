#include "cw/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cw/anticodes.hpp"
#include "cw/bounds.hpp"
#include "cw/designs.hpp"
#include "cw/errors.hpp"
#include "cw/families.hpp"
#include "cw/oracle.hpp"
#include "cw/ortharray.hpp"
#include "cw/space.hpp"
#include "cw/verifier.hpp"

namespace cw {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 4;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParamsOutOfRange("cannot open " + path + " for writing");
  out << text;
}

struct ConstructArgs {
  std::string family;
  int n = 0, w = 0, t = 0, l = 0;
  unsigned q = 0;
  std::string in, in2, spec, out;
};

int emit_family(const FamilyCode& fc, const std::string& out) {
  write_code_file(fc.code, out);
  write_text_file(out + ".manifest", manifest_text(fc));
  std::cout << fc.certificate.to_text();
  std::cout << "FAMILY " << fc.family << "\n";
  std::cout << "WROTE " << out << "\n";
  std::cout << "WROTE " << out << ".manifest\n";
  return fc.certificate.pass() ? kExitPass : kExitFail;
}

int emit_plain(const Code& c, const std::string& construction,
               const std::string& out) {
  write_code_file(c, out);
  std::string m = "construction=" + construction + "\n";
  m += "n=" + std::to_string(c.n) + "\n";
  m += "q=" + std::to_string(c.q) + "\n";
  m += "w=" + (c.weight ? std::to_string(*c.weight) : std::string("-")) + "\n";
  m += "size=" + std::to_string(c.words.size()) + "\n";
  write_text_file(out + ".manifest", m);
  std::cout << "WROTE " << out << "\n";
  std::cout << "WROTE " << out << ".manifest\n";
  return kExitPass;
}

int run_construct(const ConstructArgs& a) {
  if (a.out.empty()) {
    std::cerr << "error: construct requires --out\n";
    return kExitUsage;
  }
  if (a.family == "gs23") return emit_family(gs23_family(a.q), a.out);
  if (a.family == "mdscw")
    return emit_family(mds_cw_construct(a.n, a.w, a.q), a.out);
  if (a.family == "moacw")
    return emit_family(moa_cw_construct(a.n, a.t, a.l, a.q), a.out);
  if (a.family == "f5") return emit_family(f5_construct(a.n, a.w), a.out);
  if (a.family == "f5w3") return emit_family(f5_construct_w3(a.n), a.out);
  if (a.family == "union") {
    if (a.in.empty() || a.in2.empty()) {
      std::cerr << "error: union requires --in and --in2\n";
      return kExitUsage;
    }
    return emit_family(
        mds_cw_union(parse_code_file(a.in), parse_code_file(a.in2)), a.out);
  }
  if (a.family == "puncture" || a.family == "shorten") {
    if (a.in.empty()) {
      std::cerr << "error: " << a.family << " requires --in\n";
      return kExitUsage;
    }
    const Reduction mode =
        a.family == "puncture" ? Reduction::puncture : Reduction::shorten;
    return emit_family(moa_reduce(parse_code_file(a.in), mode), a.out);
  }
  if (a.family == "lift" || a.family == "project") {
    if (a.in.empty()) {
      std::cerr << "error: " << a.family << " requires --in\n";
      return kExitUsage;
    }
    const Code in = parse_code_file(a.in);
    return emit_plain(a.family == "lift" ? f1_lift(in) : f1_project(in),
                      a.family, a.out);
  }
  if (a.family == "oa") {
    const OrthogonalArray oa = rs_oa(a.t, a.n, a.q);
    Code c = make_code(oa.n, oa.q, oa.rows);
    write_code_file(c, a.out);
    std::string m = "construction=oa\n";
    m += "strength=" + std::to_string(oa.strength) + "\n";
    m += "n=" + std::to_string(oa.n) + "\n";
    m += "q=" + std::to_string(oa.q) + "\n";
    m += "index=" + std::to_string(oa.index) + "\n";
    m += "rows=" + std::to_string(oa.rows.size()) + "\n";
    write_text_file(a.out + ".manifest", m);
    std::cout << "WROTE " << a.out << "\n";
    std::cout << "WROTE " << a.out << ".manifest\n";
    return kExitPass;
  }
  if (a.family == "anticode") {
    if (a.spec.empty() || a.q < 2) {
      std::cerr << "error: anticode requires --spec and --q\n";
      return kExitUsage;
    }
    const AnticodeSpec spec = parse_anticode_spec(a.spec);
    const Anticode ac = make_anticode(spec, a.q);
    Code c = make_code(ac.n, ac.q, ac.words);
    write_code_file(c, a.out);
    std::string m = "construction=anticode\n";
    m += "spec=" + to_string(spec) + "\n";
    m += "n=" + std::to_string(ac.n) + "\n";
    m += "q=" + std::to_string(ac.q) + "\n";
    m += "w=" + std::to_string(ac.weight) + "\n";
    m += "size=" + std::to_string(ac.words.size()) + "\n";
    m += "diameter=" + std::to_string(ac.diam ? *ac.diam : diameter(ac)) + "\n";
    write_text_file(a.out + ".manifest", m);
    std::cout << "WROTE " << a.out << "\n";
    std::cout << "WROTE " << a.out << ".manifest\n";
    return kExitPass;
  }
  std::cerr << "error: unknown family '" << a.family << "'\n";
  return kExitUsage;
}

struct VerifyArgs {
  std::string code_path;
  bool diameter_perfect = false;
  std::string anticode_spec;
  unsigned anticode_q = 0;
  int gs_t = -1;
  int steiner_t = -1;
  bool support_reg = false;
  std::string expected;
  int oa_strength = 0;
  int perfect_e = -1;
  bool classify = false;
};

int run_verify(const VerifyArgs& a) {
  const Code code = parse_code_file(a.code_path);

  if (a.diameter_perfect) {
    if (a.anticode_spec.empty()) {
      std::cerr << "error: --diameter-perfect requires --anticode\n";
      return kExitUsage;
    }
    const AnticodeSpec spec = parse_anticode_spec(a.anticode_spec);
    const Anticode ac =
        make_anticode(spec, a.anticode_q ? a.anticode_q : code.q);
    const VerificationReport rep = diameter_perfect_check(code, ac);
    std::cout << rep.to_text();
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (a.gs_t >= 0) {
    const VerificationReport rep = gs_verify(code, a.gs_t);
    std::cout << rep.to_text();
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (a.steiner_t >= 0) {
    if (!code.weight) {
      std::cerr << "error: design verification needs a constant-weight code\n";
      return kExitFail;
    }
    SteinerSystem s;
    s.n = code.n;
    s.t = a.steiner_t;
    s.w = *code.weight;
    for (const Word& u : code.words) {
      std::vector<int> block;
      for (int i : support(u)) block.push_back(i + 1);
      s.blocks.push_back(std::move(block));
    }
    const VerificationReport rep = steiner_verify(s);
    std::cout << rep.to_text();
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (a.support_reg) {
    mpz_class expected;
    if (!a.expected.empty()) {
      expected = mpz_class(a.expected);
    } else if (code.weight) {
      expected = mpz_class(static_cast<unsigned long>(code.words.size())) /
                 binomial(code.n, *code.weight);
    }
    const VerificationReport rep = support_regularity(
        code, expected,
        a.oa_strength > 0 ? std::optional<int>(a.oa_strength) : std::nullopt);
    std::cout << rep.to_text();
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (a.perfect_e >= 0) {
    const VerificationReport rep = perfect_check(code, a.perfect_e);
    std::cout << rep.to_text();
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (a.classify) {
    if (!code.weight) {
      std::cerr << "error: classification needs a constant-weight code\n";
      return kExitFail;
    }
    try {
      const auto matches = classify_family(
          code.n, min_distance(code), *code.weight, code.q,
          mpz_class(static_cast<unsigned long>(code.words.size())));
      for (const FamilyMatch& m : matches)
        std::cout << "MATCH " << m.label << " " << m.name
                  << " anticode=" << to_string(m.anticode) << "\n";
      return kExitPass;
    } catch (const Unclassifiable& e) {
      std::cout << "UNCLASSIFIED " << e.what() << "\n";
      return kExitFail;
    }
  }
  std::cerr << "error: verify needs one of --diameter-perfect, --gs, "
               "--steiner, --support-regularity, --perfect, --classify\n";
  return kExitUsage;
}

struct SearchArgs {
  std::string mode;
  int n = 0, d = 0, w = 0, t = 0, e = -1, diameter = -1;
  unsigned q = 0;
  long long max_nodes = 20'000'000;
  double time_limit = 300.0;
  long long max_space = 1'000'000;
  std::string out;
};

int run_search(const SearchArgs& a) {
  SearchBudget budget;
  budget.max_nodes = a.max_nodes;
  budget.time_limit_seconds = a.time_limit;
  budget.max_space = a.max_space;

  const auto emit_witness = [&](const std::vector<Word>& witness) {
    if (a.out.empty() || witness.empty()) return;
    write_code_file(make_code(a.n, a.q, witness), a.out);
    std::cout << "WROTE " << a.out << "\n";
  };

  if (a.mode == "max-code" || a.mode == "max-anticode") {
    const bool code_mode = a.mode == "max-code";
    const SearchResult r =
        code_mode ? max_code_search(a.n, a.d, a.w, a.q, budget)
                  : max_anticode_search(a.n, a.diameter, a.w, a.q, budget);
    std::cout << "RESULT " << a.mode << " n=" << a.n
              << (code_mode ? " d=" + std::to_string(a.d)
                            : " D=" + std::to_string(a.diameter))
              << " w=" << a.w << " q=" << a.q << " value=" << r.value.get_str()
              << " status="
              << (r.status == SearchStatus::exact ? "exact" : "inconclusive")
              << " nodes=" << r.nodes << "\n";
    if (!r.note.empty()) std::cout << "NOTE " << r.note << "\n";
    emit_witness(r.witness);
    return r.status == SearchStatus::exact ? kExitPass : kExitInconclusive;
  }
  if (a.mode == "perfect" || a.mode == "gs") {
    const ExistenceResult r =
        a.mode == "perfect" ? perfect_code_search(a.n, a.w, a.q, a.e, budget)
                            : gs_search(a.t, a.w, a.n, a.q, budget);
    std::cout << "RESULT " << a.mode << " n=" << a.n << " w=" << a.w
              << " q=" << a.q
              << (a.mode == "perfect" ? " e=" + std::to_string(a.e)
                                      : " t=" + std::to_string(a.t))
              << " status="
              << (r.status == SearchStatus::exact ? "exact" : "inconclusive")
              << " exists="
              << (r.status != SearchStatus::exact ? "undecided"
                  : r.exists                      ? "yes"
                                                  : "no")
              << " nodes=" << r.nodes << "\n";
    if (!r.note.empty()) std::cout << "NOTE " << r.note << "\n";
    emit_witness(r.witness);
    if (r.status != SearchStatus::exact) return kExitInconclusive;
    return r.exists ? kExitPass : kExitInfeasible;
  }
  std::cerr << "error: unknown search mode '" << a.mode << "'\n";
  return kExitUsage;
}

struct BoundsArgs {
  bool q0 = false;
  bool oa = false;
  int n = 0, d = 0, w = 0, t = 0;
  unsigned q = 0;
};

int run_bounds(const BoundsArgs& a) {
  if (a.q0) {
    const AlphabetBounds b = q0_bounds(a.w, a.n);
    std::cout << "Q0 w=" << a.w << " n=" << a.n
              << " lower=" << b.lower.get_str()
              << " upper=" << b.upper.get_str()
              << " exact=" << (b.exact ? b.exact->get_str() : "unknown")
              << "\n";
    return kExitPass;
  }
  if (a.oa) {
    const FeasibilityVerdict v = oa_feasible(a.t, a.n, a.q);
    const char* status = v.status == Feasibility::feasible    ? "feasible"
                         : v.status == Feasibility::infeasible ? "infeasible"
                                                               : "unknown";
    std::cout << "OA t=" << a.t << " n=" << a.n << " q=" << a.q << " "
              << status << " rule=" << v.rule << " " << v.detail << "\n";
    if (v.status == Feasibility::feasible) return kExitPass;
    return v.status == Feasibility::infeasible ? kExitInfeasible
                                               : kExitInconclusive;
  }
  const FeasibilityReport rep = feasibility_report(a.n, a.d, a.w, a.q);
  std::cout << rep.to_text();
  return rep.violations() == 0 ? kExitPass : kExitInfeasible;
}

struct CatalogArgs {
  std::string out_dir;
};

int run_catalog(const CatalogArgs& a) {
  bool all_pass = true;
  const auto emit = [&](const FamilyCode& fc, const std::string& slug) {
    std::cout << "CATALOG construction=" << slug << " family=" << fc.family
              << " n=" << fc.code.n << " q=" << fc.code.q << " w="
              << (fc.code.weight ? std::to_string(*fc.code.weight) : "-")
              << " d=" << fc.min_dist << " size=" << fc.code.words.size()
              << " certified=" << (fc.certificate.pass() ? "true" : "false")
              << "\n";
    all_pass &= fc.certificate.pass();
    if (!a.out_dir.empty()) {
      const std::string path = a.out_dir + "/" + slug + ".code";
      write_code_file(fc.code, path);
      write_text_file(path + ".manifest", manifest_text(fc));
    }
  };

  for (unsigned q : {3u, 4u, 5u, 7u, 8u})
    emit(gs23_family(q), "gs23_q" + std::to_string(q));
  const int mds_params[][3] = {{4, 3, 3}, {5, 3, 4}, {5, 4, 4}, {6, 4, 5},
                               {6, 5, 5}, {8, 4, 7}, {9, 5, 8}};
  for (const auto& p : mds_params)
    emit(mds_cw_construct(p[0], p[1], static_cast<unsigned>(p[2])),
         "mdscw_n" + std::to_string(p[0]) + "w" + std::to_string(p[1]) + "q" +
             std::to_string(p[2]));
  emit(moa_cw_construct(6, 2, 1, 5), "moacw_n6t2l1q5");
  emit(moa_cw_construct(7, 3, 1, 7), "moacw_n7t3l1q7");
  const int f5_params[][2] = {{5, 2}, {5, 3}, {6, 3}};
  for (const auto& p : f5_params)
    emit(f5_construct(p[0], p[1]),
         "f5_n" + std::to_string(p[0]) + "w" + std::to_string(p[1]));
  for (int n : {5, 6, 7, 8})
    emit(f5_construct_w3(n), "f5w3_n" + std::to_string(n));
  emit(mds_cw_union(mds_cw_construct(4, 3, 3).code,
                    mds_cw_construct(4, 3, 4).code),
       "union_n4w3q6");
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"construction and verification workbench for constant-weight"
               " codes"};
  app.require_subcommand(1);

  ConstructArgs cons;
  CLI::App* c = app.add_subcommand("construct",
                                   "build a family instance and certify it");
  c->add_option("--family", cons.family,
                "gs23|mdscw|moacw|f5|f5w3|union|lift|project|puncture|"
                "shorten|oa|anticode")
      ->required();
  c->add_option("--n", cons.n, "length parameter");
  c->add_option("--w", cons.w, "weight parameter");
  c->add_option("--t", cons.t, "strength / design order");
  c->add_option("--l", cons.l, "zero-block size");
  c->add_option("--q", cons.q, "alphabet or field size");
  c->add_option("--in", cons.in, "input code file");
  c->add_option("--in2", cons.in2, "second input code file");
  c->add_option("--spec", cons.spec, "anticode shorthand, e.g. m:5,4,2");
  c->add_option("--out", cons.out, "output code file path");

  VerifyArgs ver;
  CLI::App* v = app.add_subcommand("verify", "check a code file");
  v->add_option("--code", ver.code_path, "code file")->required();
  v->add_flag("--diameter-perfect", ver.diameter_perfect,
              "size product and distance/diameter gap");
  v->add_option("--anticode", ver.anticode_spec, "anticode shorthand");
  v->add_option("--anticode-q", ver.anticode_q,
                "anticode alphabet (defaults to the code's)");
  v->add_option("--gs", ver.gs_t, "verify exact coverage of weight-t words");
  v->add_option("--steiner", ver.steiner_t,
                "verify supports as blocks of a t-design");
  v->add_flag("--support-regularity", ver.support_reg,
              "equal word count on every support");
  v->add_option("--expected", ver.expected, "expected per-support count");
  v->add_option("--oa-strength", ver.oa_strength,
                "also check per-support projections at this strength");
  v->add_option("--perfect", ver.perfect_e, "exact ball cover at radius e");
  v->add_flag("--classify", ver.classify, "match against the known families");

  SearchArgs sea;
  CLI::App* s = app.add_subcommand("search", "exhaustive oracles");
  s->add_option("--mode", sea.mode, "max-code|max-anticode|perfect|gs")
      ->required();
  s->add_option("--n", sea.n, "length");
  s->add_option("--d", sea.d, "minimum distance (max-code)");
  s->add_option("--diameter", sea.diameter, "diameter cap (max-anticode)");
  s->add_option("--w", sea.w, "weight");
  s->add_option("--t", sea.t, "design order (gs)");
  s->add_option("--e", sea.e, "radius (perfect)");
  s->add_option("--q", sea.q, "alphabet");
  s->add_option("--max-nodes", sea.max_nodes, "search node budget");
  s->add_option("--time-limit", sea.time_limit, "seconds before giving up");
  s->add_option("--max-space", sea.max_space, "largest space to enumerate");
  s->add_option("--out", sea.out, "write the witness here");

  BoundsArgs bnd;
  CLI::App* b = app.add_subcommand("bounds", "feasibility rules");
  b->add_flag("--q0", bnd.q0, "alphabet bounds for one-word-per-support");
  b->add_flag("--oa", bnd.oa, "orthogonal-array feasibility");
  b->add_option("--n", bnd.n, "length");
  b->add_option("--d", bnd.d, "minimum distance");
  b->add_option("--w", bnd.w, "weight");
  b->add_option("--t", bnd.t, "strength");
  b->add_option("--q", bnd.q, "alphabet");

  CatalogArgs cat;
  CLI::App* k = app.add_subcommand("catalog", "sweep the built-in instances");
  k->add_option("--out-dir", cat.out_dir, "write code files here");

  int rc = kExitPass;
  c->callback([&]() { rc = run_construct(cons); });
  v->callback([&]() { rc = run_verify(ver); });
  s->callback([&]() { rc = run_search(sea); });
  b->callback([&]() { rc = run_bounds(bnd); });
  k->callback([&]() { rc = run_catalog(cat); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const ParamsInfeasible& e) {
    std::cout << "INFEASIBLE " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamsOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return kExitFail;
  }
  return rc;
}

}  // namespace cw
