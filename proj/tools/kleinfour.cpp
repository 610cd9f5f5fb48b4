// Batch front end: every subcommand prints one JSON envelope (or CSV/DOT
// where tabular) and exits 0 when all checks pass, 1 on a failed check, 2 on
// usage or budget errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "kleinfour/classification.hpp"
#include "kleinfour/groupoid.hpp"
#include "kleinfour/kernels.hpp"
#include "kleinfour/morphisms.hpp"
#include "kleinfour/ordered.hpp"
#include "kleinfour/report.hpp"
#include "kleinfour/verify.hpp"

using namespace kleinfour;
using kernels::Budget;
using kernels::Exec;

namespace {

struct CommonOpts {
  std::uint32_t q = 0, p = 0, n = 1;
  std::string t_text, c_text, d_text;
  int nu = 1;
  std::string format = "json";
  std::string out_path;
  int threads = 0;
  std::uint32_t budget_scan = 0;
  int height = 8;
  std::string suite = "all";
};

void add_field_flags(CLI::App* cmd, CommonOpts& o, bool need_q) {
  auto* q = cmd->add_option("--q", o.q, "field size, an odd prime power");
  cmd->add_option("--p", o.p, "characteristic (alternative to --q)");
  cmd->add_option("--n", o.n, "extension degree over F_p (with --p)");
  cmd->add_option("--t", o.t_text, "override the non-square t of l = k(sqrt t)");
  if (need_q) q->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "json|csv|dot")->default_str("json");
  cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
  cmd->add_option("--threads", o.threads, "worker threads (default: all cores)");
  cmd->add_option("--budget", o.budget_scan,
                  "max q for brute-force scans (default 13; env KLEINFOUR_BUDGET)");
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
  for (std::uint32_t p = 3; p <= q; p += 2) {
    if (q % p != 0) continue;
    std::uint32_t n = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++n;
    }
    if (rest != 1) break;
    return {p, n};
  }
  throw std::invalid_argument("--q must be an odd prime power");
}

struct FieldBundle {
  std::unique_ptr<Fq> field;
  std::unique_ptr<FqExt> ext;
};

FieldBundle make_field(const CommonOpts& o, const Budget& budget) {
  std::uint32_t p = o.p, n = o.n;
  if (o.q != 0) std::tie(p, n) = factor_prime_power(o.q);
  if (p == 0) throw std::invalid_argument("one of --q or --p is required");
  FieldBundle b;
  b.field = std::make_unique<Fq>(p, n, budget.max_q_field);
  FqElem t = o.t_text.empty() ? b.field->smallest_nonsquare() : b.field->parse(o.t_text);
  b.ext = std::make_unique<FqExt>(*b.field, t);
  return b;
}

FqTriple parse_triple(const Fq& F, const std::string& text) {
  std::array<std::string, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = i == 2 ? text.size() : text.find(',', start);
    if (comma == std::string::npos) throw std::invalid_argument("triple needs three components");
    parts[i] = text.substr(start, comma - start);
    start = comma + 1;
  }
  return {F.parse(parts[0]), F.parse(parts[1]), F.parse(parts[2])};
}

Triple<RationalField> parse_rational_triple(const std::string& text) {
  std::array<std::string, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = i == 2 ? text.size() : text.find(',', start);
    if (comma == std::string::npos) throw std::invalid_argument("triple needs three components");
    parts[i] = text.substr(start, comma - start);
    start = comma + 1;
  }
  return {Rational(parts[0]), Rational(parts[1]), Rational(parts[2])};
}

Budget make_budget(const CommonOpts& o) {
  std::uint32_t cap = 13;
  if (const char* env = std::getenv("KLEINFOUR_BUDGET")) cap = std::stoul(env);
  if (o.budget_scan != 0) cap = o.budget_scan;
  return Budget::with_scan_cap(cap);
}

int emit(const CommonOpts& o, const std::string& text, bool ok) {
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    f << text;
  } else {
    std::cout << text;
  }
  return ok ? 0 : 1;
}

int emit_envelope(const CommonOpts& o, const std::string& command, nlohmann::json inputs,
                  nlohmann::json result, const std::vector<Check>& checks) {
  nlohmann::json env = make_envelope(command, std::move(inputs), std::move(result), checks);
  return emit(o, env.dump(2) + "\n", all_pass(checks));
}

nlohmann::json triple_json(const Fq& F, const FqTriple& c) {
  return nlohmann::json::array({F.to_string(c.c1), F.to_string(c.c2), F.to_string(c.c3)});
}

void setup_threads(const CommonOpts& o) {
#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction, analysis and classification of the 4-dimensional unital division "
               "algebras A(l, c) with Klein-four automorphisms"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* classify = app.add_subcommand("classify", "transversal and cross-checks for F_q");
  add_field_flags(classify, o, true);
  add_output_flags(classify, o);

  auto* admissible = app.add_subcommand("admissible", "is c an l-admissible triple?");
  add_field_flags(admissible, o, true);
  admissible->add_option("--c", o.c_text, "triple c1,c2,c3")->required();
  add_output_flags(admissible, o);

  auto* iso = app.add_subcommand("iso", "are A(l,c) and A(l,d) isomorphic?");
  add_field_flags(iso, o, true);
  iso->add_option("--c", o.c_text, "triple c1,c2,c3")->required();
  iso->add_option("--d", o.d_text, "triple d1,d2,d3")->required();
  add_output_flags(iso, o);

  auto* aut = app.add_subcommand("aut", "automorphism group of A(l,c)");
  add_field_flags(aut, o, true);
  aut->add_option("--c", o.c_text, "triple c1,c2,c3")->required();
  add_output_flags(aut, o);

  auto* orbits = app.add_subcommand("orbits", "orbit partition of C^nu under G^nu");
  add_field_flags(orbits, o, true);
  orbits->add_option("--nu", o.nu, "0..3")->check(CLI::Range(0, 3));
  add_output_flags(orbits, o);

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant battery at a given q");
  add_field_flags(verify_cmd, o, true);
  verify_cmd->add_option("--suite", o.suite, "all|counts|admissibility|structure|morphisms|groupoid");
  add_output_flags(verify_cmd, o);

  auto* ordered = app.add_subcommand("ordered", "exact-rational square-ordered classification");
  ordered->require_subcommand(1);
  auto* predicates = ordered->add_subcommand("predicates", "evaluate the displayed set predicates");
  predicates->add_option("--c", o.c_text, "rational triple c1,c2,c3 (e.g. 3/4,0,-1)")->required();
  add_output_flags(predicates, o);
  auto* refute = ordered->add_subcommand("refute", "isotropy witness search for a rational triple");
  refute->add_option("--c", o.c_text, "rational triple c1,c2,c3")->required();
  refute->add_option("--height", o.height, "rational witness search height");
  add_output_flags(refute, o);
  auto* grid = ordered->add_subcommand("grid", "predicate-consistency battery on the rational grid");
  add_output_flags(grid, o);

  CLI11_PARSE(app, argc, argv);

  try {
    Budget budget = make_budget(o);
    setup_threads(o);
    Exec exec = o.threads == 1 ? Exec::serial : Exec::parallel;

    if (*classify) {
      auto fb = make_field(o, budget);
      ClassificationReport r = fq_classify(*fb.ext, budget, exec);
      if (o.format == "csv") return emit(o, classification_csv(r, *fb.field), all_pass(r.cross_checks));
      nlohmann::json inputs{{"q", fb.field->size()}, {"t", r.t_text}};
      return emit_envelope(o, "classify", inputs, classification_json(r, *fb.field), r.cross_checks);
    }

    if (*admissible) {
      auto fb = make_field(o, budget);
      FqTriple c = parse_triple(*fb.field, o.c_text);
      FqAlgebra A(*fb.ext, c);
      auto failure = A.closed_form_failure();
      std::vector<Check> checks;
      nlohmann::json result{{"admissible", !failure.has_value()},
                            {"reason", failure.value_or("")}};
      if (fb.field->size() <= budget.max_q_scan) {
        bool brute = kernels::admissible_bruteforce(A, exec, budget);
        checks.push_back({"closed_form_equals_bruteforce", brute == !failure.has_value(),
                          "exhaustive scan over l^2"});
        result["bruteforce"] = brute;
      }
      nlohmann::json inputs{{"q", fb.field->size()}, {"c", triple_json(*fb.field, c)}};
      int rc = emit_envelope(o, "admissible", inputs, result, checks);
      return rc;
    }

    if (*iso) {
      auto fb = make_field(o, budget);
      FqTriple c = parse_triple(*fb.field, o.c_text);
      FqTriple d = parse_triple(*fb.field, o.d_text);
      auto witnesses = ell_star_set(*fb.ext, c, d);
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& a : witnesses) ws.push_back(fb.ext->to_string(a));
      nlohmann::json result{{"isomorphic", !witnesses.empty()}, {"ell_star_witnesses", ws}};
      nlohmann::json inputs{
          {"q", fb.field->size()}, {"c", triple_json(*fb.field, c)}, {"d", triple_json(*fb.field, d)}};
      return emit_envelope(o, "iso", inputs, result, {});
    }

    if (*aut) {
      auto fb = make_field(o, budget);
      FqTriple c = parse_triple(*fb.field, o.c_text);
      FqAlgebra A(*fb.ext, c);
      AutStructureReport r = aut_structure_report(A, budget, exec);
      std::vector<Check> checks{{"order_is_4", r.order == "4", "brute-force generator scan"}};
      nlohmann::json result{
          {"class", r.algebra_class}, {"structure", r.structure}, {"order", r.order}};
      nlohmann::json inputs{{"q", fb.field->size()}, {"c", triple_json(*fb.field, c)}};
      return emit_envelope(o, "aut", inputs, result, checks);
    }

    if (*orbits) {
      auto fb = make_field(o, budget);
      GroupoidDescription desc = build_description(*fb.ext, o.nu, budget, exec);
      if (o.format == "dot") return emit(o, orbits_dot(*fb.ext, desc.orbits, o.nu), true);
      nlohmann::json result = orbits_json(*fb.ext, desc.orbits);
      std::vector<Check> checks;
      if (fb.field->size() <= budget.max_q_morphism) {
        PropertyFlags flags = check_description(desc, budget, exec);
        result["flags"] = {
            {"dense", flags.dense},
            {"faithful", flags.faithful},
            {"quasi_full", flags.quasi_full},
            {"full", flags.full},
            {"density_relative_to_constructed", flags.density_relative_to_constructed}};
        checks.push_back({"description_flags",
                          flags.dense && flags.faithful && flags.quasi_full,
                          "dense, faithful, quasi-full"});
      } else {
        result["flags_skipped"] = "morphism oracle over budget (q > 7)";
      }
      nlohmann::json inputs{{"q", fb.field->size()}, {"nu", o.nu}};
      return emit_envelope(o, "orbits", inputs, result, checks);
    }

    if (*verify_cmd) {
      auto fb = make_field(o, budget);
      auto checks = verify::run_suite(*fb.ext, o.suite, budget, exec);
      nlohmann::json inputs{{"q", fb.field->size()}, {"suite", o.suite}};
      return emit_envelope(o, "verify", inputs, nlohmann::json::object(), checks);
    }

    if (*predicates) {
      auto c = parse_rational_triple(o.c_text);
      using P = OrderedSetPredicates;
      const RationalField Q;
      QExt gauss(Q, Rational(-1));
      bool in_c = P::in_C(c.c1, c.c2, c.c3);
      nlohmann::json result{
          {"in_C", in_c},
          {"in_CN0", P::in_CN0(c.c1, c.c2, c.c3)},
          {"in_CN1", P::in_CN1(c.c1, c.c2, c.c3)},
          {"in_TN0", P::in_TN0(c.c1, c.c2, c.c3)},
          {"in_TN1", P::in_TN1(c.c1, c.c2, c.c3)},
          {"positivity_certificate",
           positivity_certificate(gauss, c) == CertResult::certified ? "certified" : "unknown"}};
      AutStructureReport ar = aut_structure_report_rational(gauss, c);
      result["aut_structure_if_admissible"] = {{"class", ar.algebra_class},
                                               {"structure", ar.structure},
                                               {"order", ar.order}};
      nlohmann::json inputs{{"c", o.c_text}};
      return emit_envelope(o, "ordered predicates", inputs, result, {});
    }

    if (*refute) {
      auto c = parse_rational_triple(o.c_text);
      const RationalField Q;
      QExt gauss(Q, Rational(-1));
      auto witness = rational_isotropy_search(gauss, c, o.height);
      bool square_ordered_only = false;
      if (!witness) {
        witness = square_ordered_refutation(c);
        square_ordered_only = witness.has_value() && !witness->rational();
      }
      std::vector<Check> checks;
      nlohmann::json result;
      result["witness_found"] = witness.has_value();
      result["square_ordered_only"] = square_ordered_only;
      if (witness) {
        result["witness"] = witness->str();
        checks.push_back({"witness_verified", witness->verify(c), "exact evaluation of q_c"});
      }
      nlohmann::json inputs{{"c", o.c_text}, {"height", o.height}};
      return emit_envelope(o, "ordered refute", inputs, result, checks);
    }

    if (*grid) {
      GridReport r = ordered_grid_report();
      nlohmann::json inputs = nlohmann::json::object();
      return emit_envelope(o, "ordered grid", inputs, grid_report_json(r), r.checks);
    }
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
