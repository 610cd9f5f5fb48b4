#include "kleinfour/verify.hpp"

#include <algorithm>

#include "kleinfour/classification.hpp"
#include "kleinfour/groupoid.hpp"
#include "kleinfour/morphisms.hpp"

namespace kleinfour::verify {
namespace {

using kernels::Budget;
using kernels::Exec;

Check make_check(std::string name, bool pass, std::string detail = "") {
  return {std::move(name), pass, std::move(detail)};
}

// Stack coordinate rows of the span generators and compare row spaces.
bool same_span(const Fq& F, const FqAlgebra& A, const std::vector<AlgElem<Fq>>& u,
               const std::vector<AlgElem<Fq>>& v) {
  auto fill = [&](Mat<Fq>& m, std::size_t row0, const std::vector<AlgElem<Fq>>& vecs) {
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto co = A.coords(vecs[i]);
      for (std::size_t c = 0; c < 4; ++c) m.at(row0 + i, c) = co[c];
    }
  };
  Mat<Fq> mu(F, u.size(), 4), mv(F, v.size(), 4), both(F, u.size() + v.size(), 4);
  fill(mu, 0, u);
  fill(mv, 0, v);
  fill(both, 0, u);
  fill(both, u.size(), v);
  std::size_t ru = mu.rank(), rv = mv.rank();
  return ru == rv && both.rank() == ru;
}

bool in_span_of_one(const Fq& F, const FqAlgebra& A, const AlgElem<Fq>& vec,
                    const AlgElem<Fq>& gen) {
  return same_span(F, A, {vec}, {gen}) || A.is_zero(vec);
}

std::vector<AlgElem<Fq>> eigenspace(const FqAlgebra& A, const Mat<Fq>& m, bool minus) {
  const Fq& F = A.base();
  Mat<Fq> sys(F, 4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      FqElem eps = minus ? F.neg(F.one()) : F.one();
      sys.at(r, c) = r == c ? F.sub(m.at(r, c), eps) : m.at(r, c);
    }
  std::vector<AlgElem<Fq>> out;
  for (auto& k : sys.kernel_basis()) out.push_back(A.from_coords({k[0], k[1], k[2], k[3]}));
  return out;
}

}  // namespace

std::vector<FqTriple> admissible_triples(const FqExt& ext) {
  const Fq& F = ext.base();
  std::vector<FqTriple> out;
  std::uint64_t q = F.size();
  for (std::uint64_t i = 0; i < q * q * q; ++i) {
    FqTriple c = kernels::triple_at(F, i);
    if (FqAlgebra(ext, c).is_admissible_closed_form()) out.push_back(c);
  }
  return out;
}

std::vector<Check> counting_checks(const FqExt& ext) {
  const Fq& F = ext.base();
  std::uint64_t q = F.size();
  std::vector<Check> out;
  out.push_back(make_check("unit_circle_size", ext.unit_circle().size() == q + 1,
                           "|S| = " + std::to_string(q + 1)));
  out.push_back(make_check("punctured_axes_size", ext.punctured_axes().size() == 2 * (q - 1),
                           "|A*| = " + std::to_string(2 * (q - 1))));
  auto [m1, m2] = m1_m2_counts(F);
  out.push_back(make_check("m1_count", m1 == (q + 1) / 2, "|M1| = " + std::to_string(m1)));
  out.push_back(make_check("m2_count", m2 == (q + 3) / 2, "|M2| = " + std::to_string(m2)));
  return out;
}

std::vector<Check> admissibility_checks(const FqExt& ext, const Budget& budget, Exec exec) {
  const Fq& F = ext.base();
  auto flags = kernels::admissible_sweep(ext, exec, budget);
  bool closed_ok = true, reduction_ok = true;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < flags.size(); ++i) {
    FqTriple c = kernels::triple_at(F, i);
    bool brute = flags[i] != 0;
    if (brute) ++count;
    if (FqAlgebra(ext, c).is_admissible_closed_form() != brute) closed_ok = false;
    auto ab = from_c_to_b(F, c);
    if ((ab && b_set_membership(F, ab->first, ab->second)) != brute) reduction_ok = false;
  }
  return {make_check("closed_form_equals_bruteforce", closed_ok,
                     "|C| = " + std::to_string(count) + " of " + std::to_string(flags.size())),
          make_check("b_reduction_equals_bruteforce", reduction_ok, "pair reduction agrees")};
}

std::vector<Check> structure_checks(const FqExt& ext, const Budget& budget, Exec exec) {
  (void)budget;
  (void)exec;
  const Fq& F = ext.base();
  auto triples = admissible_triples(ext);
  bool grading_ok = true, grading_law_ok = true, trace_ok = true, supplement_ok = true;
  bool nucleus_ok = true, nonassoc_ok = true;
  for (const auto& c : triples) {
    FqAlgebra A(ext, c);
    VGrading<Fq> g = A.v_grading();
    // four 1-dimensional components with A_00 = k 1 and the displayed lines
    if (!in_span_of_one(F, A, g.component(0, 0), A.one())) grading_ok = false;
    if (!in_span_of_one(F, A, g.component(1, 0), A.gen_u())) grading_ok = false;
    if (!in_span_of_one(F, A, g.component(0, 1), A.gen_j())) grading_ok = false;
    if (!in_span_of_one(F, A, g.component(1, 1), A.mul(A.gen_j(), A.gen_u()))) grading_ok = false;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) {
            AlgElem<Fq> prod = A.mul(g.component(i, j), g.component(m, n));
            if (!in_span_of_one(F, A, prod, g.component((i + m) % 2, (j + n) % 2)))
              grading_law_ok = false;
          }

    Mat<Fq> gram = A.trace_gram_matrix();
    for (std::size_t i = 0; i < 4 && trace_ok; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!F.eq(gram.at(i, j), gram.at(j, i))) trace_ok = false;
    if (F.is_zero(gram.det())) trace_ok = false;
    if (!F.eq(A.trace_form(A.one(), A.one()), F.from_int(4))) trace_ok = false;

    // E_beta(1)^perp = E_beta(-1) via the Gram kernel
    Mat<Fq> mb = A.matrix_of([&](const AlgElem<Fq>& z) { return A.beta(z); });
    auto plus = eigenspace(A, mb, false);
    auto minus = eigenspace(A, mb, true);
    Mat<Fq> perp_sys(F, plus.size(), 4);
    auto bas = A.standard_basis();
    for (std::size_t r = 0; r < plus.size(); ++r)
      for (std::size_t cidx = 0; cidx < 4; ++cidx)
        perp_sys.at(r, cidx) = A.trace_form(plus[r], bas[cidx]);
    std::vector<AlgElem<Fq>> perp;
    for (auto& k : perp_sys.kernel_basis()) perp.push_back(A.from_coords({k[0], k[1], k[2], k[3]}));
    if (!same_span(F, A, perp, minus)) supplement_ok = false;

    auto nucleus = A.right_nucleus_basis();
    if (nucleus.size() != 2) nucleus_ok = false;
    std::vector<AlgElem<Fq>> ell_line{A.one(), A.gen_u()};
    if (!same_span(F, A, nucleus, ell_line)) nucleus_ok = false;

    if (A.is_associative() || A.is_commutative()) nonassoc_ok = false;
    if (A.triple_type() != TripleType::N) nonassoc_ok = false;
  }
  std::string count = std::to_string(triples.size()) + " admissible triples";
  return {make_check("v_grading_components", grading_ok, count),
          make_check("v_grading_law", grading_law_ok, count),
          make_check("trace_form_symmetric_nondegenerate", trace_ok, count),
          make_check("orthogonal_supplement", supplement_ok, count),
          make_check("right_nucleus_is_ell", nucleus_ok, count),
          make_check("type_n_purity", nonassoc_ok, count)};
}

std::vector<Check> morphism_checks(const FqExt& ext, const Budget& budget, Exec exec) {
  const Fq& F = ext.base();
  auto triples = admissible_triples(ext);
  bool reduction_ok = true, constructed_ok = true, aut_ok = true, trace_orth_ok = true;
  bool nucleus_image_ok = true;
  for (const auto& c : triples) {
    FqAlgebra A(ext, c);
    for (const auto& d : triples) {
      FqAlgebra B(ext, d);
      auto witnesses = ell_star_set(ext, c, d);
      auto brute = kernels::brute_force_morphisms(A, B, exec, budget);
      if (witnesses.empty() != brute.empty()) reduction_ok = false;
      // {phi_a, psi_a} must equal the brute-forced set of linear maps.
      std::vector<Mat<Fq>> constructed;
      for (const auto& a : witnesses)
        for (WitnessKind kind : {WitnessKind::phi, WitnessKind::psi}) {
          MorphismWitness<Fq> w{a, kind};
          constructed.push_back(
              A.matrix_of([&](const AlgElem<Fq>& z) { return apply(ext, w, z); }));
        }
      if (constructed.size() != brute.size()) constructed_ok = false;
      for (const auto& m : constructed) {
        if (std::find(brute.begin(), brute.end(), m) == brute.end()) constructed_ok = false;
      }
      for (const auto& m : brute) {
        // brute-forced maps are orthogonal for the trace forms and preserve
        // the nucleus line (both type N here)
        auto bas = A.standard_basis();
        auto apply_mat = [&](const AlgElem<Fq>& z) {
          auto co = A.coords(z);
          std::array<FqElem, 4> out{F.zero(), F.zero(), F.zero(), F.zero()};
          for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 4; ++k) out[r] = F.add(out[r], F.mul(m.at(r, k), co[k]));
          return B.from_coords(out);
        };
        for (const auto& x : bas)
          for (const auto& y : bas)
            if (!F.eq(A.trace_form(x, y), B.trace_form(apply_mat(x), apply_mat(y))))
              trace_orth_ok = false;
        for (const auto& z : {A.one(), A.gen_u()})
          if (!ext.is_zero(apply_mat(z).y)) nucleus_image_ok = false;
      }
    }
    auto aut = aut_group(A);
    if (aut.tag != AutStructure::klein_four) aut_ok = false;
    if (kernels::brute_force_morphisms(A, A, exec, budget).size() != 4) aut_ok = false;
    // Klein relations: every element squares to the identity and commutes.
    for (int i = 0; i < 4; ++i) {
      if (aut.table[i][i] != 0) aut_ok = false;
      for (int j = 0; j < 4; ++j)
        if (aut.table[i][j] != aut.table[j][i]) aut_ok = false;
    }
  }
  std::string pairs = std::to_string(triples.size() * triples.size()) + " admissible pairs";
  return {make_check("reduction_of_morphisms", reduction_ok, pairs),
          make_check("all_morphisms_constructed", constructed_ok, pairs),
          make_check("morphisms_trace_orthogonal", trace_orth_ok, pairs),
          make_check("morphisms_preserve_nucleus_line", nucleus_image_ok, pairs),
          make_check("aut_groups_klein_four", aut_ok,
                     std::to_string(triples.size()) + " algebras")};
}

std::vector<Check> groupoid_checks(const FqExt& ext, const Budget& budget, Exec exec) {
  const Fq& F = ext.base();
  std::vector<Check> out;

  GroupoidDescription d1 = build_description(ext, 1, budget, exec);
  GroupoidDescription d0 = build_description(ext, 0, budget, exec);
  out.push_back(make_check("nu0_objects_empty", d0.objects.empty(),
                           "C^0 is empty over a finite field"));
  {
    GroupoidDescription d2 = build_description(ext, 2, budget, exec);
    GroupoidDescription d3 = build_description(ext, 3, budget, exec);
    bool partition_ok = d2.objects.size() + d3.objects.size() == d0.objects.size();
    auto all = admissible_triples(ext);
    partition_ok = partition_ok && d0.objects.size() + d1.objects.size() == all.size();
    out.push_back(make_check("object_partitions", partition_ok, "C = C^0 u C^1, C^0 = C^2 u C^3"));
  }

  out.push_back(make_check("group_axioms", d1.group.verify_group_axioms(),
                           "G^1 of order " + std::to_string(d1.group.order())));

  // Action axioms and orbit/equivalence agreement.
  bool action_ok = true, orbit_equiv_ok = true, stabilizer_ok = true;
  auto els = d1.group.elements();
  for (const auto& c : d1.objects) {
    if (kernels::triple_index(F, act(ext, d1.group.identity(), c)) != kernels::triple_index(F, c))
      action_ok = false;
    for (const auto& g : els)
      for (const auto& h : els) {
        FqTriple lhs = act(ext, d1.group.mul(g, h), c);
        FqTriple rhs = act(ext, g, act(ext, h, c));
        if (kernels::triple_index(F, lhs) != kernels::triple_index(F, rhs)) action_ok = false;
      }
    std::size_t stab = 0;
    for (const auto& g : els)
      if (kernels::triple_index(F, act(ext, g, c)) == kernels::triple_index(F, c)) ++stab;
    if (stab != 4) stabilizer_ok = false;
  }
  out.push_back(make_check("action_axioms", action_ok, "identity and compatibility"));
  out.push_back(make_check("stabilizers_order_4", stabilizer_ok,
                           std::to_string(d1.objects.size()) + " objects"));

  for (std::size_t i = 0; i < d1.objects.size(); ++i)
    for (std::size_t j = 0; j < d1.objects.size(); ++j) {
      bool same_orbit = d1.orbits.orbit_of[i] == d1.orbits.orbit_of[j];
      bool equivalent = is_isomorphic(ext, d1.objects[i], d1.objects[j]);
      if (same_orbit != equivalent) orbit_equiv_ok = false;
    }
  out.push_back(make_check("orbits_match_ell_star_equivalence", orbit_equiv_ok,
                           std::to_string(d1.orbits.representatives.size()) + " orbits"));
  out.push_back(make_check("orbit_count_equals_transversal",
                           d1.orbits.representatives.size() == fq_transversal(F).size(),
                           std::to_string(d1.orbits.representatives.size()) + " orbits"));

  // Functor laws on composable pairs.
  bool functor_ok = true;
  for (const auto& c : d1.objects) {
    FqAlgebra A(ext, c);
    MorphismWitness<Fq> id = functor_image(ext, d1.group.identity(), c, c);
    for (const auto& z : A.standard_basis())
      if (!A.eq(apply(ext, id, z), z)) functor_ok = false;
    for (const auto& h : els) {
      FqTriple mid = act(ext, h, c);
      for (const auto& g : els) {
        FqTriple dst = act(ext, g, mid);
        MorphismWitness<Fq> wg = functor_image(ext, g, mid, dst);
        MorphismWitness<Fq> wh = functor_image(ext, h, c, mid);
        MorphismWitness<Fq> wgh = functor_image(ext, d1.group.mul(g, h), c, dst);
        for (const auto& z : A.standard_basis())
          if (!A.eq(apply(ext, wgh, z), apply(ext, wg, apply(ext, wh, z)))) functor_ok = false;
      }
    }
  }
  out.push_back(make_check("functor_laws", functor_ok, "F(e) = id, F(gh) = F(g) F(h)"));

  PropertyFlags f1 = check_description(d1, budget, exec);
  out.push_back(make_check("nu1_description_full",
                           f1.dense && f1.faithful && f1.quasi_full && f1.full,
                           "dense, faithful, quasi-full, full"));
  PropertyFlags f0 = check_description(d0, budget, exec);
  out.push_back(make_check("nu0_description_vacuous",
                           f0.dense && f0.faithful && f0.quasi_full && f0.full,
                           "all flags hold on the empty object set"));
  return out;
}

std::vector<Check> run_suite(const FqExt& ext, const std::string& suite, const Budget& budget,
                             Exec exec) {
  std::vector<Check> out;
  auto extend = [&](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  // "all" runs whatever the budget admits at this q; naming a suite runs it
  // unconditionally, so an over-budget request fails loudly instead.
  std::uint64_t q = ext.base().size();
  bool all = suite == "all";
  if (all || suite == "counts") extend(counting_checks(ext));
  if ((all && q <= budget.max_q_sweep) || suite == "admissibility")
    extend(admissibility_checks(ext, budget, exec));
  if (all || suite == "structure") extend(structure_checks(ext, budget, exec));
  if ((all && q <= budget.max_q_morphism) || suite == "morphisms")
    extend(morphism_checks(ext, budget, exec));
  if ((all && q <= budget.max_q_morphism) || suite == "groupoid")
    extend(groupoid_checks(ext, budget, exec));
  if (out.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  return out;
}

}  // namespace kleinfour::verify
