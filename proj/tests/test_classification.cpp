#include "doctest.h"
#include "kleinfour/classification.hpp"
#include "kleinfour/groupoid.hpp"
#include "kleinfour/verify.hpp"

using namespace kleinfour;

namespace {
const kernels::Budget budget;
using kernels::Exec;
}  // namespace

TEST_CASE("B_l membership") {
  Fq F(7);
  // (a, -a) with a != 0 is never a member
  for (std::uint64_t i = 1; i < 7; ++i)
    CHECK_FALSE(b_set_membership(F, F.element(i), F.neg(F.element(i))));
  // (2, 2): 1 - 4 = 4 is a square
  CHECK_FALSE(b_set_membership(F, F.from_int(2), F.from_int(2)));
  // (3, 3): 1 - 9 = -8 = 6 is a non-square
  CHECK(b_set_membership(F, F.from_int(3), F.from_int(3)));
}

TEST_CASE("B_l agrees with h_{a,b} anisotropy for q in {3,5,7}") {
  for (unsigned q : {3u, 5u, 7u}) {
    Fq F(q);
    FqExt ext(F, F.smallest_nonsquare());
    for (const auto& a : F.elements())
      for (const auto& b : F.elements()) {
        bool closed = b_set_membership(F, a, b);
        bool brute = kernels::h_pair_anisotropic(ext, a, b, Exec::serial, budget);
        CHECK(closed == brute);
      }
  }
}

TEST_CASE("pairs with a^2 != b^2 always fail: the M1 x M2 intersection argument") {
  // over a finite field (a+b)m1 = 2 + (a-b)m2 always has a solution in
  // M1 x M2, which is why B_l reduces to the diagonal
  for (unsigned q : {3u, 5u, 7u}) {
    Fq F(q);
    std::vector<FqElem> m1s, m2s;
    for (const auto& m : F.elements()) {
      FqElem d = F.sub(F.mul(m, m), F.one());
      if (F.is_square(d)) m1s.push_back(m);
      if (F.is_zero(d) || !F.is_square(d)) m2s.push_back(m);
    }
    for (const auto& a : F.elements())
      for (const auto& b : F.elements()) {
        if (F.eq(F.mul(a, a), F.mul(b, b))) continue;
        bool solvable = false;
        for (const auto& m1 : m1s)
          for (const auto& m2 : m2s)
            if (F.eq(F.mul(F.add(a, b), m1), F.add(F.from_int(2), F.mul(F.sub(a, b), m2))))
              solvable = true;
        CHECK(solvable);
        CHECK_FALSE(b_set_membership(F, a, b));
      }
  }
}

TEST_CASE("from_c_to_b") {
  Fq F(7);
  CHECK_FALSE(from_c_to_b(F, {F.from_int(1), F.from_int(2), F.from_int(3)}).has_value());
  CHECK_FALSE(from_c_to_b(F, {F.from_int(2), F.from_int(0), F.from_int(3)}).has_value());
  auto ab = from_c_to_b(F, {F.from_int(5), F.from_int(1), F.from_int(4)});
  REQUIRE(ab.has_value());
  CHECK(F.eq(ab->first, F.from_int(3)));
  CHECK(F.eq(ab->second, F.from_int(3)));
  CHECK(b_set_membership(F, ab->first, ab->second));
}

TEST_CASE("reduction route equals brute force on all triples, q in {3,5}") {
  for (unsigned q : {3u, 5u}) {
    Fq F(q);
    FqExt ext(F, F.smallest_nonsquare());
    auto flags = kernels::admissible_sweep(ext, Exec::serial, budget);
    for (std::uint64_t i = 0; i < flags.size(); ++i) {
      FqTriple c = kernels::triple_at(F, i);
      auto ab = from_c_to_b(F, c);
      bool reduced = ab && b_set_membership(F, ab->first, ab->second);
      CHECK(reduced == (flags[i] != 0));
    }
  }
}

TEST_CASE("transversals") {
  Fq F3(3);
  CHECK(fq_transversal(F3).empty());

  Fq F7(7);
  auto t7 = fq_transversal(F7);
  REQUIRE(t7.size() == 2);
  CHECK(F7.index(t7[0].c1) == 5);
  CHECK(F7.index(t7[0].c2) == 1);
  CHECK(F7.index(t7[0].c3) == 4);
  CHECK(F7.index(t7[1].c1) == 6);
  CHECK(F7.index(t7[1].c2) == 1);
  CHECK(F7.index(t7[1].c3) == 4);

  Fq F5(5);
  auto t5 = fq_transversal(F5);
  REQUIRE(t5.size() == 2);
  CHECK(F5.index(t5[0].c1) == 2);
  CHECK(F5.index(t5[1].c1) == 4);
}

TEST_CASE("transversal size formula vs orbit counting, q up to 13") {
  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    unsigned p = q, n = 1;
    if (q == 9) p = 3, n = 2;
    Fq F(p, n);
    FqExt ext(F, F.smallest_nonsquare());
    auto transversal = fq_transversal(F);
    CHECK(transversal.size() == transversal_size_formula(F));
    GroupoidDescription d = build_description(ext, 1, budget, Exec::serial);
    CHECK(d.orbits.representatives.size() == transversal.size());
  }
}

TEST_CASE("M1 and M2 counts, q = 3..13") {
  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    unsigned p = q, n = 1;
    if (q == 9) p = 3, n = 2;
    Fq F(p, n);
    auto [m1, m2] = m1_m2_counts(F);
    CHECK(m1 == (q + 1) / 2);
    CHECK(m2 == (q + 3) / 2);
  }
}

TEST_CASE("fq_classify") {
  Fq F5(5);
  FqExt ext5(F5, F5.smallest_nonsquare());
  auto r5 = fq_classify(ext5, budget, Exec::serial);
  CHECK(r5.isoclass_count == 2);
  CHECK(r5.admissible_count == 8);
  CHECK(all_pass(r5.cross_checks));

  // empty classification is a first-class result
  Fq F3(3);
  FqExt ext3(F3, F3.smallest_nonsquare());
  auto r3 = fq_classify(ext3, budget, Exec::serial);
  CHECK(r3.isoclass_count == 0);
  CHECK(r3.admissible_count == 0);
  CHECK(r3.transversal.empty());
  CHECK(all_pass(r3.cross_checks));

  Fq F7(7);
  FqExt ext7(F7, F7.smallest_nonsquare());
  auto r7 = fq_classify(ext7, budget, Exec::serial);
  CHECK(r7.isoclass_count == 2);
  CHECK(all_pass(r7.cross_checks));

  // beyond the sweep budget the spot-check path runs (q = 11)
  Fq F11(11);
  FqExt ext11(F11, F11.smallest_nonsquare());
  auto r11 = fq_classify(ext11, budget, Exec::serial);
  CHECK(r11.isoclass_count == 4);
  CHECK(all_pass(r11.cross_checks));

  CHECK_THROWS_AS(fq_classify(ext5, kernels::Budget::with_scan_cap(3), Exec::serial),
                  budget_error);
}

TEST_CASE("classification output formats") {
  Fq F(7);
  FqExt ext(F, F.smallest_nonsquare());
  auto r = fq_classify(ext, budget, Exec::serial);
  CHECK(classification_csv(r, F) == "q,t,c1,c2,c3\n7,3,5,1,4\n7,3,6,1,4\n");
  nlohmann::json j = classification_json(r, F);
  CHECK(j["isoclass_count"] == 2);
  CHECK(j["transversal"][0] == nlohmann::json::array({"5", "1", "4"}));
  // round-trip through text
  auto reparsed = nlohmann::json::parse(j.dump());
  CHECK(reparsed == j);
}

TEST_CASE("dichotomy") {
  Fq F7(7);
  FqExt ext7(F7, F7.smallest_nonsquare());
  CHECK(dichotomy(ext7) == FieldDichotomy::second_type);
  Fq F9(3, 2);
  FqExt ext9(F9, F9.smallest_nonsquare());
  CHECK(dichotomy(ext9) == FieldDichotomy::second_type);
  CHECK(dichotomy_rational() == FieldDichotomy::not_unique_class);
}

TEST_CASE("ordered set predicates") {
  using P = OrderedSetPredicates;
  // (1, 1, -2) lies in T^N1 and C
  CHECK(P::in_TN1(Rational(1), Rational(1), Rational(-2)));
  CHECK(P::in_C(Rational(1), Rational(1), Rational(-2)));
  // (3/4, 0, -1) lies in T^N0
  CHECK(P::in_TN0(Rational(3, 4), Rational(0), Rational(-1)));
  // (1, 0, -1) is the type-S member of C, outside both C^N pieces
  CHECK(P::in_C(Rational(1), Rational(0), Rational(-1)));
  CHECK_FALSE(P::in_CN0(Rational(1), Rational(0), Rational(-1)));  // needs c1 != 1
  CHECK_FALSE(P::in_CN1(Rational(1), Rational(0), Rational(-1)));  // needs c2 != 0
}
