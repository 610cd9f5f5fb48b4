#include <algorithm>

#include "doctest.h"
#include "kleinfour/kernels.hpp"
#include "kleinfour/morphisms.hpp"
#include "kleinfour/verify.hpp"

using namespace kleinfour;

namespace {
const RationalField Q;
const kernels::Budget budget;
}  // namespace

TEST_CASE("l*(c,c) is {1,-1} when c2 != 0 and S when c2 = 0") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqTriple c{F.from_int(5), F.from_int(1), F.from_int(4)};
  auto w = ell_star_set(ext, c, c);
  REQUIRE(w.size() == 2);
  CHECK(ext.eq(w[0], ext.one()));
  CHECK(ext.eq(w[1], ext.neg(ext.one())));

  FqTriple zero_c2{F.from_int(0), F.from_int(0), F.from_int(1)};
  auto s = ell_star_set(ext, zero_c2, zero_c2);
  CHECK(s.size() == F.size() + 1);  // the unit circle
  for (const auto& a : s) CHECK(F.eq(ext.norm(a), F.one()));
}

TEST_CASE("l*((5,1,4),(5,4,2)) over F_7 is nonempty") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqTriple c{F.from_int(5), F.from_int(1), F.from_int(4)};
  FqTriple d{F.from_int(5), F.from_int(4), F.from_int(2)};
  auto w = ell_star_set(ext, c, d);
  CHECK(!w.empty());
  bool has_three = false;
  for (const auto& a : w)
    if (ext.eq(a, ext.from_base(F.from_int(3)))) has_three = true;
  CHECK(has_three);
  CHECK(is_isomorphic(ext, c, d));
}

TEST_CASE("witness sets are closed under conjugation") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  auto triples = verify::admissible_triples(ext);
  for (const auto& c : triples)
    for (const auto& d : triples) {
      auto w = ell_star_set(ext, c, d);
      for (const auto& a : w) {
        bool found = false;
        for (const auto& b : w)
          if (ext.eq(b, ext.conj(a))) found = true;
        CHECK(found);
      }
    }
}

TEST_CASE("phi_-1 is alpha and psi_1 is beta") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqTriple c{F.from_int(5), F.from_int(1), F.from_int(4)};
  FqAlgebra A(ext, c);
  MorphismWitness<Fq> alpha{ext.neg(ext.one()), WitnessKind::phi};
  MorphismWitness<Fq> beta{ext.one(), WitnessKind::psi};
  for (std::uint64_t i = 0; i < ext.size() * ext.size(); i += 11) {
    AlgElem<Fq> a{ext.element(i % ext.size()), ext.element(i / ext.size())};
    CHECK(A.eq(apply(ext, alpha, a), A.alpha(a)));
    CHECK(A.eq(apply(ext, beta, a), A.beta(a)));
  }
}

TEST_CASE("every witness induces a morphism; invalid witnesses are rejected") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  auto triples = verify::admissible_triples(ext);
  for (const auto& c : triples) {
    FqAlgebra A(ext, c);
    for (const auto& d : triples) {
      FqAlgebra B(ext, d);
      for (const auto& a : ell_star_set(ext, c, d)) {
        CHECK(is_morphism_check(A, B, {a, WitnessKind::phi}));
        CHECK(is_morphism_check(A, B, {a, WitnessKind::psi}));
      }
    }
  }
  FqAlgebra A(ext, triples[0]);
  // 2 is not in l*(c,c) (only +-1 are)
  CHECK_THROWS_AS(is_morphism_check(A, A, {ext.from_base(F.from_int(2)), WitnessKind::phi}),
                  std::domain_error);
}

TEST_CASE("composition stays in the constructed family and matches pointwise") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  auto triples = verify::admissible_triples(ext);
  const FqTriple& c = triples[0];
  for (WitnessKind k1 : {WitnessKind::phi, WitnessKind::psi})
    for (WitnessKind k2 : {WitnessKind::phi, WitnessKind::psi})
      for (const auto& a : ell_star_set(ext, c, c))
        for (const auto& b : ell_star_set(ext, c, c)) {
          MorphismWitness<Fq> g{a, k1}, h{b, k2};
          MorphismWitness<Fq> gh = compose(ext, g, h);
          for (std::uint64_t i = 0; i < ext.size() * ext.size(); ++i) {
            AlgElem<Fq> z{ext.element(i % ext.size()), ext.element(i / ext.size())};
            CHECK(FqAlgebra(ext, c).eq(apply(ext, gh, z), apply(ext, g, apply(ext, h, z))));
          }
        }
}

TEST_CASE("is_isomorphic is an equivalence on admissible triples at q = 5") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  auto triples = verify::admissible_triples(ext);
  for (const auto& c : triples) CHECK(is_isomorphic(ext, c, c));
  for (const auto& c : triples)
    for (const auto& d : triples) {
      CHECK(is_isomorphic(ext, c, d) == is_isomorphic(ext, d, c));
      for (const auto& e : triples)
        if (is_isomorphic(ext, c, d) && is_isomorphic(ext, d, e))
          CHECK(is_isomorphic(ext, c, e));
    }
}

TEST_CASE("transversal members over F_7 are not isomorphic") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqTriple c{F.from_int(5), F.from_int(1), F.from_int(4)};
  FqTriple d{F.from_int(6), F.from_int(1), F.from_int(4)};
  CHECK_FALSE(is_isomorphic(ext, c, d));
  CHECK(ell_star_set(ext, c, d).empty());
}

TEST_CASE("brute-forced morphisms: group of order 4, equal to the constructed set") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  auto triples = verify::admissible_triples(ext);
  for (const auto& c : triples) {
    FqAlgebra A(ext, c);
    auto morphisms = kernels::brute_force_morphisms(A, A, kernels::Exec::serial, budget);
    CHECK(morphisms.size() == 4);
    // each brute map is phi_a or psi_a for a in {1, -1}
    std::vector<Mat<Fq>> constructed;
    for (const auto& a : ell_star_set(ext, c, c))
      for (WitnessKind kind : {WitnessKind::phi, WitnessKind::psi}) {
        MorphismWitness<Fq> w{a, kind};
        constructed.push_back(A.matrix_of([&](const AlgElem<Fq>& z) { return apply(ext, w, z); }));
      }
    for (const auto& m : morphisms)
      CHECK(std::find(constructed.begin(), constructed.end(), m) != constructed.end());
    for (const auto& m : constructed)
      CHECK(std::find(morphisms.begin(), morphisms.end(), m) != morphisms.end());
  }
}

TEST_CASE("aut_group tables and tags") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqAlgebra A(ext, {F.from_int(5), F.from_int(1), F.from_int(4)});
  auto g = aut_group(A);
  CHECK(g.tag == AutStructure::klein_four);
  // list order: phi_1, phi_-1, psi_1, psi_-1
  CHECK(g.table[0][0] == 0);
  for (int i = 0; i < 4; ++i) {
    CHECK(g.table[i][i] == 0);  // every element has order <= 2
    for (int j = 0; j < 4; ++j) CHECK(g.table[i][j] == g.table[j][i]);
  }
  CHECK(g.table[1][2] == 3);  // phi_-1 psi_1 = psi_-1

  QuadExt<RationalField> gauss(Q, Rational(-1));
  Algebra<RationalField> H(gauss, {Rational(1), Rational(0), Rational(-1)});
  CHECK(aut_group(H).tag == AutStructure::units_mod_center);
  Algebra<RationalField> N0(gauss, {Rational(3, 4), Rational(0), Rational(-1)});
  CHECK(aut_group(N0).tag == AutStructure::s_semidirect_c2);
}

TEST_CASE("three-valued l*(c,d) over Q") {
  QuadExt<RationalField> gauss(Q, Rational(-1));
  using QT = Triple<RationalField>;
  QT quat{Rational(1), Rational(0), Rational(-1)};

  auto same = ell_star_rational(gauss, quat, quat);
  CHECK(same.status == SetStatus::nonempty);

  auto mismatch = ell_star_rational(gauss, quat, QT{Rational(2), Rational(0), Rational(-1)});
  CHECK(mismatch.status == SetStatus::empty);

  // c2/d2 = 2 is not a square in Q(i)
  auto nonsquare = ell_star_rational(gauss, QT{Rational(1), Rational(2), Rational(-1)},
                                     QT{Rational(1), Rational(1), Rational(-1)});
  CHECK(nonsquare.status == SetStatus::empty);

  // c2/d2 = 4: a = +-2, norm 4, needs c3/d3 = 4
  auto rescale = ell_star_rational(gauss, QT{Rational(1), Rational(4), Rational(-4)},
                                   QT{Rational(1), Rational(1), Rational(-1)});
  REQUIRE(rescale.status == SetStatus::nonempty);
  for (const auto& a : rescale.witnesses) {
    CHECK(in_ell_star(gauss, QT{Rational(1), Rational(4), Rational(-4)},
                      QT{Rational(1), Rational(1), Rational(-1)}, a));
  }

  // c2/d2 = -1 = i^2: a = +-i with norm 1
  auto imag = ell_star_rational(gauss, QT{Rational(1), Rational(-1), Rational(-1)},
                                QT{Rational(1), Rational(1), Rational(-1)});
  CHECK(imag.status == SetStatus::nonempty);

  // norm equation branch: sign obstruction, solvable, and undecided
  auto obstructed = ell_star_rational(gauss, QT{Rational(1), Rational(0), Rational(-1)},
                                      QT{Rational(1), Rational(0), Rational(1)});
  CHECK(obstructed.status == SetStatus::empty);
  auto five = ell_star_rational(gauss, QT{Rational(1), Rational(0), Rational(5)},
                                QT{Rational(1), Rational(0), Rational(1)});
  REQUIRE(five.status == SetStatus::nonempty);  // 5 = 4 + 1
  CHECK(gauss.base().eq(gauss.norm(five.witnesses[0]), Rational(5)));
  auto seven = ell_star_rational(gauss, QT{Rational(1), Rational(0), Rational(7)},
                                 QT{Rational(1), Rational(0), Rational(1)});
  CHECK(seven.status == SetStatus::undecided);  // 7 is not a sum of two squares

  // over Q(sqrt 2) the ratio 2 becomes the square of w
  QuadExt<RationalField> rt2(Q, Rational(2));
  auto w2 = ell_star_rational(rt2, QT{Rational(1), Rational(2), Rational(2)},
                              QT{Rational(1), Rational(1), Rational(-1)});
  REQUIRE(w2.status == SetStatus::nonempty);  // a = w, norm = -2, c3/d3 = -2
}
