#include <random>

#include "doctest.h"
#include "kleinfour/algebra.hpp"
#include "kleinfour/fq.hpp"
#include "kleinfour/kernels.hpp"

using namespace kleinfour;

namespace {

const RationalField Q;

Rational rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("unity is two-sided") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqAlgebra A(ext, {F.from_int(5), F.from_int(1), F.from_int(4)});
  for (std::uint64_t i = 0; i < ext.size() * ext.size(); i += 13) {
    AlgElem<Fq> a{ext.element(i % ext.size()), ext.element(i / ext.size())};
    CHECK(A.eq(A.mul(A.one(), a), a));
    CHECK(A.eq(A.mul(a, A.one()), a));
  }
}

TEST_CASE("rational quaternions: c = (1, 0, -1) over Q(i)") {
  QuadExt<RationalField> gauss(Q, Rational(-1));
  Algebra<RationalField> H(gauss, {Rational(1), Rational(0), Rational(-1)});
  auto u = H.gen_u(), j = H.gen_j();
  auto minus_one = H.neg(H.one());
  CHECK(H.eq(H.mul(u, u), minus_one));
  CHECK(H.eq(H.mul(j, j), minus_one));
  CHECK(H.eq(H.mul(u, j), H.neg(H.mul(j, u))));
  CHECK(H.eq(H.mul(H.mul(u, j), H.mul(u, j)), minus_one));
  CHECK(H.is_associative());
  CHECK_FALSE(H.is_commutative());
  CHECK(H.triple_type() == TripleType::S);
  CHECK(H.right_nucleus_basis().size() == 4);

  // q_c is multiplicative here (the algebra is associative)
  std::mt19937_64 rng(20260809);
  for (int k = 0; k < 50; ++k) {
    AlgElem<RationalField> a{{rnd_rational(rng), rnd_rational(rng)},
                             {rnd_rational(rng), rnd_rational(rng)}};
    AlgElem<RationalField> b{{rnd_rational(rng), rnd_rational(rng)},
                             {rnd_rational(rng), rnd_rational(rng)}};
    CHECK(gauss.eq(H.q_of(H.mul(a, b)), gauss.mul(H.q_of(a), H.q_of(b))));
  }
}

TEST_CASE("q_c values and the determinant law") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqTriple c{F.from_int(5), F.from_int(1), F.from_int(4)};
  FqAlgebra A(ext, c);
  CHECK(ext.eq(A.q_of(A.one()), ext.one()));
  // q_c(0, 1) = -c2 - c3
  CHECK(ext.eq(A.q_of(A.gen_j()), ext.from_base(F.neg(F.add(c.c2, c.c3)))));
  // det_k(L_a) = N_{l/k}(det_l(L_a)) gives an independent route down to k
  for (std::uint64_t i = 0; i < ext.size() * ext.size(); ++i) {
    AlgElem<Fq> a{ext.element(i % ext.size()), ext.element(i / ext.size())};
    CHECK(F.eq(A.left_mul_matrix(a).det(), ext.norm(A.q_of(a))));
  }
}

TEST_CASE("q_c is not multiplicative on a non-associative algebra") {
  // multiplicativity is a Hurwitz (type S) property; the type-N case fails
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  FqAlgebra A(ext, {F.from_int(2), F.from_int(1), F.from_int(2)});
  auto j = A.gen_j(), u = A.gen_u();
  CHECK_FALSE(ext.eq(A.q_of(A.mul(j, u)), ext.mul(A.q_of(j), A.q_of(u))));
}

TEST_CASE("multiplication is right l-linear") {
  Fq F(3);
  FqExt ext(F, F.from_int(2));
  FqAlgebra A(ext, {F.from_int(1), F.from_int(2), F.from_int(0)});
  for (std::uint64_t ia = 0; ia < 81; ++ia)
    for (std::uint64_t ib = 0; ib < 81; ++ib) {
      AlgElem<Fq> a{ext.element(ia % 9), ext.element(ia / 9)};
      AlgElem<Fq> b{ext.element(ib % 9), ext.element(ib / 9)};
      for (std::uint64_t is = 0; is < 9; ++is) {
        ExtElem<Fq> s = ext.element(is);
        CHECK(A.eq(A.mul(a, A.scale_ext(b, s)), A.scale_ext(A.mul(a, b), s)));
      }
    }
}

TEST_CASE("division characterization at q = 3 and 5: L_a, R_a bijective") {
  for (unsigned q : {3u, 5u}) {
    Fq F(q);
    FqExt ext(F, F.smallest_nonsquare());
    kernels::Budget budget;
    std::uint64_t qq = F.size();
    for (std::uint64_t i = 0; i < qq * qq * qq; i += (q == 3 ? 1 : 7)) {
      FqTriple c = kernels::triple_at(F, i);
      FqAlgebra A(ext, c);
      bool admissible = kernels::admissible_bruteforce(A, kernels::Exec::serial, budget);
      bool all_bijective = true;
      for (std::uint64_t ia = 1; ia < ext.size() * ext.size() && all_bijective; ++ia) {
        AlgElem<Fq> a{ext.element(ia % ext.size()), ext.element(ia / ext.size())};
        if (F.is_zero(A.left_mul_matrix(a).det())) all_bijective = false;
        Mat<Fq> right = A.matrix_of([&](const AlgElem<Fq>& x) { return A.mul(x, a); });
        if (F.is_zero(right.det())) all_bijective = false;
      }
      CHECK(admissible == all_bijective);
    }
  }
}

TEST_CASE("closed-form failure reasons") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  CHECK(FqAlgebra(ext, {F.from_int(1), F.from_int(1), F.from_int(0)}).closed_form_failure() ==
        "(1-c1)c2 = 0");
  CHECK(FqAlgebra(ext, {F.from_int(0), F.from_int(1), F.from_int(0)}).closed_form_failure() ==
        "1-2c1 in k_sq");
  CHECK(FqAlgebra(ext, {F.from_int(5), F.from_int(1), F.from_int(3)}).closed_form_failure() ==
        "c3 != -c1|c2|/|1-c1|");
  CHECK_FALSE(FqAlgebra(ext, {F.from_int(5), F.from_int(1), F.from_int(4)})
                  .closed_form_failure()
                  .has_value());
}

TEST_CASE("triple types") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  CHECK(FqAlgebra(ext, {F.from_int(5), F.from_int(1), F.from_int(4)}).triple_type() ==
        TripleType::N);
  CHECK_THROWS_AS(FqAlgebra(ext, {F.from_int(1), F.from_int(1), F.from_int(1)}).triple_type(),
                  std::domain_error);

  QuadExt<RationalField> gauss(Q, Rational(-1));
  using QAlg = Algebra<RationalField>;
  CHECK(QAlg(gauss, {Rational(1), Rational(0), Rational(-1)}).triple_type() == TripleType::S);
  // pattern match only over Q; admissibility is a separate judgement
  CHECK(QAlg(gauss, {Rational(0), Rational(-1), Rational(0)}).triple_type() == TripleType::K);
}

TEST_CASE("right nucleus of a type-N algebra is the l-line") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqAlgebra A(ext, {F.from_int(5), F.from_int(1), F.from_int(4)});
  auto basis = A.right_nucleus_basis();
  REQUIRE(basis.size() == 2);
  for (const auto& z : basis) CHECK(ext.is_zero(z.y));
  // dim 2 <=> type N for every admissible triple at q = 5
  Fq F5(5);
  FqExt ext5(F5, F5.from_int(2));
  for (std::uint64_t i = 0; i < 125; ++i) {
    FqTriple c = kernels::triple_at(F5, i);
    FqAlgebra B(ext5, c);
    if (!B.is_admissible_closed_form()) continue;
    CHECK(B.right_nucleus_basis().size() == 2);
    CHECK(B.triple_type() == TripleType::N);
    CHECK_FALSE(B.is_associative());
  }
}

TEST_CASE("V-grading components and law") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  FqAlgebra A(ext, {F.from_int(2), F.from_int(1), F.from_int(2)});
  VGrading<Fq> g = A.v_grading();
  CHECK(A.eq(g.component(0, 0), A.one()));
  CHECK(ext.is_zero(g.component(1, 0).y));  // Im(l) * 1
  CHECK(F.is_zero(g.component(1, 0).x.u));
  CHECK(ext.is_zero(g.component(0, 1).x));  // k j
  CHECK(F.is_zero(g.component(0, 1).y.v));
  CHECK(ext.is_zero(g.component(1, 1).x));  // Im(l) j
  CHECK(F.is_zero(g.component(1, 1).y.u));
  // alpha and beta act as displayed
  AlgElem<Fq> a{ext.make(F.from_int(1), F.from_int(2)), ext.make(F.from_int(3), F.from_int(4))};
  CHECK(A.eq(A.alpha(a), A.make(a.x, ext.neg(a.y))));
  CHECK(A.eq(A.beta(a), A.make(ext.conj(a.x), ext.conj(a.y))));
}

TEST_CASE("trace form basics") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  FqAlgebra A(ext, {F.from_int(5), F.from_int(1), F.from_int(4)});
  CHECK(F.eq(A.trace_form(A.one(), A.one()), F.from_int(4)));
  VGrading<Fq> g = A.v_grading();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(F.is_zero(A.trace_form(g.basis[i], g.basis[j])));
    }
  // on a fixed component tau(x, y) = 0 iff xy = 0
  for (int i = 0; i < 4; ++i)
    for (std::uint64_t s = 0; s < 7; ++s)
      for (std::uint64_t t = 0; t < 7; ++t) {
        AlgElem<Fq> x = A.scale(F.element(s), g.basis[i]);
        AlgElem<Fq> y = A.scale(F.element(t), g.basis[i]);
        bool product_zero = A.is_zero(A.mul(x, y));
        CHECK(product_zero == F.is_zero(A.trace_form(x, y)));
      }
}

TEST_CASE("elements from foreign extensions are rejected") {
  Fq F(7);
  FqExt ext(F, F.from_int(3));
  Fq G(11);
  FqAlgebra A(ext, {F.from_int(5), F.from_int(1), F.from_int(4)});
  AlgElem<Fq> bad{{G.one(), G.zero()}, {G.zero(), G.zero()}};
  CHECK_THROWS_AS(A.mul(A.one(), bad), context_mismatch);
}
