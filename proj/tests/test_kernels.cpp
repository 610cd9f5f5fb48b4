#include "doctest.h"
#include "kleinfour/kernels.hpp"
#include "kleinfour/verify.hpp"

using namespace kleinfour;
using kernels::Budget;
using kernels::Exec;

namespace {
const Budget budget;
}

TEST_CASE("triple index round-trip") {
  Fq F(5);
  for (std::uint64_t i = 0; i < 125; ++i)
    CHECK(kernels::triple_index(F, kernels::triple_at(F, i)) == i);
}

TEST_CASE("serial and parallel scans agree on every triple, q = 5") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  for (std::uint64_t i = 0; i < 125; ++i) {
    FqAlgebra A(ext, kernels::triple_at(F, i));
    CHECK(kernels::admissible_bruteforce(A, Exec::serial, budget) ==
          kernels::admissible_bruteforce(A, Exec::parallel, budget));
  }
}

TEST_CASE("serial and parallel sweeps agree, q in {3, 5, 9}") {
  for (auto [p, n] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
    Fq F(p, n);
    FqExt ext(F, F.smallest_nonsquare());
    CHECK(kernels::admissible_sweep(ext, Exec::serial, budget) ==
          kernels::admissible_sweep(ext, Exec::parallel, budget));
  }
}

TEST_CASE("serial and parallel pair scans and morphism scans agree") {
  Fq F(5);
  FqExt ext(F, F.from_int(2));
  for (const auto& a : F.elements())
    for (const auto& b : F.elements())
      CHECK(kernels::h_pair_anisotropic(ext, a, b, Exec::serial, budget) ==
            kernels::h_pair_anisotropic(ext, a, b, Exec::parallel, budget));

  auto triples = verify::admissible_triples(ext);
  for (const auto& c : triples) {
    FqAlgebra A(ext, c);
    FqAlgebra B(ext, triples.front());
    auto s = kernels::brute_force_morphisms(A, B, Exec::serial, budget);
    auto p = kernels::brute_force_morphisms(A, B, Exec::parallel, budget);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
  }
}

TEST_CASE("budget bounds raise with the bound named") {
  Fq F17(17);
  FqExt ext17(F17, F17.smallest_nonsquare());
  FqAlgebra A(ext17, {F17.from_int(2), F17.from_int(1), F17.from_int(1)});
  CHECK_THROWS_WITH_AS(kernels::admissible_bruteforce(A, Exec::serial, budget),
                       doctest::Contains("q <= 13"), budget_error);

  Fq F11(11);
  FqExt ext11(F11, F11.smallest_nonsquare());
  CHECK_THROWS_WITH_AS(kernels::admissible_sweep(ext11, Exec::serial, budget),
                       doctest::Contains("q <= 9"), budget_error);

  Fq F9(3, 2);
  FqExt ext9(F9, F9.smallest_nonsquare());
  FqAlgebra A9(ext9, verify::admissible_triples(ext9).front());
  CHECK_THROWS_WITH_AS(kernels::brute_force_morphisms(A9, A9, Exec::serial, budget),
                       doctest::Contains("q <= 7"), budget_error);
}

TEST_CASE("with_scan_cap only lowers the structural caps") {
  Budget b5 = Budget::with_scan_cap(5);
  CHECK(b5.max_q_scan == 5);
  CHECK(b5.max_q_sweep == 5);
  CHECK(b5.max_q_morphism == 5);
  Budget b40 = Budget::with_scan_cap(40);
  CHECK(b40.max_q_scan == 40);
  CHECK(b40.max_q_sweep == 9);
  CHECK(b40.max_q_morphism == 7);
}

TEST_CASE("morphism scan validates the generator basis and contexts") {
  Fq F(5);
  FqExt ext1(F, F.from_int(2));
  FqExt ext2(F, F.from_int(3));
  auto triples = verify::admissible_triples(ext1);
  FqAlgebra A(ext1, triples.front());
  FqAlgebra B(ext2, triples.front());
  CHECK_THROWS_AS(kernels::brute_force_morphisms(A, B, Exec::serial, budget), context_mismatch);
}
