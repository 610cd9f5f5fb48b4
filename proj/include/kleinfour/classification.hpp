#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kleinfour/kernels.hpp"
#include "kleinfour/rational.hpp"
#include "kleinfour/report.hpp"

namespace kleinfour {

// (a, b) lies in B_l iff a = b and 1 - a^2 is a nonzero non-square. Over odd
// finite fields this characterizes anisotropy of h_{a,b}.
bool b_set_membership(const Fq& F, const FqElem& a, const FqElem& b);

// (a, b) = (c1/|1-c1|, -c3/|c2|); nullopt when (1-c1)c2 = 0 (degenerate).
std::optional<std::pair<FqElem, FqElem>> from_c_to_b(const Fq& F, const FqTriple& c);

// The transversal {(c1, 1, -c1/|1-c1|) : c1 != 1, 1-2c1 not a square}, in
// enumeration order of c1.
std::vector<FqTriple> fq_transversal(const Fq& F);

// |T| = (q-1)/2 when -1 is a square, (q-3)/2 otherwise.
std::uint64_t transversal_size_formula(const Fq& F);

// M1 = {m : m^2 - 1 in k_sq} and M2 = {m : m^2 - 1 not in k_sq*};
// |M1| = (q+1)/2 and |M2| = (q+3)/2.
std::pair<std::uint64_t, std::uint64_t> m1_m2_counts(const Fq& F);

enum class FieldDichotomy { first_type, second_type, not_unique_class };

// Finite fields are of the second type; the norm is verified surjective.
FieldDichotomy dichotomy(const FqExt& ext);
// Q has infinitely many quadratic extension classes.
FieldDichotomy dichotomy_rational();

struct ClassificationReport {
  std::uint32_t q = 0;
  std::uint64_t t_index = 0;
  std::string t_text;
  std::uint64_t admissible_count = 0;
  std::vector<FqTriple> transversal;
  std::size_t isoclass_count = 0;
  std::vector<Check> cross_checks;
};

// Full pipeline: transversal plus the cross-check battery (closed form vs
// brute force within the sweep budget, transversal exhaustiveness and
// irredundancy, automorphism orders, type-N purity, norm surjectivity).
ClassificationReport fq_classify(const FqExt& ext, const kernels::Budget& budget,
                                 kernels::Exec exec);

nlohmann::json classification_json(const ClassificationReport& r, const Fq& F);
std::string classification_csv(const ClassificationReport& r, const Fq& F);

// The five displayed subsets of Q^3 that classify the square-ordered case,
// as exact-rational predicates.
struct OrderedSetPredicates {
  using Q = Rational;
  static bool in_C(const Q& c1, const Q& c2, const Q& c3) {
    return c1 > Q(1, 2) && c3 < c2 && c2 < -c3;
  }
  static bool in_CN0(const Q& c1, const Q& c2, const Q& c3) {
    return c1 > Q(1, 2) && c3 < Q(0) && c1 != Q(1) && c2 == Q(0);
  }
  static bool in_CN1(const Q& c1, const Q& c2, const Q& c3) {
    return in_C(c1, c2, c3) && c2 != Q(0);
  }
  static bool in_TN0(const Q& c1, const Q& c2, const Q& c3) {
    return c2 == Q(0) && c3 == Q(-1) && c1 > Q(1, 2) && c1 != Q(1);
  }
  static bool in_TN1(const Q& c1, const Q& c2, const Q& c3) {
    return c2 == Q(1) && c1 > Q(1, 2) && c3 < Q(-1);
  }
};

}  // namespace kleinfour
