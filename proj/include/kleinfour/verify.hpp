#pragma once

#include <string>
#include <vector>

#include "kleinfour/kernels.hpp"
#include "kleinfour/report.hpp"

namespace kleinfour::verify {

// Counting results: |S| = q+1, |A*| = 2(q-1), |M1| = (q+1)/2, |M2| = (q+3)/2.
std::vector<Check> counting_checks(const FqExt& ext);

// Three-way admissibility agreement on all q^3 triples: brute force, the
// B_l reduction, and the closed form.
std::vector<Check> admissibility_checks(const FqExt& ext, const kernels::Budget& budget,
                                        kernels::Exec exec);

// Per-algebra structure battery over every admissible triple: V-grading,
// trace form, orthogonal supplement, right nucleus, non-associativity and
// non-commutativity.
std::vector<Check> structure_checks(const FqExt& ext, const kernels::Budget& budget,
                                    kernels::Exec exec);

// Morphism battery: brute-forced hom-sets vs l*(c,d) on all admissible
// pairs, the constructed-map identity, and automorphism groups.
std::vector<Check> morphism_checks(const FqExt& ext, const kernels::Budget& budget,
                                   kernels::Exec exec);

// Groupoid battery: group axioms, action axioms, orbit partition vs
// l*-equivalence, stabilizers, description flags for nu in {0, 1}.
std::vector<Check> groupoid_checks(const FqExt& ext, const kernels::Budget& budget,
                                   kernels::Exec exec);

std::vector<Check> run_suite(const FqExt& ext, const std::string& suite,
                             const kernels::Budget& budget, kernels::Exec exec);

// All admissible triples by the closed form, in triple order.
std::vector<FqTriple> admissible_triples(const FqExt& ext);

}  // namespace kleinfour::verify
