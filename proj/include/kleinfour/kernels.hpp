#pragma once

#include <cstdint>
#include <vector>

#include "kleinfour/algebra.hpp"
#include "kleinfour/fq.hpp"
#include "kleinfour/linalg.hpp"
#include "kleinfour/morphisms.hpp"
#include "kleinfour/quad_ext.hpp"

namespace kleinfour {

using FqExt = QuadExt<Fq>;
using FqTriple = Triple<Fq>;
using FqAlgebra = Algebra<Fq>;

namespace kernels {

enum class Exec { serial, parallel };

// Size caps for the exhaustive oracles. A q^4 anisotropy scan per triple is
// allowed up to max_q_scan, a full q^3 triple sweep up to max_q_sweep, and
// the q^4-per-generator morphism scans up to max_q_morphism. Exceeding a cap
// raises budget_error naming the bound.
struct Budget {
  std::uint32_t max_q_field = Fq::kDefaultMaxQ;
  std::uint32_t max_q_scan = 13;
  std::uint32_t max_q_sweep = 9;
  std::uint32_t max_q_morphism = 7;
  int witness_height = 24;

  // The CLI's single --budget knob: rescales the scan cap, and only ever
  // lowers the sweep/morphism caps.
  static Budget with_scan_cap(std::uint32_t cap) {
    Budget b;
    b.max_q_scan = cap;
    if (cap < b.max_q_sweep) b.max_q_sweep = cap;
    if (cap < b.max_q_morphism) b.max_q_morphism = cap;
    return b;
  }
};

// Exhaustive anisotropy scan of q_c over l^2 \ {0}.
bool admissible_bruteforce(const FqAlgebra& A, Exec exec, const Budget& budget);

// Triple index (i1 * q + i2) * q + i3 over enumeration indices.
std::uint64_t triple_index(const Fq& F, const FqTriple& c);
FqTriple triple_at(const Fq& F, std::uint64_t index);

// Admissibility flag for every triple in k^3, by brute force.
std::vector<std::uint8_t> admissible_sweep(const FqExt& ext, Exec exec, const Budget& budget);

// Anisotropy of h_{a,b}(x, y) = x^2 - y^2 + a x conj(x) + b y conj(y).
bool h_pair_anisotropic(const FqExt& ext, const FqElem& a, const FqElem& b, Exec exec,
                        const Budget& budget);

// All algebra morphisms A -> B found by scanning candidate images (P, Q) of
// the generators u, j over B^2 and keeping the pairs whose induced linear
// map respects all 16 basis products. Matrices are returned in ascending
// (index(P), index(Q)) order. {1, u, j, ju} is re-verified to be a basis.
std::vector<Mat<Fq>> brute_force_morphisms(const FqAlgebra& A, const FqAlgebra& B, Exec exec,
                                           const Budget& budget);

}  // namespace kernels
}  // namespace kleinfour
