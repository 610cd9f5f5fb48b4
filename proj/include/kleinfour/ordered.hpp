#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kleinfour/algebra.hpp"
#include "kleinfour/quad_ext.hpp"
#include "kleinfour/rational.hpp"
#include "kleinfour/report.hpp"

namespace kleinfour {

using QExt = QuadExt<RationalField>;
using QTriple = Triple<RationalField>;
using QAlgebra = Algebra<RationalField>;

enum class CertResult { certified, unknown };

// Sound positivity certificate over Q(sqrt -1): c1 > 1/2 and c3 < c2 < -c3
// make the real part of q_c positive definite on k^4, so q_c is anisotropic
// and A(l, c) is a division algebra. Deliberately incomplete over Q.
// Raises on any extension other than t = -1.
CertResult positivity_certificate(const QExt& ext, const QTriple& c);

// A point of l'^2 with q_c = 0, where l' = k'(sqrt -1) and k' = Q(sqrt m).
// Coordinates are written over the basis (1, s, i, si) with s^2 = m, i^2 = -1:
// x = (x0 + x1 s) + (x2 + x3 s) i, and likewise y. When m is a square in Q
// the witness is a genuine Q(i) point (it is emitted with x1 = x3 = y1 =
// y3 = 0 and m = 1). Otherwise it certifies isotropy over every
// square-ordered extension of Q, where sqrt m exists.
struct IsotropyWitness {
  Rational m{1};
  std::array<Rational, 4> x{};
  std::array<Rational, 4> y{};
  bool rational() const;
  // Exact evaluation of q_c at the witness in Q(sqrt m)(i); true iff zero
  // and the witness is nonzero.
  bool verify(const QTriple& c) const;
  std::string str() const;
};

// Bounded search for a rational isotropy witness of q_c over Q(sqrt t),
// scanning integer coordinate vectors of height at most `height`
// (homogeneity makes integer vectors sufficient). This is the only
// falsification offered for t != -1; no completeness claim.
std::optional<IsotropyWitness> rational_isotropy_search(const QExt& ext, const QTriple& c,
                                                        int height);

// The witnesses of the square-ordered membership proof, available exactly
// when c2 + c3 >= 0 or c1 <= 1/2: (sqrt(c2+c3), 1), (i, 0) for c1 = 1/2, or
// (i, sqrt((1-2c1)/-(c2+c3))). Only meaningful for t = -1.
std::optional<IsotropyWitness> square_ordered_refutation(const QTriple& c);

struct GridPointReport {
  QTriple c;
  bool in_C = false, certified = false;
  bool needs_refutation = false;            // fails in_C with c1 <= 1/2 or c2+c3 >= 0
  std::optional<IsotropyWitness> witness;   // verified when present
};

struct GridReport {
  std::vector<GridPointReport> points;
  std::size_t in_c_count = 0, refuted_rational = 0, refuted_square_ordered = 0;
  std::vector<Check> checks;
};

// The deterministic rational grid: c1 in {1/2 + k/8 : k = -4..4},
// c2, c3 in {-3, -11/4, ..., 3}. Runs the predicate-consistency and
// refutation battery of the square-ordered classification.
GridReport ordered_grid_report(int rational_search_height = 8);

nlohmann::json grid_report_json(const GridReport& r);

}  // namespace kleinfour
