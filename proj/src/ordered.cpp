#include "kleinfour/ordered.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "kleinfour/classification.hpp"

namespace kleinfour {
namespace {

const RationalField kQ;

// Element of Q(sqrt m)(i) over the basis (1, s, i, si), s^2 = m, i^2 = -1.
struct Biquad {
  std::array<Rational, 4> c{};  // c0 + c1 s + c2 i + c3 si
};

Biquad bq_add(const Biquad& a, const Biquad& b) {
  Biquad r;
  for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

Biquad bq_sub(const Biquad& a, const Biquad& b) {
  Biquad r;
  for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

Biquad bq_scale(const Rational& s, const Biquad& a) {
  Biquad r;
  for (int k = 0; k < 4; ++k) r.c[k] = s * a.c[k];
  return r;
}

Biquad bq_mul(const Biquad& a, const Biquad& b, const Rational& m) {
  // (1, s, i, si) times table: s^2 = m, i^2 = -1, (si)^2 = -m.
  Biquad r;
  const auto& A = a.c;
  const auto& B = b.c;
  r.c[0] = A[0] * B[0] + m * (A[1] * B[1]) - A[2] * B[2] - m * (A[3] * B[3]);
  r.c[1] = A[0] * B[1] + A[1] * B[0] - A[2] * B[3] - A[3] * B[2];
  r.c[2] = A[0] * B[2] + A[2] * B[0] + m * (A[1] * B[3] + A[3] * B[1]);
  r.c[3] = A[0] * B[3] + A[3] * B[0] + A[1] * B[2] + A[2] * B[1];
  return r;
}

// Conjugation over k' = Q(sqrt m): fixes 1, s; negates i, si.
Biquad bq_conj(const Biquad& a) { return {{a.c[0], a.c[1], -a.c[2], -a.c[3]}}; }

bool bq_is_zero(const Biquad& a) {
  for (const auto& v : a.c)
    if (!v.is_zero()) return false;
  return true;
}

Biquad bq_q_c(const QTriple& c, const Biquad& x, const Biquad& y, const Rational& m) {
  Rational one_minus_c1 = Rational(1) - c.c1;
  Biquad term = bq_scale(one_minus_c1, bq_mul(x, x, m));
  term = bq_add(term, bq_scale(c.c1, bq_mul(x, bq_conj(x), m)));
  term = bq_sub(term, bq_scale(c.c2, bq_mul(y, y, m)));
  term = bq_sub(term, bq_scale(c.c3, bq_mul(y, bq_conj(y), m)));
  return term;
}

}  // namespace

CertResult positivity_certificate(const QExt& ext, const QTriple& c) {
  if (ext.t() != Rational(-1))
    throw std::invalid_argument("positivity_certificate: wrong extension (t != -1)");
  return OrderedSetPredicates::in_C(c.c1, c.c2, c.c3) ? CertResult::certified : CertResult::unknown;
}

bool IsotropyWitness::rational() const {
  return x[1].is_zero() && x[3].is_zero() && y[1].is_zero() && y[3].is_zero();
}

bool IsotropyWitness::verify(const QTriple& c) const {
  Biquad bx{x}, by{y};
  if (bq_is_zero(bx) && bq_is_zero(by)) return false;
  return bq_is_zero(bq_q_c(c, bx, by, m));
}

std::string IsotropyWitness::str() const {
  auto part = [](const std::array<Rational, 4>& v) {
    return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + "," + v[3].str() + ")";
  };
  return "m=" + m.str() + " x=" + part(x) + " y=" + part(y);
}

std::optional<IsotropyWitness> rational_isotropy_search(const QExt& ext, const QTriple& c,
                                                        int height) {
  // q_c(x, y) with x = x1 + x2 w, y = y1 + y2 w over Q(sqrt t) splits into
  //   real: x1^2 + t(2c1 - 1) x2^2 - (c2 + c3) y1^2 - t(c2 - c3) y2^2
  //   imag: 2(1 - c1) x1 x2 - 2 c2 y1 y2
  // Homogeneity makes integer coordinate vectors sufficient; the loop runs
  // on 64-bit integers after clearing denominators once.
  const Rational& t = ext.t();
  std::array<Rational, 4> real{Rational(1), t * (Rational(1) - Rational(2) * c.c1),
                               -(c.c2 + c.c3), -(t * (c.c2 - c.c3))};
  std::array<Rational, 2> imag{Rational(2) * (Rational(1) - c.c1), Rational(-2) * c.c2};
  mpz_class lr = 1, li = 1;
  for (const auto& v : real) mpz_lcm(lr.get_mpz_t(), lr.get_mpz_t(), v.den().get_mpz_t());
  for (const auto& v : imag) mpz_lcm(li.get_mpz_t(), li.get_mpz_t(), v.den().get_mpz_t());
  std::array<long, 4> R{};
  std::array<long, 2> I{};
  bool fits = true;
  for (int k = 0; k < 4; ++k) {
    mpz_class scaled = real[k].num() * (lr / real[k].den());
    if (!scaled.fits_slong_p() || std::labs(scaled.get_si()) > (1L << 40)) fits = false;
    else R[k] = scaled.get_si();
  }
  for (int k = 0; k < 2; ++k) {
    mpz_class scaled = imag[k].num() * (li / imag[k].den());
    if (!scaled.fits_slong_p() || std::labs(scaled.get_si()) > (1L << 40)) fits = false;
    else I[k] = scaled.get_si();
  }
  if (!fits)
    throw budget_error("rational_isotropy_search: coefficients too large for the integer scan");

  auto found = [&](long x1, long x2, long y1, long y2) {
    IsotropyWitness w;
    w.m = Rational(1);
    w.x = {Rational(x1), Rational(0), Rational(x2), Rational(0)};
    w.y = {Rational(y1), Rational(0), Rational(y2), Rational(0)};
    return w;
  };
  for (long h = 1; h <= height; ++h)
    for (long x1 = -h; x1 <= h; ++x1)
      for (long x2 = -h; x2 <= h; ++x2)
        for (long y1 = -h; y1 <= h; ++y1)
          for (long y2 = -h; y2 <= h; ++y2) {
            if (std::max({std::labs(x1), std::labs(x2), std::labs(y1), std::labs(y2)}) != h)
              continue;
            if (I[0] * x1 * x2 + I[1] * y1 * y2 != 0) continue;
            if (R[0] * x1 * x1 + R[1] * x2 * x2 + R[2] * y1 * y1 + R[3] * y2 * y2 != 0) continue;
            return found(x1, x2, y1, y2);
          }
  return std::nullopt;
}

std::optional<IsotropyWitness> square_ordered_refutation(const QTriple& c) {
  Rational s = c.c2 + c.c3;
  Rational half(1, 2);
  IsotropyWitness w;
  if (s >= Rational(0)) {
    // q_c(sqrt s, 1) = s - (c2 + c3) = 0
    if (auto root = rational_sqrt(s)) {
      w.m = Rational(1);
      w.x = {*root, Rational(0), Rational(0), Rational(0)};
    } else {
      w.m = s;
      w.x = {Rational(0), Rational(1), Rational(0), Rational(0)};
    }
    w.y = {Rational(1), Rational(0), Rational(0), Rational(0)};
    return w;
  }
  if (c.c1 == half) {
    // q_c(i, 0) = 2 c1 - 1 = 0
    w.m = Rational(1);
    w.x = {Rational(0), Rational(0), Rational(1), Rational(0)};
    return w;
  }
  if (c.c1 < half) {
    // q_c(i, sqrt r) = (2c1 - 1) - (c2 + c3) r = 0 for r = (1 - 2c1)/-(c2+c3)
    Rational r = (Rational(1) - Rational(2) * c.c1) / (-s);
    w.x = {Rational(0), Rational(0), Rational(1), Rational(0)};
    if (auto root = rational_sqrt(r)) {
      w.m = Rational(1);
      w.y = {*root, Rational(0), Rational(0), Rational(0)};
    } else {
      w.m = r;
      w.y = {Rational(0), Rational(1), Rational(0), Rational(0)};
    }
    return w;
  }
  return std::nullopt;
}

GridReport ordered_grid_report(int rational_search_height) {
  static const QExt gauss(kQ, Rational(-1));
  GridReport report;
  std::vector<Rational> c1s, range;
  for (int k = -4; k <= 4; ++k) c1s.push_back(Rational(1, 2) + Rational(k, 8));
  for (int n = -12; n <= 12; ++n) range.push_back(Rational(n, 4));

  bool tn0_implies = true, tn1_implies = true, cn_disjoint = true;
  bool certified_ok = true, refuted_ok = true;
  for (const auto& c1 : c1s)
    for (const auto& c2 : range)
      for (const auto& c3 : range) {
        GridPointReport p;
        p.c = {c1, c2, c3};
        using P = OrderedSetPredicates;
        p.in_C = P::in_C(c1, c2, c3);
        if (P::in_TN0(c1, c2, c3) && !P::in_CN0(c1, c2, c3)) tn0_implies = false;
        if (P::in_TN1(c1, c2, c3) && !P::in_CN1(c1, c2, c3)) tn1_implies = false;
        if (P::in_CN0(c1, c2, c3) && P::in_CN1(c1, c2, c3)) cn_disjoint = false;
        if (p.in_C) {
          ++report.in_c_count;
          p.certified = positivity_certificate(gauss, p.c) == CertResult::certified;
          if (!p.certified) certified_ok = false;
        }
        p.needs_refutation = !p.in_C && (c1 <= Rational(1, 2) || c2 + c3 >= Rational(0));
        if (p.needs_refutation) {
          p.witness = rational_isotropy_search(gauss, p.c, rational_search_height);
          if (p.witness) {
            ++report.refuted_rational;
          } else {
            p.witness = square_ordered_refutation(p.c);
            if (p.witness && p.witness->rational())
              ++report.refuted_rational;
            else if (p.witness)
              ++report.refuted_square_ordered;
          }
          if (!p.witness || !p.witness->verify(p.c)) refuted_ok = false;
        }
        report.points.push_back(std::move(p));
      }

  report.checks.push_back({"tn0_implies_cn0", tn0_implies, "T^N0 inside C^N0 on the grid"});
  report.checks.push_back({"tn1_implies_cn1", tn1_implies, "T^N1 inside C^N1 on the grid"});
  report.checks.push_back({"cn0_cn1_disjoint", cn_disjoint, "no grid point in both"});
  report.checks.push_back(
      {"in_c_certified", certified_ok,
       std::to_string(report.in_c_count) + " members of C all pass the positivity certificate"});
  report.checks.push_back(
      {"refutations_verified", refuted_ok,
       std::to_string(report.refuted_rational) + " rational witnesses, " +
           std::to_string(report.refuted_square_ordered) + " square-ordered certificates"});
  return report;
}

nlohmann::json grid_report_json(const GridReport& r) {
  nlohmann::json out;
  out["grid_points"] = r.points.size();
  out["in_c_count"] = r.in_c_count;
  out["refuted_rational"] = r.refuted_rational;
  out["refuted_square_ordered"] = r.refuted_square_ordered;
  return out;
}

}  // namespace kleinfour
