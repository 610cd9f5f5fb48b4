#include "kleinfour/morphisms.hpp"

namespace kleinfour {
namespace {

void add_with_conjugates(const QuadExt<RationalField>& ext, const ExtElem<RationalField>& a,
                         std::vector<ExtElem<RationalField>>& out) {
  auto push_unique = [&](const ExtElem<RationalField>& w) {
    for (const auto& seen : out)
      if (ext.eq(seen, w)) return;
    out.push_back(w);
  };
  push_unique(a);
  push_unique(ext.neg(a));
  push_unique(ext.conj(a));
  push_unique(ext.neg(ext.conj(a)));
}

}  // namespace

EllStarRational ell_star_rational(const QuadExt<RationalField>& ext, const Triple<RationalField>& c,
                                  const Triple<RationalField>& d, long height) {
  EllStarRational r;
  if (c.c1 != d.c1) {
    r.status = SetStatus::empty;
    r.reason = "c1 differs";
    return r;
  }
  const Rational& t = ext.t();
  bool c2_zero = c.c2.is_zero(), d2_zero = d.c2.is_zero();
  if (c2_zero != d2_zero) {
    r.status = SetStatus::empty;
    r.reason = "c2/a^2 cannot carry zero to nonzero";
    return r;
  }

  if (!c2_zero) {
    // a^2 = c2/d2 pins a up to sign: a in Q when the ratio is a square, and
    // a in Im(l) when ratio/t is a square; otherwise the ratio is a
    // non-square in l.
    Rational ratio = c.c2 / d.c2;
    std::vector<std::pair<ExtElem<RationalField>, Rational>> candidates;  // (a, norm a)
    if (auto root = rational_sqrt(ratio))
      candidates.push_back({ext.from_base(*root), ratio});
    if (auto root = rational_sqrt(ratio / t))
      candidates.push_back({ext.make(Rational(0), *root), -ratio});
    if (candidates.empty()) {
      r.status = SetStatus::empty;
      r.reason = "c2/d2 is not a square in l";
      return r;
    }
    for (const auto& [a, norm_a] : candidates) {
      bool norm_ok = d.c3.is_zero() ? c.c3.is_zero() : c.c3 / d.c3 == norm_a;
      if (norm_ok) add_with_conjugates(ext, a, r.witnesses);
    }
    if (r.witnesses.empty()) {
      r.status = SetStatus::empty;
      r.reason = "norm condition fails on both square roots";
      return r;
    }
    r.status = SetStatus::nonempty;
    return r;
  }

  // c2 = d2 = 0: only n(a) = c3/d3 remains.
  if (c.c3.is_zero() && d.c3.is_zero()) {
    r.status = SetStatus::nonempty;
    r.witnesses.push_back(ext.one());
    return r;
  }
  if (c.c3.is_zero() != d.c3.is_zero()) {
    r.status = SetStatus::empty;
    r.reason = "c3/(a conj a) cannot carry zero to nonzero";
    return r;
  }
  Rational rho = c.c3 / d.c3;
  if (t < Rational(0) && rho <= Rational(0)) {
    r.status = SetStatus::empty;
    r.reason = "norm form is positive definite for t < 0";
    return r;
  }
  if (rho.is_zero()) {
    r.status = SetStatus::empty;
    r.reason = "the norm never vanishes on l*";
    return r;
  }
  // Search n(a) = rho with a = (x + y w)/m: Q (x^2 - t y^2) = P m^2 over Z,
  // where rho = P/Q reduced and t is a square-free integer.
  if (!rho.num().fits_slong_p() || !rho.den().fits_slong_p() ||
      std::abs(rho.num().get_si()) > 1000000 || rho.den().get_si() > 1000000)
    throw budget_error("ell_star_rational: norm target too large for the bounded search");
  long P = rho.num().get_si(), Q = rho.den().get_si();
  long tt = t.num().get_si();
  for (long m = 1; m <= height; ++m)
    for (long x = 0; x <= height; ++x)
      for (long y = 0; y <= height; ++y) {
        if (Q * (x * x - tt * y * y) != P * m * m) continue;
        ExtElem<RationalField> a =
            ext.make(Rational(x) / Rational(m), Rational(y) / Rational(m));
        if (ext.is_zero(a)) continue;
        add_with_conjugates(ext, a, r.witnesses);
        r.status = SetStatus::nonempty;
        return r;
      }
  r.status = SetStatus::undecided;
  r.reason = "no norm representation found within height " + std::to_string(height);
  return r;
}

}  // namespace kleinfour
