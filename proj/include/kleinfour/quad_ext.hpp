#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "kleinfour/field.hpp"
#include "kleinfour/rational.hpp"

namespace kleinfour {

// u + v*w with w^2 = t; conjugation negates v.
template <FieldContext K>
struct ExtElem {
  typename K::Elem u, v;
};

// Largest square dividing |n| is divided out; sign is kept.
long squarefree_part(long n);

// The quadratic extension l = k(sqrt t) for a non-square t != 0, with the
// non-trivial base automorphism sigma given by (u, v) -> (u, -v). Over Q the
// parameter is normalized to its square-free integer part first, so equal
// square classes of t construct identical contexts.
template <FieldContext K>
class QuadExt {
 public:
  using Base = K;
  using Elem = ExtElem<K>;
  using BaseElem = typename K::Elem;

  QuadExt(const K& base, BaseElem t) : base_(&base), t_(normalize(base, std::move(t))) {
    if (base.is_zero(t_)) throw std::invalid_argument("QuadExt: t must be nonzero");
    if (base.is_square(t_)) throw std::invalid_argument("QuadExt: t must be a non-square");
  }

  const K& base() const { return *base_; }
  const BaseElem& t() const { return t_; }

  Elem make(BaseElem u, BaseElem v) const { return {std::move(u), std::move(v)}; }
  Elem from_base(BaseElem u) const { return {std::move(u), base_->zero()}; }
  Elem zero() const { return {base_->zero(), base_->zero()}; }
  Elem one() const { return {base_->one(), base_->zero()}; }
  Elem imag_unit() const { return {base_->zero(), base_->one()}; }

  bool eq(const Elem& a, const Elem& b) const { return base_->eq(a.u, b.u) && base_->eq(a.v, b.v); }
  bool is_zero(const Elem& a) const { return base_->is_zero(a.u) && base_->is_zero(a.v); }
  bool in_base(const Elem& a) const { return base_->is_zero(a.v); }

  Elem add(const Elem& a, const Elem& b) const { return {base_->add(a.u, b.u), base_->add(a.v, b.v)}; }
  Elem sub(const Elem& a, const Elem& b) const { return {base_->sub(a.u, b.u), base_->sub(a.v, b.v)}; }
  Elem neg(const Elem& a) const { return {base_->neg(a.u), base_->neg(a.v)}; }
  Elem mul(const Elem& a, const Elem& b) const {
    const K& F = *base_;
    return {F.add(F.mul(a.u, b.u), F.mul(t_, F.mul(a.v, b.v))),
            F.add(F.mul(a.u, b.v), F.mul(a.v, b.u))};
  }
  Elem scale(const BaseElem& c, const Elem& a) const { return {base_->mul(c, a.u), base_->mul(c, a.v)}; }

  Elem conj(const Elem& a) const { return {a.u, base_->neg(a.v)}; }
  // n(x) = x * conj(x) = u^2 - t v^2, a base element.
  BaseElem norm(const Elem& a) const {
    const K& F = *base_;
    return F.sub(F.mul(a.u, a.u), F.mul(t_, F.mul(a.v, a.v)));
  }
  BaseElem trace(const Elem& a) const { return base_->add(a.u, a.u); }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("QuadExt: inverse of zero");
    BaseElem n = norm(a);
    BaseElem ni = base_->inv(n);
    return {base_->mul(a.u, ni), base_->neg(base_->mul(a.v, ni))};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::string to_string(const Elem& a) const {
    if (base_->is_zero(a.v)) return base_->to_string(a.u);
    return base_->to_string(a.u) + "+" + base_->to_string(a.v) + "*w";
  }

  // Enumeration over a finite base: index i maps to (element(i % q), element(i / q)).
  std::uint64_t size() const requires FiniteFieldContext<K> { return base_->size() * base_->size(); }
  Elem element(std::uint64_t i) const requires FiniteFieldContext<K> {
    std::uint64_t q = base_->size();
    return {base_->element(i % q), base_->element(i / q)};
  }
  std::uint64_t index(const Elem& a) const requires FiniteFieldContext<K> {
    return base_->index(a.u) + base_->index(a.v) * base_->size();
  }

  // S = ker of the norm on nonzero elements; has q+1 members.
  std::vector<Elem> unit_circle() const requires FiniteFieldContext<K> {
    std::vector<Elem> out;
    for (std::uint64_t i = 1; i < size(); ++i) {
      Elem x = element(i);
      if (base_->eq(norm(x), base_->one())) out.push_back(x);
    }
    return out;
  }

  // A* = k* together with the nonzero purely imaginary line; 2(q-1) members.
  std::vector<Elem> punctured_axes() const requires FiniteFieldContext<K> {
    std::vector<Elem> out;
    for (std::uint64_t i = 1; i < base_->size(); ++i) out.push_back(from_base(base_->element(i)));
    for (std::uint64_t i = 1; i < base_->size(); ++i) out.push_back({base_->zero(), base_->element(i)});
    return out;
  }

  bool norm_surjective() const requires FiniteFieldContext<K> {
    std::vector<bool> hit(base_->size(), false);
    for (std::uint64_t i = 1; i < size(); ++i) hit[base_->index(norm(element(i)))] = true;
    for (std::uint64_t j = 1; j < base_->size(); ++j)
      if (!hit[j]) return false;
    return true;
  }

 private:
  static BaseElem normalize(const K& base, BaseElem t) {
    if constexpr (std::is_same_v<K, RationalField>) {
      const Rational& r = t;
      if (r.is_zero()) return t;
      mpz_class prod = r.num() * r.den();
      if (!prod.fits_slong_p())
        throw budget_error("QuadExt: t too large to normalize to square-free form");
      return Rational(squarefree_part(prod.get_si()), 1);
    } else {
      return t;
    }
  }

  const K* base_;
  BaseElem t_;
};

}  // namespace kleinfour
