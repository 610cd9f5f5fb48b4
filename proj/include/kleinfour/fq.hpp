#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleinfour/field.hpp"

namespace kleinfour {

class Fq;

// Element of a prime-power field, tagged with its owning context.
struct FqElem {
  const Fq* field = nullptr;
  std::uint32_t idx = 0;

  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a);
};

// F_q, q = p^n with p an odd prime. Elements are coefficient vectors of
// length n over F_p in the basis 1, w, ..., w^{n-1}, where w is a root of
// the modulus. The enumeration index of (d_0, ..., d_{n-1}) is sum d_j p^j,
// so it starts 0, 1, ..., p-1, w, 1+w, ...
//
// The modulus is the first monic irreducible polynomial found when scanning
// tails (m_0, ..., m_{n-1}) with m_0 varying fastest; this and the index
// order above are the fixed conventions every canonical choice (sqrt roots,
// smallest non-square, transversal order) rests on.
class Fq {
 public:
  using Elem = FqElem;
  static constexpr std::uint32_t kDefaultMaxQ = 4096;
  static constexpr std::uint32_t kNoRoot = UINT32_MAX;

  Fq(std::uint32_t p, std::uint32_t n = 1, std::uint32_t max_q = kDefaultMaxQ);
  Fq(const Fq&) = delete;  // elements hold pointers to their context
  Fq& operator=(const Fq&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  bool finite() const { return true; }
  // Tail coefficients m_0..m_{n-1} of the monic modulus x^n + sum m_j x^j.
  const std::vector<std::uint32_t>& modulus_tail() const { return modulus_; }

  Elem zero() const { return {this, 0}; }
  Elem one() const { return {this, 1}; }
  Elem element(std::uint64_t i) const;
  std::uint64_t index(const Elem& a) const { return check(a); }
  Elem from_int(long v) const;
  std::vector<Elem> elements() const;

  Elem add(const Elem& a, const Elem& b) const { return {this, add_idx(check(a), check(b))}; }
  Elem sub(const Elem& a, const Elem& b) const { return {this, add_idx(check(a), neg_[check(b)])}; }
  Elem neg(const Elem& a) const { return {this, neg_[check(a)]}; }
  Elem mul(const Elem& a, const Elem& b) const { return {this, mul_idx(check(a), check(b))}; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;
  bool eq(const Elem& a, const Elem& b) const { return check(a) == check(b); }
  bool is_zero(const Elem& a) const { return check(a) == 0; }

  bool is_square(const Elem& a) const { return sqrt_[check(a)] != kNoRoot; }
  // Of the two roots, the one least in the enumeration order.
  std::optional<Elem> sqrt(const Elem& a) const {
    std::uint32_t r = sqrt_[check(a)];
    if (r == kNoRoot) return std::nullopt;
    return Elem{this, r};
  }
  // |x| = x if x is a square, -x otherwise. Both branches agree at 0.
  Elem abs_sq(const Elem& a) const { return is_square(a) ? a : neg(a); }
  Elem smallest_nonsquare() const { return {this, smallest_nonsquare_}; }

  std::string to_string(const Elem& a) const;
  // Accepts an integer (value mod p), "u+v*w" for n == 2, or "#i" meaning
  // the element of enumeration index i.
  Elem parse(const std::string& text) const;

  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t check(const Elem& a) const {
    if (a.field != this) throw context_mismatch("FqElem used with a foreign field context");
    return a.idx;
  }
  std::uint32_t mul_idx_general(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0, n_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> sqrt_;  // canonical root, or kNoRoot
  std::uint32_t smallest_nonsquare_ = 0;
};

inline std::uint32_t Fq::add_idx(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t j = 0; j < n_; ++j) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

inline std::uint32_t Fq::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
  if (n_ == 2) {
    std::uint64_t a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    std::uint64_t m0 = modulus_[0], m1 = modulus_[1];
    std::uint64_t c2 = a1 * b1 % p_;
    std::uint64_t c0 = (a0 * b0 + (p_ - m0 % p_) * c2) % p_;
    std::uint64_t c1 = (a0 * b1 + a1 * b0 + (p_ - m1 % p_) * c2) % p_;
    return static_cast<std::uint32_t>(c0 + c1 * p_);
  }
  return mul_idx_general(a, b);
}

inline Fq::Elem Fq::element(std::uint64_t i) const {
  if (i >= q_) throw std::out_of_range("Fq::element: index out of range");
  return {this, static_cast<std::uint32_t>(i)};
}

inline bool operator==(const FqElem& a, const FqElem& b) {
  if (a.field != b.field || a.field == nullptr)
    throw context_mismatch("comparing FqElem values from different contexts");
  return a.idx == b.idx;
}
inline FqElem operator+(const FqElem& a, const FqElem& b) { return a.field->add(a, b); }
inline FqElem operator-(const FqElem& a, const FqElem& b) { return a.field->sub(a, b); }
inline FqElem operator*(const FqElem& a, const FqElem& b) { return a.field->mul(a, b); }
inline FqElem operator/(const FqElem& a, const FqElem& b) { return a.field->div(a, b); }
inline FqElem operator-(const FqElem& a) { return a.field->neg(a); }

static_assert(FiniteFieldContext<Fq>);

}  // namespace kleinfour
