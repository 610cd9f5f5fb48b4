#include "kleinfour/fq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kleinfour {
namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficient c[i] on x^i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  // mod is monic of degree deg: fold x^k down via x^deg = -tail
  std::size_t deg = mod.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    std::uint64_t lead = c[k];
    if (lead == 0) continue;
    c[k] = 0;
    for (std::size_t j = 0; j < deg; ++j)
      c[k - deg + j] = static_cast<std::uint32_t>((c[k - deg + j] + lead * (p - mod[j] % p)) % p);
  }
  c.resize(deg);
  return trim(c);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
  Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  return trim(a);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  auto inv_mod = [p](std::uint64_t x) {
    std::uint64_t r = 1, base = x % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
    }
    return r;
  };
  while (!b.empty()) {
    // a mod b
    Poly r = a;
    std::uint64_t blead_inv = inv_mod(b.back());
    while (r.size() >= b.size()) {
      std::uint64_t coef = r.back() * blead_inv % p;
      std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + (p - b[i]) * coef) % p);
      r = trim(r);
      if (r.empty()) break;
    }
    a = b;
    b = r;
  }
  return a;
}

// n = 2: irreducible iff no root. n > 2: x^(p^n) = x mod f together with
// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t n = f.size() - 1;
  if (n == 2) {
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  auto pow_u64 = [](std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  Poly x{0, 1};
  Poly xq = poly_powmod(x, pow_u64(p, static_cast<std::uint32_t>(n)), f, p);
  if (poly_sub(xq, x, p) != Poly{}) return false;
  for (std::uint32_t r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= r; ++d)
      if (r % d == 0) prime = false;
    if (!prime) continue;
    Poly xe = poly_powmod(x, pow_u64(p, static_cast<std::uint32_t>(n / r)), f, p);
    Poly g = poly_gcd(f, poly_sub(xe, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Fq::Fq(std::uint32_t p, std::uint32_t n, std::uint32_t max_q) : p_(p), n_(n) {
  if (!is_odd_prime(p)) throw std::invalid_argument("Fq: not an odd prime");
  if (n == 0) throw std::invalid_argument("Fq: exponent must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > max_q) throw budget_error("Fq: size bound exceeded (q > " + std::to_string(max_q) + ")");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (n >= 2) {
    for (std::uint32_t tail = 0;; ++tail) {
      if (tail >= q_) throw std::logic_error("Fq: no irreducible modulus found");
      Poly f(n + 1, 0);
      f[n] = 1;
      std::uint32_t t = tail;
      for (std::uint32_t j = 0; j < n; ++j) {
        f[j] = t % p;
        t /= p;
      }
      if (is_irreducible(f, p)) {
        modulus_.assign(f.begin(), f.begin() + n);
        break;
      }
    }
  }

  neg_.resize(q_);
  for (std::uint32_t i = 0; i < q_; ++i) {
    std::uint32_t out = 0, mult = 1, a = i;
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::uint32_t d = a % p_;
      out += (d == 0 ? 0 : p_ - d) * mult;
      mult *= p_;
      a /= p_;
    }
    neg_[i] = out;
  }

  inv_.assign(q_, 0);
  for (std::uint32_t i = 1; i < q_; ++i) {
    std::uint64_t e = q_ - 2;
    std::uint32_t r = 1, base = i;
    while (e > 0) {
      if (e & 1) r = mul_idx(r, base);
      base = mul_idx(base, base);
      e >>= 1;
    }
    inv_[i] = r;
  }

  sqrt_.assign(q_, kNoRoot);
  for (std::uint32_t y = 0; y < q_; ++y) {
    std::uint32_t s = mul_idx(y, y);
    if (sqrt_[s] == kNoRoot) sqrt_[s] = y;
  }
  for (std::uint32_t x = 1; x < q_; ++x) {
    if (sqrt_[x] == kNoRoot) {
      smallest_nonsquare_ = x;
      break;
    }
  }
}

std::uint32_t Fq::mul_idx_general(std::uint32_t a, std::uint32_t b) const {
  Poly pa, pb;
  for (std::uint32_t x = a; x > 0; x /= p_) pa.push_back(x % p_);
  for (std::uint32_t x = b; x > 0; x /= p_) pb.push_back(x % p_);
  Poly mod(modulus_);
  mod.push_back(1);
  Poly c = poly_mulmod(trim(pa), trim(pb), mod, p_);
  std::uint32_t out = 0, mult = 1;
  for (std::uint32_t j = 0; j < n_; ++j) {
    out += (j < c.size() ? c[j] : 0) * mult;
    mult *= p_;
  }
  return out;
}

Fq::Elem Fq::inv(const Elem& a) const {
  std::uint32_t i = index(a);
  if (i == 0) throw std::domain_error("Fq: inverse of zero");
  return {this, inv_[i]};
}

Fq::Elem Fq::pow(const Elem& a, std::uint64_t e) const {
  std::uint32_t r = 1, base = static_cast<std::uint32_t>(index(a));
  while (e > 0) {
    if (e & 1) r = mul_idx(r, base);
    base = mul_idx(base, base);
    e >>= 1;
  }
  return {this, r};
}

Fq::Elem Fq::from_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return {this, static_cast<std::uint32_t>(m)};
}

std::vector<Fq::Elem> Fq::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back({this, i});
  return out;
}

std::string Fq::to_string(const Elem& a) const {
  std::uint32_t i = static_cast<std::uint32_t>(index(a));
  if (n_ == 1) return std::to_string(i);
  if (n_ == 2) {
    std::uint32_t u = i % p_, v = i / p_;
    if (v == 0) return std::to_string(u);
    return std::to_string(u) + "+" + std::to_string(v) + "*w";
  }
  return "#" + std::to_string(i);
}

Fq::Elem Fq::parse(const std::string& text) const {
  auto fail = [&] { throw std::invalid_argument("Fq: cannot parse element '" + text + "'"); };
  if (text.empty()) fail();
  if (text[0] == '#') {
    std::uint64_t i = std::stoull(text.substr(1));
    if (i >= q_) fail();
    return element(i);
  }
  auto star = text.find('*');
  if (star != std::string::npos) {
    if (n_ != 2) fail();
    if (text.substr(star + 1) != "w") fail();
    auto plus = text.rfind('+', star);
    long u = 0, v = 0;
    if (plus == std::string::npos) {
      v = std::stol(text.substr(0, star));
    } else {
      u = std::stol(text.substr(0, plus));
      v = std::stol(text.substr(plus + 1, star - plus - 1));
    }
    return add(from_int(u), {this, static_cast<std::uint32_t>(from_int(v).idx * p_)});
  }
  return from_int(std::stol(text));
}

}  // namespace kleinfour
