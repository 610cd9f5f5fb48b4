#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinfour/field.hpp"
#include "kleinfour/linalg.hpp"
#include "kleinfour/quad_ext.hpp"

namespace kleinfour {

template <FieldContext K>
struct Triple {
  typename K::Elem c1, c2, c3;
};

// Element (x, y) of the 2-dimensional right l-space underlying A(l, c).
template <FieldContext K>
struct AlgElem {
  ExtElem<K> x, y;
};

enum class TripleType { N, S, K };

inline const char* to_string(TripleType t) {
  switch (t) {
    case TripleType::N: return "N";
    case TripleType::S: return "S";
    default: return "K";
  }
}

// Joint eigenspace decomposition under the order-2 automorphisms
// (beta, alpha) = ((x,y) -> (conj x, conj y), (x,y) -> (x, -y)).
// component(i, j) spans the intersection of the (-1)^i-eigenspace of beta
// with the (-1)^j-eigenspace of alpha; component(0, 0) = k * 1.
template <FieldContext K>
struct VGrading {
  std::array<AlgElem<K>, 4> basis;
  const AlgElem<K>& component(int i, int j) const { return basis[2 * i + j]; }
};

// The algebra A(l, c) on l^2 with product
//   (x, y) (w, z) = (xw + (c2 y + c3 conj y) z,  yw + ((1-c1) x + c1 conj x) z).
// It is unital with unity (1, 0), and is a division algebra exactly when
// q_c vanishes only at the origin.
template <FieldContext K>
class Algebra {
 public:
  using Ext = QuadExt<K>;
  using Elt = AlgElem<K>;
  using BaseElem = typename K::Elem;

  Algebra(const Ext& ext, Triple<K> c)
      : ext_(&ext), c_(std::move(c)), one_minus_c1_(ext.base().sub(ext.base().one(), c_.c1)) {}

  const Ext& ext() const { return *ext_; }
  const K& base() const { return ext_->base(); }
  const Triple<K>& triple() const { return c_; }

  Elt make(ExtElem<K> x, ExtElem<K> y) const { return {std::move(x), std::move(y)}; }
  Elt zero() const { return {ext_->zero(), ext_->zero()}; }
  Elt one() const { return {ext_->one(), ext_->zero()}; }
  Elt gen_u() const { return {ext_->imag_unit(), ext_->zero()}; }
  Elt gen_j() const { return {ext_->zero(), ext_->one()}; }
  // {1, u, j, ju}; coincides with the standard coordinates on l^2.
  std::array<Elt, 4> standard_basis() const {
    return {one(), gen_u(), gen_j(), make(ext_->zero(), ext_->imag_unit())};
  }

  bool eq(const Elt& a, const Elt& b) const { return ext_->eq(a.x, b.x) && ext_->eq(a.y, b.y); }
  bool is_zero(const Elt& a) const { return ext_->is_zero(a.x) && ext_->is_zero(a.y); }

  Elt add(const Elt& a, const Elt& b) const { return {ext_->add(a.x, b.x), ext_->add(a.y, b.y)}; }
  Elt sub(const Elt& a, const Elt& b) const { return {ext_->sub(a.x, b.x), ext_->sub(a.y, b.y)}; }
  Elt neg(const Elt& a) const { return {ext_->neg(a.x), ext_->neg(a.y)}; }
  Elt scale(const BaseElem& c, const Elt& a) const { return {ext_->scale(c, a.x), ext_->scale(c, a.y)}; }
  // Right action of l; a * (1_A l) = a l.
  Elt scale_ext(const Elt& a, const ExtElem<K>& l) const { return {ext_->mul(a.x, l), ext_->mul(a.y, l)}; }

  // Left column of L_a in the basis (1_A, j) as a right l-module map.
  ExtElem<K> lmat_tl(const Elt& a) const { return a.x; }
  ExtElem<K> lmat_tr(const Elt& a) const {
    return ext_->add(ext_->scale(c_.c2, a.y), ext_->scale(c_.c3, ext_->conj(a.y)));
  }
  ExtElem<K> lmat_bl(const Elt& a) const { return a.y; }
  ExtElem<K> lmat_br(const Elt& a) const {
    return ext_->add(ext_->scale(one_minus_c1_, a.x), ext_->scale(c_.c1, ext_->conj(a.x)));
  }

  Elt mul(const Elt& a, const Elt& b) const {
    return {ext_->add(ext_->mul(a.x, b.x), ext_->mul(lmat_tr(a), b.y)),
            ext_->add(ext_->mul(a.y, b.x), ext_->mul(lmat_br(a), b.y))};
  }

  // q_c(a) = det of the l-matrix of L_a = (1-c1)x^2 + c1 x conj(x) - c2 y^2 - c3 y conj(y).
  ExtElem<K> q_of(const Elt& a) const {
    return ext_->sub(ext_->mul(a.x, lmat_br(a)), ext_->mul(a.y, lmat_tr(a)));
  }

  std::array<BaseElem, 4> coords(const Elt& a) const { return {a.x.u, a.x.v, a.y.u, a.y.v}; }
  Elt from_coords(const std::array<BaseElem, 4>& c) const {
    return {ext_->make(c[0], c[1]), ext_->make(c[2], c[3])};
  }

  Elt alpha(const Elt& a) const { return {a.x, ext_->neg(a.y)}; }
  Elt beta(const Elt& a) const { return {ext_->conj(a.x), ext_->conj(a.y)}; }

  // 4x4 base-field matrix of a k-linear map given by its action.
  template <class F>
  Mat<K> matrix_of(F&& f) const {
    Mat<K> m(base(), 4, 4);
    auto bas = standard_basis();
    for (std::size_t col = 0; col < 4; ++col) {
      auto img = coords(f(bas[col]));
      for (std::size_t row = 0; row < 4; ++row) m.at(row, col) = img[row];
    }
    return m;
  }

  Mat<K> left_mul_matrix(const Elt& a) const {
    return matrix_of([&](const Elt& x) { return mul(a, x); });
  }

  BaseElem trace_of_left_mul(const Elt& a) const {
    Mat<K> m = left_mul_matrix(a);
    const K& F = base();
    BaseElem t = F.zero();
    for (std::size_t i = 0; i < 4; ++i) t = F.add(t, m.at(i, i));
    return t;
  }

  // tau(a, b) = tr(L_{ab}); symmetric and non-degenerate on division algebras.
  BaseElem trace_form(const Elt& a, const Elt& b) const { return trace_of_left_mul(mul(a, b)); }

  Mat<K> trace_gram_matrix() const {
    Mat<K> g(base(), 4, 4);
    auto bas = standard_basis();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g.at(i, j) = trace_form(bas[i], bas[j]);
    return g;
  }

  bool is_associative() const {
    auto bas = standard_basis();
    for (const auto& a : bas)
      for (const auto& b : bas)
        for (const auto& c : bas)
          if (!eq(mul(mul(a, b), c), mul(a, mul(b, c)))) return false;
    return true;
  }

  bool is_commutative() const {
    auto bas = standard_basis();
    for (const auto& a : bas)
      for (const auto& b : bas)
        if (!eq(mul(a, b), mul(b, a))) return false;
    return true;
  }

  // Kernel of the linear system (e_i e_j) z = e_i (e_j z) over the standard
  // basis; returns a basis of the right nucleus.
  std::vector<Elt> right_nucleus_basis() const {
    const K& F = base();
    auto bas = standard_basis();
    Mat<K> sys(F, 64, 4);
    std::size_t row = 0;
    for (const auto& a : bas)
      for (const auto& b : bas) {
        Elt ab = mul(a, b);
        // column m: coords of (ab) e_m - a (b e_m)
        for (std::size_t m = 0; m < 4; ++m) {
          Elt diff = sub(mul(ab, bas[m]), mul(a, mul(b, bas[m])));
          auto d = coords(diff);
          for (std::size_t r = 0; r < 4; ++r) sys.at(row + r, m) = d[r];
        }
        row += 4;
      }
    std::vector<Elt> out;
    for (auto& vec : sys.kernel_basis())
      out.push_back(from_coords({vec[0], vec[1], vec[2], vec[3]}));
    return out;
  }

  VGrading<K> v_grading() const {
    const K& F = base();
    Mat<K> mb = matrix_of([&](const Elt& a) { return beta(a); });
    Mat<K> ma = matrix_of([&](const Elt& a) { return alpha(a); });
    VGrading<K> g{{zero(), zero(), zero(), zero()}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        // stacked (M - eps I) conditions for both automorphisms
        Mat<K> sys(F, 8, 4);
        BaseElem ei = i == 0 ? F.one() : F.neg(F.one());
        BaseElem ej = j == 0 ? F.one() : F.neg(F.one());
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) {
            sys.at(r, c) = r == c ? F.sub(mb.at(r, c), ei) : mb.at(r, c);
            sys.at(4 + r, c) = r == c ? F.sub(ma.at(r, c), ej) : ma.at(r, c);
          }
        auto ker = sys.kernel_basis();
        if (ker.size() != 1)
          throw std::logic_error("v_grading: joint eigenspace is not 1-dimensional");
        g.basis[2 * i + j] = from_coords({ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
      }
    return g;
  }

  // Closed-form division test over a finite base: (1-c1)c2 != 0, 1-2c1 not a
  // square, and c3 = -c1|c2|/|1-c1|. Returns the failing clause, or nullopt
  // when the triple is admissible.
  std::optional<std::string> closed_form_failure() const requires FiniteFieldContext<K> {
    const K& F = base();
    if (F.is_zero(F.mul(one_minus_c1_, c_.c2))) return "(1-c1)c2 = 0";
    if (F.is_square(F.sub(one_minus_c1_, c_.c1))) return "1-2c1 in k_sq";
    auto abs_sq = [&](const BaseElem& x) { return F.is_square(x) ? x : F.neg(x); };
    BaseElem want = F.neg(F.div(F.mul(c_.c1, abs_sq(c_.c2)), abs_sq(one_minus_c1_)));
    if (!F.eq(c_.c3, want)) return "c3 != -c1|c2|/|1-c1|";
    return std::nullopt;
  }

  bool is_admissible_closed_form() const requires FiniteFieldContext<K> {
    return !closed_form_failure().has_value();
  }

  // Pattern classification of an admissible triple. Over a finite base the
  // admissibility precondition is enforced; over Q it is the caller's.
  TripleType triple_type() const {
    const K& F = base();
    if constexpr (FiniteFieldContext<K>) {
      if (!is_admissible_closed_form()) throw std::domain_error("triple_type: inadmissible triple");
    }
    if (F.eq(c_.c1, F.one()) && F.is_zero(c_.c2)) return TripleType::S;
    if (F.is_zero(c_.c1) && F.is_zero(c_.c3)) return TripleType::K;
    return TripleType::N;
  }

 private:
  const Ext* ext_;
  Triple<K> c_;
  BaseElem one_minus_c1_;
};

}  // namespace kleinfour
