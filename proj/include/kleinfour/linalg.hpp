#pragma once

#include <cstddef>
#include <vector>

#include "kleinfour/field.hpp"

namespace kleinfour {

// Dense matrix over an exact field. Row-major.
template <FieldContext K>
class Mat {
 public:
  Mat(const K& F, std::size_t rows, std::size_t cols)
      : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, F.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  typename K::Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const typename K::Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!a.F_->eq(a.a_[i], b.a_[i])) return false;
    return true;
  }

  Mat mul(const Mat& o) const {
    const K& F = *F_;
    Mat out(F, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (F.is_zero(at(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out.at(i, j) = F.add(out.at(i, j), F.mul(at(i, k), o.at(k, j)));
      }
    return out;
  }

  std::vector<typename K::Elem> apply(const std::vector<typename K::Elem>& x) const {
    const K& F = *F_;
    std::vector<typename K::Elem> y(rows_, F.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] = F.add(y[i], F.mul(at(i, j), x[j]));
    return y;
  }

  // In-place row echelon form; pivot is the first nonzero entry in the
  // column (exact arithmetic, no magnitude pivoting). Returns the rank and
  // records pivot columns.
  std::size_t echelonize(std::vector<std::size_t>* pivot_cols = nullptr) {
    const K& F = *F_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t piv = rows_;
      for (std::size_t r = rank; r < rows_; ++r)
        if (!F.is_zero(at(r, col))) {
          piv = r;
          break;
        }
      if (piv == rows_) continue;
      if (piv != rank)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(piv, c), at(rank, c));
      typename K::Elem ip = F.inv(at(rank, col));
      for (std::size_t c = col; c < cols_; ++c) at(rank, c) = F.mul(ip, at(rank, c));
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank || F.is_zero(at(r, col))) continue;
        typename K::Elem f = at(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          at(r, c) = F.sub(at(r, c), F.mul(f, at(rank, c)));
      }
      if (pivot_cols) pivot_cols->push_back(col);
      ++rank;
    }
    return rank;
  }

  std::size_t rank() const {
    Mat copy = *this;
    return copy.echelonize();
  }

  // Basis of the right kernel {x : Ax = 0}, in the deterministic order given
  // by ascending free column.
  std::vector<std::vector<typename K::Elem>> kernel_basis() const {
    const K& F = *F_;
    Mat e = *this;
    std::vector<std::size_t> pivots;
    e.echelonize(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename K::Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<typename K::Elem> x(cols_, F.zero());
      x[free] = F.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.neg(e.at(r, free));
      basis.push_back(std::move(x));
    }
    return basis;
  }

  typename K::Elem det() const {
    const K& F = *F_;
    Mat e = *this;
    typename K::Elem d = F.one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t piv = rows_;
      for (std::size_t r = rank; r < rows_; ++r)
        if (!F.is_zero(e.at(r, col))) {
          piv = r;
          break;
        }
      if (piv == rows_) return F.zero();
      if (piv != rank) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(e.at(piv, c), e.at(rank, c));
        d = F.neg(d);
      }
      d = F.mul(d, e.at(rank, col));
      typename K::Elem ip = F.inv(e.at(rank, col));
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (F.is_zero(e.at(r, col))) continue;
        typename K::Elem f = F.mul(ip, e.at(r, col));
        for (std::size_t c = col; c < cols_; ++c)
          e.at(r, c) = F.sub(e.at(r, c), F.mul(f, e.at(rank, c)));
      }
      ++rank;
    }
    return d;
  }

 private:
  const K* F_;
  std::size_t rows_, cols_;
  std::vector<typename K::Elem> a_;
};

}  // namespace kleinfour
