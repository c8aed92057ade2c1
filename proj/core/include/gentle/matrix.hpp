#ifndef GENTLE_MATRIX_HPP
#define GENTLE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "gentle/error.hpp"
#include "gentle/field.hpp"

namespace gentle {

// Dense matrix over an exact field. Maps act on column vectors, so a matrix
// representing X_alpha : X_s -> X_t has shape (dim X_t) x (dim X_s).
template <class F>
class Mat {
 public:
  using E = typename F::Elem;

  Mat() = default;
  Mat(F field, size_t rows, size_t cols)
      : f_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Mat identity(F field, size_t n) {
    Mat m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const F& field() const { return f_; }

  E& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const E& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const E& x : a_)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) fail(Err::SizeMismatch, "matrix product shape mismatch");
    Mat r(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        E v = at(i, k);
        if (f_.is_zero(v)) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = f_.add(r.at(i, j), f_.mul(v, o.at(k, j)));
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::SizeMismatch, "matrix sum shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(r.a_[i], o.a_[i]);
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::SizeMismatch, "matrix diff shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(r.a_[i], o.a_[i]);
    return r;
  }

  Mat scaled(E s) const {
    Mat r = *this;
    for (E& x : r.a_) x = f_.mul(x, s);
    return r;
  }

  void add_scaled_in_place(const Mat& o, E s) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] = f_.add(a_[i], f_.mul(o.a_[i], s));
  }

  Mat transpose() const {
    Mat r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t sel = row;
      while (sel < rows_ && f_.is_zero(at(sel, col))) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
      E piv_inv = f_.inv(at(row, col));
      for (size_t j = col; j < cols_; ++j) at(row, j) = f_.mul(at(row, j), piv_inv);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || f_.is_zero(at(i, col))) continue;
        E factor = at(i, col);
        for (size_t j = col; j < cols_; ++j)
          at(i, j) = f_.sub(at(i, j), f_.mul(factor, at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat tmp = *this;
    return tmp.rref().size();
  }

  // Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<E>> kernel_basis() const {
    Mat tmp = *this;
    std::vector<size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<E> v(cols_, f_.zero());
      v[free_col] = f_.one();
      for (size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = f_.neg(tmp.at(r, free_col));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // A^k via repeated squaring.
  Mat power(uint64_t k) const {
    if (rows_ != cols_) fail(Err::SizeMismatch, "power of a non-square matrix");
    Mat result = identity(f_, rows_);
    Mat base = *this;
    while (k) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  bool is_nilpotent() const {
    if (rows_ != cols_) return false;
    if (rows_ == 0) return true;
    return power(rows_).is_zero();
  }

 private:
  F f_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<E> a_;
};

using FqMat = Mat<Fq>;
using RatMat = Mat<Rationals>;

}  // namespace gentle

#endif
