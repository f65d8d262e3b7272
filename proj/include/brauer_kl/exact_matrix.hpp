#pragma once

// Dense matrices over Q with exact elimination.

#include "brauer_kl/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer_kl {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Scalar& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
      }
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Scalar trace() const {
    Scalar t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Bareiss elimination on the integer matrix obtained by clearing row denominators.
  std::size_t rank() const {
    std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
      for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& x = (*this)(i, j);
        a[i][j] = x.get_num() * (l / x.get_den());
      }
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t p = rank;
      while (p < rows_ && a[p][c] == 0) ++p;
      if (p == rows_) continue;
      std::swap(a[p], a[rank]);
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        for (std::size_t j = c + 1; j < cols_; ++j) {
          a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        a[i][c] = 0;
      }
      prev = a[rank][c];
      ++rank;
    }
    return rank;
  }

  /// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
  ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    ExactMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
      const Scalar inv = 1 / m(row, c);
      for (std::size_t j = c; j < cols_; ++j) m(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || m(i, c) == 0) continue;
        const Scalar f = m(i, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(row, j);
      }
      piv.push_back(c);
      ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
  }

  /// Columns span the right kernel.
  ExactMatrix nullspace() const {
    std::vector<std::size_t> piv;
    const ExactMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free.push_back(c);
    ExactMatrix out(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      out(free[k], k) = 1;
      for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -r(i, free[k]);
    }
    return out;
  }

  /// Some X with A X = B, if one exists.
  std::optional<ExactMatrix> solve(const ExactMatrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in solve");
    ExactMatrix aug(rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) aug(i, cols_ + j) = b(i, j);
    }
    std::vector<std::size_t> piv;
    const ExactMatrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() >= cols_) return std::nullopt;
    ExactMatrix x(cols_, b.cols_);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) x(piv[i], j) = r(i, cols_ + j);
    return x;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += " ";
        out += brauer_kl::to_string((*this)(i, j));
      }
      out += "]\n";
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace brauer_kl
