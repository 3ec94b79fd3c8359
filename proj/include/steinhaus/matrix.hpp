#pragma once

#include <cstdint>
#include <vector>

#include "steinhaus/modring.hpp"

namespace steinhaus {

// Dense exact integer matrix.  Products accumulate in 128 bits and are
// range-checked back into int64.
class IntMat {
 public:
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMat identity(std::size_t n);
  // Circ(S): entry (r,s) = S[(s-r) mod k].
  static IntMat circulant(const std::vector<std::int64_t>& first_row);
  // Toepl(S1,S2): entry (r,s) = u[r-s] with u[0..k-1] = S1, u[-j] = S2[j-1].
  static IntMat toeplitz(const std::vector<std::int64_t>& col,
                         const std::vector<std::int64_t>& above_diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  friend IntMat operator+(const IntMat& x, const IntMat& y);
  friend IntMat operator-(const IntMat& x, const IntMat& y);
  friend IntMat operator*(const IntMat& x, const IntMat& y);
  friend IntMat operator*(std::int64_t c, const IntMat& x);
  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const;
  // Exact division by c; throws if some entry is not divisible.
  IntMat divide_exact(std::int64_t c) const;
  // Horizontal block concatenation (A | B).
  static IntMat hconcat(const IntMat& a, const IntMat& b);

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

// Row vector times matrix over the integers.
std::vector<std::int64_t> row_times(const std::vector<std::int64_t>& v,
                                    const IntMat& m);

// Dense matrix over Z/mZ, entries canonical in [0, m).
class ModMatrix {
 public:
  ModMatrix(Modulus m, std::size_t rows, std::size_t cols)
      : m_(m), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  ModMatrix(Modulus m, const IntMat& x);

  static ModMatrix identity(Modulus m, std::size_t n);

  Modulus modulus() const { return m_; }
  std::int64_t mod() const { return m_.value(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t x) {
    a_[r * cols_ + c] = m_.reduce(x);
  }

  ModTuple row(std::size_t r) const;
  void set_row(std::size_t r, const ModTuple& t);

  ModMatrix reduced(std::int64_t d) const;  // entrywise projection mod d | m

  friend ModMatrix operator+(const ModMatrix& x, const ModMatrix& y);
  friend ModMatrix operator-(const ModMatrix& x, const ModMatrix& y);
  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);
  friend ModMatrix operator*(std::int64_t c, const ModMatrix& x);
  friend bool operator==(const ModMatrix& x, const ModMatrix& y) {
    return x.m_ == y.m_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ &&
           x.a_ == y.a_;
  }
  friend bool operator!=(const ModMatrix& x, const ModMatrix& y) {
    return !(x == y);
  }

  bool is_zero() const;
  static ModMatrix hconcat(const ModMatrix& a, const ModMatrix& b);
  static ModMatrix vconcat(const ModMatrix& a, const ModMatrix& b);

 private:
  Modulus m_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

// Row vector times matrix over Z/mZ.
ModTuple row_times(const ModTuple& v, const ModMatrix& m);

std::string to_json(const ModMatrix& m);

}  // namespace steinhaus
