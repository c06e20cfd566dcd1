#pragma once

#include <vector>

#include "green/intpoly.hpp"
#include "green/numeric.hpp"

namespace green {

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  IntMatrix block(size_t row0, size_t col0, size_t nrows, size_t ncols) const;
  /// Entrywise least non-negative residue mod r (r >= 2).
  IntMatrix reduced_mod(const Int& r) const;
  Int det() const;  // Bareiss fraction-free elimination

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Dense matrix over exact rationals; every entry kept in lowest terms with
/// positive denominator (mpq canonical form).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);
  static RatMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transpose() const;
  Rat det() const;  // exact-pivot Gaussian elimination
  /// Solves A X = B for X; throws Error on singular A or shape mismatch.
  RatMatrix solve(const RatMatrix& rhs) const;

  bool is_integral() const;
  IntMatrix to_int() const;  // throws if any entry non-integral

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Matrix with IntPoly entries, only as large as the lattice ranks need.
class PolyMatrix {
 public:
  PolyMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  IntPoly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const IntPoly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  /// Determinant by cofactor expansion; intended for rank <= 5.
  IntPoly det() const;

 private:
  size_t rows_, cols_;
  std::vector<IntPoly> a_;
};

/// det(q*I - M) as an IntPoly, for an integer square matrix M.
IntPoly char_poly(const IntMatrix& m);

}  // namespace green
