#include "green/matrix.hpp"

namespace green {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix multiply: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix add: shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sub: shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::block(size_t row0, size_t col0, size_t nrows,
                           size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw Error("matrix block: out of range");
  IntMatrix r(nrows, ncols);
  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

IntMatrix IntMatrix::reduced_mod(const Int& r) const {
  if (r < 2) throw Error("mod reduction: modulus must be >= 2");
  IntMatrix m = *this;
  for (auto& v : m.a_) v = mod_nonneg(v, r);
  return m;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  const size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // Bareiss: division is exact
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix multiply: shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix add: shape mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix sub: shape mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  const size_t n = rows_;
  if (n == 0) return 1;
  RatMatrix m = *this;
  Rat d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      Rat f = m.at(i, k) * inv;
      if (f == 0) continue;
      for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::solve(const RatMatrix& rhs) const {
  if (rows_ != cols_) throw Error("solve: matrix not square");
  if (rhs.rows_ != rows_) throw Error("solve: shape mismatch");
  const size_t n = rows_;
  RatMatrix m = *this, b = rhs;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m.at(p, k) == 0) ++p;
    if (p == n) throw Error("solve: singular matrix");
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      for (size_t j = 0; j < b.cols_; ++j) std::swap(b.at(k, j), b.at(p, j));
    }
    Rat inv = 1 / m.at(k, k);
    for (size_t j = 0; j < n; ++j) m.at(k, j) *= inv;
    for (size_t j = 0; j < b.cols_; ++j) b.at(k, j) *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m.at(i, k) == 0) continue;
      Rat f = m.at(i, k);
      for (size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (size_t j = 0; j < b.cols_; ++j) b.at(i, j) -= f * b.at(k, j);
    }
  }
  return b;
}

bool RatMatrix::is_integral() const {
  for (const Rat& v : a_)
    if (v.get_den() != 1) return false;
  return true;
}

IntMatrix RatMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Rat& v = at(i, j);
      if (v.get_den() != 1) throw Error("to_int: non-integral entry");
      m.at(i, j) = v.get_num();
    }
  return m;
}

IntPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  const size_t n = rows_;
  if (n == 0) return IntPoly::constant(1);
  if (n == 1) return at(0, 0);
  IntPoly acc;
  for (size_t j = 0; j < n; ++j) {
    if (at(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i) {
      size_t cj = 0;
      for (size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cj++) = at(i, k);
      }
    }
    IntPoly term = at(0, j) * minor.det();
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

IntPoly char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("char_poly of non-square matrix");
  const size_t n = m.rows();
  PolyMatrix pm(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IntPoly e = IntPoly::constant(-m.at(i, j));
      if (i == j) e = e + IntPoly::q_power(1);
      pm.at(i, j) = e;
    }
  return pm.det();
}

}  // namespace green
