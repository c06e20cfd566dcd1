#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "green/numeric.hpp"

namespace green {

/// Univariate polynomial over Z in the indeterminate q.
/// Coefficients are little-endian by degree; the zero polynomial is the
/// empty sequence and no trailing zero coefficient is ever stored.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(Int v);
  static IntPoly q_power(size_t k);  // q^k

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

  Int eval(const Int& x) const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Exact quotient; throws Error if the division leaves a remainder or a
  /// non-integer coefficient.
  IntPoly div_exact(const IntPoly& divisor) const;
  bool divides(const IntPoly& divisor) const;

  std::string format(const std::string& var = "q") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Result of Lagrange interpolation: exact rational coefficients plus an
/// integrality verdict checked after the fact, never assumed.
struct InterpResult {
  std::vector<Rat> coeffs;  // little-endian by degree
  bool integral = false;

  Rat eval(const Int& x) const;
  /// Conversion to IntPoly; throws Error when integral is false.
  IntPoly to_int_poly() const;
};

/// Unique polynomial of degree < #points through the given nodes.
/// Throws Error("degenerate interpolation nodes") on duplicate x-values.
InterpResult poly_interpolate(const std::vector<std::pair<Int, Rat>>& points);

}  // namespace green
