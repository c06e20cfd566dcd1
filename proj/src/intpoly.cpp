#include "green/intpoly.hpp"

#include <algorithm>

namespace green {

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::q_power(size_t k) {
  IntPoly p;
  p.c_.assign(k + 1, Int(0));
  p.c_[k] = 1;
  return p;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const Int& s) const {
  IntPoly r = *this;
  for (auto& v : r.c_) v *= s;
  r.trim();
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree())
    throw Error("non-exact polynomial division: degree too small");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
  const Int& lead = divisor.leading();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int& top = rem[k + divisor.degree()];
    if (top % lead != 0)
      throw Error("non-exact polynomial division: non-integral quotient");
    Int f = top / lead;
    quot[k] = f;
    if (f != 0)
      for (size_t j = 0; j < divisor.c_.size(); ++j)
        rem[k + j] -= f * divisor.c_[j];
  }
  for (const Int& v : rem)
    if (v != 0) throw Error("non-exact polynomial division: remainder");
  return IntPoly(std::move(quot));
}

bool IntPoly::divides(const IntPoly& divisor) const {
  try {
    (void)div_exact(divisor);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string IntPoly::format(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Rat InterpResult::eval(const Int& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * Rat(x) + *it;
  return acc;
}

IntPoly InterpResult::to_int_poly() const {
  if (!integral) throw Error("interpolant has non-integer coefficients");
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (const Rat& v : coeffs) c.push_back(v.get_num());
  return IntPoly(std::move(c));
}

InterpResult poly_interpolate(const std::vector<std::pair<Int, Rat>>& points) {
  if (points.empty()) throw Error("interpolation needs at least one point");
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw Error("degenerate interpolation nodes");

  // Lagrange form assembled coefficient-wise over exact rationals.
  std::vector<Rat> acc(n, Rat(0));
  std::vector<Rat> basis;
  for (size_t i = 0; i < n; ++i) {
    basis.assign(1, Rat(1));
    Rat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // multiply basis by (x - x_j)
      basis.insert(basis.begin(), Rat(0));
      for (size_t k = 0; k + 1 < basis.size(); ++k)
        basis[k] -= Rat(points[j].first) * basis[k + 1];
      denom *= Rat(points[i].first) - Rat(points[j].first);
    }
    Rat w = points[i].second / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  if (acc.size() == 1 && acc[0] == 0) acc.clear();

  InterpResult r;
  r.coeffs = std::move(acc);
  r.integral = true;
  for (const Rat& v : r.coeffs)
    if (v.get_den() != 1) {
      r.integral = false;
      break;
    }
  return r;
}

}  // namespace green
