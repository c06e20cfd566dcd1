#pragma once

#include "green/intpoly.hpp"
#include "green/weyl.hpp"

namespace green {

/// Exact order polynomials: |T_w^F| = f_w(q), |G^F| = f(q), and the index
/// polynomials [G^F : T_w^F] = f / f_w, one per gamma-conjugacy class.
struct OrderData {
  IntPoly group_poly;                 // f
  std::vector<IntPoly> torus_polys;   // f_w per gamma-class (class order)
  std::vector<IntPoly> index_polys;   // f / f_w per gamma-class
};

/// f_w = det(q*id - (gamma*)^{-1} w) over the cocharacter lattice.
IntPoly torus_order_poly(const CartanDatum& datum, const WeylGroupData& w,
                         int elem);

/// f = q^{|Phi+|} * f_1 * sum over gamma-fixed w of q^{l(w)}.
IntPoly group_order_poly(const CartanDatum& datum, const WeylGroupData& w);

/// Exact quotient f / f_w; throws Error when the division is not exact.
IntPoly index_poly(const CartanDatum& datum, const WeylGroupData& w, int elem);

OrderData build_order_data(const CartanDatum& datum, const WeylGroupData& w);

}  // namespace green
