#include "green/orderpolys.hpp"

namespace green {

namespace {

// (gamma*)^{-1} as an integer matrix; the twist has order <= 2 so the
// inverse is the matrix itself or computed by squaring to identity.
IntMatrix gamma_lat_inverse(const CartanDatum& datum) {
  const IntMatrix& g = datum.gamma_lat;
  if (g * g == IntMatrix::identity(g.rows())) return g;
  throw Error("twist matrix is not an involution");
}

}  // namespace

IntPoly torus_order_poly(const CartanDatum& datum, const WeylGroupData& w,
                         int elem) {
  IntMatrix m = gamma_lat_inverse(datum) * w.lattice_action(elem);
  IntPoly f = char_poly(m);
  if (f.degree() != datum.lattice_rank || f.leading() != 1)
    throw Error("torus order polynomial is not monic of lattice rank");
  return f;
}

IntPoly group_order_poly(const CartanDatum& datum, const WeylGroupData& w) {
  IntPoly poincare;
  for (size_t e = 0; e < w.size(); ++e)
    if (w.gamma_of((int)e) == (int)e)
      poincare = poincare + IntPoly::q_power(w.length((int)e));
  IntPoly f1 = torus_order_poly(datum, w, w.identity());
  return IntPoly::q_power(datum.positive_root_count) * f1 * poincare;
}

IntPoly index_poly(const CartanDatum& datum, const WeylGroupData& w, int elem) {
  IntPoly f = group_order_poly(datum, w);
  IntPoly fw = torus_order_poly(datum, w, elem);
  try {
    return f.div_exact(fw);
  } catch (const Error&) {
    throw Error("torus order does not divide group order");
  }
}

OrderData build_order_data(const CartanDatum& datum, const WeylGroupData& w) {
  OrderData od;
  od.group_poly = group_order_poly(datum, w);
  for (const auto& cls : w.gamma_classes()) {
    IntPoly fw = torus_order_poly(datum, w, cls.rep);
    // f_w must be constant across the gamma-class
    for (int m : cls.members)
      if (!(torus_order_poly(datum, w, m) == fw))
        throw Error("torus order polynomial not constant on gamma-class");
    od.torus_polys.push_back(fw);
    od.index_polys.push_back(od.group_poly.div_exact(fw));
  }
  return od;
}

}  // namespace green
