#include "green/springer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace green {

const char* PackError::code_name(Code c) {
  switch (c) {
    case Code::Schema: return "schema";
    case Code::LabelMismatch: return "label-mismatch";
    case Code::SignStability: return "sign-stability";
    case Code::DMismatch: return "d-mismatch";
    case Code::DimParity: return "dim-parity";
    case Code::SizeIntegrity: return "size-integrity";
    case Code::UnipotentCount: return "unipotent-count";
    case Code::ComponentGroup: return "component-group";
    case Code::Injectivity: return "injectivity";
    case Code::YRank: return "y-rank";
    case Code::YStability: return "y-stability";
    case Code::SigmaMissing: return "sigma-missing";
    case Code::SigmaInvalid: return "sigma-invalid";
  }
  return "unknown";
}

ResidueSign ResidueSign::constant(int sign) {
  ResidueSign r;
  r.modulus = 1;
  r.signs[0] = sign;
  return r;
}

int ResidueSign::at(const Int& q) const {
  Int res = mod_nonneg(q, Int(modulus));
  auto it = signs.find(static_cast<int>(res.get_si()));
  if (it == signs.end())
    throw Error("sign table does not cover residue " + res.get_str() +
                " mod " + std::to_string(modulus));
  return it->second;
}

int ComponentGroup::order() const {
  int n = 0;
  for (int s : class_sizes) n += s;
  return n;
}

size_t ComponentGroup::class_index(const std::string& label) const {
  for (size_t i = 0; i < class_labels.size(); ++i)
    if (class_labels[i] == label) return i;
  throw Error("unknown component-group class " + label);
}

std::vector<size_t> ComponentGroup::power_map(const Int& r) const {
  std::vector<size_t> out(class_labels.size());
  if (name == "trivial") {
    out = {0};
  } else if (name == "Z2" || name == "Z3" || name == "Z4") {
    const int m = order();
    for (int i = 0; i < m; ++i) {
      Int img = mod_nonneg(Int(i) * r, Int(m));
      out[i] = static_cast<size_t>(img.get_si());
    }
  } else if (name == "S3") {
    // classes: 1, (12), (123)
    out[0] = 0;
    out[1] = (mod_nonneg(r, 2) == 0) ? 0 : 1;
    out[2] = (mod_nonneg(r, 3) == 0) ? 0 : 2;
  } else {
    throw Error("power map unavailable for " + name);
  }
  return out;
}

const ComponentGroup& component_group(const std::string& name) {
  static const std::vector<ComponentGroup> groups = [] {
    std::vector<ComponentGroup> g;
    g.push_back({"trivial", {"1"}, {1}, {{Int(1)}}});
    g.push_back({"Z2",
                 {"1", "g"},
                 {1, 1},
                 {{Int(1), Int(1)}, {Int(1), Int(-1)}}});
    // only the rational-valued irreducible characters are carried
    g.push_back({"Z3", {"1", "g", "g^2"}, {1, 1, 1}, {{Int(1), Int(1), Int(1)}}});
    g.push_back({"Z4",
                 {"1", "g", "g^2", "g^3"},
                 {1, 1, 1, 1},
                 {{Int(1), Int(1), Int(1), Int(1)},
                  {Int(1), Int(-1), Int(1), Int(-1)}}});
    g.push_back({"S3",
                 {"1", "(12)", "(123)"},
                 {1, 3, 2},
                 {{Int(1), Int(1), Int(1)},
                  {Int(1), Int(-1), Int(1)},
                  {Int(2), Int(0), Int(-1)}}});
    return g;
  }();
  for (const auto& g : groups)
    if (g.name == name) return g;
  throw PackError(PackError::Code::ComponentGroup,
                  "unsupported component group " + name);
}

Int GFClass::size_at(const Int& q) const {
  Int v = size_num.eval(q);
  if (v % size_den != 0)
    throw Error("class-size polynomial not integral at q=" + q.get_str());
  return v / size_den;
}

const UnipotentClass& DataPack::class_by_label(const std::string& label) const {
  for (const auto& c : classes)
    if (c.label == label) return c;
  throw Error("unknown unipotent class " + label);
}

const SpringerRow& DataPack::row_by_char(const std::string& label) const {
  for (const auto& r : springer)
    if (r.char_label == label) return r;
  throw Error("unknown character label " + label);
}

BlockStructure block_structure(const DataPack& pack) {
  std::map<std::string, std::vector<size_t>> by_class;
  std::map<std::string, int> d_of;
  for (size_t i = 0; i < pack.springer.size(); ++i) {
    const auto& row = pack.springer[i];
    by_class[row.class_label].push_back(i);
    auto it = d_of.find(row.class_label);
    if (it != d_of.end() && it->second != row.d)
      throw Error("inconsistent d inside a class block");
    d_of[row.class_label] = row.d;
  }
  BlockStructure bs;
  for (auto& [label, rows] : by_class) {
    std::sort(rows.begin(), rows.end(), [&](size_t a, size_t b) {
      return pack.springer[a].char_label < pack.springer[b].char_label;
    });
    bs.blocks.push_back({label, d_of[label], rows});
  }
  std::sort(bs.blocks.begin(), bs.blocks.end(),
            [](const BlockStructure::Block& a, const BlockStructure::Block& b) {
              if (a.d != b.d) return a.d > b.d;
              return a.class_label < b.class_label;
            });
  for (const auto& blk : bs.blocks)
    for (size_t r : blk.rows) bs.char_order.push_back(r);
  return bs;
}

Int y_value(const DataPack& pack, const std::string& char_label,
            const std::string& class_label, const std::string& a_label,
            const Int& q) {
  const SpringerRow& row = pack.row_by_char(char_label);
  const UnipotentClass& cls = pack.class_by_label(class_label);
  const ComponentGroup& grp = component_group(cls.comp_group);
  size_t a = grp.class_index(a_label);
  if (row.class_label != class_label) return 0;
  return Int(row.delta.at(q)) * row.a_character[a];
}

// ---------------------------------------------------------------------------
// Type A (GL_n): everything generated from partition combinatorics.

namespace {

IntPoly gl_order_poly(int n) {
  IntPoly f = IntPoly::q_power(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    f = f * (IntPoly::q_power(i) - IntPoly::constant(1));
  return f;
}

IntPoly gu_order_poly(int n) {
  IntPoly f = IntPoly::q_power(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    IntPoly factor = IntPoly::q_power(i) - IntPoly::constant(i % 2 == 0 ? 1 : -1);
    f = f * factor;
  }
  return f;
}

/// |Z_{GL_n(q)}(u_lambda)| as a polynomial: q^{sum(lambda'_i)^2} *
/// prod_i prod_{j<=m_i} (1 - q^{-j}), cleared of denominators.
IntPoly gl_centralizer_poly(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  int top = 0;
  for (int v : conj.parts) top += v * v;
  int shift = 0;
  IntPoly prod = IntPoly::constant(1);
  for (const auto& [part, mult] : lambda.multiplicities()) {
    (void)part;
    for (int j = 1; j <= mult; ++j) {
      prod = prod * (IntPoly::q_power(j) - IntPoly::constant(1));
      shift += j;
    }
  }
  return IntPoly::q_power(top - shift) * prod;
}

IntPoly substitute_negated(const IntPoly& p) {
  std::vector<Int> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  IntPoly r{std::move(c)};
  return r.leading() < 0 ? -r : r;
}

}  // namespace

DataPack type_a_springer(int n) {
  if (n < 2 || n > 5) throw Error("type_a_springer: n out of range [2,5]");
  DataPack pack;
  pack.type = "A" + std::to_string(n - 1);
  pack.provenance =
      "generated: GL_" + std::to_string(n) +
      " unipotent classes by Jordan type; centralizer orders q^{sum "
      "lambda'^2} prod (1-q^{-j}); chi^lambda <-> class lambda, d = n(lambda)";
  IntPoly f = gl_order_poly(n);
  for (const Partition& lam : partitions_of(n)) {
    Partition conj = lam.conjugate();
    int sq = 0;
    for (int v : conj.parts) sq += v * v;
    UnipotentClass cls;
    cls.label = lam.label();
    cls.dim_c = n * n - sq;
    cls.comp_group = "trivial";
    cls.gf_classes.push_back({"1", f.div_exact(gl_centralizer_poly(lam)), 1});
    pack.classes.push_back(std::move(cls));

    SpringerRow row;
    row.char_label = lam.label();
    row.class_label = lam.label();
    row.a_character = {Int(1)};
    row.d = lam.n_stat();
    row.delta = ResidueSign::constant(1);
    pack.springer.push_back(std::move(row));
  }
  return pack;
}

// ---------------------------------------------------------------------------
// Shipped packs.

namespace {

DataPack unitary_pack(int n) {
  DataPack pack;
  pack.type = "2A" + std::to_string(n - 1);
  pack.provenance =
      "GU_" + std::to_string(n) +
      ": classes by Jordan type, centralizer orders per Wall (q -> -q in the "
      "GL_n formula); sigma_E = rho_E(w0), delta_E = (-1)^{n(lambda)} "
      "(Ennola transfer, cross-checked against the Hall-Littlewood oracle at "
      "-q and the Deligne-Lusztig degree anchors)";
  IntPoly f = gu_order_poly(n);
  for (const Partition& lam : partitions_of(n)) {
    Partition conj = lam.conjugate();
    int sq = 0;
    for (int v : conj.parts) sq += v * v;
    UnipotentClass cls;
    cls.label = lam.label();
    cls.dim_c = n * n - sq;
    cls.comp_group = "trivial";
    IntPoly cu = substitute_negated(gl_centralizer_poly(lam));
    cls.gf_classes.push_back({"1", f.div_exact(cu), 1});
    pack.classes.push_back(std::move(cls));

    SpringerRow row;
    row.char_label = lam.label();
    row.class_label = lam.label();
    row.a_character = {Int(1)};
    row.d = lam.n_stat();
    row.delta = ResidueSign::constant(lam.n_stat() % 2 == 0 ? 1 : -1);
    pack.springer.push_back(std::move(row));
  }

  // sigma-twisted character values Tr(sigma_E o w) = chi^lambda(w0 w),
  // tabulated per W-element.
  WeylGroupData w(make_datum(pack.type));
  int w0 = 0;
  for (size_t e = 0; e < w.size(); ++e)
    if (w.length((int)e) > w.length(w0)) w0 = (int)e;
  SigmaTableRaw sigma;
  auto parts = partitions_of(n);
  sigma.values = IntMatrix(parts.size(), w.size());
  for (size_t e = 0; e < parts.size(); ++e) {
    sigma.labels.push_back(parts[e].label());
    for (size_t x = 0; x < w.size(); ++x)
      sigma.values.at(e, x) =
          sn_character(parts[e], w.cycle_type(w.mult(w0, (int)x)));
  }
  pack.sigma = std::move(sigma);
  return pack;
}

IntPoly scaled(const IntPoly& p, int power) {
  return IntPoly::q_power(power) * p;
}

}  // namespace

DataPack b2_pack_variant(bool swap_assignment, bool swap_basepoint) {
  DataPack pack;
  pack.type = "B2";
  pack.provenance =
      "SO_5 (adjoint B2), good characteristic: classes (5),(3+1+1),(2+2+1),"
      "(1^5); A(u) = Z2 on (3+1+1); correspondence via u-symbols (bijective "
      "for SO_5); delta = +1; per-class sizes from centralizer structure "
      "q^3 SO_2^{+-} on the split class";
  const IntPoly q2m1 = IntPoly::q_power(2) - IntPoly::constant(1);
  const IntPoly q4m1 = IntPoly::q_power(4) - IntPoly::constant(1);
  const IntPoly qp1 = IntPoly::q_power(1) + IntPoly::constant(1);
  const IntPoly qm1 = IntPoly::q_power(1) - IntPoly::constant(1);

  UnipotentClass reg{"5", 8, "trivial", {{"1", scaled(q2m1 * q4m1, 2), 1}}};
  UnipotentClass sub{"3+1+1", 6, "Z2", {}};
  IntPoly split = scaled(qp1 * q4m1, 1);     // q(q+1)(q^4-1), halved below
  IntPoly nonsplit = scaled(qm1 * q4m1, 1);  // q(q-1)(q^4-1)
  if (!swap_basepoint) {
    sub.gf_classes.push_back({"1", split, 2});
    sub.gf_classes.push_back({"g", nonsplit, 2});
  } else {
    sub.gf_classes.push_back({"1", nonsplit, 2});
    sub.gf_classes.push_back({"g", split, 2});
  }
  UnipotentClass min{"2+2+1", 4, "trivial", {{"1", q4m1, 1}}};
  UnipotentClass triv{"1+1+1+1+1", 0, "trivial", {{"1", IntPoly::constant(1), 1}}};
  pack.classes = {reg, sub, min, triv};

  auto plus = ResidueSign::constant(1);
  std::string eps_target = swap_assignment ? "[|2]" : "[1+1|]";
  std::string min_target = swap_assignment ? "[1+1|]" : "[|2]";
  pack.springer.push_back({"[2|]", "5", {Int(1)}, 0, plus});
  pack.springer.push_back({"[1|1]", "3+1+1", {Int(1), Int(1)}, 1, plus});
  pack.springer.push_back({eps_target, "3+1+1", {Int(1), Int(-1)}, 1, plus});
  pack.springer.push_back({min_target, "2+2+1", {Int(1)}, 2, plus});
  pack.springer.push_back({"[|1+1]", "1+1+1+1+1", {Int(1)}, 4, plus});
  return pack;
}

DataPack g2_pack_variant(int which) {
  DataPack pack;
  pack.type = "G2";
  pack.provenance =
      "G2 adjoint, good characteristic (p >= 5): classes 1, A1 (long root, "
      "dim 6), A1~ (short root, dim 8), G2(a1) (dim 10, A(u) = S3), G2 "
      "(regular, dim 12); delta = +1; G2(a1) splits into three classes with "
      "centralizer orders 6q^4, 2q^4, 3q^4; phi[1,3]' takes -1 on short "
      "reflections";
  const IntPoly q2m1 = IntPoly::q_power(2) - IntPoly::constant(1);
  const IntPoly q6m1 = IntPoly::q_power(6) - IntPoly::constant(1);

  UnipotentClass reg{"G2", 12, "trivial", {{"1", scaled(q2m1 * q6m1, 4), 1}}};
  IntPoly sub_num = scaled(q2m1 * q6m1, 2);  // q^2(q^2-1)(q^6-1)
  UnipotentClass suba1{"G2(a1)",
                       10,
                       "S3",
                       {{"1", sub_num, 6}, {"(12)", sub_num, 2}, {"(123)", sub_num, 3}}};
  UnipotentClass a1t{"A1~", 8, "trivial", {{"1", scaled(q6m1, 2), 1}}};
  UnipotentClass a1{"A1", 6, "trivial", {{"1", q6m1, 1}}};
  UnipotentClass triv{"1", 0, "trivial", {{"1", IntPoly::constant(1), 1}}};
  pack.classes = {reg, suba1, a1t, a1, triv};

  auto plus = ResidueSign::constant(1);
  const std::vector<Int> s3_triv = {Int(1), Int(1), Int(1)};
  const std::vector<Int> s3_sign = {Int(1), Int(-1), Int(1)};
  const std::vector<Int> s3_refl = {Int(2), Int(0), Int(-1)};

  // which = 0: shipped assignment.
  // 1: phi[1,3]'' on G2(a1) and phi[1,3]' on A1.
  // 2: the second G2(a1) local system is the 2-dimensional one.
  // 3: phi[2,2] on G2(a1) and phi[2,1] on A1~.
  std::string ga1_linear = (which == 1) ? "phi[1,3]''" : "phi[1,3]'";
  std::string a1_linear = (which == 1) ? "phi[1,3]'" : "phi[1,3]''";
  std::vector<Int> ga1_system = (which == 2) ? s3_refl : s3_sign;
  std::string ga1_twodim = (which == 3) ? "phi[2,2]" : "phi[2,1]";
  std::string a1t_twodim = (which == 3) ? "phi[2,1]" : "phi[2,2]";

  pack.springer.push_back({"phi[1,0]", "G2", {Int(1)}, 0, plus});
  pack.springer.push_back({ga1_twodim, "G2(a1)", s3_triv, 1, plus});
  pack.springer.push_back({ga1_linear, "G2(a1)", ga1_system, 1, plus});
  pack.springer.push_back({a1t_twodim, "A1~", {Int(1)}, 2, plus});
  pack.springer.push_back({a1_linear, "A1", {Int(1)}, 3, plus});
  pack.springer.push_back({"phi[1,6]", "1", {Int(1)}, 6, plus});
  return pack;
}

DataPack embedded_pack(const std::string& type) {
  if (type == "B2") return b2_pack_variant(false, false);
  if (type == "G2") return g2_pack_variant(0);
  if (type == "2A2") return unitary_pack(3);
  if (type == "2A3") return unitary_pack(4);
  throw Error("no embedded pack for type " + type);
}

DataPack porc_fixture_pack() {
  DataPack pack = type_a_springer(2);
  pack.type = "A1";
  pack.provenance =
      "schema fixture: GL_2 data with a residue-dependent sign table "
      "(mod 3: 1 -> +1, 2 -> -1) on the sign character";
  ResidueSign porc;
  porc.modulus = 3;
  porc.signs = {{1, 1}, {2, -1}};
  for (auto& row : pack.springer)
    if (row.char_label == "1+1") row.delta = porc;
  return pack;
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

void check_delta_stability(const ResidueSign& rs, int twist_order,
                           const std::string& where) {
  if (rs.modulus < 1)
    throw PackError(PackError::Code::Schema, "modulus < 1 at " + where);
  for (const auto& [res, sign] : rs.signs) {
    if (sign != 1 && sign != -1)
      throw PackError(PackError::Code::Schema, "sign not +-1 at " + where);
    if (res < 0 || res >= rs.modulus)
      throw PackError(PackError::Code::Schema, "residue out of range at " + where);
  }
  const int m = rs.modulus;
  // coverage: all residues, or exactly the units mod m
  bool all = true, units = true;
  for (int r = 0; r < m; ++r) {
    bool has = rs.signs.count(r) > 0;
    if (!has) all = false;
    bool coprime = std::gcd(r, m) == 1;
    if (coprime != has) units = false;
  }
  if (!(all || units))
    throw PackError(PackError::Code::Schema,
                    "sign table covers neither all residues nor the units at " + where);
  // stability: sign(q^r) = sign(q)^r for prime witnesses r = 1 mod d
  // coprime to m
  for (int r : {2, 3, 5, 7, 11}) {
    if (r % twist_order != 1 % twist_order) continue;
    if (std::gcd(r, m) != 1) continue;
    for (const auto& [res, sign] : rs.signs) {
      Int img = mod_nonneg(int_pow(Int(res), r), Int(m));
      auto it = rs.signs.find(static_cast<int>(img.get_si()));
      if (it == rs.signs.end())
        throw PackError(PackError::Code::SignStability,
                        "residue power leaves covered set at " + where);
      int expect = (r % 2 == 0) ? 1 : sign;
      if (it->second != expect)
        throw PackError(PackError::Code::SignStability,
                        "sign(q^" + std::to_string(r) + ") != sign(q)^" +
                            std::to_string(r) + " at " + where);
    }
  }
}

}  // namespace

void validate_pack(const DataPack& pack, const CartanDatum& datum,
                   const WeylGroupData& w, const SigmaCharTable& chars) {
  if (pack.classes.empty() || pack.springer.empty())
    throw PackError(PackError::Code::Schema, "empty classes or springer table");

  // class labels unique; component groups known; dims even
  std::set<std::string> class_labels;
  for (const auto& c : pack.classes) {
    if (!class_labels.insert(c.label).second)
      throw PackError(PackError::Code::Schema, "duplicate class " + c.label);
    const ComponentGroup& grp = component_group(c.comp_group);
    if (c.dim_c % 2 != 0 || c.dim_c < 0 || c.dim_c > datum.dim_g - datum.dim_t)
      throw PackError(PackError::Code::DimParity,
                      "class dimension invalid for " + c.label);
    if (c.gf_classes.size() != grp.class_labels.size())
      throw PackError(PackError::Code::ComponentGroup,
                      "gf-class count differs from component classes for " + c.label);
    for (size_t i = 0; i < c.gf_classes.size(); ++i) {
      if (c.gf_classes[i].a_label != grp.class_labels[i])
        throw PackError(PackError::Code::ComponentGroup,
                        "a-labels must follow the component group order for " + c.label);
      if (c.gf_classes[i].size_den < 1)
        throw PackError(PackError::Code::Schema, "size denominator < 1");
    }
  }

  // springer rows: labels match the character table exactly (as a set)
  std::set<std::string> char_labels, table_labels(chars.labels.begin(),
                                                  chars.labels.end());
  for (const auto& row : pack.springer) {
    if (!char_labels.insert(row.char_label).second)
      throw PackError(PackError::Code::Schema,
                      "duplicate springer row " + row.char_label);
    if (!class_labels.count(row.class_label))
      throw PackError(PackError::Code::LabelMismatch,
                      "springer row targets unknown class " + row.class_label);
  }
  if (char_labels != table_labels)
    throw PackError(PackError::Code::LabelMismatch,
                    "springer character labels differ from Irr(W)^gamma");

  // d recomputation and injectivity of E -> (C, eps)
  std::set<std::pair<std::string, std::vector<std::string>>> images;
  for (const auto& row : pack.springer) {
    const UnipotentClass& cls = pack.class_by_label(row.class_label);
    const ComponentGroup& grp = component_group(cls.comp_group);
    int expected = (datum.dim_g - cls.dim_c - datum.dim_t);
    if (expected % 2 != 0)
      throw PackError(PackError::Code::DimParity,
                      "odd 2*d for " + row.char_label);
    expected /= 2;
    if (row.d != expected || row.d < 0)
      throw PackError(PackError::Code::DMismatch,
                      "d mismatch for " + row.char_label + ": stored " +
                          std::to_string(row.d) + ", recomputed " +
                          std::to_string(expected));
    // a_character must be one of the group's rational irreducibles
    bool found = false;
    for (const auto& irr : grp.characters)
      if (irr == row.a_character) found = true;
    if (!found)
      throw PackError(PackError::Code::ComponentGroup,
                      "a-character is not a rational irreducible of " + grp.name);
    std::vector<std::string> key;
    for (const auto& v : row.a_character) key.push_back(v.get_str());
    if (!images.insert({row.class_label, key}).second)
      throw PackError(PackError::Code::Injectivity,
                      "Springer correspondence not injective at " + row.char_label);
    check_delta_stability(row.delta, datum.twist_order, row.char_label);
  }

  // sizes: integrality at sampled q, positivity, unipotent count q^{2N}
  for (Int q : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
    Int total = 0;
    for (const auto& c : pack.classes)
      for (const auto& g : c.gf_classes) {
        Int v;
        try {
          v = g.size_at(q);
        } catch (const Error& e) {
          throw PackError(PackError::Code::SizeIntegrity, e.what());
        }
        if (v <= 0)
          throw PackError(PackError::Code::SizeIntegrity,
                          "non-positive class size for " + c.label);
        total += v;
      }
    if (total != int_pow(q, 2 * datum.positive_root_count))
      throw PackError(PackError::Code::UnipotentCount,
                      "unipotent element count differs from q^(2|Phi+|) at q=" +
                          q.get_str());
  }

  // Y-functions linearly independent: rank = #rows over the (class, a) columns
  size_t ncols = 0;
  std::map<std::string, size_t> col_base;
  for (const auto& c : pack.classes) {
    col_base[c.label] = ncols;
    ncols += c.gf_classes.size();
  }
  RatMatrix ymat(pack.springer.size(), ncols);
  for (size_t r = 0; r < pack.springer.size(); ++r) {
    const auto& row = pack.springer[r];
    size_t base = col_base[row.class_label];
    for (size_t a = 0; a < row.a_character.size(); ++a)
      ymat.at(r, base + a) = Rat(row.a_character[a]);
  }
  {
    RatMatrix m = ymat;
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < pack.springer.size(); ++col) {
      size_t p = rank;
      while (p < pack.springer.size() && m.at(p, col) == 0) ++p;
      if (p == pack.springer.size()) continue;
      for (size_t j = 0; j < ncols; ++j) std::swap(m.at(rank, j), m.at(p, j));
      Rat inv = 1 / m.at(rank, col);
      for (size_t i = rank + 1; i < pack.springer.size(); ++i) {
        Rat f = m.at(i, col) * inv;
        if (f == 0) continue;
        for (size_t j = col; j < ncols; ++j) m.at(i, j) -= f * m.at(rank, j);
      }
      ++rank;
    }
    if (rank != pack.springer.size())
      throw PackError(PackError::Code::YRank, "Y-functions linearly dependent");
  }

  // Lemma-4.3-style stability: a -> a^r fixes every carried trace for odd
  // prime r not dividing |A|
  for (const auto& row : pack.springer) {
    const ComponentGroup& grp =
        component_group(pack.class_by_label(row.class_label).comp_group);
    for (int r : {5, 7, 11}) {
      if (grp.order() % r == 0) continue;
      auto pm = grp.power_map(r);
      for (size_t a = 0; a < pm.size(); ++a)
        if (row.a_character[a] != row.a_character[pm[a]])
          throw PackError(PackError::Code::YStability,
                          "trace moves under a -> a^" + std::to_string(r) +
                              " for " + row.char_label);
    }
  }

  // sigma table shape when present
  if (pack.sigma) {
    if (pack.sigma->labels.size() != chars.labels.size() ||
        pack.sigma->values.rows() != chars.labels.size() ||
        pack.sigma->values.cols() != w.size())
      throw PackError(PackError::Code::SigmaInvalid, "sigma table shape invalid");
  } else if (datum.is_twisted()) {
    throw PackError(PackError::Code::SigmaMissing, "twisted character data absent");
  }

  (void)block_structure(pack);  // throws on inconsistent in-class d
}

}  // namespace green
