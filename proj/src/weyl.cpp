#include "green/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace green {

bool CartanDatum::is_type_a() const {
  return label == "A1" || label == "A2" || label == "A3" || label == "A4" ||
         label == "2A2" || label == "2A3";
}

int CartanDatum::gl_rank() const {
  if (!is_type_a()) throw Error("gl_rank: not a GL-datum type");
  return lattice_rank;
}

const std::vector<std::string>& supported_types() {
  static const std::vector<std::string> types = {"A1", "A2", "A3", "A4",
                                                 "B2", "G2", "2A2", "2A3"};
  return types;
}

namespace {

IntMatrix perm_matrix(int n, const std::vector<int>& img) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(img[i], i) = 1;
  return m;
}

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> r(m.rows(), Int(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

// Closure of the simple roots under the simple reflections; returns all
// roots with positives (non-negative simple-basis coordinates) first and
// the negative of positives[i] at index i + count.
std::vector<std::vector<Int>> generate_roots(
    const std::vector<std::vector<Int>>& simples,
    const std::vector<IntMatrix>& refl) {
  std::set<std::vector<Int>> seen(simples.begin(), simples.end());
  std::vector<std::vector<Int>> queue(simples.begin(), simples.end());
  for (size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : refl) {
      auto img = apply(s, queue[k]);
      if (seen.insert(img).second) queue.push_back(img);
    }

  // Express each root in the simple basis to classify its sign.
  const size_t dim = simples[0].size(), ns = simples.size();
  std::vector<std::vector<Int>> positives;
  for (const auto& r : queue) {
    RatMatrix sys(dim, ns + 1);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t j = 0; j < ns; ++j) sys.at(i, j) = Rat(simples[j][i]);
      sys.at(i, ns) = Rat(r[i]);
    }
    // Gaussian elimination to read off the (unique) coordinates.
    size_t row = 0;
    std::vector<Rat> coords(ns, Rat(0));
    for (size_t col = 0; col < ns && row < dim; ++col) {
      size_t p = row;
      while (p < dim && sys.at(p, col) == 0) ++p;
      if (p == dim) continue;
      for (size_t j = 0; j <= ns; ++j) std::swap(sys.at(row, j), sys.at(p, j));
      Rat inv = 1 / sys.at(row, col);
      for (size_t j = col; j <= ns; ++j) sys.at(row, j) *= inv;
      for (size_t i = 0; i < dim; ++i) {
        if (i == row || sys.at(i, col) == 0) continue;
        Rat f = sys.at(i, col);
        for (size_t j = col; j <= ns; ++j) sys.at(i, j) -= f * sys.at(row, j);
      }
      ++row;
    }
    row = 0;
    for (size_t col = 0; col < ns; ++col) {
      if (row < dim && sys.at(row, col) == 1) {
        coords[col] = sys.at(row, ns);
        ++row;
      }
    }
    Rat first = 0;
    for (const auto& c : coords)
      if (c != 0) {
        first = c;
        break;
      }
    if (first > 0) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end());
  std::vector<std::vector<Int>> all = positives;
  for (const auto& r : positives) {
    std::vector<Int> neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    all.push_back(neg);
  }
  if (all.size() != queue.size()) throw Error("root sign classification failed");
  return all;
}

CartanDatum make_gl_datum(int n, bool twisted) {
  CartanDatum d;
  d.label = (twisted ? "2A" : "A") + std::to_string(n - 1);
  d.rank = n - 1;
  d.lattice_rank = n;
  d.dim_g = n * n;
  d.dim_t = n;

  std::vector<std::vector<Int>> simples;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Int> r(n, Int(0));
    r[i] = 1;
    r[i + 1] = -1;
    simples.push_back(r);
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k;
    std::swap(img[i], img[i + 1]);
    d.simple_refl_root.push_back(perm_matrix(n, img));
    d.simple_refl_lat.push_back(perm_matrix(n, img));
  }
  d.roots = generate_roots(simples, d.simple_refl_root);
  d.positive_root_count = static_cast<int>(d.roots.size()) / 2;

  if (twisted) {
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) g.at(n - 1 - i, i) = -1;  // -w0
    d.gamma_root = g;
    d.gamma_lat = g;
    d.twist_order = 2;
  } else {
    d.gamma_root = IntMatrix::identity(n);
    d.gamma_lat = IntMatrix::identity(n);
    d.twist_order = 1;
  }
  return d;
}

CartanDatum make_b2_datum() {
  CartanDatum d;
  d.label = "B2";
  d.rank = 2;
  d.lattice_rank = 2;
  d.dim_g = 10;
  d.dim_t = 2;
  // alpha1 = e1 - e2 (long), alpha2 = e2 (short); W = signed permutations.
  std::vector<std::vector<Int>> simples = {{Int(1), Int(-1)}, {Int(0), Int(1)}};
  IntMatrix s1(2, 2), s2(2, 2);
  s1.at(0, 1) = 1;
  s1.at(1, 0) = 1;
  s2.at(0, 0) = 1;
  s2.at(1, 1) = -1;
  d.simple_refl_root = {s1, s2};
  d.simple_refl_lat = {s1, s2};
  d.roots = generate_roots(simples, d.simple_refl_root);
  d.positive_root_count = static_cast<int>(d.roots.size()) / 2;
  d.gamma_root = IntMatrix::identity(2);
  d.gamma_lat = IntMatrix::identity(2);
  return d;
}

CartanDatum make_g2_datum() {
  CartanDatum d;
  d.label = "G2";
  d.rank = 2;
  d.lattice_rank = 2;
  d.dim_g = 14;
  d.dim_t = 2;
  // Simple-root coordinates; alpha1 short, alpha2 long,
  // <alpha2, alpha1^vee> = -3.
  std::vector<std::vector<Int>> simples = {{Int(1), Int(0)}, {Int(0), Int(1)}};
  IntMatrix s1(2, 2), s2(2, 2);
  // action on the root lattice (basis alpha1, alpha2)
  s1.at(0, 0) = -1;
  s1.at(0, 1) = 3;
  s1.at(1, 1) = 1;
  s2.at(0, 0) = 1;
  s2.at(1, 0) = 1;
  s2.at(1, 1) = -1;
  d.simple_refl_root = {s1, s2};
  // action on the coroot lattice (basis alpha1^vee, alpha2^vee)
  IntMatrix t1(2, 2), t2(2, 2);
  t1.at(0, 0) = -1;
  t1.at(0, 1) = 1;
  t1.at(1, 1) = 1;
  t2.at(0, 0) = 1;
  t2.at(1, 0) = 3;
  t2.at(1, 1) = -1;
  d.simple_refl_lat = {t1, t2};
  d.roots = generate_roots(simples, d.simple_refl_root);
  d.positive_root_count = static_cast<int>(d.roots.size()) / 2;
  d.gamma_root = IntMatrix::identity(2);
  d.gamma_lat = IntMatrix::identity(2);
  return d;
}

}  // namespace

CartanDatum make_datum(const std::string& label) {
  if (label == "A1") return make_gl_datum(2, false);
  if (label == "A2") return make_gl_datum(3, false);
  if (label == "A3") return make_gl_datum(4, false);
  if (label == "A4") return make_gl_datum(5, false);
  if (label == "2A2") return make_gl_datum(3, true);
  if (label == "2A3") return make_gl_datum(4, true);
  if (label == "B2") return make_b2_datum();
  if (label == "G2") return make_g2_datum();
  throw Error("unsupported type label: " + label);
}

CartanDatum make_datum_adjoint_a(int rank) {
  if (rank < 1 || rank > 4) throw Error("adjoint A rank out of range");
  const int n = rank + 1;
  CartanDatum d = make_gl_datum(n, false);
  d.label = "A" + std::to_string(rank) + "-adjoint";
  d.lattice_rank = rank;
  d.dim_g = n * n - 1;
  d.dim_t = rank;
  // X^vee = Z^n / Z(1,...,1), basis = images of e_1..e_{n-1};
  // the image of e_n is minus the sum of the basis vectors.
  d.simple_refl_lat.clear();
  for (int i = 0; i + 1 < n; ++i) {
    IntMatrix m(rank, rank);
    for (int col = 0; col < rank; ++col) {
      int img = col;
      if (col == i) img = i + 1;
      else if (col == i + 1) img = i;
      if (img < rank) {
        m.at(img, col) = 1;
      } else {
        for (int r = 0; r < rank; ++r) m.at(r, col) = -1;
      }
    }
    d.simple_refl_lat.push_back(m);
  }
  d.gamma_lat = IntMatrix::identity(rank);
  return d;
}

WeylGroupData::WeylGroupData(CartanDatum datum) : datum_(std::move(datum)) {
  const size_t nroots = datum_.roots.size();
  const size_t npos = nroots / 2;
  std::map<std::vector<Int>, int> root_index;
  for (size_t i = 0; i < nroots; ++i) root_index[datum_.roots[i]] = (int)i;

  std::vector<std::vector<int>> simple_perm;
  for (const auto& s : datum_.simple_refl_root) {
    std::vector<int> p(nroots);
    for (size_t i = 0; i < nroots; ++i) {
      auto it = root_index.find(apply(s, datum_.roots[i]));
      if (it == root_index.end()) throw Error("reflection does not permute roots");
      p[i] = it->second;
    }
    simple_perm.push_back(p);
  }

  std::map<std::vector<int>, int> index;
  std::vector<int> id(nroots);
  for (size_t i = 0; i < nroots; ++i) id[i] = (int)i;
  perms_.push_back(id);
  words_.push_back("e");
  lat_.push_back(IntMatrix::identity(datum_.lattice_rank));
  index[id] = 0;

  // shortlex BFS over right multiplication by simple reflections
  for (size_t k = 0; k < perms_.size(); ++k) {
    const auto cur = perms_[k];
    const auto cur_word = words_[k];
    const auto cur_lat = lat_[k];
    for (size_t s = 0; s < simple_perm.size(); ++s) {
      std::vector<int> next(nroots);
      for (size_t i = 0; i < nroots; ++i) next[i] = cur[simple_perm[s][i]];
      if (index.count(next)) continue;
      index[next] = (int)perms_.size();
      perms_.push_back(next);
      words_.push_back(cur_word == "e" ? std::to_string(s + 1)
                                       : cur_word + std::to_string(s + 1));
      lat_.push_back(cur_lat * datum_.simple_refl_lat[s]);
    }
  }

  lengths_.resize(perms_.size());
  for (size_t w = 0; w < perms_.size(); ++w) {
    int len = 0;
    for (size_t i = 0; i < npos; ++i)
      if (perms_[w][i] >= (int)npos) ++len;
    lengths_[w] = len;
  }

  simple_elem_.resize(simple_perm.size());
  for (size_t s = 0; s < simple_perm.size(); ++s)
    simple_elem_[s] = index.at(simple_perm[s]);

  inv_.resize(perms_.size());
  for (size_t w = 0; w < perms_.size(); ++w) {
    std::vector<int> iv(nroots);
    for (size_t i = 0; i < nroots; ++i) iv[perms_[w][i]] = (int)i;
    inv_[w] = index.at(iv);
  }

  const size_t order = perms_.size();
  mult_.assign(order * order, 0);
  std::vector<int> prod(nroots);
  for (size_t a = 0; a < order; ++a)
    for (size_t b = 0; b < order; ++b) {
      for (size_t i = 0; i < nroots; ++i) prod[i] = perms_[a][perms_[b][i]];
      mult_[a * order + b] = index.at(prod);
    }

  // gamma acting on elements by conjugation with the root-space twist
  std::vector<int> gperm(nroots), gperm_inv(nroots);
  for (size_t i = 0; i < nroots; ++i) {
    auto it = root_index.find(apply(datum_.gamma_root, datum_.roots[i]));
    if (it == root_index.end()) throw Error("twist does not permute roots");
    gperm[i] = it->second;
  }
  for (size_t i = 0; i < nroots; ++i) gperm_inv[gperm[i]] = (int)i;
  gamma_.resize(perms_.size());
  for (size_t w = 0; w < perms_.size(); ++w) {
    std::vector<int> img(nroots);
    for (size_t i = 0; i < nroots; ++i)
      img[i] = gperm[perms_[w][gperm_inv[i]]];
    gamma_[w] = index.at(img);
  }

  // gamma-conjugacy classes: orbits of w -> x^{-1} w gamma(x)
  class_of_.assign(perms_.size(), -1);
  for (size_t w = 0; w < perms_.size(); ++w) {
    if (class_of_[w] != -1) continue;
    GammaClass cls;
    cls.rep = (int)w;
    const int cid = (int)classes_.size();
    for (size_t x = 0; x < perms_.size(); ++x) {
      int y = mult(mult(inv_[x], (int)w), gamma_[(int)x]);
      if (class_of_[y] == -1) {
        class_of_[y] = cid;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.label = words_[cls.rep];
    classes_.push_back(std::move(cls));
  }
}

int WeylGroupData::mult(int a, int b) const {
  return mult_[static_cast<size_t>(a) * perms_.size() + b];
}

Int WeylGroupData::gamma_centralizer_order(int w) const {
  const auto& cls = classes_[class_of_[w]];
  return Int(size()) / Int(cls.members.size());
}

Partition WeylGroupData::cycle_type(int w) const {
  if (!datum_.is_type_a()) throw Error("cycle_type: not a GL-datum type");
  const int n = datum_.lattice_rank;
  const IntMatrix& m = lat_[w];
  std::vector<int> img(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m.at(i, j) == 1) img[j] = i;
  std::vector<bool> used(n, false);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    int len = 0, j = i;
    while (!used[j]) {
      used[j] = true;
      j = img[j];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return Partition(cycles);
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta-sets, memoized on (lambda, rho).

namespace {

Int mn_recurse(std::vector<int> betas, std::vector<int> rho,
               std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo);

Int mn_value(const std::vector<int>& betas, std::vector<int> rho,
             std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (rho.empty()) return 1;
  auto key = std::make_pair(betas, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = 0;
  const int r = rho.back();
  std::vector<int> rest(rho.begin(), rho.end() - 1);
  std::set<int> bset(betas.begin(), betas.end());
  for (size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] - r;
    if (target < 0 || bset.count(target)) continue;
    int crossings = 0;
    for (int b : betas)
      if (b > target && b < betas[i]) ++crossings;
    std::vector<int> nb = betas;
    nb[i] = target;
    std::sort(nb.begin(), nb.end());
    Int sub = mn_value(nb, rest, memo);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Int sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.sum() != rho.sum())
    throw Error("sn_character: partition sizes differ");
  static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, Int>
      memo;
  const int n = lambda.sum();
  std::vector<int> betas;
  for (int i = 0; i < n; ++i) {
    int part = i < lambda.length() ? lambda.parts[i] : 0;
    betas.push_back(part + (n - 1 - i));
  }
  std::sort(betas.begin(), betas.end());
  std::vector<int> rv = rho.parts;
  std::sort(rv.begin(), rv.end());  // back() = largest part, removed first
  return mn_value(betas, rv, memo);
}

// ---------------------------------------------------------------------------
// Character tables.

namespace {

SigmaCharTable validate_table(const WeylGroupData& w, SigmaCharTable t) {
  const auto& classes = w.gamma_classes();
  if (t.labels.size() != classes.size())
    throw Error("character table: label count differs from class count");
  // twisted orthogonality: sum_E Tr(sE o w)Tr(sE o w') = |C^gamma(w)| or 0
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      Int s = 0;
      for (size_t e = 0; e < t.labels.size(); ++e)
        s += t.value(e, i) * t.value(e, j);
      Int expected = (i == j) ? w.gamma_centralizer_order(classes[i].rep) : Int(0);
      if (s != expected)
        throw Error("character table fails twisted orthogonality");
    }
  return t;
}

SigmaCharTable table_type_a(const WeylGroupData& w) {
  const int n = w.datum().gl_rank();
  SigmaCharTable t;
  auto parts = partitions_of(n);
  const auto& classes = w.gamma_classes();
  t.values = IntMatrix(parts.size(), classes.size());
  for (size_t e = 0; e < parts.size(); ++e) {
    t.labels.push_back(parts[e].label());
    std::vector<int> ones(n, 1);
    t.degrees.push_back(sn_character(parts[e], Partition(ones)));
    for (size_t c = 0; c < classes.size(); ++c)
      t.values.at(e, c) = sn_character(parts[e], w.cycle_type(classes[c].rep));
  }
  return t;
}

// Dihedral tables with classes keyed by the representative's shortlex word.
SigmaCharTable table_dihedral(const WeylGroupData& w, bool g2) {
  struct Row {
    const char* label;
    long degree;
    std::map<std::string, long> vals;
  };
  std::vector<Row> rows;
  if (!g2) {
    rows = {
        {"[2|]", 1, {{"e", 1}, {"1", 1}, {"2", 1}, {"12", 1}, {"1212", 1}}},
        {"[1+1|]", 1, {{"e", 1}, {"1", -1}, {"2", 1}, {"12", -1}, {"1212", 1}}},
        {"[|2]", 1, {{"e", 1}, {"1", 1}, {"2", -1}, {"12", -1}, {"1212", 1}}},
        {"[|1+1]", 1, {{"e", 1}, {"1", -1}, {"2", -1}, {"12", 1}, {"1212", 1}}},
        {"[1|1]", 2, {{"e", 2}, {"1", 0}, {"2", 0}, {"12", 0}, {"1212", -2}}},
    };
  } else {
    // alpha1 short, alpha2 long; phi[1,3]' is -1 on short reflections.
    rows = {
        {"phi[1,0]", 1, {{"e", 1}, {"1", 1}, {"2", 1}, {"12", 1}, {"1212", 1}, {"121212", 1}}},
        {"phi[1,6]", 1, {{"e", 1}, {"1", -1}, {"2", -1}, {"12", 1}, {"1212", 1}, {"121212", 1}}},
        {"phi[1,3]'", 1, {{"e", 1}, {"1", -1}, {"2", 1}, {"12", -1}, {"1212", 1}, {"121212", -1}}},
        {"phi[1,3]''", 1, {{"e", 1}, {"1", 1}, {"2", -1}, {"12", -1}, {"1212", 1}, {"121212", -1}}},
        {"phi[2,1]", 2, {{"e", 2}, {"1", 0}, {"2", 0}, {"12", 1}, {"1212", -1}, {"121212", -2}}},
        {"phi[2,2]", 2, {{"e", 2}, {"1", 0}, {"2", 0}, {"12", -1}, {"1212", -1}, {"121212", 2}}},
    };
  }
  const auto& classes = w.gamma_classes();
  SigmaCharTable t;
  t.values = IntMatrix(rows.size(), classes.size());
  for (size_t e = 0; e < rows.size(); ++e) {
    t.labels.push_back(rows[e].label);
    t.degrees.push_back(rows[e].degree);
    for (size_t c = 0; c < classes.size(); ++c) {
      auto it = rows[e].vals.find(classes[c].label);
      if (it == rows[e].vals.end())
        throw Error("dihedral table: unexpected class label " + classes[c].label);
      t.values.at(e, c) = it->second;
    }
  }
  return t;
}

}  // namespace

SigmaCharTable character_table(const WeylGroupData& w) {
  const auto& label = w.datum().label;
  if (w.datum().is_twisted())
    throw Error("twisted character data absent");
  SigmaCharTable t;
  if (w.datum().is_type_a())
    t = table_type_a(w);
  else if (label == "B2")
    t = table_dihedral(w, false);
  else if (label == "G2")
    t = table_dihedral(w, true);
  else
    throw Error("no character table for " + label);
  return validate_table(w, std::move(t));
}

SigmaCharTable character_table_twisted(const WeylGroupData& w,
                                       const std::vector<std::string>& labels,
                                       const IntMatrix& element_values) {
  if (element_values.cols() != w.size())
    throw Error("sigma table: column count differs from |W|");
  if (element_values.rows() != labels.size())
    throw Error("sigma table: row count differs from label count");
  const auto& classes = w.gamma_classes();
  SigmaCharTable t;
  t.labels = labels;
  t.values = IntMatrix(labels.size(), classes.size());
  for (size_t e = 0; e < labels.size(); ++e)
    for (size_t c = 0; c < classes.size(); ++c) {
      const Int& v = element_values.at(e, classes[c].members[0]);
      for (int m : classes[c].members)
        if (element_values.at(e, m) != v)
          throw Error("sigma table: value not constant on gamma-class");
      t.values.at(e, c) = v;
    }
  // degree of chi^lambda, independent of the twist
  const int n = w.datum().gl_rank();
  for (const auto& lab : labels) {
    std::vector<int> ones(n, 1);
    t.degrees.push_back(sn_character(Partition::from_label(lab), Partition(ones)));
  }
  return validate_table(w, std::move(t));
}

}  // namespace green
