#pragma once

#include <optional>
#include <string>
#include <vector>

#include "green/matrix.hpp"
#include "green/partition.hpp"

namespace green {

/// Root datum of a supported type: roots in an ambient lattice, simple
/// reflections acting both on the root space and on the cocharacter
/// lattice X^vee, and the Frobenius twist gamma.
struct CartanDatum {
  std::string label;  // A1..A4, B2, G2, 2A2, 2A3 (or A*-adjoint)
  int rank = 0;       // number of simple roots
  int lattice_rank = 0;
  int dim_g = 0;
  int dim_t = 0;
  int positive_root_count = 0;
  std::vector<std::vector<Int>> roots;  // positives first, then negatives
  std::vector<IntMatrix> simple_refl_root;
  std::vector<IntMatrix> simple_refl_lat;
  IntMatrix gamma_root;
  IntMatrix gamma_lat;
  int twist_order = 1;  // d in {1,2}

  bool is_type_a() const;     // GL-flavoured type A (possibly twisted)
  int gl_rank() const;        // n for GL_n-datum types
  bool is_twisted() const { return twist_order > 1; }
};

/// Datum for one of the eight supported labels (type A uses the GL_n
/// permutation lattice).
CartanDatum make_datum(const std::string& label);
/// Adjoint-lattice variant of type A_{n-1} (PGL_n), used for order
/// polynomials; not part of the Green-function pipeline.
CartanDatum make_datum_adjoint_a(int rank);
const std::vector<std::string>& supported_types();

struct GammaClass {
  int rep = 0;               // element index of the canonical representative
  std::vector<int> members;  // element indices, ascending
  std::string label;         // shortlex word of rep ("e" for identity)
};

/// Weyl group with full element enumeration; immutable once built.
class WeylGroupData {
 public:
  explicit WeylGroupData(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  size_t size() const { return perms_.size(); }
  int identity() const { return 0; }
  int length(int w) const { return lengths_[w]; }
  const std::string& word_label(int w) const { return words_[w]; }
  const IntMatrix& lattice_action(int w) const { return lat_[w]; }

  int mult(int a, int b) const;  // index of a*b
  int inverse(int w) const { return inv_[w]; }
  int simple(int i) const { return simple_elem_[i]; }
  int gamma_of(int w) const { return gamma_[w]; }

  const std::vector<GammaClass>& gamma_classes() const { return classes_; }
  int gamma_class_of(int w) const { return class_of_[w]; }
  Int gamma_centralizer_order(int w) const;

  /// Cycle type of the permutation-lattice action (GL-datum types only).
  Partition cycle_type(int w) const;

 private:
  CartanDatum datum_;
  std::vector<std::vector<int>> perms_;  // root permutations
  std::vector<int> lengths_;
  std::vector<std::string> words_;
  std::vector<IntMatrix> lat_;
  std::vector<int> inv_, gamma_, class_of_, simple_elem_;
  std::vector<int> mult_;  // |W| x |W| multiplication table, row-major
  std::vector<GammaClass> classes_;
};

/// sigma-twisted character table: one row per E in Irr(W)^gamma, one
/// column per gamma-conjugacy class; all values integers.
struct SigmaCharTable {
  std::vector<std::string> labels;
  std::vector<Int> degrees;
  IntMatrix values;  // labels x gamma-classes

  const Int& value(size_t char_idx, size_t class_idx) const {
    return values.at(char_idx, class_idx);
  }
  size_t char_count() const { return labels.size(); }
};

/// Ordinary character table for the untwisted types (A_n by the
/// Murnaghan-Nakayama rule, B2/G2 by dihedral closed forms).
SigmaCharTable character_table(const WeylGroupData& w);
/// Twisted table from pack-supplied rows indexed by W-element; validates
/// class constancy and the twisted orthogonality identity.
SigmaCharTable character_table_twisted(const WeylGroupData& w,
                                       const std::vector<std::string>& labels,
                                       const IntMatrix& element_values);

/// Symmetric-group character via the Murnaghan-Nakayama rule (memoized
/// beta-set recursion). Used for the type-A tables in this module; the
/// oracle module carries its own independent implementation.
Int sn_character(const Partition& lambda, const Partition& rho);

}  // namespace green
