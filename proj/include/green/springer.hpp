#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "green/intpoly.hpp"
#include "green/partition.hpp"
#include "green/weyl.hpp"

namespace green {

/// Pack validation failures carry a distinct code; loads are all-or-nothing.
class PackError : public Error {
 public:
  enum class Code {
    Schema,
    LabelMismatch,
    SignStability,
    DMismatch,
    DimParity,
    SizeIntegrity,
    UnipotentCount,
    ComponentGroup,
    Injectivity,
    YRank,
    YStability,
    SigmaMissing,
    SigmaInvalid,
  };
  PackError(Code code, const std::string& msg)
      : Error(msg + " [" + code_name(code) + "]"), code_(code) {}
  Code code() const { return code_; }
  static const char* code_name(Code c);

 private:
  Code code_;
};

/// Sign possibly depending on the residue class of q mod m; m = 1 means a
/// constant sign. Covered residues are either all of Z/m or the units.
struct ResidueSign {
  int modulus = 1;
  std::map<int, int> signs;

  static ResidueSign constant(int sign);
  int at(const Int& q) const;
  bool is_constant() const { return modulus == 1; }
};

/// Finite component group A(u_0) given by its rational character data.
struct ComponentGroup {
  std::string name;
  std::vector<std::string> class_labels;  // identity class first
  std::vector<int> class_sizes;
  std::vector<std::vector<Int>> characters;  // integer-valued irreducibles

  int order() const;
  size_t class_index(const std::string& label) const;
  /// image class of a -> a^r per class
  std::vector<size_t> power_map(const Int& r) const;
};

/// Registry lookup; supported: trivial, Z2, Z3, Z4, S3.
const ComponentGroup& component_group(const std::string& name);

struct GFClass {
  std::string a_label;
  IntPoly size_num;
  Int size_den = 1;  // integer-valued polynomial; denominator clears it

  Int size_at(const Int& q) const;
};

struct UnipotentClass {
  std::string label;
  int dim_c = 0;
  std::string comp_group;
  std::vector<GFClass> gf_classes;
};

struct SpringerRow {
  std::string char_label;
  std::string class_label;
  std::vector<Int> a_character;
  int d = 0;
  ResidueSign delta;
};

struct SigmaTableRaw {
  std::vector<std::string> labels;
  IntMatrix values;  // labels x |W| element-indexed columns
};

struct DataPack {
  std::string type;
  std::string provenance;
  std::vector<UnipotentClass> classes;
  std::vector<SpringerRow> springer;
  std::optional<SigmaTableRaw> sigma;

  const UnipotentClass& class_by_label(const std::string& label) const;
  const SpringerRow& row_by_char(const std::string& label) const;
};

/// Block structure of Irr(W)^gamma: one block per unipotent class in the
/// image of the correspondence, ordered by decreasing d with lexicographic
/// class label as the tie-break.
struct BlockStructure {
  struct Block {
    std::string class_label;
    int d = 0;
    std::vector<size_t> rows;  // springer row indices, char-label order
  };
  std::vector<Block> blocks;
  std::vector<size_t> char_order;  // concatenation of block rows
};
BlockStructure block_structure(const DataPack& pack);

/// Y_E(u_a): delta_E(q mod m) * eps_E(a) on the attached class, 0 elsewhere.
Int y_value(const DataPack& pack, const std::string& char_label,
            const std::string& class_label, const std::string& a_label,
            const Int& q);

/// Generated type-A data for GL_n, 2 <= n <= 5.
DataPack type_a_springer(int n);

/// Shipped packs: B2, G2, 2A2, 2A3.
DataPack embedded_pack(const std::string& type);
/// Schema fixture with a residue-dependent sign table (mod 3).
DataPack porc_fixture_pack();

/// Full internal-consistency validation against the datum, the group and
/// its character table. Throws PackError; never partially succeeds.
void validate_pack(const DataPack& pack, const CartanDatum& datum,
                   const WeylGroupData& w, const SigmaCharTable& chars);

// Alternative Springer assignments for B2/G2 (wrong transcriptions); kept
// so tests can demonstrate the internal checks reject them.
DataPack b2_pack_variant(bool swap_assignment, bool swap_basepoint);
DataPack g2_pack_variant(int which);

}  // namespace green
