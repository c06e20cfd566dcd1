#pragma once

#include <map>
#include <string>
#include <vector>

#include "green/numeric.hpp"

namespace green {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int sum() const;
  int length() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;
  /// n(lambda) = sum_i (i-1)*lambda_i.
  int n_stat() const;
  /// multiplicity of each part value
  std::map<int, int> multiplicities() const;
  /// dominance order: *this >= o (both of the same total)
  bool dominates(const Partition& o) const;

  /// label of the form "3+1+1"
  std::string label() const;
  static Partition from_label(const std::string& s);

  bool operator==(const Partition& o) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// All partitions of n, largest-part-first ordering ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace green
