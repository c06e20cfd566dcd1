#include "green/partition.hpp"

#include <algorithm>
#include <numeric>

namespace green {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int v : parts)
    if (v <= 0) throw Error("partition parts must be positive");
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw Error("partition parts must be weakly decreasing");
}

int Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int j = 1; j <= parts[0]; ++j) {
    int count = 0;
    for (int v : parts)
      if (v >= j) ++count;
    c.parts.push_back(count);
  }
  return c;
}

int Partition::n_stat() const {
  int s = 0;
  for (size_t i = 0; i < parts.size(); ++i) s += static_cast<int>(i) * parts[i];
  return s;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int v : parts) ++m[v];
  return m;
}

bool Partition::dominates(const Partition& o) const {
  if (sum() != o.sum()) throw Error("dominance needs equal totals");
  int a = 0, b = 0;
  size_t k = std::max(parts.size(), o.parts.size());
  for (size_t i = 0; i < k; ++i) {
    a += i < parts.size() ? parts[i] : 0;
    b += i < o.parts.size() ? o.parts[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::string Partition::label() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(parts[i]);
  }
  return s;
}

Partition Partition::from_label(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

static void gen(int remaining, int max_part, std::vector<int>& cur,
                std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

}  // namespace green
