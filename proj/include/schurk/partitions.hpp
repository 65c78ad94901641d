#pragma once

#include <string>
#include <vector>

namespace schurk {

// Weakly decreasing positive parts; zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const;
  // i-th part, 0-based, zero past the end
  int operator[](int i) const { return i < length() ? p_[static_cast<std::size_t>(i)] : 0; }
  bool empty() const { return p_.empty(); }
  std::vector<int> padded(int len) const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

Partition conjugate(const Partition& l);

// All partitions with at most L parts, each at most M. Ordered by size,
// then lexicographically descending within a size.
std::vector<Partition> enumerate_bounded(int L, int M);

bool fits_in(const Partition& mu, int L, int M);
Partition rectangle_complement(const Partition& mu, int L, int M);

struct Cell {
  int row, col;  // 1-based
  int hook, content;
};
std::vector<Cell> hook_content_data(const Partition& l);

Partition parse_partition(const std::string& s);  // "3,1" or "" for the empty partition

}  // namespace schurk
