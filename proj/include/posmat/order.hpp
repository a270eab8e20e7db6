#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posmat/matroid.hpp"

namespace posmat {

// A linear order on {0, ..., n-1}: at(p) is the element in position p.
class LinearOrder {
 public:
  LinearOrder() = default;
  static LinearOrder identity(int n);
  static LinearOrder from_sequence(std::vector<int> seq);  // must be a permutation
  static LinearOrder from_labels(const Matroid& m, std::span<const std::string> labels);

  int size() const { return static_cast<int>(seq_.size()); }
  int at(int p) const { return seq_[p]; }
  int position(int e) const { return pos_[e]; }
  const std::vector<int>& sequence() const { return seq_; }

  // 1-based shift: element at position i becomes least.
  LinearOrder shift(int i) const;
  LinearOrder rotated(int p) const;  // 0-based
  LinearOrder reversed() const;
  // Order induced on `kept`, renumbered by increasing index (matches minor()).
  LinearOrder induced(Mask kept) const;
  Mask to_positions(Mask elements) const;
  Mask from_positions(Mask positions) const;

  bool is_interval(Mask elements) const;
  bool is_cyclic_interval(Mask elements) const;

  std::vector<std::string> labels(const Matroid& m) const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

bool is_interval_positions(Mask positions);

// Gale and lexicographic comparison of equal-size sets.
bool gale_leq(const LinearOrder& ord, Mask x, Mask y);
bool lex_leq(const LinearOrder& ord, Mask x, Mask y);

// Lexicographically least basis (greedy along the order).
Mask gale_basis(const Matroid& m, const LinearOrder& ord);

struct SortedPair {
  Mask odd = 0;
  Mask even = 0;
};
// Merge the multiset b1 + b2 along the order; odd and even positions.
SortedPair sort_pair(const LinearOrder& ord, Mask b1, Mask b2);

// Returns a pair of block indices that cross, if any.
std::optional<std::pair<int, int>> crossing_blocks(const LinearOrder& ord, const std::vector<Mask>& blocks);
bool is_noncrossing(const LinearOrder& ord, const std::vector<Mask>& blocks);

}  // namespace posmat
