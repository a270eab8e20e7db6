#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posmat/bits.hpp"
#include "posmat/error.hpp"

namespace posmat {

struct RankedSet {
  Mask set = 0;
  int rank = 0;
  friend bool operator==(const RankedSet&, const RankedSet&) = default;
};

// Blocks are disjoint, nonempty and sorted by their least element.
struct Partition {
  std::vector<Mask> blocks;
  int block_of(int e) const;
  std::size_t size() const { return blocks.size(); }
};

// Immutable matroid on at most 16 labelled elements. Element i carries labels()[i].
// The basis family is kept sorted, and a rank table over all 2^n subsets is built
// at construction so that rank queries are O(1).
class Matroid {
 public:
  Matroid();  // the empty matroid

  // Validates labels and the basis exchange axiom.
  static Matroid from_bases(std::vector<std::string> labels, std::vector<Mask> bases);
  static Matroid from_bases(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& bases);

  // Trusted construction from a rank table indexed by subset mask. The caller
  // guarantees the table is a matroid rank function.
  static Matroid from_rank_table(std::vector<std::string> labels,
                                 std::vector<std::uint8_t> table);

  int size() const { return static_cast<int>(d_->labels.size()); }
  int rank() const { return d_->rank; }
  Mask ground() const { return full_mask(size()); }

  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& label(int i) const { return d_->labels.at(i); }
  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws InputError
  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  const std::vector<Mask>& bases() const { return d_->bases; }
  const std::vector<std::uint8_t>& rank_table() const { return d_->table; }

  int rank(Mask x) const {
    check(x);
    return d_->table[x];
  }
  Mask closure(Mask x) const;
  bool is_independent(Mask x) const { return rank(x) == count(x); }
  bool is_basis(Mask x) const { return count(x) == rank() && rank(x) == rank(); }
  bool is_circuit(Mask x) const;
  bool is_flat(Mask x) const;
  bool is_cyclic(Mask x) const;  // union of circuits
  bool is_spanning(Mask x) const { return rank(x) == rank(); }
  Mask loops() const;
  Mask coloops() const;

 private:
  struct Data {
    std::vector<std::string> labels;
    int rank = 0;
    std::vector<Mask> bases;
    std::vector<std::uint8_t> table;
  };
  explicit Matroid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  void check(Mask x) const;

  std::shared_ptr<const Data> d_;
};

// Duality and minors. Minor grounds keep the original relative order.
Matroid dual(const Matroid& m);
Matroid minor(const Matroid& m, Mask deleted, Mask contracted);
Matroid delete_set(const Matroid& m, Mask x);
Matroid contract_set(const Matroid& m, Mask x);
Matroid restrict_to(const Matroid& m, Mask x);
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid relabel(const Matroid& m, std::vector<std::string> labels);

// Ground of a minor as indices of the parent.
inline Mask minor_ground(const Matroid& m, Mask deleted, Mask contracted) {
  return m.ground() & ~deleted & ~contracted;
}

// Connected components of (m / contracted) | kept, as masks of m.
Partition components_of_minor(const Matroid& m, Mask contracted, Mask kept);
Partition components(const Matroid& m);
bool is_connected(const Matroid& m);  // at most one component

std::vector<Mask> circuits(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);
std::vector<Mask> flats(const Matroid& m);
std::vector<Mask> hyperplanes(const Matroid& m);
std::vector<RankedSet> cyclic_flats(const Matroid& m);
std::vector<Mask> connected_flats(const Matroid& m);  // includes cl(empty) when connected

// e ~ f iff they lie in exactly the same cyclic flats.
Partition clonal_classes(const Matroid& m);
// Direct check: swapping e and f is an automorphism.
bool are_clones(const Matroid& m, int e, int f);
bool is_clone_set(const Matroid& m, Mask x);

// Same labels and the same bases on those labels.
bool equal(const Matroid& a, const Matroid& b);
// Map from indices of a to indices of b, if any.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);
bool isomorphic(const Matroid& a, const Matroid& b);

std::string to_string(const Matroid& m, Mask x);

}  // namespace posmat
