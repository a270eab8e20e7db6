#include "posmat/order.hpp"

#include <algorithm>

namespace posmat {

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::from_sequence(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n > kMaxElements) throw CapacityError("order longer than 16 elements");
  LinearOrder o;
  o.pos_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int e = seq[p];
    if (e < 0 || e >= n || o.pos_[e] != -1) throw InputError("order is not a permutation of the ground set");
    o.pos_[e] = p;
  }
  o.seq_ = std::move(seq);
  return o;
}

LinearOrder LinearOrder::from_labels(const Matroid& m, std::span<const std::string> labels) {
  if (static_cast<int>(labels.size()) != m.size()) {
    throw InputError("order lists " + std::to_string(labels.size()) + " labels but the ground set has " +
                     std::to_string(m.size()));
  }
  std::vector<int> seq;
  for (const auto& l : labels) seq.push_back(m.index_of(l));
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::shift(int i) const {
  if (i < 1 || i > size()) throw InputError("shift index out of range");
  return rotated(i - 1);
}

LinearOrder LinearOrder::rotated(int p) const {
  const int n = size();
  std::vector<int> seq(n);
  for (int k = 0; k < n; ++k) seq[k] = seq_[(p + k) % n];
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::reversed() const {
  std::vector<int> seq(seq_.rbegin(), seq_.rend());
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::induced(Mask kept) const {
  std::vector<int> seq;
  for (int e : seq_) {
    if (has(kept, e)) seq.push_back(count(kept & (bit(e) - 1)));
  }
  return from_sequence(std::move(seq));
}

Mask LinearOrder::to_positions(Mask elements) const {
  Mask out = 0;
  for_each_bit(elements, [&](int e) { out |= bit(pos_.at(e)); });
  return out;
}

Mask LinearOrder::from_positions(Mask positions) const {
  Mask out = 0;
  for_each_bit(positions, [&](int p) { out |= bit(seq_.at(p)); });
  return out;
}

bool is_interval_positions(Mask p) {
  if (p == 0) return true;
  const Mask s = p >> lowest(p);
  return (s & (s + 1)) == 0;
}

bool LinearOrder::is_interval(Mask elements) const { return is_interval_positions(to_positions(elements)); }

bool LinearOrder::is_cyclic_interval(Mask elements) const {
  const Mask p = to_positions(elements);
  return is_interval_positions(p) || is_interval_positions(full_mask(size()) & ~p);
}

std::vector<std::string> LinearOrder::labels(const Matroid& m) const {
  std::vector<std::string> out;
  for (int e : seq_) out.push_back(m.label(e));
  return out;
}

bool gale_leq(const LinearOrder& ord, Mask x, Mask y) {
  if (count(x) != count(y)) throw InputError("Gale comparison of sets of different sizes");
  Mask px = ord.to_positions(x), py = ord.to_positions(y);
  for (; px != 0; px &= px - 1, py &= py - 1) {
    if (lowest(px) > lowest(py)) return false;
  }
  return true;
}

bool lex_leq(const LinearOrder& ord, Mask x, Mask y) {
  if (count(x) != count(y)) throw InputError("lexicographic comparison of sets of different sizes");
  const Mask px = ord.to_positions(x), py = ord.to_positions(y);
  if (px == py) return true;
  return has(px, lowest(px ^ py));
}

Mask gale_basis(const Matroid& m, const LinearOrder& ord) {
  if (ord.size() != m.size()) throw InputError("order and matroid have different ground sets");
  Mask b = 0;
  int r = 0;
  for (int p = 0; p < ord.size() && r < m.rank(); ++p) {
    const Mask c = b | bit(ord.at(p));
    if (m.rank(c) > r) {
      b = c;
      ++r;
    }
  }
  return b;
}

SortedPair sort_pair(const LinearOrder& ord, Mask b1, Mask b2) {
  if (count(b1) != count(b2)) throw InputError("sort_pair needs sets of equal size");
  SortedPair out;
  int k = 0;
  for (int p = 0; p < ord.size(); ++p) {
    const int e = ord.at(p);
    const int mult = has(b1, e) + has(b2, e);
    for (int c = 0; c < mult; ++c, ++k) {
      if (k % 2 == 0) {
        out.odd |= bit(e);
      } else {
        out.even |= bit(e);
      }
    }
  }
  return out;
}

std::optional<std::pair<int, int>> crossing_blocks(const LinearOrder& ord, const std::vector<Mask>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i] & blocks[j]) throw InputError("partition blocks overlap");
      const Mask x = ord.to_positions(blocks[i]);
      const Mask y = ord.to_positions(blocks[j]);
      int runs = 0, last = -1;
      for_each_bit(x | y, [&](int p) {
        const int side = has(x, p) ? 0 : 1;
        if (side != last) ++runs;
        last = side;
      });
      if (runs >= 4) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return std::nullopt;
}

bool is_noncrossing(const LinearOrder& ord, const std::vector<Mask>& blocks) {
  return !crossing_blocks(ord, blocks).has_value();
}

}  // namespace posmat
