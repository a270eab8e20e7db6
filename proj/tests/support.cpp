#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace posmat::testing {

Mask mask(const Matroid& m, const Labels& labels) { return m.mask_of(labels); }

LinearOrder order(const Matroid& m, const Labels& labels) { return LinearOrder::from_labels(m, labels); }

LinearOrder order(const Matroid& m, const std::string& csv) {
  Labels labels;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  labels.push_back(cur);
  return order(m, labels);
}

Matroid rank3(const Labels& ground, const std::vector<Labels>& lines, const std::vector<Labels>& parallel) {
  const Matroid blank = uniform(0, ground);
  std::vector<RankedSet> z{{0, 0}, {blank.ground(), 3}};
  for (const auto& p : parallel) z.push_back({blank.mask_of(p), 1});
  for (const auto& l : lines) z.push_back({blank.mask_of(l), 2});
  return from_cyclic_flats(ground, z);
}

Matroid k4() { return cycle_matroid(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}); }

Matroid example_rank5() {
  Matroid m = uniform(2, Labels{"3", "6", "9"});
  m = parallel_connection(m, uniform(2, Labels{"1", "2", "3"}));
  m = parallel_connection(m, uniform(2, Labels{"4", "5", "6"}));
  m = parallel_connection(m, uniform(2, Labels{"7", "8", "9"}));
  std::vector<Labels> bases;
  for (Mask b : m.bases()) bases.push_back(m.labels_of(b));
  return Matroid::from_bases(numeric_labels(9), bases);
}

Matroid truncated_triangles() { return relabel(truncate(example_rank5(), 4), {"t", "s", "a", "p", "q", "b", "v", "u", "c"}); }

std::pair<Matroid, Matroid> two_lines_pair() {
  return {rank3({"1", "2", "3", "4", "5", "6", "7"}, {{"1", "2", "3", "7"}, {"3", "4", "5"}, {"5", "6", "7"}}),
          rank3({"1", "2", "8", "9", "10", "11", "12"}, {{"1", "2", "8", "12"}, {"8", "9", "10"}, {"10", "11", "12"}})};
}

std::pair<Matroid, Matroid> parallel_pair() {
  return {rank3({"1", "2", "a", "b", "c", "d"}, {{"1", "2", "a", "b"}, {"1", "2", "c", "d"}}, {{"1", "2"}}),
          rank3({"1", "2", "e", "f", "g", "h"}, {{"1", "2", "e", "f"}, {"1", "2", "g", "h"}}, {{"1", "2"}})};
}

std::pair<Matroid, Matroid> variant_pair() {
  return {rank3({"1", "2", "3", "4", "5", "10"}, {{"3", "4", "5"}, {"5", "10", "1"}, {"1", "2", "3"}}),
          rank3({"5", "6", "7", "8", "9", "10"}, {{"5", "10", "9"}, {"9", "8", "7"}, {"7", "6", "5"}})};
}

std::pair<Matroid, Matroid> amalgam_pair() {
  return {rank3({"a", "b", "c", "d", "e", "f"}, {{"a", "f", "e"}, {"c", "d", "e"}, {"a", "b", "c"}}),
          rank3({"a", "e", "g", "h", "i"}, {{"a", "i", "h"}, {"h", "g", "e"}})};
}

int rank_from_bases(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, count(b & x));
  return best;
}

bool is_interval_oracle(const LinearOrder& ord, Mask x) {
  int first = -1, last = -1;
  for (int p = 0; p < ord.size(); ++p) {
    if (has(x, ord.at(p))) {
      if (first < 0) first = p;
      last = p;
    }
  }
  return first < 0 || last - first + 1 == count(x);
}

bool is_cyclic_interval_oracle(const LinearOrder& ord, Mask x) {
  return is_interval_oracle(ord, x) || is_interval_oracle(ord, full_mask(ord.size()) & ~x);
}

bool noncrossing_by_definition(const LinearOrder& ord, const std::vector<Mask>& blocks) {
  const Mask e = full_mask(ord.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      bool found = false;
      for (Mask a = 0; a <= e && !found; ++a) {
        if (!subset_of(blocks[i], a) || (blocks[j] & a) != 0) continue;
        found = is_interval_oracle(ord, a) || is_interval_oracle(ord, e & ~a);
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Mask> gale_filter_bases(int n, Mask lower, const LinearOrder& ord) {
  auto positions = [&](Mask x) {
    std::vector<int> p;
    for (int e = 0; e < n; ++e) {
      if (has(x, e)) p.push_back(ord.position(e));
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  const auto low = positions(lower);
  std::vector<Mask> out;
  for (Mask j = 0; j < (Mask{1} << n); ++j) {
    if (count(j) != count(lower)) continue;
    const auto pj = positions(j);
    bool above = true;
    for (std::size_t i = 0; i < pj.size(); ++i) above = above && low[i] <= pj[i];
    if (above) out.push_back(j);
  }
  return out;
}

bool has_transversal(const std::vector<Mask>& sets, Mask x) {
  std::vector<bool> used(sets.size(), false);
  std::vector<int> elems;
  for (int e = 0; e < 32; ++e) {
    if (has(x, e)) elems.push_back(e);
  }
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == elems.size()) return true;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (used[s] || !has(sets[s], elems[k])) continue;
      used[s] = true;
      if (go(k + 1)) return true;
      used[s] = false;
    }
    return false;
  };
  return go(0);
}

bool same_bases(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<std::vector<std::string>> x, y;
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (Mask m : a.bases()) x.push_back(sorted(a.labels_of(m)));
  for (Mask m : b.bases()) y.push_back(sorted(b.labels_of(m)));
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y && sorted(a.labels()) == sorted(b.labels());
}

bool is_quotient(const Matroid& q, const Matroid& m) {
  if (q.size() != m.size()) return false;
  for (const auto& l : q.labels()) {
    if (!m.find(l)) return false;
  }
  for (Mask f : flats(q)) {
    if (!m.is_flat(m.mask_of(q.labels_of(f)))) return false;
  }
  return true;
}

void for_each_order(int n, const std::function<void(const LinearOrder&)>& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(LinearOrder::from_sequence(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

void for_each_dihedral_order(int n, const std::function<void(const LinearOrder&)>& f) {
  if (n == 0) {
    f(LinearOrder::identity(0));
    return;
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (n >= 3 && p[1] > p[n - 1]) continue;
    f(LinearOrder::from_sequence(p));
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

bool has_positroid_order_brute(const Matroid& m) {
  bool found = false;
  for_each_dihedral_order(m.size(), [&](const LinearOrder& o) {
    if (!found && is_positroid_order_necklace(m, o).verdict) found = true;
  });
  return found;
}

std::vector<std::pair<std::string, Matroid>> catalogue(int max_n) {
  std::vector<std::pair<std::string, Matroid>> out;
  auto add = [&](std::string name, Matroid m) {
    if (m.size() <= max_n) out.emplace_back(std::move(name), std::move(m));
  };
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    for (int r = 0; r <= n; ++r) add("U" + std::to_string(r) + "," + std::to_string(n), uniform(r, n));
  }
  add("K4", k4());
  add("whirl3", whirl(3));
  add("wheel3", wheel(3));
  add("whirl4", whirl(4));
  add("wheel4", wheel(4));
  add("U12+U12", direct_sum(uniform(1, Labels{"a", "b"}), uniform(1, Labels{"c", "d"})));
  add("P(U23,U23)", parallel_connection(uniform(2, Labels{"1", "2", "p"}), uniform(2, Labels{"p", "3", "4"})));
  add("S(U23,U23)", series_connection(uniform(2, Labels{"1", "2", "p"}), uniform(2, Labels{"p", "3", "4"})));
  add("example_rank5", example_rank5());
  add("pair1", truncated_triangles());
  add("trunc3_example_rank5", truncate(example_rank5(), 3));
  add("free_ext_trunc_whirl4", free_extension(truncate(whirl(4), 3), "f"));
  add("P6-like", rank3({"1", "2", "3", "4", "5", "6"}, {{"1", "2", "3"}}));
  add("two_lines", rank3({"1", "2", "3", "4", "5", "6"}, {{"1", "2", "3"}, {"4", "5", "6"}}));
  add("fano_minus", rank3({"1", "2", "3", "4", "5", "6"}, {{"1", "2", "3"}, {"3", "4", "5"}, {"5", "6", "1"}}));
  for (auto& [name, pair] : std::vector<std::pair<std::string, std::pair<Matroid, Matroid>>>{
           {"pair2", two_lines_pair()}, {"pair3", parallel_pair()}, {"pair4", variant_pair()}, {"pair5", amalgam_pair()}}) {
    add(name + ".M", pair.first);
    add(name + ".N", pair.second);
  }
  return out;
}

BondPair random_bond_pair(Rng& rng, int max_side, int max_shared) {
  const int k = uniform_int(rng, 1, max_shared);
  const int nm = uniform_int(rng, k, max_side);
  const int nn = uniform_int(rng, k, std::min(max_side, kMaxElements - nm - k));
  const Matroid m = random_matroid(rng, nm), n = random_matroid(rng, nn);
  return {label_with_shared(m, random_k_subset(rng, nm, k), "m"), label_with_shared(n, random_k_subset(rng, nn, k), "n")};
}

BondPair clone_bond_pair(Rng& rng, int max_side, int max_shared) {
  const int k = uniform_int(rng, 1, max_shared);
  const int nm = uniform_int(rng, k + 1, max_side);
  const int nn = uniform_int(rng, k + 1, std::min(max_side, kMaxElements - nm - k));
  return {positroid_with_clones(rng, nm, k, "m"), positroid_with_clones(rng, nn, k, "n")};
}

namespace {

// A loopless positroid with an independent pair {x, y}, M|cl({x, y}) connected, and
// every non-singleton connected flat through y containing x. x becomes t1, y becomes t2.
std::optional<Matroid> check2_side(Rng& rng, const std::string& prefix) {
  const int n = uniform_int(rng, 4, 6);
  const Matroid m = random_positroid(rng, n);
  if (m.loops() != 0) return std::nullopt;
  const auto cfs = connected_flats(m);
  std::vector<std::pair<int, int>> good;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Mask t = bit(x) | bit(y);
      if (x == y || !m.is_independent(t)) continue;
      if (!is_connected(restrict_to(m, m.closure(t)))) continue;
      const bool ok = std::all_of(cfs.begin(), cfs.end(),
                                  [&](Mask f) { return count(f) < 2 || !has(f, y) || subset_of(t, f); });
      if (ok) good.emplace_back(x, y);
    }
  }
  if (good.empty()) return std::nullopt;
  const auto [x, y] = good[uniform_int(rng, 0, static_cast<int>(good.size()) - 1)];
  Labels labels(n);
  int o = 0;
  for (int i = 0; i < n; ++i) labels[i] = i == x ? "t1" : i == y ? "t2" : prefix + std::to_string(++o);
  return relabel(m, labels);
}

}  // namespace

std::optional<Check2Instance> random_check2_instance(Rng& rng) {
  const auto m = check2_side(rng, "m");
  if (!m) return std::nullopt;
  const auto n = check2_side(rng, "n");
  if (!n) return std::nullopt;
  return Check2Instance{*m, *n, {"t1"}};
}

}  // namespace posmat::testing
