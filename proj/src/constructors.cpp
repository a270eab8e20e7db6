#include "posmat/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "posmat/order.hpp"

namespace posmat {

std::vector<std::string> numeric_labels(int n, int start) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(start + i));
  return out;
}

Matroid from_rank_function(std::vector<std::string> labels, const std::function<int(Mask)>& rank) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw CapacityError("ground set exceeds 16 elements");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask x = 0; x < table.size(); ++x) table[x] = static_cast<std::uint8_t>(rank(x));
  return Matroid::from_rank_table(std::move(labels), std::move(table));
}

Matroid from_independence(std::vector<std::string> labels, const std::function<bool(Mask)>& independent) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) throw CapacityError("ground set exceeds 16 elements");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Mask x = 1; x < table.size(); ++x) {
    if (independent(x)) {
      table[x] = static_cast<std::uint8_t>(count(x));
    } else {
      std::uint8_t best = 0;
      for_each_bit(x, [&](int e) { best = std::max(best, table[x & ~bit(e)]); });
      table[x] = best;
    }
  }
  return Matroid::from_rank_table(std::move(labels), std::move(table));
}

Matroid uniform(int r, std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  if (r < 0 || r > n) throw ParameterError("uniform matroid needs 0 <= r <= n");
  return from_rank_function(std::move(labels), [r](Mask x) { return std::min(count(x), r); });
}

Matroid uniform(int r, int n) {
  if (n < 0) throw ParameterError("uniform matroid needs n >= 0");
  return uniform(r, numeric_labels(n));
}

Matroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges,
                      std::vector<std::string> labels) {
  if (labels.empty()) labels = numeric_labels(static_cast<int>(edges.size()));
  if (labels.size() != edges.size()) throw InputError("cycle_matroid: one label per edge");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw InputError("cycle_matroid: vertex out of range");
  }
  return from_independence(std::move(labels), [&](Mask x) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool acyclic = true;
    for_each_bit(x, [&](int e) {
      const int a = root(edges[e].first), b = root(edges[e].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    });
    return acyclic;
  });
}

Matroid wheel(int n) {
  if (n < 2 || 2 * n > kMaxElements) throw ParameterError("wheel needs 2 <= n <= 8");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i % n + 1});
  }
  return cycle_matroid(n + 1, edges);
}

Mask wheel_rim(int n) {
  Mask rim = 0;
  for (int i = 0; i < n; ++i) rim |= bit(2 * i + 1);
  return rim;
}

Matroid whirl(int n) { return relax(wheel(n), wheel_rim(n)); }

namespace {

bool saturating_matching(Mask x, const std::vector<Mask>& sets) {
  std::vector<int> owner(sets.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int e) -> bool {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!has(sets[j], e) || seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(owner[j])) {
        owner[j] = e;
        return true;
      }
    }
    return false;
  };
  bool ok = true;
  for_each_bit(x, [&](int e) {
    if (!ok) return;
    seen.assign(sets.size(), 0);
    ok = augment(e);
  });
  return ok;
}

}  // namespace

Matroid transversal(std::vector<std::string> labels, const std::vector<Mask>& sets) {
  const Mask full = full_mask(static_cast<int>(labels.size()));
  for (Mask s : sets) {
    if (!subset_of(s, full)) throw InputError("transversal: set contains an unknown element");
  }
  return from_independence(std::move(labels), [&](Mask x) { return saturating_matching(x, sets); });
}

Matroid nested(std::vector<std::string> labels, Mask lower, const LinearOrder& ord) {
  if (ord.size() != static_cast<int>(labels.size())) throw InputError("nested: order size mismatch");
  if (!subset_of(lower, full_mask(ord.size()))) throw InputError("nested: set outside the ground set");
  std::vector<Mask> filters;
  for_each_bit(lower, [&](int i) {
    Mask f = 0;
    for (int p = ord.position(i); p < ord.size(); ++p) f |= bit(ord.at(p));
    filters.push_back(f);
  });
  return transversal(std::move(labels), filters);
}

void validate_cyclic_flats(int n, const std::vector<RankedSet>& z) {
  if (n > kMaxElements) throw CapacityError("ground set exceeds 16 elements");
  if (z.empty()) throw AxiomError("Z0: the family is empty", "Z0", 0, 0);
  const Mask full = full_mask(n);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!subset_of(z[i].set, full)) throw InputError("cyclic flat contains an unknown element");
    if (z[i].rank < 0) throw AxiomError("negative rank", "Z1", z[i].set, z[i].set);
    for (std::size_t j = 0; j < i; ++j) {
      if (z[i].set == z[j].set) throw InputError("cyclic flat listed twice");
    }
  }
  const std::size_t k = z.size();
  auto least_upper = [&](Mask u) -> int {
    int best = -1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!subset_of(u, z[c].set)) continue;
      if (best < 0 || subset_of(z[c].set, z[best].set)) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < k; ++c) {
      if (subset_of(u, z[c].set) && !subset_of(z[best].set, z[c].set)) return -1;
    }
    return best;
  };
  auto greatest_lower = [&](Mask l) -> int {
    int best = -1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!subset_of(z[c].set, l)) continue;
      if (best < 0 || subset_of(z[best].set, z[c].set)) best = static_cast<int>(c);
    }
    if (best < 0) return -1;
    for (std::size_t c = 0; c < k; ++c) {
      if (subset_of(z[c].set, l) && !subset_of(z[c].set, z[best].set)) return -1;
    }
    return best;
  };
  int least = -1;
  for (std::size_t c = 0; c < k; ++c) {
    bool below_all = true;
    for (std::size_t d = 0; d < k; ++d) below_all = below_all && subset_of(z[c].set, z[d].set);
    if (below_all) least = static_cast<int>(c);
  }
  if (least < 0) throw AxiomError("Z0: the family has no least member", "Z0", 0, 0);
  if (z[least].rank != 0) throw AxiomError("Z1: the least cyclic flat has nonzero rank", "Z1", z[least].set, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Mask x = z[i].set, y = z[j].set;
      const int join = least_upper(x | y), meet = greatest_lower(x & y);
      if (join < 0 || meet < 0) throw AxiomError("Z0: pair without join or meet", "Z0", x, y);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !subset_of(z[i].set, z[j].set)) continue;
      const int diff = z[j].rank - z[i].rank;
      if (diff <= 0 || diff >= count(z[j].set & ~z[i].set)) {
        throw AxiomError("Z2: rank gap violated for a nested pair", "Z2", z[i].set, z[j].set);
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Mask x = z[i].set, y = z[j].set;
      if (subset_of(x, y) || subset_of(y, x)) continue;
      const auto& join = z[least_upper(x | y)];
      const auto& meet = z[greatest_lower(x & y)];
      if (join.rank + meet.rank + count((x & y) & ~meet.set) > z[i].rank + z[j].rank) {
        throw AxiomError("Z3: submodularity violated for an incomparable pair", "Z3", x, y);
      }
    }
  }
}

Matroid from_cyclic_flats(std::vector<std::string> labels, const std::vector<RankedSet>& family) {
  validate_cyclic_flats(static_cast<int>(labels.size()), family);
  return from_rank_function(std::move(labels), [&](Mask x) {
    int r = 1 << 20;
    for (const auto& z : family) r = std::min(r, z.rank + count(x & ~z.set));
    return r;
  });
}

Matroid relax(const Matroid& m, Mask x) {
  if (m.loops() != 0) throw PreconditionError("relax: matroid has loops");
  if (m.coloops() != 0) throw PreconditionError("relax: matroid has coloops");
  if (x == 0 || x == m.ground()) throw PreconditionError("relax: set must be proper and nonempty");
  const auto zs = cyclic_flats(m);
  bool found = false;
  std::vector<RankedSet> rest;
  for (const auto& z : zs) {
    if (z.set == x) {
      found = true;
      continue;
    }
    rest.push_back(z);
    if (z.set == 0 || z.set == m.ground()) continue;
    if (subset_of(z.set, x) || subset_of(x, z.set)) {
      throw PreconditionError("relax: another proper cyclic flat is comparable to " + to_string(m, x));
    }
  }
  if (!found) throw PreconditionError("relax: " + to_string(m, x) + " is not a cyclic flat");
  return from_cyclic_flats(m.labels(), rest);
}

Matroid truncate(const Matroid& m, int k) {
  if (k < 0) throw ParameterError("truncate: negative rank");
  if (k >= m.rank()) return m;
  const auto& t = m.rank_table();
  return from_rank_function(m.labels(), [&](Mask x) { return std::min<int>(t[x], k); });
}

Matroid principal_extension(const Matroid& m, Mask x, const std::string& e) {
  if (!subset_of(x, m.ground())) throw InputError("principal_extension: set outside the ground set");
  if (m.find(e)) throw InputError("principal_extension: label '" + e + "' already present");
  if (m.size() + 1 > kMaxElements) throw CapacityError("principal_extension exceeds 16 elements");
  auto labels = m.labels();
  labels.push_back(e);
  const int n = m.size();
  const auto& t = m.rank_table();
  std::vector<std::uint8_t> table(std::size_t{1} << (n + 1));
  for (Mask y = 0; y <= m.ground(); ++y) {
    table[y] = t[y];
    table[y | bit(n)] = static_cast<std::uint8_t>(t[y] + (t[y | x] > t[y] ? 1 : 0));
    if (y == m.ground()) break;
  }
  return Matroid::from_rank_table(std::move(labels), std::move(table));
}

Matroid free_extension(const Matroid& m, const std::string& e) { return principal_extension(m, m.ground(), e); }

Matroid parallel_extension(const Matroid& m, int f, const std::string& e) {
  if (f < 0 || f >= m.size()) throw InputError("parallel_extension: element out of range");
  return principal_extension(m, bit(f), e);
}

Matroid series_extension(const Matroid& m, int f, const std::string& e) {
  if (f < 0 || f >= m.size()) throw InputError("series_extension: element out of range");
  if (has(m.coloops(), f)) throw PreconditionError("series_extension: element is a coloop");
  return dual(parallel_extension(dual(m), f, e));
}

namespace {

int common_point(const Matroid& m, const Matroid& n) {
  int p = -1;
  for (int i = 0; i < m.size(); ++i) {
    if (n.find(m.label(i))) {
      if (p >= 0) throw PreconditionError("connection: ground sets share more than one element");
      p = i;
    }
  }
  if (p < 0) throw PreconditionError("connection: ground sets share no element");
  return p;
}

}  // namespace

Matroid parallel_connection(const Matroid& m, const Matroid& n) {
  const int p = common_point(m, n);
  const int pn = n.index_of(m.label(p));
  const bool loop_m = has(m.loops(), p), loop_n = has(n.loops(), pn);
  std::vector<std::string> labels = m.labels();
  std::vector<int> from_n;
  for (int i = 0; i < n.size(); ++i) {
    if (i != pn) {
      labels.push_back(n.label(i));
      from_n.push_back(i);
    }
  }
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw CapacityError("parallel connection exceeds 16 elements");
  }
  const int nm = m.size();
  const Mask pm = bit(p), pnb = bit(pn);
  return from_rank_function(labels, [&](Mask x) {
    const Mask xm = x & m.ground();
    Mask xn = 0;
    for (std::size_t k = 0; k < from_n.size(); ++k) {
      if (has(x, nm + static_cast<int>(k))) xn |= bit(from_n[k]);
    }
    if (loop_m && loop_n) return m.rank(xm) + n.rank(xn);
    if (loop_m) return m.rank(xm) + n.rank(xn | pnb) - n.rank(pnb);  // M + N/p
    if (loop_n) return m.rank(xm | pm) - m.rank(pm) + n.rank(xn);    // M/p + N
    if (has(x, p)) xn |= pnb;
    const bool both = has(m.closure(xm), p) && has(n.closure(xn), pn);
    return m.rank(xm) + n.rank(xn) - (both ? 1 : 0);
  });
}

Matroid series_connection(const Matroid& m, const Matroid& n) {
  return dual(parallel_connection(dual(m), dual(n)));
}

}  // namespace posmat
