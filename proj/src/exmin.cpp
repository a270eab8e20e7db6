#include "posmat/exmin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "posmat/constructors.hpp"

namespace posmat {

std::string family_name(Family f) {
  switch (f) {
    case Family::GenK4: return "genK4";
    case Family::GenK4Var1: return "genK4var1";
    case Family::PavingK: return "pavingK";
    case Family::SparsePQ: return "sparsePQ";
    case Family::SparsePQST: return "sparsePQST";
    case Family::WhirlFreeExt: return "whirlFreeExt";
    case Family::WhirlVariant: return "whirlVariant";
    case Family::Closing1: return "closing1";
    case Family::Closing2: return "closing2";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::GenK4,        Family::GenK4Var1,    Family::PavingK,  Family::SparsePQ, Family::SparsePQST,
          Family::WhirlFreeExt, Family::WhirlVariant, Family::Closing1, Family::Closing2};
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw InputError("unknown family '" + name + "'");
}

namespace {

// Consecutive numeric labels for blocks of the given sizes; returns masks per block.
std::vector<Mask> blocks_of(const std::vector<int>& sizes, int& next) {
  std::vector<Mask> out;
  for (int s : sizes) {
    if (s < 1) throw ParameterError("block sizes must be positive");
    Mask b = 0;
    for (int i = 0; i < s; ++i) b |= bit(next++);
    out.push_back(b);
  }
  return out;
}

void check_size(int n) {
  if (n > kMaxElements) throw CapacityError("family member has " + std::to_string(n) + " elements; at most 16 are supported");
}

// Cyclic flats: the empty set, E, and X_i u X_j u X_k for the lines of M(K4).
Matroid k4_pattern(const std::array<int, 6>& sizes, const std::array<int, 4>& line_ranks, int r) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  check_size(n);
  int next = 0;
  const auto x = blocks_of(std::vector<int>(sizes.begin(), sizes.end()), next);
  const Mask lines[4] = {x[0] | x[1] | x[2], x[0] | x[3] | x[4], x[1] | x[4] | x[5], x[2] | x[3] | x[5]};
  std::vector<RankedSet> z{{0, 0}, {full_mask(n), r}};
  for (int i = 0; i < 4; ++i) z.push_back({lines[i], line_ranks[i]});
  return from_cyclic_flats(numeric_labels(n), z);
}

// Sparse paving matroid of rank r on labels with the given circuit-hyperplanes.
Matroid sparse_paving(std::vector<std::string> labels, int r, const std::vector<Mask>& hyperplanes) {
  std::vector<RankedSet> z{{0, 0}, {full_mask(static_cast<int>(labels.size())), r}};
  for (Mask h : hyperplanes) z.push_back({h, r - 1});
  return from_cyclic_flats(std::move(labels), z);
}

std::vector<std::string> block_labels(int n_blocks, const std::vector<std::string>& extra) {
  auto l = numeric_labels(n_blocks);
  l.insert(l.end(), extra.begin(), extra.end());
  return l;
}

Matroid circuit_on(const std::string& base, const std::string& prefix, int size) {
  std::vector<std::string> labels{base};
  for (int i = 1; i < size; ++i) labels.push_back(prefix + std::to_string(i));
  return uniform(size - 1, labels);
}

}  // namespace

Matroid gen_k4(const std::array<int, 6>& x) {
  for (int v : x) {
    if (v < 1) throw ParameterError("genK4: block sizes must be positive");
  }
  const auto [x1, x2, x3, x4, x5, x6] = x;
  if (x1 + x4 != x2 + x6) throw ParameterError("genK4: need x1 + x4 = x2 + x6");
  const int r = x1 + x4 + x5;
  if (x1 + x2 > x4 + x6) throw ParameterError("genK4: need x1 + x2 <= x4 + x6");
  if (x1 + x2 + x3 > r || r > x4 + x6 + x3) throw ParameterError("genK4: need x1 + x2 + x3 <= r <= x4 + x6 + x3");
  return k4_pattern(x, {x1 + x2 + x3 - 1, r - 1, r - 1, r - 1}, r);
}

Matroid gen_k4_var1(int a, int b, int c, int s, int r) {
  if (a < 1 || b < 1 || c < 1) throw ParameterError("genK4var1: a, b, c must be positive");
  if (!(std::max({a, b, c}) < s && s < a + b + c)) throw ParameterError("genK4var1: need max(a,b,c) < s < a+b+c");
  if ((r - a - b - c) % 2 != 0) throw ParameterError("genK4var1: r must have the parity of a+b+c");
  if (!(std::max({s, a + b - c, a + c - b, b + c - a}) < r)) throw ParameterError("genK4var1: r is too small");
  const int x1 = (r - a + b - c) / 2, x2 = (r + a - b - c) / 2, x5 = (r - a - b + c) / 2;
  return k4_pattern({x1, x2, c, a, x5, b}, {r - 1, r - 1, r - 1, s}, r);
}

Matroid gen_paving_k(int a, int b, int c, int k) {
  if (a < 1 || b < 1 || c < 1 || k < 1) throw ParameterError("pavingK: parameters must be positive");
  const int n = 2 * (a + b + c) + 3 * k + 1;
  check_size(n);
  int next = 0;
  const auto x = blocks_of({a, b + k, c, b, c + k, a + k}, next);
  const Mask p = bit(next);
  const int r = a + b + c + k + 1;
  std::vector<RankedSet> z{{0, 0}, {full_mask(n), r}};
  for (Mask h : {x[0] | x[1] | x[2] | p, x[0] | x[3] | x[4] | p, x[2] | x[3] | x[5] | p, x[1] | x[4] | x[5]}) {
    z.push_back({h, r - 1});
  }
  return from_cyclic_flats(block_labels(n - 1, {"p"}), z);
}

Matroid gen_sparse_pq(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw ParameterError("sparsePQ: parameters must be positive");
  const int n = 2 * (a + b + c) + 3;
  check_size(n);
  int next = 0;
  const auto x = blocks_of({a, b + 1, c, b, c, a}, next);
  const Mask p = bit(next), q = bit(next + 1);
  return sparse_paving(block_labels(n - 2, {"p", "q"}), a + b + c + 2,
                       {x[0] | x[1] | x[2] | p, x[0] | x[3] | x[4] | p | q, x[2] | x[3] | x[5] | p | q,
                        x[1] | x[4] | x[5] | q});
}

Matroid gen_sparse_pqst(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw ParameterError("sparsePQST: parameters must be positive");
  const int n = 2 * (a + b + c) + 4;
  check_size(n);
  int next = 0;
  const auto x = blocks_of({a, b, c, b, c, a}, next);
  const Mask p = bit(next), q = bit(next + 1), s = bit(next + 2), t = bit(next + 3);
  return sparse_paving(block_labels(n - 4, {"p", "q", "s", "t"}), a + b + c + 3,
                       {x[0] | x[1] | x[2] | q | s | t, x[0] | x[3] | x[4] | p | s | t,
                        x[2] | x[3] | x[5] | p | q | t, x[1] | x[4] | x[5] | p | q | s});
}

Matroid gen_whirl_freeext(int r, int n, const std::vector<int>& m, const std::vector<int>& x) {
  if (r < 3 || n < 3) throw ParameterError("whirlFreeExt: need r >= 3 and n >= 3");
  if (static_cast<int>(m.size()) != n || static_cast<int>(x.size()) != 2 * n) {
    throw ParameterError("whirlFreeExt: need n values of m and 2n values of x");
  }
  for (int v : x) {
    if (v < 1) throw ParameterError("whirlFreeExt: x values must be positive");
  }
  for (int v : m) {
    if (v < 3 || v > r) throw ParameterError("whirlFreeExt: need 3 <= m_i <= r");
  }
  if (n == 3) {
    for (int v : m) {
      if (v != r) throw ParameterError("whirlFreeExt: for n = 3 every m_i must equal r");
    }
  } else {
    bool ok = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
        ok = ok || (!consecutive && m[i] == r && m[j] == r);
      }
    }
    if (!ok) throw ParameterError("whirlFreeExt: need two non-consecutive m_i equal to r");
  }
  auto xi = [&](int i) { return x[(i - 1) % (2 * n)]; };  // 1-based, x_{2n+1} = x_1
  for (int i = 1; i <= n; ++i) {
    if (xi(2 * i - 1) + xi(2 * i) + xi(2 * i + 1) != m[i - 1]) throw ParameterError("whirlFreeExt: need x_{2i-1}+x_{2i}+x_{2i+1} = m_i");
    if (xi(2 * i + 1) > m[i - 1] + m[i % n] - r - 2) throw ParameterError("whirlFreeExt: need x_{2i+1} <= m_i + m_{i+1} - r - 2");
  }
  check_size(std::accumulate(x.begin(), x.end(), 0) + 1);
  Matroid w = whirl(n);
  for (int i = 1; i <= 2 * n; ++i) {
    for (int c = 1; c < xi(i); ++c) w = series_extension(w, w.index_of(std::to_string(i)), std::to_string(i) + "." + std::to_string(c));
  }
  w = free_extension(w, "f");
  if (w.rank() < r) throw ParameterError("whirlFreeExt: r exceeds the rank of the extension");
  return truncate(w, r);
}

Matroid gen_whirl_variant(int r) {
  if (r < 3) throw ParameterError("whirlVariant: need r >= 3");
  check_size(2 * r + 1);
  Matroid m = parallel_connection(circuit_on("e", "a", r), circuit_on("e", "b", r));
  m = truncate(m, r);
  m = principal_extension(m, bit(m.index_of("a1")) | bit(m.index_of("b1")), "p1");
  m = principal_extension(m, bit(m.index_of("a2")) | bit(m.index_of("b2")), "p2");
  return m;
}

Matroid gen_closing_family(int n, int k, int variant) {
  if (!(n >= k && k >= 3)) throw ParameterError("closing family: need n >= k >= 3");
  if (variant == 1) {
    check_size(2 * n + k - 2);
    Matroid m = parallel_connection(circuit_on("p", "a", n), circuit_on("p", "b", n));
    m = parallel_connection(m, circuit_on("p", "c", k));
    return truncate(m, n);
  }
  if (variant == 2) {
    check_size(2 * n + k);
    Matroid m = uniform(2, std::vector<std::string>{"l1", "l2", "l3"});
    m = parallel_connection(m, circuit_on("l1", "a", n));
    m = parallel_connection(m, circuit_on("l2", "b", n));
    m = parallel_connection(m, circuit_on("l3", "c", k));
    return truncate(m, n);
  }
  throw ParameterError("closing family: variant must be 1 or 2");
}

Matroid generate(Family f, const std::vector<int>& p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw ParameterError(family_name(f) + " takes " + std::to_string(k) + " parameters");
  };
  switch (f) {
    case Family::GenK4: need(6); return gen_k4({p[0], p[1], p[2], p[3], p[4], p[5]});
    case Family::GenK4Var1: need(5); return gen_k4_var1(p[0], p[1], p[2], p[3], p[4]);
    case Family::PavingK: need(4); return gen_paving_k(p[0], p[1], p[2], p[3]);
    case Family::SparsePQ: need(3); return gen_sparse_pq(p[0], p[1], p[2]);
    case Family::SparsePQST: need(3); return gen_sparse_pqst(p[0], p[1], p[2]);
    case Family::WhirlFreeExt: {
      if (p.size() < 2) throw ParameterError("whirlFreeExt takes r, n, m_1..m_n, x_1..x_2n");
      const int n = p[1];
      if (n < 3 || p.size() != static_cast<std::size_t>(2 + 3 * n)) throw ParameterError("whirlFreeExt takes r, n, m_1..m_n, x_1..x_2n");
      return gen_whirl_freeext(p[0], n, {p.begin() + 2, p.begin() + 2 + n}, {p.begin() + 2 + n, p.end()});
    }
    case Family::WhirlVariant: need(1); return gen_whirl_variant(p[0]);
    case Family::Closing1: need(2); return gen_closing_family(p[0], p[1], 1);
    case Family::Closing2: need(2); return gen_closing_family(p[0], p[1], 2);
  }
  throw ParameterError("unknown family");
}

namespace {

void for_each_vector(int len, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(len, lo);
  while (true) {
    f(v);
    int i = len - 1;
    while (i >= 0 && v[i] == hi) v[i--] = lo;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace

std::vector<std::vector<int>> sweep_params(Family f, int max_size) {
  std::vector<std::vector<int>> out;
  const int cap = std::min(max_size, kMaxElements);
  auto try_add = [&](const std::vector<int>& p, int size) {
    if (size > cap) return;
    try {
      (void)generate(f, p);
      out.push_back(p);
    } catch (const ParameterError&) {
    } catch (const ValidationError&) {
    }
  };
  switch (f) {
    case Family::GenK4:
      for_each_vector(6, 1, cap, [&](const std::vector<int>& x) {
        const int s = std::accumulate(x.begin(), x.end(), 0);
        if (s <= cap) try_add(x, s);
      });
      break;
    case Family::GenK4Var1:
      for_each_vector(5, 1, cap, [&](const std::vector<int>& v) {
        const int a = v[0], b = v[1], c = v[2], r = v[4];
        const int twice = 2 * (a + b + c) + 3 * r - a - b - c;
        if (twice % 2 == 0) try_add(v, twice / 2);
      });
      break;
    case Family::PavingK:
      for_each_vector(4, 1, cap, [&](const std::vector<int>& v) { try_add(v, 2 * (v[0] + v[1] + v[2]) + 3 * v[3] + 1); });
      break;
    case Family::SparsePQ:
      for_each_vector(3, 1, cap, [&](const std::vector<int>& v) { try_add(v, 2 * (v[0] + v[1] + v[2]) + 3); });
      break;
    case Family::SparsePQST:
      for_each_vector(3, 1, cap, [&](const std::vector<int>& v) { try_add(v, 2 * (v[0] + v[1] + v[2]) + 4); });
      break;
    case Family::WhirlFreeExt:
      for (int n = 3; 2 * n + 1 <= cap; ++n) {
        for_each_vector(2 * n, 1, cap - 2 * n, [&](const std::vector<int>& x) {
          const int size = std::accumulate(x.begin(), x.end(), 0) + 1;
          if (size > cap) return;
          std::vector<int> m(n);
          for (int i = 0; i < n; ++i) m[i] = x[2 * i] + x[2 * i + 1] + x[(2 * i + 2) % (2 * n)];
          for (int r = 3; r <= *std::max_element(m.begin(), m.end()) + 0; ++r) {
            std::vector<int> p{r, n};
            p.insert(p.end(), m.begin(), m.end());
            p.insert(p.end(), x.begin(), x.end());
            try_add(p, size);
          }
        });
      }
      break;
    case Family::WhirlVariant:
      for (int r = 3; 2 * r + 1 <= cap; ++r) try_add({r}, 2 * r + 1);
      break;
    case Family::Closing1:
    case Family::Closing2:
      for (int n = 3; n <= cap; ++n) {
        for (int k = 3; k <= n; ++k) try_add({n, k}, f == Family::Closing1 ? 2 * n + k - 2 : 2 * n + k);
      }
      break;
  }
  return out;
}

CheckReport PositroidCache::check(const Matroid& m, std::uint64_t budget) {
  std::string key;
  for (const auto& l : m.labels()) key += l + ",";
  key += "|";
  for (Mask b : m.bases()) key += std::to_string(b) + ",";
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  CheckReport r = is_positroid(m, budget);
  if (!r.budget_exhausted) cache_.emplace(std::move(key), r);
  return r;
}

ExminReport verify_excluded_minor(const Matroid& m, PositroidCache* cache, std::uint64_t budget) {
  PositroidCache local;
  PositroidCache& c = cache ? *cache : local;
  ExminReport rep;
  rep.self = c.check(m, budget);
  if (rep.self.budget_exhausted) {
    rep.budget_exhausted = true;
    rep.failure = "budget exhausted on the matroid itself";
    return rep;
  }
  if (rep.self.verdict) {
    rep.failure = "the matroid is a positroid";
    return rep;
  }
  for (int e = 0; e < m.size(); ++e) {
    for (bool del : {true, false}) {
      const Matroid minor_e = del ? delete_set(m, bit(e)) : contract_set(m, bit(e));
      CheckReport r = c.check(minor_e, budget);
      const bool ok = r.verdict;
      const bool exhausted = r.budget_exhausted;
      (del ? rep.deletions : rep.contractions).push_back({m.label(e), std::move(r)});
      if (exhausted) {
        rep.budget_exhausted = true;
        rep.failure = "budget exhausted on a minor";
        return rep;
      }
      if (!ok) {
        rep.failure = std::string(del ? "deletion" : "contraction") + " of " + m.label(e) + " is not a positroid";
        return rep;
      }
    }
  }
  rep.verdict = true;
  return rep;
}

}  // namespace posmat
