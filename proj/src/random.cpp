#include "posmat/random.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "posmat/constructors.hpp"
#include "posmat/positroid.hpp"

namespace posmat {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Mask random_subset(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Mask x = 0;
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) x |= bit(i);
  }
  return x;
}

Mask random_k_subset(Rng& rng, int n, int k) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  Mask x = 0;
  for (int i = 0; i < k; ++i) x |= bit(idx[i]);
  return x;
}

LinearOrder random_order(Rng& rng, int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return LinearOrder::from_sequence(std::move(seq));
}

Matroid random_cyclic_flat_matroid(Rng& rng, int n) {
  if (n < 2) return uniform(0, n);
  const Mask top = uniform_int(rng, 0, 3) == 0 ? random_subset(rng, n, 0.8) : full_mask(n);
  if (count(top) < 2) return uniform(0, n);
  const int r = uniform_int(rng, 1, count(top) - 1);
  std::vector<RankedSet> family{{0, 0}, {top, r}};
  const int attempts = 4 * n;
  for (int a = 0; a < attempts; ++a) {
    const Mask z = random_subset(rng, n, 0.5) & top;
    if (count(z) < 2 || z == top) continue;
    if (std::any_of(family.begin(), family.end(), [&](const RankedSet& f) { return f.set == z; })) continue;
    const int hi = std::min(count(z) - 1, r - 1);
    if (hi < 1) continue;
    const int rz = uniform_int(rng, 1, hi);
    family.push_back({z, rz});
    try {
      validate_cyclic_flats(n, family);
    } catch (const AxiomError&) {
      family.pop_back();
    }
  }
  return from_cyclic_flats(numeric_labels(n), family);
}

Matroid random_transversal(Rng& rng, int n) {
  if (n == 0) return Matroid();
  const int r = uniform_int(rng, 1, std::max(1, n - 1));
  std::vector<Mask> sets;
  for (int i = 0; i < r; ++i) sets.push_back(random_subset(rng, n, uniform_int(rng, 2, 7) / 10.0));
  return transversal(numeric_labels(n), sets);
}

Matroid random_gfp(Rng& rng, int n, int p) {
  if (n == 0) return Matroid();
  const int r = uniform_int(rng, 1, std::max(1, n - 1));
  std::vector<std::vector<int>> cols(n, std::vector<int>(r));
  for (auto& c : cols) {
    for (auto& v : c) v = uniform_int(rng, 0, p - 1);
  }
  auto inverse = [p](int a) {
    for (int b = 1; b < p; ++b) {
      if (a * b % p == 1) return b;
    }
    return 0;
  };
  return from_rank_function(numeric_labels(n), [&](Mask x) {
    std::vector<std::vector<int>> rows;
    for_each_bit(x, [&](int e) { rows.push_back(cols[e]); });
    int rank = 0;
    for (int c = 0; c < r && rank < static_cast<int>(rows.size()); ++c) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][c] != 0) piv = i;
      }
      if (piv < 0) continue;
      std::swap(rows[piv], rows[rank]);
      const int inv = inverse(rows[rank][c]);
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (i == rank || rows[i][c] == 0) continue;
        const int f = rows[i][c] * inv % p;
        for (int j = 0; j < r; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
      }
      ++rank;
    }
    return rank;
  });
}

Matroid random_lattice_path(Rng& rng, int n) {
  if (n == 0) return Matroid();
  const int r = uniform_int(rng, 1, std::max(1, n - 1));
  const auto a = elements_of(random_k_subset(rng, n, r));
  const auto b = elements_of(random_k_subset(rng, n, r));
  std::vector<Mask> sets;
  for (int i = 0; i < r; ++i) {
    const int lo = std::min(a[i], b[i]), hi = std::max(a[i], b[i]);
    sets.push_back(full_mask(hi + 1) & ~full_mask(lo));
  }
  return transversal(numeric_labels(n), sets);
}

Matroid random_positroid(Rng& rng, int n) {
  const Matroid base = uniform_int(rng, 0, 1) ? random_cyclic_flat_matroid(rng, n) : random_transversal(rng, n);
  const LinearOrder ord = random_order(rng, n);
  return necklace_matroid(base.labels(), grassmann_necklace(base, ord), ord);
}

Matroid random_matroid(Rng& rng, int n) {
  if (n == 0) return Matroid();
  switch (uniform_int(rng, 0, 6)) {
    case 0: return random_cyclic_flat_matroid(rng, n);
    case 1: return random_transversal(rng, n);
    case 2: return random_gfp(rng, n, std::array{2, 3, 5}[uniform_int(rng, 0, 2)]);
    case 3: return random_lattice_path(rng, n);
    case 4: return random_positroid(rng, n);
    case 5: return uniform(uniform_int(rng, 0, n), n);
    default: {
      if (n < 2) return uniform(uniform_int(rng, 0, n), n);
      const int k = uniform_int(rng, 1, n - 1);
      const Matroid a = random_matroid(rng, k), b = random_matroid(rng, n - k);
      return relabel(direct_sum(a, relabel(b, numeric_labels(n - k, k + 1))), numeric_labels(n));
    }
  }
}

Matroid label_with_shared(const Matroid& m, Mask shared, const std::string& prefix) {
  std::vector<std::string> labels(m.size());
  int t = 0, o = 0;
  for (int i = 0; i < m.size(); ++i) {
    labels[i] = has(shared, i) ? "t" + std::to_string(++t) : prefix + std::to_string(++o);
  }
  return relabel(m, std::move(labels));
}

Matroid positroid_with_clones(Rng& rng, int n, int k, const std::string& prefix) {
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw InternalError("could not plant a clone set");
    if (uniform_int(rng, 0, 1) == 0 && n - k + 1 >= 1) {
      // Series extensions of one element give a series class, which is a clone set.
      Matroid m = random_positroid(rng, n - k + 1);
      if (m.loops() != 0) continue;
      const int x = uniform_int(rng, 0, m.size() - 1);
      if (has(m.coloops(), x)) continue;
      Mask t = bit(x);
      for (int i = 1; i < k; ++i) {
        m = series_extension(m, x, "x" + std::to_string(i));
        t |= bit(m.size() - 1);
      }
      if (m.loops() == 0 && m.is_independent(t)) return label_with_shared(m, t, prefix);
      continue;
    }
    Matroid m = random_positroid(rng, n);
    if (m.loops() != 0) continue;
    for (Mask cls : clonal_classes(m).blocks) {
      if (count(cls) < k) continue;
      // Greedy independent subset of the class.
      Mask t = 0;
      for_each_bit(cls, [&](int e) {
        if (count(t) < k && m.is_independent(t | bit(e))) t |= bit(e);
      });
      if (count(t) == k) return label_with_shared(m, t, prefix);
    }
  }
}

}  // namespace posmat
