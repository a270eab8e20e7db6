#include "bonding_identities.hpp"

#include <algorithm>

namespace posmat::testing {

void IdentityTally::record(const std::string& name, bool ok, const std::string& context) {
  auto& c = counts[name];
  ++c.first;
  if (!ok) {
    ++c.second;
    if (first_failure.empty()) first_failure = name + (context.empty() ? "" : " on " + context);
  }
}

int IdentityTally::failures() const {
  int f = 0;
  for (const auto& [name, c] : counts) f += c.second;
  return f;
}

int IdentityTally::checked(const std::string& name) const {
  const auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second.first;
}

namespace {

Labels labels_of(const Matroid& m, Mask x) { return m.labels_of(x); }

Mask mask_in(const Matroid& m, const Labels& l) {
  Mask x = 0;
  for (const auto& s : l) {
    if (const auto e = m.find(s)) x |= bit(*e);
  }
  return x;
}

std::string describe_pair(const Matroid& m, const Matroid& n) {
  std::string s = "M on";
  for (const auto& l : m.labels()) s += " " + l;
  s += ", N on";
  for (const auto& l : n.labels()) s += " " + l;
  return s;
}

// Separators of a matroid as masks: all unions of components.
std::vector<Mask> separators(const Matroid& m) {
  const auto blocks = components(m).blocks;
  std::vector<Mask> out;
  for (Mask pick = 0; pick < (Mask{1} << blocks.size()); ++pick) {
    Mask x = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (has(pick, static_cast<int>(i))) x |= blocks[i];
    }
    out.push_back(x);
  }
  return out;
}

bool is_separator(const Matroid& m, Mask x) { return m.rank(x) + m.rank(m.ground() & ~x) == m.rank(); }

}  // namespace

void check_bonding_identities(const Matroid& m, const Matroid& n, Rng& rng, IdentityTally& tally) {
  const std::string ctx = describe_pair(m, n);
  const Matroid b = bond(m, n);
  const Mask tm = shared_mask(m, n);
  const Labels t = labels_of(m, tm);
  const Mask tn = mask_in(n, t), tb = mask_in(b, t);
  const Mask em = mask_in(b, m.labels()), en = mask_in(b, n.labels());
  const int k = count(tm);
  const bool ind_m = m.is_independent(tm), ind_n = n.is_independent(tn);

  tally.record("symmetry", same_bases(b, bond(n, m)), ctx);
  if (k == 1) tally.record("parallel connection", same_bases(b, parallel_connection(m, n)), ctx);

  // Restriction to supersets of T.
  {
    const Mask x = tb | (random_subset(rng, b.size()) & ~tb);
    const Labels xl = labels_of(b, x);
    const Matroid lhs = restrict_to(b, x);
    const Matroid rhs = bond(restrict_to(m, mask_in(m, xl)), restrict_to(n, mask_in(n, xl)));
    tally.record("restriction", same_bases(lhs, rhs), ctx);
  }
  // Contraction of supersets of T.
  {
    const Mask x = tb | (random_subset(rng, b.size()) & ~tb);
    const Labels xl = labels_of(b, x);
    const Matroid lhs = contract_set(b, x);
    const Matroid rhs = direct_sum(contract_set(m, mask_in(m, xl)), contract_set(n, mask_in(n, xl)));
    tally.record("contraction containing T", same_bases(lhs, rhs), ctx);
  }
  // Contraction away from T.
  {
    const Mask x = random_subset(rng, m.size(), 0.3) & ~tm;
    const Mask y = random_subset(rng, n.size(), 0.3) & ~tn;
    const Matroid lhs = contract_set(b, mask_in(b, labels_of(m, x)) | mask_in(b, labels_of(n, y)));
    const Matroid rhs = bond(contract_set(m, x), contract_set(n, y));
    tally.record("contraction off T", same_bases(lhs, rhs), ctx);
  }
  // Contraction inside T.
  if (k >= 2) {
    Mask p = 0;
    while (p == 0 || p == tb) p = random_subset(rng, b.size()) & tb;
    const Labels pl = labels_of(b, p);
    const Matroid lhs = contract_set(b, p);
    const Matroid rhs = bond(contract_set(m, mask_in(m, pl)), contract_set(n, mask_in(n, pl)));
    tally.record("contraction inside T", same_bases(lhs, rhs), ctx);
  }
  // Restrictions to the two sides.
  {
    const Matroid bn = relabel(restrict_to(b, en), labels_of(b, en));
    const Matroid nn = restrict_to(n, mask_in(n, bn.labels()));
    if (ind_m) {
      tally.record("restriction to E(N), T independent in M", same_bases(bn, nn), ctx);
    } else {
      tally.record("restriction to E(N), T dependent in M", is_quotient(bn, nn), ctx);
      // Strictness needs more than dependence in M: loops of N on T can leave N unchanged.
      if (ind_n) tally.record("proper quotient", bn.rank() < nn.rank(), ctx);
    }
    const Matroid bm = restrict_to(b, em);
    if (ind_n) tally.record("restriction to E(M), T independent in N", same_bases(bm, m), ctx);
  }
  // Clones of both sides stay clones.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int mi = m.index_of(t[i]), mj = m.index_of(t[j]);
      const int ni = n.index_of(t[i]), nj = n.index_of(t[j]);
      if (!are_clones(m, mi, mj) || !are_clones(n, ni, nj)) continue;
      tally.record("clone preservation", are_clones(b, b.index_of(t[i]), b.index_of(t[j])), ctx);
    }
  }
  // Separators of the two sides that agree on T separate the bonding on a flat.
  {
    const auto fl = flats(b);
    const Mask f = fl[uniform_int(rng, 0, static_cast<int>(fl.size()) - 1)];
    const Labels fl_labels = labels_of(b, f);
    const Mask fm = mask_in(m, fl_labels), fn = mask_in(n, fl_labels);
    const Matroid mf = restrict_to(m, fm), nf = restrict_to(n, fn);
    const Matroid bf = restrict_to(b, f);
    for (Mask xs : separators(mf)) {
      for (Mask ys : separators(nf)) {
        const Labels xl = labels_of(mf, xs), yl = labels_of(nf, ys);
        Labels xt, yt;
        for (const auto& l : xl) {
          if (std::find(t.begin(), t.end(), l) != t.end()) xt.push_back(l);
        }
        for (const auto& l : yl) {
          if (std::find(t.begin(), t.end(), l) != t.end()) yt.push_back(l);
        }
        std::sort(xt.begin(), xt.end());
        std::sort(yt.begin(), yt.end());
        if (xt != yt) continue;
        const bool x_trivial = xs == 0 || xs == mf.ground();
        const bool y_trivial = ys == 0 || ys == nf.ground();
        if (x_trivial && y_trivial) continue;
        Labels u = xl;
        u.insert(u.end(), yl.begin(), yl.end());
        const Mask sep = mask_in(bf, u);
        tally.record("matched separators", sep != 0 && sep != bf.ground() && is_separator(bf, sep), ctx);
      }
    }
  }

  if (ind_m && ind_n) {
    tally.record("free amalgam", same_bases(free_amalgam(m, n), b), ctx);
    for (Mask f : flats(b)) {
      const Labels fl_labels = labels_of(b, f);
      const Mask fm = mask_in(m, fl_labels), fn = mask_in(n, fl_labels);
      tally.record("flat rank", b.rank(f) == m.rank(fm) + n.rank(fn) - count(f & tb), ctx);
      tally.record("flats restrict to flats", m.is_flat(fm) && n.is_flat(fn), ctx);
      if ((f & tb) == 0 && fm != 0 && fn != 0) {
        tally.record("flats missing T are disconnected", !is_connected(restrict_to(b, f)), ctx);
      }
    }
    // Unions of flats forming modular pairs with T.
    for (int s = 0; s < 6; ++s) {
      const auto mf = flats(m), nf = flats(n);
      const Mask fm = mf[uniform_int(rng, 0, static_cast<int>(mf.size()) - 1)];
      const Labels ft = labels_of(m, fm & tm);
      Mask fn = 0;
      std::vector<Mask> matching;
      for (Mask g : nf) {
        if (g & tn) {
          if (labels_of(n, g & tn) == labels_of(n, mask_in(n, ft))) matching.push_back(g);
        } else if (ft.empty()) {
          matching.push_back(g);
        }
      }
      if (matching.empty()) continue;
      fn = matching[uniform_int(rng, 0, static_cast<int>(matching.size()) - 1)];
      const bool mod_m = m.rank(fm | tm) == m.rank(fm) + count(tm & ~fm);
      const bool mod_n = n.rank(fn | tn) == n.rank(fn) + count(tn & ~fn);
      if (!mod_m || !mod_n) continue;
      const Mask f = mask_in(b, labels_of(m, fm)) | mask_in(b, labels_of(n, fn));
      tally.record("modular union is a flat", b.is_flat(f), ctx);
    }
    for (int s = 0; s < 6; ++s) {
      const Mask x = random_subset(rng, b.size());
      const Labels xl = labels_of(b, x);
      const Mask xm = mask_in(m, xl), xn = mask_in(n, xl);
      if (m.rank(xm | tm) != m.rank(xm) + count(tm & ~xm)) continue;
      if (n.rank(xn | tn) != n.rank(xn) + count(tn & ~xn)) continue;
      const Mask cl = mask_in(b, labels_of(m, m.closure(xm))) | mask_in(b, labels_of(n, n.closure(xn)));
      tally.record("modular closure", b.closure(x) == cl, ctx);
      tally.record("modular rank", b.rank(x) == m.rank(xm) + n.rank(xn) - count(x & tb), ctx);
    }
  }

  if (ind_n) {
    for (Mask kc : components(m).blocks) {
      if (!subset_of(tm, kc)) continue;
      const Mask kb = mask_in(b, labels_of(m, kc));
      const auto bc = components(b);
      const int idx = bc.block_of(lowest(kb));
      const Mask big = bc.blocks[idx];
      const Labels xl = labels_of(b, big & en);
      const bool inside = subset_of(kb, big);
      const bool form = same_bases(restrict_to(b, big), bond(restrict_to(m, kc), restrict_to(n, mask_in(n, xl))));
      tally.record("component through T", inside && form, ctx);
    }
  }
}

void check_direct_sum_identity(Rng& rng, IdentityTally& tally) {
  const BondPair a = random_bond_pair(rng, 4, 2);
  BondPair c = random_bond_pair(rng, 3, 1);
  auto rename = [](const Matroid& x, const std::string& tag) {
    Labels l = x.labels();
    for (auto& s : l) s = tag + s;
    return relabel(x, l);
  };
  c.m = rename(c.m, "2");
  c.n = rename(c.n, "2");
  const Matroid extra_m = rename(random_matroid(rng, uniform_int(rng, 0, 2)), "x");
  const Matroid extra_n = rename(random_matroid(rng, uniform_int(rng, 0, 2)), "y");
  const Matroid m = direct_sum(direct_sum(a.m, c.m), extra_m);
  const Matroid n = direct_sum(direct_sum(a.n, c.n), extra_n);
  if (m.size() + n.size() + count(shared_mask(m, n)) > kMaxElements) return;
  const Matroid b = bond(m, n);
  const Matroid parts = direct_sum(direct_sum(bond(a.m, a.n), bond(c.m, c.n)), direct_sum(extra_m, extra_n));
  const std::string ctx = describe_pair(m, n);
  tally.record("direct sum", same_bases(b, parts), ctx);
  // Components of a factor away from T are components of the bonding.
  for (const Matroid* x : {&extra_m, &extra_n}) {
    for (Mask blk : components(*x).blocks) {
      const Mask in_b = mask_in(b, labels_of(*x, blk));
      const auto bc = components(b).blocks;
      tally.record("direct sum components", std::find(bc.begin(), bc.end(), in_b) != bc.end(), ctx);
    }
  }
}

}  // namespace posmat::testing
