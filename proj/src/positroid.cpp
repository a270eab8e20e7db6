#include "posmat/positroid.hpp"

#include <algorithm>
#include <sstream>

namespace posmat {

namespace {

Mask rotate_down(Mask p, int s, int n) {
  if (s == 0 || n == 0) return p;
  return ((p >> s) | (p << (n - s))) & full_mask(n);
}

bool gale_leq_positions(Mask px, Mask py) {
  for (; px != 0; px &= px - 1, py &= py - 1) {
    if (lowest(px) > lowest(py)) return false;
  }
  return true;
}

// Gap id of each position relative to the positions of F, with the wrap-around gap
// identified with gap 0.
bool within_one_gap(Mask fp, Mask kp) {
  const int nf = count(fp);
  if (nf == 0) return true;
  int g0 = -1;
  bool ok = true;
  for_each_bit(kp, [&](int p) {
    int g = count(fp & (bit(p) - 1));
    if (g == nf) g = 0;
    if (g0 < 0) g0 = g;
    ok = ok && g == g0;
  });
  return ok;
}

// Maximal runs of consecutive positions, cyclically.
std::vector<Mask> cyclic_runs(Mask p, int n) {
  std::vector<Mask> runs;
  const Mask full = full_mask(n);
  if (p == 0) return runs;
  if (p == full) return {full};
  int start = 0;
  while (has(p, start)) ++start;  // a position outside p
  Mask cur = 0;
  for (int k = 1; k <= n; ++k) {
    const int q = (start + k) % n;
    if (has(p, q)) {
      cur |= bit(q);
    } else if (cur != 0) {
      runs.push_back(cur);
      cur = 0;
    }
  }
  if (cur != 0) runs.push_back(cur);
  return runs;
}

void require_same_ground(const Matroid& m, const LinearOrder& ord) {
  if (ord.size() != m.size()) throw InputError("order and matroid have different ground sets");
}

bool connected_minor(const Matroid& m, Mask contracted, Mask kept) {
  return components_of_minor(m, contracted, kept).size() <= 1;
}

CheckReport make_report(Method method, const LinearOrder& ord) {
  CheckReport r;
  r.method = method;
  r.order = ord;
  return r;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Necklace: return "necklace";
    case Method::Sorting: return "sorting";
    case Method::Cip: return "cip";
    case Method::DualCyclic: return "dual";
    case Method::Rank2: return "rank2";
    case Method::ConnectedFlats: return "arw2";
    case Method::Flags: return "flags";
    case Method::Components: return "components";
    case Method::Search: return "search";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::Necklace, Method::Sorting, Method::Cip, Method::DualCyclic, Method::Rank2,
                   Method::ConnectedFlats, Method::Flags, Method::Components, Method::Search}) {
    if (method_name(m) == name) return m;
  }
  throw InputError("unknown method '" + name + "'");
}

std::vector<Mask> grassmann_necklace(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  std::vector<Mask> out;
  for (int i = 1; i <= m.size(); ++i) out.push_back(gale_basis(m, ord.shift(i)));
  return out;
}

bool is_grassmann_necklace(const LinearOrder& ord, const std::vector<Mask>& nk) {
  const int n = ord.size();
  if (static_cast<int>(nk.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!subset_of(nk[i], full_mask(n)) || count(nk[i]) != count(nk[0])) return false;
    const int e = ord.at(i);
    const Mask next = nk[(i + 1) % n];
    if (has(nk[i], e)) {
      if (!subset_of(nk[i] & ~bit(e), next)) return false;
    } else if (next != nk[i]) {
      return false;
    }
  }
  return true;
}

namespace {

// Bases of the necklace matroid: r-sets Gale-above every shifted necklace entry.
bool in_necklace_matroid(const LinearOrder& ord, const std::vector<Mask>& nk_positions, Mask j) {
  const int n = ord.size();
  const Mask pj = ord.to_positions(j);
  for (int s = 0; s < n; ++s) {
    if (!gale_leq_positions(nk_positions[s], rotate_down(pj, s, n))) return false;
  }
  return true;
}

std::vector<Mask> shifted_positions(const LinearOrder& ord, const std::vector<Mask>& nk) {
  std::vector<Mask> out;
  for (int s = 0; s < ord.size(); ++s) out.push_back(rotate_down(ord.to_positions(nk[s]), s, ord.size()));
  return out;
}

}  // namespace

Matroid necklace_matroid(std::vector<std::string> labels, const std::vector<Mask>& nk, const LinearOrder& ord) {
  if (static_cast<int>(labels.size()) != ord.size()) throw InputError("necklace_matroid: size mismatch");
  if (!is_grassmann_necklace(ord, nk)) throw PreconditionError("necklace_matroid: not a Grassmann necklace");
  const int n = ord.size();
  const int r = n == 0 ? 0 : count(nk[0]);
  const auto sp = shifted_positions(ord, nk);
  std::vector<Mask> bases;
  for_each_k_subset(n, r, [&](Mask j) {
    if (in_necklace_matroid(ord, sp, j)) bases.push_back(j);
  });
  if (bases.empty()) throw InternalError("necklace matroid has no bases");
  return Matroid::from_bases(std::move(labels), std::move(bases));
}

CheckReport is_positroid_order_necklace(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  CheckReport rep = make_report(Method::Necklace, ord);
  const auto nk = grassmann_necklace(m, ord);
  const auto sp = shifted_positions(ord, nk);
  bool ok = true;
  for_each_k_subset(m.size(), m.rank(), [&](Mask j) {
    if (!ok) return;
    const bool in_m = m.is_basis(j);
    if (in_m != in_necklace_matroid(ord, sp, j)) {
      ok = false;
      rep.certificate = BasisWitness{j, in_m};
    }
  });
  rep.verdict = ok;
  return rep;
}

CheckReport is_positroid_order_sorting(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  CheckReport rep = make_report(Method::Sorting, ord);
  const auto& bs = m.bases();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const SortedPair sp = sort_pair(ord, bs[i], bs[j]);
      if (!m.is_basis(sp.odd) || !m.is_basis(sp.even)) {
        rep.certificate = SortWitness{bs[i], bs[j], sp.odd, sp.even};
        return rep;
      }
    }
  }
  rep.verdict = true;
  return rep;
}

std::vector<CipConstraint> cip_constraints(const Matroid& m) {
  if (m.loops() != 0) throw PreconditionError("cyclic interval property needs a loopless matroid");
  const int n = m.size();
  std::vector<CipConstraint> out;
  for (Mask f : flats(m)) {
    const int s = count(f);
    if (s < 2 || s > n - 2) continue;
    if (!connected_minor(m, 0, f)) continue;
    CipConstraint c{f, {}};
    for (Mask k : components_of_minor(m, f, m.ground() & ~f).blocks) {
      if (count(k) >= 2) c.components.push_back(k);
    }
    if (!c.components.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::optional<FlatComponentWitness> cip_violation(const std::vector<CipConstraint>& cons, const LinearOrder& ord) {
  for (const auto& c : cons) {
    const Mask fp = ord.to_positions(c.flat);
    for (Mask k : c.components) {
      if (!within_one_gap(fp, ord.to_positions(k))) return FlatComponentWitness{c.flat, k};
    }
  }
  return std::nullopt;
}

CheckReport is_positroid_order_cip(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  CheckReport rep = make_report(Method::Cip, ord);
  if (auto w = cip_violation(cip_constraints(m), ord)) {
    rep.certificate = *w;
  } else {
    rep.verdict = true;
  }
  return rep;
}

CheckReport is_positroid_order_dual_cyclic(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  if (m.coloops() != 0) throw PreconditionError("dual cyclic test needs a coloop-free matroid");
  CheckReport rep = make_report(Method::DualCyclic, ord);
  const int n = m.size();
  for (Mask a = 0; a <= m.ground(); ++a) {
    const int s = count(a);
    if (s >= 2 && s <= n - 2 && m.is_cyclic(a) && connected_minor(m, a, m.ground() & ~a)) {
      int sum = 0;
      for (Mask run : cyclic_runs(ord.to_positions(a), n)) sum += m.rank(ord.from_positions(run));
      if (sum != m.rank(a)) {
        rep.certificate = CyclicSetWitness{a};
        return rep;
      }
    }
    if (a == m.ground()) break;
  }
  rep.verdict = true;
  return rep;
}

namespace {

bool interleaved(const LinearOrder& ord, int a, int b, int e, int f) {
  int pa = ord.position(a), pb = ord.position(b);
  if (pa > pb) std::swap(pa, pb);
  const auto inside = [&](int x) { return ord.position(x) > pa && ord.position(x) < pb; };
  return inside(e) != inside(f);
}

// {a,b} a circuit and {e,f} a cocircuit of (M/c)|{a,b,e,f}.
bool rank2_shape(const Matroid& m, Mask c, int a, int b, int e, int f) {
  const auto& t = m.rank_table();
  const int rc = t[c];
  auto rk = [&](Mask y) { return t[y | c] - rc; };
  const Mask ab = bit(a) | bit(b);
  return rk(bit(a)) == 1 && rk(bit(b)) == 1 && rk(ab) == 1 && rk(ab | bit(e)) == 2 && rk(ab | bit(f)) == 2 &&
         rk(ab | bit(e) | bit(f)) == 2;
}

}  // namespace

bool is_forbidden_minor(const Matroid& m, const LinearOrder& ord, const MinorWitness& w) {
  const Mask z = bit(w.a) | bit(w.b) | bit(w.e) | bit(w.f);
  if (count(z) != 4 || (z & w.contracted) || !subset_of(z | w.contracted, m.ground())) return false;
  return rank2_shape(m, w.contracted, w.a, w.b, w.e, w.f) && interleaved(ord, w.a, w.b, w.e, w.f);
}

CheckReport is_positroid_order_rank2(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  CheckReport rep = make_report(Method::Rank2, ord);
  const int n = m.size();
  const int r = m.rank();
  for (Mask c = 0; c <= m.ground(); ++c) {
    if (m.is_independent(c) && count(c) <= r - 2) {
      const Mask rest = m.ground() & ~c;
      const int k = count(rest);
      bool found = false;
      for_each_k_subset(k, 4, [&](Mask zc) {
        if (found) return;
        const Mask z = deposit(zc, rest);
        if (m.rank(z | c) - m.rank(c) != 2) return;
        const auto el = elements_of(z);
        static constexpr int splits[6][4] = {{0, 1, 2, 3}, {2, 3, 0, 1}, {0, 2, 1, 3},
                                             {1, 3, 0, 2}, {0, 3, 1, 2}, {1, 2, 0, 3}};
        for (const auto& s : splits) {
          const int a = el[s[0]], b = el[s[1]], e = el[s[2]], f = el[s[3]];
          if (rank2_shape(m, c, a, b, e, f) && interleaved(ord, a, b, e, f)) {
            rep.certificate = MinorWitness{c, a, b, e, f};
            found = true;
            return;
          }
        }
      });
      if (found) return rep;
    }
    if (c == m.ground()) break;
  }
  (void)n;
  rep.verdict = true;
  return rep;
}

MinorWitness rank2_witness_from_cip(const Matroid& m, const LinearOrder& ord, Mask flat, Mask component) {
  // e, f in K lying in different gaps of F; a, b in F separating them.
  const Mask fp = ord.to_positions(flat);
  int e = -1, f = -1;
  for_each_bit(component, [&](int x) {
    for_each_bit(component, [&](int y) {
      if (e < 0 && x != y && !within_one_gap(fp, bit(ord.position(x)) | bit(ord.position(y)))) {
        e = x;
        f = y;
      }
    });
  });
  if (e < 0) throw PreconditionError("rank2 witness: component lies within one gap of the flat");
  if (ord.position(e) > ord.position(f)) std::swap(e, f);
  int a = -1, b = -1;
  for_each_bit(flat, [&](int x) {
    const int p = ord.position(x);
    if (p > ord.position(e) && p < ord.position(f)) {
      if (a < 0) a = x;
    } else if (b < 0) {
      b = x;
    }
  });
  if (a < 0 || b < 0) throw InternalError("rank2 witness: no separating pair in the flat");
  Mask circuit = 0;
  for (Mask c : circuits(m)) {
    if (subset_of(c, flat) && has(c, a) && has(c, b)) {
      circuit = c;
      break;
    }
  }
  if (circuit == 0) throw PreconditionError("rank2 witness: flat is not connected");
  const Mask rest_c = circuit & ~(bit(a) | bit(b));
  Mask cocircuit = 0;
  for (Mask d : cocircuits(m)) {
    if (has(d, e) && has(d, f) && (d & rest_c) == 0) {
      cocircuit = d;
      break;
    }
  }
  if (cocircuit == 0) throw InternalError("rank2 witness: no cocircuit through e and f");
  Mask basis = circuit & ~bit(a);
  for_each_bit(m.ground() & ~cocircuit & ~basis, [&](int x) {
    if (m.rank(basis | bit(x)) > m.rank(basis)) basis |= bit(x);
  });
  MinorWitness w{basis & ~bit(b), a, b, e, f};
  if (!is_forbidden_minor(m, ord, w)) throw InternalError("rank2 witness: constructed minor has the wrong shape");
  return w;
}

CheckReport check_connected_flat_order(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  if (!is_connected(m) || m.rank() < 2) throw PreconditionError("connected flat test needs a connected matroid of rank >= 2");
  CheckReport rep = make_report(Method::ConnectedFlats, ord);
  for (Mask f : flats(m)) {
    if (connected_minor(m, 0, f) && connected_minor(m, f, m.ground() & ~f) && !ord.is_cyclic_interval(f)) {
      rep.certificate = FlatWitness{f};
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

CheckReport check_flag_partitions(const Matroid& m, const LinearOrder& ord, int k) {
  require_same_ground(m, ord);
  if (!is_connected(m)) throw PreconditionError("flag test needs a connected matroid");
  if (k < 2 || k > m.rank()) throw ParameterError("flag test needs 1 < k <= rank");
  CheckReport rep = make_report(Method::Flags, ord);
  const auto fl = flats(m);
  const int r = m.rank();
  std::vector<Mask> flag{0};
  bool bad = false;
  std::function<void(int)> go = [&](int depth) {
    if (bad) return;
    const Mask prev = flag.back();
    if (depth == k) {
      std::vector<Mask> blocks;
      for (std::size_t i = 1; i < flag.size(); ++i) blocks.push_back(flag[i] & ~flag[i - 1]);
      if (!is_noncrossing(ord, blocks)) {
        bad = true;
        rep.certificate = FlagWitness{flag};
      }
      return;
    }
    for (Mask f : fl) {
      if (f == prev || !subset_of(prev, f)) continue;
      const bool last = depth + 1 == k;
      if (last != (f == m.ground())) continue;
      if (!last && m.rank(f) > r - (k - depth - 1)) continue;
      if (!connected_minor(m, prev, f & ~prev)) continue;
      flag.push_back(f);
      go(depth + 1);
      flag.pop_back();
      if (bad) return;
    }
  };
  go(0);
  rep.verdict = !bad;
  return rep;
}

CheckReport is_positroid_order_by_components(const Matroid& m, const LinearOrder& ord) {
  require_same_ground(m, ord);
  CheckReport rep = make_report(Method::Components, ord);
  const auto comps = components(m);
  if (auto c = crossing_blocks(ord, comps.blocks)) {
    rep.certificate = CrossingWitness{comps.blocks[c->first], comps.blocks[c->second]};
    return rep;
  }
  for (Mask k : comps.blocks) {
    if (count(k) < 3) continue;
    const auto sub = restrict_to(m, k);
    const auto sub_rep = is_positroid_order_cip(sub, ord.induced(k));
    if (!sub_rep.verdict) {
      const auto w = std::get<FlatComponentWitness>(sub_rep.certificate);
      rep.certificate = FlatComponentWitness{deposit(w.flat, k), deposit(w.component, k)};
      return rep;
    }
  }
  rep.verdict = true;
  return rep;
}

namespace {

int lift_index(int i, Mask kept) { return lowest(deposit(bit(i), kept)); }

struct Lift {
  Mask kept;
  void operator()(std::monostate&) const {}
  void operator()(BasisWitness& w) const { w.set = deposit(w.set, kept); }
  void operator()(SortWitness& w) const {
    w.b1 = deposit(w.b1, kept);
    w.b2 = deposit(w.b2, kept);
    w.odd = deposit(w.odd, kept);
    w.even = deposit(w.even, kept);
  }
  void operator()(FlatComponentWitness& w) const {
    w.flat = deposit(w.flat, kept);
    w.component = deposit(w.component, kept);
  }
  void operator()(CyclicSetWitness& w) const { w.set = deposit(w.set, kept); }
  void operator()(MinorWitness& w) const {
    w.contracted = deposit(w.contracted, kept);
    w.a = lift_index(w.a, kept);
    w.b = lift_index(w.b, kept);
    w.e = lift_index(w.e, kept);
    w.f = lift_index(w.f, kept);
  }
  void operator()(FlatWitness& w) const { w.flat = deposit(w.flat, kept); }
  void operator()(FlagWitness& w) const {
    for (auto& x : w.flag) x = deposit(x, kept);
  }
  void operator()(CrossingWitness& w) const {
    w.block1 = deposit(w.block1, kept);
    w.block2 = deposit(w.block2, kept);
  }
  void operator()(SearchWitness& w) const { w.component = deposit(w.component, kept); }
};

struct Lower {
  Mask kept;
  void operator()(std::monostate&) const {}
  void operator()(BasisWitness& w) const { w.set = extract(w.set, kept); }
  void operator()(SortWitness& w) const {
    w.b1 = extract(w.b1, kept);
    w.b2 = extract(w.b2, kept);
    w.odd = extract(w.odd, kept);
    w.even = extract(w.even, kept);
  }
  void operator()(FlatComponentWitness& w) const {
    w.flat = extract(w.flat, kept);
    w.component = extract(w.component, kept);
  }
  void operator()(CyclicSetWitness& w) const { w.set = extract(w.set, kept); }
  void operator()(MinorWitness& w) const {
    w.contracted = extract(w.contracted, kept);
    w.a = lowest(extract(bit(w.a), kept));
    w.b = lowest(extract(bit(w.b), kept));
    w.e = lowest(extract(bit(w.e), kept));
    w.f = lowest(extract(bit(w.f), kept));
  }
  void operator()(FlatWitness& w) const { w.flat = extract(w.flat, kept); }
  void operator()(FlagWitness& w) const {
    for (auto& x : w.flag) x = extract(x, kept);
  }
  void operator()(CrossingWitness& w) const {
    w.block1 = extract(w.block1, kept);
    w.block2 = extract(w.block2, kept);
  }
  void operator()(SearchWitness& w) const { w.component = extract(w.component, kept); }
};

Mask removed_for(const Matroid& m, Method method) {
  return method == Method::DualCyclic ? m.coloops() : m.loops();
}

}  // namespace

CheckReport check_positroid_order(const Matroid& m, const LinearOrder& ord, Method method, int k) {
  require_same_ground(m, ord);
  const Mask removed = removed_for(m, method);
  const Mask kept = m.ground() & ~removed;
  const Matroid sub = delete_set(m, removed);
  const LinearOrder so = ord.induced(kept);
  CheckReport rep;
  switch (method) {
    case Method::Necklace: rep = is_positroid_order_necklace(sub, so); break;
    case Method::Sorting: rep = is_positroid_order_sorting(sub, so); break;
    case Method::Cip: rep = is_positroid_order_cip(sub, so); break;
    case Method::DualCyclic: rep = is_positroid_order_dual_cyclic(sub, so); break;
    case Method::Rank2: rep = is_positroid_order_rank2(sub, so); break;
    case Method::ConnectedFlats: rep = check_connected_flat_order(sub, so); break;
    case Method::Flags: rep = check_flag_partitions(sub, so, k); break;
    case Method::Components: rep = is_positroid_order_by_components(sub, so); break;
    case Method::Search: throw InputError("search is not an order test");
  }
  std::visit(Lift{kept}, rep.certificate);
  rep.order = ord;
  rep.removed = removed;
  return rep;
}

std::vector<Mask> interval_constraints(const Matroid& m) {
  std::vector<Mask> out;
  const int n = m.size();
  for (Mask f : flats(m)) {
    const int s = count(f);
    if (s >= 2 && s <= n - 2 && connected_minor(m, 0, f) && connected_minor(m, f, m.ground() & ~f)) {
      out.push_back(f);
    }
  }
  return out;
}

namespace {

class OrderSearch {
 public:
  OrderSearch(const Matroid& m, const std::function<bool(const LinearOrder&)>& accept, std::uint64_t budget)
      : m_(m), accept_(accept), budget_(budget), n_(m.size()), cons_(cip_constraints(m)) {
    touch_.resize(n_);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      for (std::size_t j = 0; j < cons_[c].components.size(); ++j) {
        for_each_bit(cons_[c].flat | cons_[c].components[j],
                     [&](int e) { touch_[e].push_back({static_cast<int>(c), static_cast<int>(j)}); });
      }
    }
    pos_.assign(n_, -1);
  }

  SearchResult run() {
    SearchResult res;
    if (n_ == 0) {
      res.status = accept_(LinearOrder::identity(0)) ? SearchResult::Status::Found : SearchResult::Status::NotFound;
      if (res.status == SearchResult::Status::Found) res.order = LinearOrder::identity(0);
      return res;
    }
    seq_.push_back(0);
    pos_[0] = 0;
    placed_ = bit(0);
    nodes_ = 1;
    dfs(1);
    res.nodes = nodes_;
    if (found_) {
      res.status = SearchResult::Status::Found;
      res.order = found_;
    } else if (exhausted_) {
      res.status = SearchResult::Status::BudgetExhausted;
    }
    return res;
  }

 private:
  bool consistent(int e) const {
    for (auto [c, j] : touch_[e]) {
      const Mask f = cons_[c].flat;
      Mask fp = 0;
      for_each_bit(f & placed_, [&](int x) { fp |= bit(pos_[x]); });
      if (fp == 0) continue;
      const bool f_done = subset_of(f, placed_);
      const int nf = count(fp);
      int g0 = -1;
      bool ok = true;
      for_each_bit(cons_[c].components[j] & placed_, [&](int x) {
        int g = count(fp & (bit(pos_[x]) - 1));
        if (f_done && g == nf) g = 0;
        if (g0 < 0) g0 = g;
        ok = ok && g == g0;
      });
      if (!ok) return false;
    }
    return true;
  }

  void dfs(int k) {
    if (found_ || exhausted_) return;
    if (k == n_) {
      if (n_ >= 3 && seq_[1] > seq_[n_ - 1]) return;
      LinearOrder ord = LinearOrder::from_sequence(seq_);
      if (cip_violation(cons_, ord)) throw InternalError("order search produced an order failing the cyclic interval property");
      if (accept_(ord)) found_ = std::move(ord);
      return;
    }
    const Mask unused = full_mask(n_) & ~placed_;
    if (k >= 2 && n_ >= 3 && 31 - std::countl_zero(unused) < seq_[1]) return;
    for_each_bit(unused, [&](int e) {
      if (found_ || exhausted_) return;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      seq_.push_back(e);
      pos_[e] = k;
      placed_ |= bit(e);
      if (consistent(e)) dfs(k + 1);
      placed_ &= ~bit(e);
      pos_[e] = -1;
      seq_.pop_back();
    });
  }

  const Matroid& m_;
  const std::function<bool(const LinearOrder&)>& accept_;
  std::uint64_t budget_;
  int n_;
  std::vector<CipConstraint> cons_;
  std::vector<std::vector<std::pair<int, int>>> touch_;
  std::vector<int> seq_;
  std::vector<int> pos_;
  Mask placed_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::optional<LinearOrder> found_;
};

}  // namespace

SearchResult search_positroid_orders(const Matroid& m, const std::function<bool(const LinearOrder&)>& accept,
                                     std::uint64_t budget) {
  if (m.loops() != 0) throw PreconditionError("order search needs a loopless matroid");
  return OrderSearch(m, accept, budget).run();
}

LinearOrder assemble_component_order(const Matroid& m, const std::vector<LinearOrder>& parts) {
  const auto comps = components(m);
  if (parts.size() != comps.size()) throw InputError("one order per component is required");
  std::vector<int> seq;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Mask k = comps.blocks[i];
    if (parts[i].size() != count(k)) throw InputError("component order has the wrong size");
    if (count(k) >= 3) {
      const auto sub = restrict_to(m, k);
      if (!is_positroid_order_cip(sub, parts[i]).verdict) {
        throw PreconditionError("component order is not a positroid order");
      }
    }
    for (int e : parts[i].sequence()) seq.push_back(lift_index(e, k));
  }
  return LinearOrder::from_sequence(std::move(seq));
}

CheckReport find_positroid_order(const Matroid& m, std::uint64_t budget) {
  CheckReport rep;
  rep.method = Method::Search;
  const Mask loops = m.loops();
  const Mask kept = m.ground() & ~loops;
  rep.removed = loops;
  const Matroid sub = delete_set(m, loops);
  const auto comps = components(sub);
  std::vector<LinearOrder> parts;
  const auto any = [](const LinearOrder&) { return true; };
  for (Mask k : comps.blocks) {
    if (count(k) <= 3) {
      parts.push_back(LinearOrder::identity(count(k)));
      continue;
    }
    const auto res = search_positroid_orders(restrict_to(sub, k), any, budget - std::min(budget, rep.nodes));
    rep.nodes += res.nodes;
    if (res.status == SearchResult::Status::BudgetExhausted) {
      rep.budget_exhausted = true;
      return rep;
    }
    if (res.status == SearchResult::Status::NotFound) {
      rep.certificate = SearchWitness{deposit(k, kept), res.nodes};
      return rep;
    }
    parts.push_back(*res.order);
  }
  const LinearOrder inner = assemble_component_order(sub, parts);
  if (!is_positroid_order_cip(sub, inner).verdict) throw InternalError("assembled order fails the cyclic interval property");
  std::vector<int> seq;
  for (int e : inner.sequence()) seq.push_back(lift_index(e, kept));
  for_each_bit(loops, [&](int e) { seq.push_back(e); });
  rep.order = LinearOrder::from_sequence(std::move(seq));
  rep.verdict = true;
  return rep;
}

CheckReport is_positroid(const Matroid& m, std::uint64_t budget) { return find_positroid_order(m, budget); }

bool replay(const Matroid& m, const CheckReport& r) {
  if (r.method == Method::Search) {
    if (r.budget_exhausted) return !r.verdict;
    if (r.verdict) {
      return r.order && r.order->size() == m.size() && r.removed == m.loops() &&
             check_positroid_order(m, *r.order, Method::Cip).verdict;
    }
    const auto* w = std::get_if<SearchWitness>(&r.certificate);
    if (!w || r.removed != m.loops()) return false;
    const Mask kept = m.ground() & ~m.loops();
    const Matroid sub = delete_set(m, m.loops());
    const Mask k = extract(w->component, kept);
    const auto comps = components(sub);
    if (std::find(comps.blocks.begin(), comps.blocks.end(), k) == comps.blocks.end()) return false;
    const auto res = search_positroid_orders(restrict_to(sub, k), [](const LinearOrder&) { return true; });
    return res.status == SearchResult::Status::NotFound;
  }
  if (!r.order || r.order->size() != m.size()) return false;
  if (r.removed != removed_for(m, r.method)) return false;
  if (r.verdict) return check_positroid_order(m, *r.order, r.method).verdict;

  const Mask kept = m.ground() & ~r.removed;
  const Matroid sub = delete_set(m, r.removed);
  const LinearOrder ord = r.order->induced(kept);
  Certificate cert = r.certificate;
  std::visit(Lower{kept}, cert);
  const int n = sub.size();
  if (const auto* w = std::get_if<BasisWitness>(&cert)) {
    const auto nk = grassmann_necklace(sub, ord);
    const bool in_nk = in_necklace_matroid(ord, shifted_positions(ord, nk), w->set);
    return count(w->set) == sub.rank() && sub.is_basis(w->set) == w->basis_of_matroid && in_nk != w->basis_of_matroid;
  }
  if (const auto* w = std::get_if<SortWitness>(&cert)) {
    const SortedPair sp = sort_pair(ord, w->b1, w->b2);
    return sub.is_basis(w->b1) && sub.is_basis(w->b2) && sp.odd == w->odd && sp.even == w->even &&
           !(sub.is_basis(sp.odd) && sub.is_basis(sp.even));
  }
  if (const auto* w = std::get_if<FlatComponentWitness>(&cert)) {
    const int s = count(w->flat);
    if (sub.loops() != 0 || !sub.is_flat(w->flat) || s < 2 || s > n - 2 || !connected_minor(sub, 0, w->flat)) return false;
    const auto comps = components_of_minor(sub, w->flat, sub.ground() & ~w->flat);
    if (std::find(comps.blocks.begin(), comps.blocks.end(), w->component) == comps.blocks.end()) return false;
    return count(w->component) >= 2 && !within_one_gap(ord.to_positions(w->flat), ord.to_positions(w->component));
  }
  if (const auto* w = std::get_if<CyclicSetWitness>(&cert)) {
    const int s = count(w->set);
    if (s < 2 || s > n - 2 || !sub.is_cyclic(w->set) || !connected_minor(sub, w->set, sub.ground() & ~w->set)) return false;
    int sum = 0;
    for (Mask run : cyclic_runs(ord.to_positions(w->set), n)) sum += sub.rank(ord.from_positions(run));
    return sum != sub.rank(w->set);
  }
  if (const auto* w = std::get_if<MinorWitness>(&cert)) return is_forbidden_minor(sub, ord, *w);
  if (const auto* w = std::get_if<FlatWitness>(&cert)) {
    return sub.is_flat(w->flat) && connected_minor(sub, 0, w->flat) &&
           connected_minor(sub, w->flat, sub.ground() & ~w->flat) && !ord.is_cyclic_interval(w->flat);
  }
  if (const auto* w = std::get_if<FlagWitness>(&cert)) {
    if (w->flag.size() < 2 || w->flag.front() != 0 || w->flag.back() != sub.ground()) return false;
    std::vector<Mask> blocks;
    for (std::size_t i = 1; i < w->flag.size(); ++i) {
      const Mask prev = w->flag[i - 1], cur = w->flag[i];
      if (!sub.is_flat(cur) || cur == prev || !subset_of(prev, cur)) return false;
      if (!connected_minor(sub, prev, cur & ~prev)) return false;
      blocks.push_back(cur & ~prev);
    }
    return !is_noncrossing(ord, blocks);
  }
  if (const auto* w = std::get_if<CrossingWitness>(&cert)) {
    const auto comps = components(sub);
    const auto has_block = [&](Mask b) { return std::find(comps.blocks.begin(), comps.blocks.end(), b) != comps.blocks.end(); };
    return has_block(w->block1) && has_block(w->block2) && !is_noncrossing(ord, {w->block1, w->block2});
  }
  return false;
}

std::string describe(const Matroid& m, const CheckReport& r) {
  std::ostringstream out;
  out << method_name(r.method) << ": " << (r.verdict ? "true" : (r.budget_exhausted ? "budget exhausted" : "false"));
  if (r.order) {
    out << " order=";
    for (int p = 0; p < r.order->size(); ++p) out << (p ? "<" : "") << m.label(r.order->at(p));
  }
  if (r.removed) out << " removed=" << to_string(m, r.removed);
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, BasisWitness>) {
          out << " set=" << to_string(m, w.set) << (w.basis_of_matroid ? " (basis, not in necklace matroid)" : " (in necklace matroid, not a basis)");
        } else if constexpr (std::is_same_v<W, SortWitness>) {
          out << " bases=" << to_string(m, w.b1) << "," << to_string(m, w.b2) << " halves=" << to_string(m, w.odd)
              << "," << to_string(m, w.even);
        } else if constexpr (std::is_same_v<W, FlatComponentWitness>) {
          out << " flat=" << to_string(m, w.flat) << " component=" << to_string(m, w.component);
        } else if constexpr (std::is_same_v<W, CyclicSetWitness>) {
          out << " cyclic_set=" << to_string(m, w.set);
        } else if constexpr (std::is_same_v<W, MinorWitness>) {
          out << " contract=" << to_string(m, w.contracted) << " circuit={" << m.label(w.a) << "," << m.label(w.b)
              << "} cocircuit={" << m.label(w.e) << "," << m.label(w.f) << "}";
        } else if constexpr (std::is_same_v<W, FlatWitness>) {
          out << " flat=" << to_string(m, w.flat);
        } else if constexpr (std::is_same_v<W, FlagWitness>) {
          out << " flag=";
          for (Mask f : w.flag) out << to_string(m, f);
        } else if constexpr (std::is_same_v<W, CrossingWitness>) {
          out << " crossing=" << to_string(m, w.block1) << "," << to_string(m, w.block2);
        } else if constexpr (std::is_same_v<W, SearchWitness>) {
          out << " component=" << to_string(m, w.component) << " nodes=" << w.nodes;
        }
      },
      r.certificate);
  return out.str();
}

LinearOrder clone_interval_order(const Matroid& m, const LinearOrder& ord, const std::vector<Mask>& sets, int x,
                                 int y) {
  require_same_ground(m, ord);
  if (!check_positroid_order(m, ord, Method::Cip).verdict) throw PreconditionError("clone_interval_order: not a positroid order");
  Mask seen = 0;
  for (Mask s : sets) {
    if (s == 0 || (s & seen)) throw PreconditionError("clone_interval_order: sets must be nonempty and disjoint");
    if (!is_clone_set(m, s)) throw PreconditionError("clone_interval_order: " + to_string(m, s) + " is not a set of clones");
    seen |= s;
  }
  const int n = m.size();
  const auto pull_front = [](const LinearOrder& o, Mask s) {
    std::vector<int> seq;
    for (int e : o.sequence()) {
      if (has(s, e)) seq.push_back(e);
    }
    for (int e : o.sequence()) {
      if (!has(s, e)) seq.push_back(e);
    }
    return LinearOrder::from_sequence(std::move(seq));
  };
  // Rotates so that an element of s whose predecessor lies outside s comes first.
  const auto open_at_block = [&](const LinearOrder& o, Mask s) {
    for (int p = 0; p < n; ++p) {
      if (has(s, o.at(p)) && !has(s, o.at((p + n - 1) % n))) return o.rotated(p);
    }
    return o;
  };
  LinearOrder cur = ord;
  std::size_t next = 0;
  if (sets.size() >= 2) {
    if (x < 0 || y < 0 || !has(sets[0], x) || !has(sets[1], y)) {
      throw PreconditionError("clone_interval_order: x and y must lie in the first two sets");
    }
    const int px = cur.position(x), py = cur.position(y);
    if (py == (px + n - 1) % n) {
      cur = cur.rotated(px);
    } else if (py == (px + 1) % n) {
      cur = cur.reversed();
      cur = cur.rotated(cur.position(x));
    } else {
      throw PreconditionError("clone_interval_order: x and y are not cyclically consecutive");
    }
    cur = pull_front(cur, sets[0]);
    cur = pull_front(cur.reversed(), sets[1]);
    next = 2;
  }
  for (; next < sets.size(); ++next) cur = pull_front(open_at_block(cur, sets[next]), sets[next]);
  return cur;
}

}  // namespace posmat
