#include "posmat/matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace posmat {

namespace {

void validate_labels(const std::vector<std::string>& labels) {
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw CapacityError("ground set has " + std::to_string(labels.size()) +
                        " elements; at most 16 are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("empty element label");
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
}

std::vector<std::uint8_t> rank_table_from_bases(int n, const std::vector<Mask>& bases) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(size, 0);
  for (Mask b : bases) indep[b] = 1;
  for (std::size_t x = size; x-- > 0;) {
    if (!indep[x]) continue;
    for_each_bit(static_cast<Mask>(x), [&](int e) { indep[x & ~bit(e)] = 1; });
  }
  std::vector<std::uint8_t> table(size, 0);
  for (std::size_t x = 1; x < size; ++x) {
    const Mask m = static_cast<Mask>(x);
    if (indep[x]) {
      table[x] = static_cast<std::uint8_t>(count(m));
      continue;
    }
    std::uint8_t best = 0;
    for_each_bit(m, [&](int e) { best = std::max(best, table[m & ~bit(e)]); });
    table[x] = best;
  }
  return table;
}

bool locally_submodular(int n, const std::vector<std::uint8_t>& t) {
  const Mask full = full_mask(n);
  for (Mask x = 0; x <= full; ++x) {
    const Mask out = full & ~x;
    for (Mask a = out; a != 0; a &= a - 1) {
      const Mask e = a & (~a + 1);
      for (Mask b = a & (a - 1); b != 0; b &= b - 1) {
        const Mask f = b & (~b + 1);
        if (t[x | e] + t[x | f] < t[x | e | f] + t[x]) return false;
      }
    }
    if (x == full) break;
  }
  return true;
}

// Brute-force exchange witness; only reached when the family is invalid.
void throw_exchange_witness(const std::vector<std::string>& labels, const std::vector<Mask>& bases) {
  const std::set<Mask> family(bases.begin(), bases.end());
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (Mask a = b1 & ~b2; a != 0; a &= a - 1) {
        const Mask e = a & (~a + 1);
        bool ok = false;
        for (Mask c = b2 & ~b1; c != 0 && !ok; c &= c - 1) {
          const Mask f = c & (~c + 1);
          ok = family.count((b1 & ~e) | f) > 0;
        }
        if (!ok) {
          std::ostringstream msg;
          msg << "basis exchange fails for B=" << b1 << " B'=" << b2 << " a=" << labels[lowest(e)];
          throw ExchangeError(msg.str(), b1, b2, lowest(e));
        }
      }
    }
  }
  throw InternalError("basis family rejected without an exchange witness");
}

}  // namespace

int Partition::block_of(int e) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (has(blocks[i], e)) return static_cast<int>(i);
  }
  return -1;
}

Matroid::Matroid() {
  auto d = std::make_shared<Data>();
  d->bases = {0};
  d->table = {0};
  d_ = std::move(d);
}

Matroid Matroid::from_bases(std::vector<std::string> labels, std::vector<Mask> bases) {
  validate_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (bases.empty()) throw ValidationError("basis family is empty");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = count(bases.front());
  for (Mask b : bases) {
    if (!subset_of(b, full_mask(n))) throw InputError("basis contains an element outside the ground set");
    if (count(b) != r) throw ValidationError("bases have different sizes");
  }
  auto table = rank_table_from_bases(n, bases);
  if (!locally_submodular(n, table)) throw_exchange_witness(labels, bases);
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->rank = r;
  d->bases = std::move(bases);
  d->table = std::move(table);
  return Matroid(std::move(d));
}

Matroid Matroid::from_bases(std::vector<std::string> labels,
                            const std::vector<std::vector<std::string>>& bases) {
  validate_labels(labels);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<Mask> masks;
  for (const auto& b : bases) {
    Mask m = 0;
    for (const auto& l : b) {
      auto it = index.find(l);
      if (it == index.end()) throw InputError("unknown label '" + l + "' in basis");
      if (has(m, it->second)) throw InputError("repeated label '" + l + "' in basis");
      m |= bit(it->second);
    }
    masks.push_back(m);
  }
  return from_bases(std::move(labels), std::move(masks));
}

Matroid Matroid::from_rank_table(std::vector<std::string> labels, std::vector<std::uint8_t> table) {
  validate_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (table.size() != (std::size_t{1} << n)) throw InternalError("rank table has the wrong size");
  const int r = table[full_mask(n)];
  std::vector<Mask> bases;
  for_each_k_subset(n, r, [&](Mask x) {
    if (table[x] == r) bases.push_back(x);
  });
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->rank = r;
  d->bases = std::move(bases);
  d->table = std::move(table);
  return Matroid(std::move(d));
}

void Matroid::check(Mask x) const {
  if (!subset_of(x, ground())) throw InputError("subset is not contained in the ground set");
}

std::optional<int> Matroid::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (d_->labels[i] == label) return i;
  }
  return std::nullopt;
}

int Matroid::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw InputError("unknown label '" + std::string(label) + "'");
  return *i;
}

Mask Matroid::mask_of(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> Matroid::labels_of(Mask m) const {
  check(m);
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(d_->labels[i]); });
  return out;
}

Mask Matroid::closure(Mask x) const {
  const int r = rank(x);
  Mask cl = x;
  for_each_bit(ground() & ~x, [&](int e) {
    if (d_->table[x | bit(e)] == r) cl |= bit(e);
  });
  return cl;
}

bool Matroid::is_circuit(Mask x) const {
  if (x == 0 || rank(x) != count(x) - 1) return false;
  bool ok = true;
  for_each_bit(x, [&](int e) { ok = ok && d_->table[x & ~bit(e)] == count(x) - 1; });
  return ok;
}

bool Matroid::is_flat(Mask x) const {
  const int r = rank(x);
  bool ok = true;
  for_each_bit(ground() & ~x, [&](int e) { ok = ok && d_->table[x | bit(e)] > r; });
  return ok;
}

bool Matroid::is_cyclic(Mask x) const {
  const int r = rank(x);
  bool ok = true;
  for_each_bit(x, [&](int e) { ok = ok && d_->table[x & ~bit(e)] == r; });
  return ok;
}

Mask Matroid::loops() const { return closure(0); }

Mask Matroid::coloops() const {
  Mask out = 0;
  for (int e = 0; e < size(); ++e) {
    if (d_->table[ground() & ~bit(e)] < rank()) out |= bit(e);
  }
  return out;
}

Matroid dual(const Matroid& m) {
  const int n = m.size();
  const Mask full = m.ground();
  const auto& t = m.rank_table();
  std::vector<std::uint8_t> table(t.size());
  for (Mask x = 0; x < t.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(count(x) - m.rank() + t[full & ~x]);
  }
  (void)n;
  return Matroid::from_rank_table(m.labels(), std::move(table));
}

Matroid minor(const Matroid& m, Mask deleted, Mask contracted) {
  if (!subset_of(deleted | contracted, m.ground())) throw InputError("minor sets exceed the ground set");
  if (deleted & contracted) throw InputError("deletion and contraction sets overlap");
  const Mask kept = minor_ground(m, deleted, contracted);
  const int k = count(kept);
  const auto& t = m.rank_table();
  const int rc = t[contracted];
  std::vector<Mask> old_bit;
  for_each_bit(kept, [&](int e) { old_bit.push_back(bit(e)); });
  std::vector<Mask> old(std::size_t{1} << k, 0);
  std::vector<std::uint8_t> table(std::size_t{1} << k, 0);
  for (Mask y = 1; y < old.size(); ++y) {
    old[y] = old[y & (y - 1)] | old_bit[lowest(y)];
    table[y] = static_cast<std::uint8_t>(t[old[y] | contracted] - rc);
  }
  return Matroid::from_rank_table(m.labels_of(kept), std::move(table));
}

Matroid delete_set(const Matroid& m, Mask x) { return minor(m, x, 0); }
Matroid contract_set(const Matroid& m, Mask x) { return minor(m, 0, x); }
Matroid restrict_to(const Matroid& m, Mask x) { return minor(m, m.ground() & ~x, 0); }

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw CapacityError("direct sum exceeds 16 elements");
  }
  for (const auto& l : b.labels()) {
    if (a.find(l)) throw InputError("direct sum operands share label '" + l + "'");
  }
  const int na = a.size();
  const Mask fa = a.ground();
  const auto& ta = a.rank_table();
  const auto& tb = b.rank_table();
  std::vector<std::uint8_t> table(std::size_t{1} << labels.size());
  for (Mask x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(ta[x & fa] + tb[x >> na]);
  }
  return Matroid::from_rank_table(std::move(labels), std::move(table));
}

Matroid relabel(const Matroid& m, std::vector<std::string> labels) {
  if (labels.size() != static_cast<std::size_t>(m.size())) throw InputError("relabel: wrong number of labels");
  return Matroid::from_rank_table(std::move(labels), m.rank_table());
}

Partition components_of_minor(const Matroid& m, Mask contracted, Mask kept) {
  if (kept & contracted) throw InputError("components: kept and contracted sets overlap");
  const auto& t = m.rank_table();
  (void)m.rank(kept | contracted);
  auto rk = [&](Mask y) { return t[y | contracted]; };
  Mask basis = 0;
  for_each_bit(kept, [&](int e) {
    if (rk(basis | bit(e)) > rk(basis)) basis |= bit(e);
  });
  const int rb = rk(basis);
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for_each_bit(kept & ~basis, [&](int e) {
    for_each_bit(basis, [&](int b) {
      if (rk((basis & ~bit(b)) | bit(e)) == rb) parent[root(b)] = root(e);
    });
  });
  std::map<int, Mask> groups;
  for_each_bit(kept, [&](int e) { groups[root(e)] |= bit(e); });
  Partition p;
  for (auto& [r, block] : groups) p.blocks.push_back(block);
  std::sort(p.blocks.begin(), p.blocks.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return p;
}

Partition components(const Matroid& m) { return components_of_minor(m, 0, m.ground()); }

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 1; x <= m.ground(); ++x) {
    if (m.is_circuit(x)) out.push_back(x);
    if (x == m.ground()) break;
  }
  return out;
}

std::vector<Mask> cocircuits(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask h : hyperplanes(m)) out.push_back(m.ground() & ~h);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask x = 0; x <= m.ground(); ++x) {
    if (m.is_flat(x)) out.push_back(x);
    if (x == m.ground()) break;
  }
  return out;
}

std::vector<Mask> hyperplanes(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask f : flats(m)) {
    if (m.rank(f) == m.rank() - 1) out.push_back(f);
  }
  return out;
}

std::vector<RankedSet> cyclic_flats(const Matroid& m) {
  std::vector<RankedSet> out;
  for (Mask x = 0; x <= m.ground(); ++x) {
    if (m.is_cyclic(x) && m.is_flat(x)) out.push_back({x, m.rank(x)});
    if (x == m.ground()) break;
  }
  std::sort(out.begin(), out.end(), [](const RankedSet& a, const RankedSet& b) {
    return count(a.set) != count(b.set) ? count(a.set) < count(b.set) : a.set < b.set;
  });
  return out;
}

std::vector<Mask> connected_flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask f : flats(m)) {
    if (components_of_minor(m, 0, f).size() <= 1) out.push_back(f);
  }
  return out;
}

Partition clonal_classes(const Matroid& m) {
  const auto zs = cyclic_flats(m);
  std::vector<std::vector<bool>> sig(m.size(), std::vector<bool>(zs.size()));
  for (int e = 0; e < m.size(); ++e) {
    for (std::size_t i = 0; i < zs.size(); ++i) sig[e][i] = has(zs[i].set, e);
  }
  Partition p;
  Mask done = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (has(done, e)) continue;
    Mask cls = 0;
    for (int f = e; f < m.size(); ++f) {
      if (sig[f] == sig[e]) cls |= bit(f);
    }
    done |= cls;
    p.blocks.push_back(cls);
  }
  return p;
}

bool are_clones(const Matroid& m, int e, int f) {
  (void)m.rank(bit(e) | bit(f));
  if (e == f) return true;
  std::vector<Mask> swapped;
  swapped.reserve(m.bases().size());
  for (Mask b : m.bases()) {
    Mask s = b & ~(bit(e) | bit(f));
    if (has(b, e)) s |= bit(f);
    if (has(b, f)) s |= bit(e);
    swapped.push_back(s);
  }
  std::sort(swapped.begin(), swapped.end());
  return swapped == m.bases();
}

bool is_clone_set(const Matroid& m, Mask x) {
  const auto p = clonal_classes(m);
  for (Mask b : p.blocks) {
    if (subset_of(x, b)) return true;
  }
  return x == 0;
}

bool equal(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
  std::vector<int> map(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return false;
    map[i] = *j;
  }
  std::vector<Mask> mapped;
  mapped.reserve(a.bases().size());
  for (Mask x : a.bases()) {
    Mask y = 0;
    for_each_bit(x, [&](int e) { y |= bit(map[e]); });
    mapped.push_back(y);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.bases();
}

namespace {

struct IsoData {
  std::vector<Mask> circuits;
  std::vector<std::vector<int>> invariant;  // per element
};

IsoData iso_data(const Matroid& m) {
  IsoData d;
  d.circuits = circuits(m);
  d.invariant.assign(m.size(), {});
  const auto zs = cyclic_flats(m);
  for (int e = 0; e < m.size(); ++e) {
    int degree = 0;
    for (Mask b : m.bases()) degree += has(b, e);
    auto& inv = d.invariant[e];
    inv.push_back(degree);
    std::vector<int> circ(m.size() + 1, 0);
    for (Mask c : d.circuits) {
      if (has(c, e)) ++circ[count(c)];
    }
    inv.insert(inv.end(), circ.begin(), circ.end());
    std::vector<int> zprof;
    for (const auto& z : zs) {
      if (has(z.set, e)) zprof.push_back(count(z.set) * 32 + z.rank);
    }
    std::sort(zprof.begin(), zprof.end());
    inv.push_back(-1);
    inv.insert(inv.end(), zprof.begin(), zprof.end());
  }
  return d;
}

std::vector<int> profile(const Matroid& m) {
  std::vector<int> p;
  for (const auto& z : cyclic_flats(m)) p.push_back(count(z.set) * 32 + z.rank);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return std::nullopt;
  if (profile(a) != profile(b)) return std::nullopt;
  const IsoData da = iso_data(a), db = iso_data(b);
  if (da.circuits.size() != db.circuits.size()) return std::nullopt;
  {
    auto ia = da.invariant, ib = db.invariant;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return std::nullopt;
  }
  const int n = a.size();
  // Circuits of a grouped by their largest element, so each can be checked once mapped.
  std::vector<std::vector<Mask>> by_top(n);
  for (Mask c : da.circuits) by_top[31 - std::countl_zero(c)].push_back(c);
  std::vector<int> map(n, -1);
  Mask used = 0;
  auto image = [&](Mask x) {
    Mask y = 0;
    for_each_bit(x, [&](int e) { y |= bit(map[e]); });
    return y;
  };
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (has(used, j) || da.invariant[i] != db.invariant[j]) continue;
      map[i] = j;
      bool ok = true;
      for (Mask c : by_top[i]) {
        if (!b.is_circuit(image(c))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= bit(j);
        if (go(i + 1)) return true;
        used &= ~bit(j);
      }
      map[i] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::vector<Mask> mapped;
  for (Mask x : a.bases()) mapped.push_back(image(x));
  std::sort(mapped.begin(), mapped.end());
  if (mapped != b.bases()) throw InternalError("isomorphism search accepted a non-isomorphism");
  return map;
}

bool isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

std::string to_string(const Matroid& m, Mask x) {
  std::string s = "{";
  bool first = true;
  for_each_bit(x, [&](int e) {
    if (!first) s += ",";
    s += m.label(e);
    first = false;
  });
  return s + "}";
}

}  // namespace posmat
