#include "posmat/bonding.hpp"

#include "posmat/constructors.hpp"

namespace posmat {

Mask shared_mask(const Matroid& m, const Matroid& n) {
  Mask t = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (n.find(m.label(i))) t |= bit(i);
  }
  return t;
}

BondingInstance bonding_instance(const Matroid& m, const Matroid& n) {
  for (const auto* side : {&m, &n}) {
    for (const auto& l : side->labels()) {
      if (l.find('#') != std::string::npos) throw InputError("labels may not contain '#'");
    }
  }
  const Mask t = shared_mask(m, n);
  if (t == 0) throw PreconditionError("bonding: the ground sets are disjoint");
  if (m.size() + n.size() + count(t) > kMaxElements) {
    throw CapacityError("bonding: the auxiliary matroid would have " + std::to_string(m.size() + n.size() + count(t)) +
                        " elements; at most 16 are supported");
  }
  BondingInstance inst;
  inst.shared = m.labels_of(t);
  std::vector<std::string> nl = n.labels();
  for (auto& l : nl) {
    if (m.find(l)) l += "#s";
  }
  Matroid h = direct_sum(m, relabel(n, nl));
  for (const auto& label : inst.shared) {
    const Mask pair = bit(m.index_of(label)) | bit(h.index_of(label + "#s"));
    h = principal_extension(h, pair, label + "#q");
    inst.s_mask |= bit(h.index_of(label + "#s"));
    inst.q_mask |= bit(h.index_of(label + "#q"));
  }
  inst.result = minor(h, inst.s_mask, inst.q_mask);
  inst.h = std::move(h);
  return inst;
}

Matroid bond(const Matroid& m, const Matroid& n) { return bonding_instance(m, n).result; }

Matroid free_amalgam(const Matroid& m, const Matroid& n) {
  const Mask tm = shared_mask(m, n), tn = shared_mask(n, m);
  if (!m.is_independent(tm) || !n.is_independent(tn)) {
    throw PreconditionError("free amalgam: the shared set must be independent in both matroids");
  }
  return bond(m, n);
}

std::string conclusion_name(TheoremReport::Conclusion c) {
  switch (c) {
    case TheoremReport::Conclusion::NotAsserted: return "not asserted";
    case TheoremReport::Conclusion::Holds: return "holds";
    case TheoremReport::Conclusion::Fails: return "fails";
    case TheoremReport::Conclusion::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

void add(TheoremReport& rep, std::string name, bool holds, std::string detail = {}) {
  rep.clauses.push_back({std::move(name), holds, std::move(detail)});
}

void positroid_clause(TheoremReport& rep, const std::string& name, const Matroid& x, std::uint64_t budget) {
  const auto r = is_positroid(x, budget);
  add(rep, name, r.verdict, r.budget_exhausted ? "budget exhausted" : "");
}

void finish(TheoremReport& rep, const Matroid& m, const Matroid& n, std::uint64_t budget) {
  rep.hypotheses_hold = true;
  for (const auto& c : rep.clauses) rep.hypotheses_hold = rep.hypotheses_hold && c.holds;
  try {
    rep.bonding = bond(m, n);
  } catch (const Error& e) {
    add(rep, "bonding constructible", false, e.what());
    rep.hypotheses_hold = false;
    return;
  }
  rep.bonding_check = is_positroid(*rep.bonding, budget);
  if (!rep.hypotheses_hold) return;
  if (rep.bonding_check->budget_exhausted) {
    rep.conclusion = TheoremReport::Conclusion::Undetermined;
  } else {
    rep.conclusion = rep.bonding_check->verdict ? TheoremReport::Conclusion::Holds : TheoremReport::Conclusion::Fails;
  }
}

}  // namespace

TheoremReport bond_theorem_check_1(const Matroid& m, const Matroid& n, std::uint64_t budget) {
  TheoremReport rep;
  const Mask tm = shared_mask(m, n), tn = shared_mask(n, m);
  add(rep, "M has no loops", m.loops() == 0);
  add(rep, "N has no loops", n.loops() == 0);
  positroid_clause(rep, "M is a positroid", m, budget);
  positroid_clause(rep, "N is a positroid", n, budget);
  add(rep, "T is nonempty", tm != 0);
  add(rep, "T is independent in M", m.is_independent(tm));
  add(rep, "T is independent in N", n.is_independent(tn));
  add(rep, "T is a set of clones in M", is_clone_set(m, tm));
  add(rep, "T is a set of clones in N", is_clone_set(n, tn));
  finish(rep, m, n, budget);
  return rep;
}

namespace {

// Every non-singleton connected flat meeting t_rest contains t.
bool flats_meeting_contain(const Matroid& x, Mask t, Mask t_rest) {
  for (Mask f : connected_flats(x)) {
    if (count(f) >= 2 && (f & t_rest) && !subset_of(t, f)) return false;
  }
  return true;
}

TheoremReport::Conclusion order_condition(const Matroid& x, Mask p, Mask t_rest, std::uint64_t budget, bool& holds) {
  holds = false;
  if (x.loops() != 0) return TheoremReport::Conclusion::NotAsserted;
  const int n = x.size();
  const auto accept = [&](const LinearOrder& o) {
    for (int i = 0; i < n; ++i) {
      const int a = o.at(i), b = o.at((i + 1) % n);
      if ((has(p, a) && has(t_rest, b)) || (has(p, b) && has(t_rest, a))) return true;
    }
    return false;
  };
  const auto res = search_positroid_orders(x, accept, budget);
  holds = res.status == SearchResult::Status::Found;
  return res.status == SearchResult::Status::BudgetExhausted ? TheoremReport::Conclusion::Undetermined
                                                             : TheoremReport::Conclusion::NotAsserted;
}

}  // namespace

TheoremReport bond_theorem_check_2(const Matroid& m, const Matroid& n, const std::vector<std::string>& p,
                                   std::uint64_t budget) {
  TheoremReport rep;
  const Mask tm = shared_mask(m, n), tn = shared_mask(n, m);
  Mask pm = 0, pn = 0;
  for (const auto& l : p) {
    auto i = m.find(l);
    if (!i || !has(tm, *i)) throw InputError("P contains '" + l + "', which is not a shared element");
    pm |= bit(*i);
    pn |= bit(n.index_of(l));
  }
  add(rep, "M has no loops", m.loops() == 0);
  add(rep, "N has no loops", n.loops() == 0);
  positroid_clause(rep, "M is a positroid", m, budget);
  positroid_clause(rep, "N is a positroid", n, budget);
  add(rep, "(1) T is independent in M", m.is_independent(tm));
  add(rep, "(1) T is independent in N", n.is_independent(tn));
  add(rep, "(2) M|cl(T) is connected", is_connected(restrict_to(m, m.closure(tm))));
  add(rep, "(2) N|cl(T) is connected", is_connected(restrict_to(n, n.closure(tn))));
  add(rep, "(3) P is a nonempty proper subset of T", pm != 0 && pm != tm);
  add(rep, "(3a) P is a set of clones in M", is_clone_set(m, pm));
  add(rep, "(3a) P is a set of clones in N", is_clone_set(n, pn));
  add(rep, "(3b) in M, connected flats meeting T-P contain T", flats_meeting_contain(m, tm, tm & ~pm));
  add(rep, "(3b) in N, connected flats meeting T-P contain T", flats_meeting_contain(n, tn, tn & ~pn));
  bool undetermined = false;
  for (auto [x, pp, tt, name] : {std::tuple{&m, pm, tm, "M"}, std::tuple{&n, pn, tn, "N"}}) {
    bool holds = false;
    const auto c = order_condition(*x, pp, tt & ~pp, budget, holds);
    undetermined = undetermined || c == TheoremReport::Conclusion::Undetermined;
    add(rep, std::string("some positroid order of ") + name + " has P next to T-P", holds,
        c == TheoremReport::Conclusion::Undetermined ? "budget exhausted" : "");
  }
  finish(rep, m, n, budget);
  if (undetermined && rep.conclusion == TheoremReport::Conclusion::NotAsserted) {
    rep.conclusion = TheoremReport::Conclusion::Undetermined;
  }
  return rep;
}

}  // namespace posmat
