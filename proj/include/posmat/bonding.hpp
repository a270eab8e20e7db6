#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posmat/matroid.hpp"
#include "posmat/positroid.hpp"

namespace posmat {

// The auxiliary matroid H and the data needed to read the bonding off it.
// H lives on E(M), then E(N) with each shared t renamed to t#s, then t#q for each
// shared t; q is added freely to the closure of {t, t#s}.
struct BondingInstance {
  std::vector<std::string> shared;  // T, in the order of E(M)
  Matroid h;
  Mask s_mask = 0;  // S in H
  Mask q_mask = 0;  // Q in H
  Matroid result;   // H / Q \ S, on E(M) followed by E(N) - T
};

BondingInstance bonding_instance(const Matroid& m, const Matroid& n);
Matroid bond(const Matroid& m, const Matroid& n);
// Bonding when the shared set is independent in both.
Matroid free_amalgam(const Matroid& m, const Matroid& n);

// Shared labels as a mask of m.
Mask shared_mask(const Matroid& m, const Matroid& n);

struct Clause {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TheoremReport {
  enum class Conclusion { NotAsserted, Holds, Fails, Undetermined };
  std::vector<Clause> clauses;
  bool hypotheses_hold = false;
  Conclusion conclusion = Conclusion::NotAsserted;
  std::optional<Matroid> bonding;
  std::optional<CheckReport> bonding_check;  // positroid search on the bonding
  bool verdict() const { return hypotheses_hold && conclusion == Conclusion::Holds; }
};

std::string conclusion_name(TheoremReport::Conclusion c);

// Loopless positroids M, N whose shared set is nonempty, independent and a clone set
// in both: the bonding is a positroid.
TheoremReport bond_theorem_check_1(const Matroid& m, const Matroid& n, std::uint64_t budget = kDefaultBudget);

// Variant with a nonempty proper subset P of the shared set T: T independent in both,
// M|cl(T) and N|cl(T) connected, P clones in both, every non-singleton connected flat
// meeting T - P contains T, and each side has a positroid order in which some element
// of P is cyclically next to some element of T - P.
TheoremReport bond_theorem_check_2(const Matroid& m, const Matroid& n, const std::vector<std::string>& p,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace posmat
