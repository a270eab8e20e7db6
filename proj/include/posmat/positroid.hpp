#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posmat/matroid.hpp"
#include "posmat/order.hpp"

namespace posmat {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Method { Necklace, Sorting, Cip, DualCyclic, Rank2, ConnectedFlats, Flags, Components, Search };

std::string method_name(Method m);
Method parse_method(const std::string& name);  // throws InputError

// Witnesses. Masks and element indices refer to the matroid handed to the check.
struct BasisWitness {  // a set that is a basis of exactly one of M and the necklace matroid
  Mask set = 0;
  bool basis_of_matroid = false;
};
struct SortWitness {  // bases whose sorted halves are not both bases
  Mask b1 = 0, b2 = 0, odd = 0, even = 0;
};
struct FlatComponentWitness {  // connected flat F and component K of M/F not inside a gap of F
  Mask flat = 0, component = 0;
};
struct CyclicSetWitness {  // cyclic set A with M/A connected, M|A not the sum over its runs
  Mask set = 0;
};
struct MinorWitness {  // (M/contracted)|{a,b,e,f}: circuit {a,b}, cocircuit {e,f}, interleaved
  Mask contracted = 0;
  int a = 0, b = 0, e = 0, f = 0;
};
struct FlatWitness {  // flat with M|F and M/F connected that is not a cyclic interval
  Mask flat = 0;
};
struct FlagWitness {  // flag of flats whose difference partition crosses
  std::vector<Mask> flag;
};
struct CrossingWitness {  // two components crossing in the order
  Mask block1 = 0, block2 = 0;
};
struct SearchWitness {  // exhaustive search over orders of this component found none
  Mask component = 0;
  std::uint64_t nodes = 0;
};

using Certificate = std::variant<std::monostate, BasisWitness, SortWitness, FlatComponentWitness,
                                 CyclicSetWitness, MinorWitness, FlatWitness, FlagWitness, CrossingWitness,
                                 SearchWitness>;

struct CheckReport {
  Method method = Method::Cip;
  bool verdict = false;
  bool budget_exhausted = false;
  std::optional<LinearOrder> order;  // order tested, or order found by a search
  Mask removed = 0;                  // loops (coloops for DualCyclic) deleted first
  std::uint64_t nodes = 0;
  Certificate certificate;
};

std::string describe(const Matroid& m, const CheckReport& r);

// Grassmann necklace along the order: entry i-1 is the Gale basis for shift(i).
std::vector<Mask> grassmann_necklace(const Matroid& m, const LinearOrder& ord);
bool is_grassmann_necklace(const LinearOrder& ord, const std::vector<Mask>& necklace);
// Intersection of the nested matroids of the shifted necklace entries.
Matroid necklace_matroid(std::vector<std::string> labels, const std::vector<Mask>& necklace,
                         const LinearOrder& ord);

CheckReport is_positroid_order_necklace(const Matroid& m, const LinearOrder& ord);
CheckReport is_positroid_order_sorting(const Matroid& m, const LinearOrder& ord);
CheckReport is_positroid_order_cip(const Matroid& m, const LinearOrder& ord);          // loopless
CheckReport is_positroid_order_dual_cyclic(const Matroid& m, const LinearOrder& ord);  // coloopless
CheckReport is_positroid_order_rank2(const Matroid& m, const LinearOrder& ord);
CheckReport check_connected_flat_order(const Matroid& m, const LinearOrder& ord);  // connected, r >= 2
CheckReport check_flag_partitions(const Matroid& m, const LinearOrder& ord, int k = 2);
CheckReport is_positroid_order_by_components(const Matroid& m, const LinearOrder& ord);

// Deletes loops (coloops for DualCyclic) and runs the chosen test.
CheckReport check_positroid_order(const Matroid& m, const LinearOrder& ord, Method method, int k = 2);

// Pairs (F, components of M/F with at least two elements) for connected flats F,
// 2 <= |F| <= n-2, of a loopless matroid.
struct CipConstraint {
  Mask flat = 0;
  std::vector<Mask> components;
};
std::vector<CipConstraint> cip_constraints(const Matroid& m);
std::optional<FlatComponentWitness> cip_violation(const std::vector<CipConstraint>& cons, const LinearOrder& ord);

// Flats F, 2 <= |F| <= n-2, with M|F and M/F connected.
std::vector<Mask> interval_constraints(const Matroid& m);

// Builds a forbidden rank-2 minor from a failing (F, K) pair.
MinorWitness rank2_witness_from_cip(const Matroid& m, const LinearOrder& ord, Mask flat, Mask component);
bool is_forbidden_minor(const Matroid& m, const LinearOrder& ord, const MinorWitness& w);

// Independently re-checks the certificate of a report against m.
bool replay(const Matroid& m, const CheckReport& r);

struct SearchResult {
  enum class Status { Found, NotFound, BudgetExhausted } status = Status::NotFound;
  std::optional<LinearOrder> order;
  std::uint64_t nodes = 0;
};

// Depth-first search over positroid orders of a loopless matroid, with element 0 first
// and reversal factored out. Returns the first order accepted by `accept`, which must be
// invariant under rotation and reversal.
SearchResult search_positroid_orders(const Matroid& m, const std::function<bool(const LinearOrder&)>& accept,
                                     std::uint64_t budget = kDefaultBudget);

// Loops removed, components searched separately, orders concatenated, loops appended.
CheckReport find_positroid_order(const Matroid& m, std::uint64_t budget = kDefaultBudget);
CheckReport is_positroid(const Matroid& m, std::uint64_t budget = kDefaultBudget);

// Concatenates positroid orders of the components (given in components(m) order,
// each over the component's own indices).
LinearOrder assemble_component_order(const Matroid& m, const std::vector<LinearOrder>& parts);

// Rearranges a positroid order so each clone set is a cyclic interval. With two or more
// sets, x in sets[0] and y in sets[1] must be cyclically consecutive; then the union of
// the first two sets is a cyclic interval as well.
LinearOrder clone_interval_order(const Matroid& m, const LinearOrder& ord, const std::vector<Mask>& sets,
                                 int x = -1, int y = -1);

}  // namespace posmat
