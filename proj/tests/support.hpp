#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posmat/bonding.hpp"
#include "posmat/constructors.hpp"
#include "posmat/exmin.hpp"
#include "posmat/matroid.hpp"
#include "posmat/order.hpp"
#include "posmat/positroid.hpp"
#include "posmat/random.hpp"

namespace posmat::testing {

using Labels = std::vector<std::string>;

Mask mask(const Matroid& m, const Labels& labels);
LinearOrder order(const Matroid& m, const Labels& labels);
LinearOrder order(const Matroid& m, const std::string& csv);

// Rank-3 matroid given by its nontrivial lines and parallel classes.
Matroid rank3(const Labels& ground, const std::vector<Labels>& lines, const std::vector<Labels>& parallel = {});

Matroid k4();            // graphic, edges labelled 1..6 with the lines of gen_k4
Matroid example_rank5();  // four U_{2,3} glued at 3, 6, 9 along the line {3, 6, 9}
Matroid truncated_triangles();          // rank-4 truncation of example_rank5 with letter labels
std::pair<Matroid, Matroid> two_lines_pair();
std::pair<Matroid, Matroid> parallel_pair();
std::pair<Matroid, Matroid> variant_pair();
std::pair<Matroid, Matroid> amalgam_pair();

// Brute-force oracles. None of these call the library routine they check.
int rank_from_bases(const Matroid& m, Mask x);
bool noncrossing_by_definition(const LinearOrder& ord, const std::vector<Mask>& blocks);
std::vector<Mask> gale_filter_bases(int n, Mask lower, const LinearOrder& ord);
bool has_transversal(const std::vector<Mask>& sets, Mask x);
bool same_bases(const Matroid& a, const Matroid& b);  // label-aligned
bool is_quotient(const Matroid& q, const Matroid& m);  // label-aligned: flats of q are flats of m
bool is_interval_oracle(const LinearOrder& ord, Mask x);
bool is_cyclic_interval_oracle(const LinearOrder& ord, Mask x);

// Orders with element 0 first and reversal factored out (for n >= 3).
void for_each_dihedral_order(int n, const std::function<void(const LinearOrder&)>& f);
// All n! orders.
void for_each_order(int n, const std::function<void(const LinearOrder&)>& f);
bool has_positroid_order_brute(const Matroid& m);

// Small named matroids used across tests.
std::vector<std::pair<std::string, Matroid>> catalogue(int max_n);

// A pair sharing t1..tk with the other labels prefixed m / n.
struct BondPair {
  Matroid m, n;
};
BondPair random_bond_pair(Rng& rng, int max_side, int max_shared);

// Instances for the two bonding theorems.
BondPair clone_bond_pair(Rng& rng, int max_side, int max_shared);
struct Check2Instance {
  Matroid m, n;
  Labels p;
};
std::optional<Check2Instance> random_check2_instance(Rng& rng);

}  // namespace posmat::testing
