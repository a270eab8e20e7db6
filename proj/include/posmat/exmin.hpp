#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posmat/matroid.hpp"
#include "posmat/positroid.hpp"

namespace posmat {

enum class Family { GenK4, GenK4Var1, PavingK, SparsePQ, SparsePQST, WhirlFreeExt, WhirlVariant, Closing1, Closing2 };

std::string family_name(Family f);
Family parse_family(const std::string& name);  // throws InputError
std::vector<Family> all_families();

// Six blocks X1..X6 labelled 1..n in block order. Cyclic flats are the empty set, E and
// the unions over the lines {1,2,3}, {1,4,5}, {3,4,6}, {2,5,6} of M(K4).
Matroid gen_k4(const std::array<int, 6>& x);
Matroid gen_k4_var1(int a, int b, int c, int s, int r);
// Paving family with blocks X1..X6 and an extra element p.
Matroid gen_paving_k(int a, int b, int c, int k);
Matroid gen_sparse_pq(int a, int b, int c);
Matroid gen_sparse_pqst(int a, int b, int c);
// m has n entries, x has 2n entries.
Matroid gen_whirl_freeext(int r, int n, const std::vector<int>& m, const std::vector<int>& x);
Matroid gen_whirl_variant(int r);
// variant 1: circuits through a common point; variant 2: circuits hung off a 3-point line.
Matroid gen_closing_family(int n, int k, int variant);

// Flat parameter vector per family, as used by the command line.
Matroid generate(Family f, const std::vector<int>& params);
// Parameter vectors of valid members with at most max_size elements.
std::vector<std::vector<int>> sweep_params(Family f, int max_size);

// Positroid verdicts keyed by the exact ground labels and basis family.
class PositroidCache {
 public:
  CheckReport check(const Matroid& m, std::uint64_t budget);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<std::string, CheckReport> cache_;
};

struct ExminReport {
  bool verdict = false;
  bool budget_exhausted = false;
  std::string failure;  // first reason the verdict is false
  CheckReport self;
  std::vector<std::pair<std::string, CheckReport>> deletions;     // by element label
  std::vector<std::pair<std::string, CheckReport>> contractions;  // by element label
};

// Not a positroid, but every single-element deletion and contraction is.
ExminReport verify_excluded_minor(const Matroid& m, PositroidCache* cache = nullptr,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace posmat
