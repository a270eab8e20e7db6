#include "bonding_identities.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace posmat;
using namespace posmat::testing;

namespace {

Matroid amalgam_bond() {
  const auto [m, n] = amalgam_pair();
  return bond(m, n);
}

}  // namespace

TEST_CASE("two lines glued along a shared pair") {
  const auto [m, n] = two_lines_pair();
  const Matroid b = bond(m, n);
  CHECK(b.size() == 12);
  CHECK(b.rank() == 4);
  CHECK(same_bases(b, free_amalgam(m, n)));
  CHECK(same_bases(restrict_to(b, mask(b, m.labels())), m));
  CHECK(same_bases(restrict_to(b, mask(b, n.labels())), n));
  CHECK_FALSE(b.is_flat(mask(b, {"4", "6", "9", "11"})));
  CHECK(b.is_flat(mask(b, {"1", "2", "3", "7", "8", "12"})));
  CHECK(is_positroid(b).verdict);
}

TEST_CASE("bonding rank-2 uniform matroids along two points") {
  for (int q = 2; q <= 6; ++q) {
    const Matroid b = bond(uniform(2, numeric_labels(q + 1)), uniform(2, numeric_labels(q + 1, q)));
    CHECK(equal(b, uniform(2, numeric_labels(2 * q))));
  }
}

TEST_CASE("parallel classes on the shared set") {
  const auto [m, n] = parallel_pair();
  const Matroid b = bond(m, n);
  CHECK(b.rank() == 4);
  CHECK(b.loops() == mask(b, {"1", "2"}));
  const auto comps = components(b);
  int pairs = 0;
  for (Mask blk : comps.blocks) {
    if (count(blk) == 2) {
      ++pairs;
      CHECK(isomorphic(restrict_to(b, blk), uniform(1, 2)));
    }
  }
  CHECK(pairs == 4);
  CHECK(is_positroid(b).verdict);
}

TEST_CASE("bonding is symmetric") {
  for (const auto& [m, n] : {two_lines_pair(), parallel_pair(), variant_pair(), amalgam_pair()}) CHECK(same_bases(bond(m, n), bond(n, m)));
}

TEST_CASE("free amalgam") {
  const Matroid a = uniform(2, Labels{"x", "y", "p"}), c = uniform(2, Labels{"p", "z", "w"});
  CHECK(same_bases(free_amalgam(a, c), parallel_connection(a, c)));
  const auto [m, n] = parallel_pair();
  CHECK_THROWS_AS(free_amalgam(m, n), PreconditionError);
  CHECK_THROWS_AS(bond(uniform(1, Labels{"a"}), uniform(1, Labels{"b"})), PreconditionError);
}

TEST_CASE("capacity of the auxiliary matroid") {
  Labels lm, ln;
  for (int i = 0; i < 8; ++i) lm.push_back("m" + std::to_string(i));
  for (int i = 0; i < 6; ++i) ln.push_back("n" + std::to_string(i));
  lm.push_back("t");
  ln.push_back("t");
  CHECK_THROWS_AS(bond(uniform(3, lm), uniform(3, ln)), CapacityError);
  ln.pop_back();
  ln.pop_back();
  ln.push_back("t");
  CHECK_NOTHROW(bond(uniform(3, lm), uniform(3, ln)));
}

TEST_CASE("first bonding theorem") {
  const auto [m2, n2] = two_lines_pair();
  const auto r2 = bond_theorem_check_1(m2, n2);
  CHECK(r2.hypotheses_hold);
  CHECK(r2.conclusion == TheoremReport::Conclusion::Holds);
  CHECK(r2.verdict());

  const auto [m5, n5] = amalgam_pair();
  const auto r5 = bond_theorem_check_1(m5, n5);
  CHECK_FALSE(r5.hypotheses_hold);
  CHECK_FALSE(r5.verdict());
  CHECK_FALSE(is_positroid(amalgam_bond()).verdict);

  const Matroid a = uniform(2, Labels{"x", "y", "t"}), c = uniform(2, Labels{"t", "z", "w"});
  CHECK(bond_theorem_check_1(a, c).verdict());
}

TEST_CASE("second bonding theorem") {
  const auto [m, n] = variant_pair();
  const auto r = bond_theorem_check_2(m, n, {"5"});
  CHECK(r.hypotheses_hold);
  CHECK(r.verdict());
  CHECK(is_positroid(bond(m, n)).verdict);
  CHECK_FALSE(bond_theorem_check_2(m, n, {"5", "10"}).hypotheses_hold);
  CHECK_FALSE(bond_theorem_check_2(m, n, {}).hypotheses_hold);
  CHECK_THROWS_AS(bond_theorem_check_2(m, n, {"1"}), InputError);
}

TEST_CASE("property: bonding identities on random pairs") {
  Rng rng(41);
  IdentityTally tally;
  for (int it = 0; it < 150; ++it) {
    const BondPair p = random_bond_pair(rng, 6, 3);
    check_bonding_identities(p.m, p.n, rng, tally);
  }
  for (int it = 0; it < 60; ++it) check_direct_sum_identity(rng, tally);
  INFO(tally.first_failure);
  CHECK(tally.failures() == 0);
  for (const char* name : {"symmetry", "restriction", "contraction containing T", "contraction off T",
                           "contraction inside T", "free amalgam", "flat rank", "direct sum"}) {
    INFO(name);
    CHECK(tally.checked(name) > 0);
  }
}

TEST_CASE("property: first theorem on clone instances") {
  Rng rng(42);
  int asserted = 0;
  for (int it = 0; it < 40; ++it) {
    const BondPair p = clone_bond_pair(rng, 6, 3);
    const auto r = bond_theorem_check_1(p.m, p.n);
    if (!r.hypotheses_hold) continue;
    ++asserted;
    CHECK(r.conclusion == TheoremReport::Conclusion::Holds);
    CHECK(has_positroid_order_brute(bond(p.m, p.n)) == true);
  }
  CHECK(asserted > 20);
}

TEST_CASE("property: clone classes and connected flats") {
  // With the shared set a clone set, non-singleton connected flats contain it or avoid it.
  Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    const BondPair p = clone_bond_pair(rng, 6, 3);
    const Mask t = shared_mask(p.m, p.n);
    if (!p.m.is_independent(t) || !p.n.is_independent(p.n.mask_of(p.m.labels_of(t)))) continue;
    const Matroid b = bond(p.m, p.n);
    const Mask tb = b.mask_of(p.m.labels_of(t));
    CHECK(is_clone_set(b, tb));
    for (Mask f : connected_flats(b)) {
      if (count(f) < 2) continue;
      CHECK((subset_of(tb, f) || (f & tb) == 0));
    }
  }
}

TEST_CASE("restriction to one side") {
  // T dependent in M can still leave N untouched when T is dependent in N as well.
  const Matroid m = uniform(0, Labels{"t"}), n = uniform(0, Labels{"t", "x"});
  CHECK(same_bases(restrict_to(bond(m, n), mask(bond(m, n), n.labels())), n));
  // Independent in N: the restriction drops rank.
  const Matroid m2 = uniform(1, Labels{"1", "2"}), n2 = uniform(2, Labels{"1", "2", "3"});
  const Matroid b = bond(m2, n2);
  CHECK(equal(b, uniform(1, numeric_labels(3))));
}
