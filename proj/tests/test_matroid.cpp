#include "doctest.h"
#include "support.hpp"

using namespace posmat;
using namespace posmat::testing;

namespace {

Mask m_of(const Matroid& m, std::initializer_list<const char*> labels) {
  Labels l(labels.begin(), labels.end());
  return m.mask_of(l);
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("rank, closure and independence on small examples") {
  const Matroid u = uniform(2, 4);
  CHECK(u.rank(m_of(u, {"1", "2", "3"})) == 2);
  CHECK(u.rank(0) == 0);
  CHECK(u.closure(m_of(u, {"1"})) == m_of(u, {"1"}));
  CHECK(u.closure(u.ground()) == u.ground());
  CHECK(u.is_independent(m_of(u, {"1", "2"})));
  CHECK_FALSE(u.is_independent(m_of(u, {"1", "2", "3"})));

  const Matroid k = gen_k4({1, 1, 1, 1, 1, 1});
  CHECK(k.rank(m_of(k, {"1", "2", "3"})) == 2);
  CHECK(k.closure(m_of(k, {"1", "2"})) == m_of(k, {"1", "2", "3"}));
  CHECK_FALSE(k.is_independent(m_of(k, {"1", "2", "3"})));
  CHECK_THROWS_AS(k.rank(bit(6)), InputError);
}

TEST_CASE("duality") {
  CHECK(equal(dual(uniform(2, 4)), uniform(2, 4)));
  CHECK(equal(dual(uniform(1, 3)), uniform(2, 3)));
  const Matroid dk = dual(k4());
  CHECK(dk.rank() == 3);
  CHECK(dk.size() == 6);
}

TEST_CASE("minors") {
  const Matroid k = gen_k4({1, 1, 1, 1, 1, 1});
  const Matroid d = delete_set(k, m_of(k, {"6"}));
  CHECK(d.size() == 5);
  CHECK(d.rank() == 3);
  // Brute force: the only nontrivial lines left are {1,2,3} and {1,4,5}.
  std::vector<Mask> lines;
  for (const auto& z : cyclic_flats(d)) {
    if (z.rank == 2) lines.push_back(z.set);
  }
  CHECK(sorted(lines) == sorted({m_of(d, {"1", "2", "3"}), m_of(d, {"1", "4", "5"})}));
  CHECK(equal(minor(k, 0, 0), k));
  CHECK_THROWS_AS(minor(k, bit(0), bit(0)), InputError);

  const auto [m, n] = amalgam_pair();
  const Matroid b = bond(m, n);
  CHECK(isomorphic(delete_set(b, m_of(b, {"f"})), whirl(4)));
}

TEST_CASE("direct sums and components") {
  const Matroid a = uniform(1, Labels{"a"}), b = uniform(1, Labels{"b"});
  const Matroid ab = direct_sum(a, b);
  CHECK(ab.rank() == 2);
  CHECK(ab.bases().size() == 1);
  const Matroid two = direct_sum(uniform(1, Labels{"a", "b"}), uniform(1, Labels{"c", "d"}));
  CHECK(two.bases().size() == 4);
  CHECK(components(two).size() == 2);
  CHECK(components(uniform(2, 4)).size() == 1);
  CHECK_THROWS_AS(direct_sum(a, a), InputError);

  const auto [m, n] = parallel_pair();
  const Matroid bd = bond(m, n);
  std::vector<Mask> blocks = components(bd).blocks;
  CHECK(sorted(blocks) == sorted({m_of(bd, {"a", "b"}), m_of(bd, {"c", "d"}), m_of(bd, {"e", "f"}),
                                  m_of(bd, {"g", "h"}), m_of(bd, {"1"}), m_of(bd, {"2"})}));
}

TEST_CASE("connectivity conventions") {
  CHECK(components(Matroid()).size() == 0);
  CHECK(is_connected(Matroid()));
  CHECK(is_connected(uniform(0, 1)));
  CHECK(is_connected(uniform(1, 1)));
}

TEST_CASE("circuits") {
  CHECK(circuits(uniform(2, 4)).size() == 4);
  for (Mask c : circuits(uniform(2, 4))) CHECK(count(c) == 3);
  CHECK(circuits(uniform(1, 1)).empty());
  const auto cs = circuits(k4());
  CHECK(cs.size() == 7);
  CHECK(std::count_if(cs.begin(), cs.end(), [](Mask c) { return count(c) == 3; }) == 4);
  CHECK(std::count_if(cs.begin(), cs.end(), [](Mask c) { return count(c) == 4; }) == 3);
}

TEST_CASE("cyclic flats") {
  const auto zu = cyclic_flats(uniform(2, 4));
  REQUIRE(zu.size() == 2);
  CHECK(zu[0] == RankedSet{0, 0});
  CHECK(zu[1] == RankedSet{0b1111, 2});
  const auto z1 = cyclic_flats(uniform(1, 1));
  REQUIRE(z1.size() == 1);
  CHECK(z1[0] == RankedSet{0, 0});

  const Matroid m = example_rank5();
  std::vector<Mask> expected{0, m.ground()};
  const std::vector<Labels> lines{{"3", "6", "9"}, {"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}};
  for (const auto& l : lines) expected.push_back(m.mask_of(l));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) expected.push_back(m.closure(m.mask_of(lines[i]) | m.mask_of(lines[j])));
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::vector<Mask> got;
  for (const auto& z : cyclic_flats(m)) got.push_back(z.set);
  CHECK(sorted(got) == expected);
}

TEST_CASE("connected flats") {
  const Matroid k = gen_k4({1, 1, 1, 1, 1, 1});
  std::vector<Mask> proper;
  for (Mask f : connected_flats(k)) {
    if (count(f) >= 2 && f != k.ground()) proper.push_back(f);
  }
  CHECK(sorted(proper) == sorted({m_of(k, {"1", "2", "3"}), m_of(k, {"1", "4", "5"}), m_of(k, {"3", "4", "6"}),
                                  m_of(k, {"2", "5", "6"})}));

  const Matroid u = uniform(2, 4);
  std::vector<Mask> nonempty;
  for (Mask f : connected_flats(u)) {
    if (f != 0) nonempty.push_back(f);
  }
  CHECK(sorted(nonempty) == sorted({0b1111, 0b0001, 0b0010, 0b0100, 0b1000}));

  const Matroid fu = delete_set(truncated_triangles(), m_of(truncated_triangles(), {"u"}));
  proper.clear();
  for (Mask f : connected_flats(fu)) {
    if (count(f) >= 2 && f != fu.ground()) proper.push_back(f);
  }
  auto s = [&](std::initializer_list<const char*> l) { return m_of(fu, l); };
  CHECK(sorted(proper) == sorted({s({"a", "s", "t"}), s({"b", "p", "q"}), s({"a", "b", "c"}),
                                  s({"a", "s", "t", "b", "c"}), s({"b", "p", "q", "a", "c"})}));
}

TEST_CASE("clonal classes") {
  CHECK(clonal_classes(uniform(2, 4)).size() == 1);
  const Matroid m = example_rank5();
  auto s = [&](std::initializer_list<const char*> l) { return m_of(m, l); };
  CHECK(sorted(clonal_classes(m).blocks) ==
        sorted({s({"1", "2"}), s({"4", "5"}), s({"7", "8"}), s({"3"}), s({"6"}), s({"9"})}));
  const Matroid f2 = two_lines_pair().first;
  CHECK(is_clone_set(f2, m_of(f2, {"1", "2"})));
  CHECK(are_clones(f2, f2.index_of("1"), f2.index_of("2")));
}

TEST_CASE("equality and isomorphism") {
  const Matroid u = uniform(2, 4);
  CHECK(equal(u, u));
  const Matroid r = relabel(u, {"a", "b", "c", "d"});
  CHECK_FALSE(equal(u, r));
  CHECK(isomorphic(u, r));
  CHECK_FALSE(isomorphic(whirl(3), k4()));
  CHECK(isomorphic(gen_k4({1, 1, 1, 1, 1, 1}), k4()));
}

TEST_CASE("property: rank axioms, duality and cyclic flats on random matroids") {
  Rng rng(11);
  for (int it = 0; it < 150; ++it) {
    const Matroid m = random_matroid(rng, uniform_int(rng, 0, 8));
    const Mask e = m.ground();
    for (Mask x = 0; x <= e; ++x) {
      REQUIRE(m.rank(x) == rank_from_bases(m, x));
      for (int i = 0; i < m.size(); ++i) {
        if (has(x, i)) continue;
        const int d = m.rank(x | bit(i)) - m.rank(x);
        REQUIRE((d == 0 || d == 1));
      }
    }
    for (int s = 0; s < 40; ++s) {
      const Mask x = random_subset(rng, m.size()), y = random_subset(rng, m.size());
      REQUIRE(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
    }
    const Matroid d = dual(m);
    CHECK(equal(dual(d), m));
    CHECK(m.rank() + d.rank() == m.size());
    for (Mask x = 0; x <= e; ++x) REQUIRE(m.is_cyclic(x) == d.is_flat(e & ~x));
    std::vector<Mask> zm, zd;
    for (const auto& z : cyclic_flats(m)) zm.push_back(e & ~z.set);
    for (const auto& z : cyclic_flats(d)) zd.push_back(z.set);
    CHECK(sorted(zm) == sorted(zd));
  }
}

TEST_CASE("property: cyclic flats of restrictions and contractions at a cyclic flat") {
  Rng rng(12);
  for (int it = 0; it < 100; ++it) {
    const Matroid m = random_matroid(rng, uniform_int(rng, 1, 8));
    const auto zs = cyclic_flats(m);
    const Mask bottom = m.closure(0);
    for (const auto& x : zs) {
      const Matroid r = restrict_to(m, x.set);
      std::vector<Mask> got, want;
      for (const auto& z : cyclic_flats(r)) got.push_back(deposit(z.set, x.set));
      for (const auto& z : zs) {
        if (subset_of(bottom, z.set) && subset_of(z.set, x.set)) want.push_back(z.set);
      }
      REQUIRE(sorted(got) == sorted(want));

      const Matroid c = contract_set(m, x.set);
      const Mask rest = m.ground() & ~x.set;
      got.clear();
      want.clear();
      for (const auto& z : cyclic_flats(c)) got.push_back(deposit(z.set, rest));
      for (const auto& z : zs) {
        if (subset_of(x.set, z.set)) want.push_back(z.set & ~x.set);
      }
      REQUIRE(sorted(got) == sorted(want));
    }
  }
}

TEST_CASE("property: connected flats of a contraction lift") {
  Rng rng(13);
  for (int it = 0; it < 80; ++it) {
    const Matroid m = random_matroid(rng, uniform_int(rng, 2, 8));
    for (Mask f : connected_flats(m)) {
      // A single loop is a connected flat, but then A and A + loop can both fail.
      if (f == 0 || m.rank(f) == 0) continue;
      const Matroid c = contract_set(m, f);
      const Mask rest = m.ground() & ~f;
      for (Mask a : connected_flats(c)) {
        if (a == 0) continue;
        const Mask lifted = deposit(a, rest);
        const bool a_ok = m.is_flat(lifted) && is_connected(restrict_to(m, lifted));
        const bool af_ok = m.is_flat(lifted | f) && is_connected(restrict_to(m, lifted | f));
        INFO(to_string(m, f), " ", to_string(m, lifted), " loops ", to_string(m, m.loops()));
        REQUIRE((a_ok || af_ok));
      }
    }
  }
}

TEST_CASE("property: clones survive in minors keeping both") {
  Rng rng(14);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    const Matroid m = random_matroid(rng, uniform_int(rng, 3, 8));
    for (Mask cls : clonal_classes(m).blocks) {
      if (count(cls) < 2) continue;
      const int e = lowest(cls), f = lowest(cls & ~bit(e));
      const Mask others = m.ground() & ~bit(e) & ~bit(f);
      const Mask del = random_subset(rng, m.size()) & others;
      const Mask con = random_subset(rng, m.size()) & others & ~del;
      const Matroid n = minor(m, del, con);
      const Mask kept = minor_ground(m, del, con);
      REQUIRE(are_clones(n, count(kept & (bit(e) - 1)), count(kept & (bit(f) - 1))));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("property: separators split rank") {
  Rng rng(15);
  for (int it = 0; it < 100; ++it) {
    const Matroid m = random_matroid(rng, uniform_int(rng, 1, 8));
    for (Mask block : components(m).blocks) {
      CHECK(m.rank(block) + m.rank(m.ground() & ~block) == m.rank());
    }
    const Mask x = random_subset(rng, m.size());
    if (m.rank(x) + m.rank(m.ground() & ~x) == m.rank()) {
      for (Mask block : components(m).blocks) CHECK((subset_of(block, x) || (block & x) == 0));
    }
  }
}
