#include <doctest.h>

#include "integra/symsets.hpp"
#include "oracles.hpp"

using namespace integra;

namespace {

std::set<std::vector<Elem>> as_set(const std::vector<SymmetricSet>& sets) {
  std::set<std::vector<Elem>> out;
  for (const auto& s : sets) out.insert(s.members);
  return out;
}

}  // namespace

TEST_SUITE("symsets") {
  TEST_CASE("inverse partition") {
    const FiniteGroup z6 = cyclic_group(6);
    const auto p = inverse_partition(z6);
    CHECK(p.involutions == std::vector<Elem>{3});
    CHECK(p.pairs == std::vector<std::pair<Elem, Elem>>{{1, 5}, {2, 4}});
    const auto q = inverse_partition(quaternion_group());
    CHECK(q.involutions.size() == 1);
    CHECK(q.pairs.size() == 3);
    const auto v = inverse_partition(construct("cyclic:2 x cyclic:2"));
    CHECK(v.involutions.size() == 3);
    CHECK(v.pairs.empty());
  }

  TEST_CASE("small enumerations") {
    const FiniteGroup v = construct("cyclic:2 x cyclic:2");
    const auto three = enumerate_symmetric_sets(v, 3, SizeMode::exact);
    REQUIRE(three.size() == 1);
    CHECK(three[0].members == std::vector<Elem>{1, 2, 3});

    const auto z6 = enumerate_symmetric_sets(cyclic_group(6), 3, SizeMode::exact);
    CHECK(as_set(z6) == std::set<std::vector<Elem>>{{1, 3, 5}, {2, 3, 4}});
    CHECK(enumerate_symmetric_sets(cyclic_group(5), 3, SizeMode::exact).empty());
    CHECK(count_symmetric_sets(cyclic_group(5), 3, SizeMode::exact) == 0);
    CHECK(count_symmetric_sets(cyclic_group(4), 2, SizeMode::at_most) == 2);
    CHECK(count_symmetric_sets(quaternion_group(), 4, SizeMode::at_most) == 10);
    CHECK_THROWS_AS(SymmetricSetEnumerator(cyclic_group(4), 0, SizeMode::exact), Error);
  }

  TEST_CASE("enumerator matches brute-force subsets") {
    for (const char* spec : {"cyclic:4", "cyclic:5", "cyclic:6", "cyclic:2 x cyclic:2", "quaternion", "dihedral:8",
                             "cyclic:2 x cyclic:4", "dihedral:10", "alt:4", "dic(cyclic:6)", "cyclic:2 x cyclic:6"}) {
      const FiniteGroup g = construct(spec);
      for (std::size_t k = 1; k <= 5; ++k) {
        CAPTURE(spec);
        CAPTURE(k);
        for (SizeMode mode : {SizeMode::exact, SizeMode::at_most}) {
          const auto sets = enumerate_symmetric_sets(g, k, mode);
          const auto brute = oracle::brute_symmetric_sets(g, k, mode == SizeMode::at_most);
          CHECK(sets.size() == brute.size());
          CHECK(as_set(sets) == brute);
          CHECK(count_symmetric_sets(g, k, mode) == static_cast<unsigned long>(brute.size()));
        }
      }
    }
  }

  TEST_CASE("all sizes of Q8 x Z2") {
    const FiniteGroup g = construct("quaternion x cyclic:2");
    CHECK(count_symmetric_sets(g, 15, SizeMode::at_most) == 511);
    CHECK(enumerate_symmetric_sets(g, 15, SizeMode::at_most).size() == 511);
  }

  TEST_CASE("enumeration order") {
    const FiniteGroup g = dihedral_group(12);
    const auto sets = enumerate_symmetric_sets(g, 4, SizeMode::at_most);
    for (std::size_t i = 1; i < sets.size(); ++i) {
      if (sets[i - 1].size() == sets[i].size()) {
        CHECK(precedes_in_enumeration(g, sets[i - 1], sets[i]));
        CHECK_FALSE(precedes_in_enumeration(g, sets[i], sets[i - 1]));
      } else {
        CHECK(sets[i - 1].size() < sets[i].size());
      }
    }
  }

  TEST_CASE("odd order and exponent 3 give even sizes only") {
    for (const char* spec : {"cyclic:5", "cyclic:9", "heisenberg:3", "cyclic:3 x cyclic:3"}) {
      const FiniteGroup g = construct(spec);
      for (std::size_t k : {1, 3, 5}) CHECK(count_symmetric_sets(g, k, SizeMode::exact) == 0);
    }
  }

  TEST_CASE("symmetric set validation") {
    const FiniteGroup z6 = cyclic_group(6);
    CHECK(make_symmetric_set(z6, {5, 1, 1}).members == std::vector<Elem>{1, 5});
    CHECK_THROWS_AS(make_symmetric_set(z6, {1}), Error);
    CHECK_THROWS_AS(make_symmetric_set(z6, {0, 3}), Error);
    CHECK_THROWS_AS(make_symmetric_set(z6, {9}), Error);
    CHECK(is_symmetric_set(z6, {2, 4}));
    CHECK_FALSE(is_symmetric_set(z6, {2}));
  }

  TEST_CASE("conjugacy-canonical sets are first in their class") {
    const FiniteGroup g = symmetric_group(4);
    const auto sets = enumerate_symmetric_sets(g, 3, SizeMode::exact);
    std::set<std::vector<Elem>> seen;
    std::size_t canonical = 0;
    for (const auto& s : sets) {
      std::vector<std::vector<Elem>> conj;
      for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Elem> c;
        for (Elem m : s.members) c.push_back(g.mul(g.mul(x, m), g.inv(x)));
        std::sort(c.begin(), c.end());
        conj.push_back(c);
      }
      const bool fresh = std::none_of(conj.begin(), conj.end(), [&](const auto& c) { return seen.count(c) > 0; });
      CHECK(is_conjugacy_canonical(g, s) == fresh);
      if (fresh) ++canonical;
      seen.insert(s.members);
    }
    CHECK(canonical < sets.size());
  }
}
