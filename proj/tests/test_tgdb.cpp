#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hgs/tgdb.hpp"

using namespace hgs;

TEST_CASE("load_db parses the documented line format") {
  std::istringstream in(
      "# comment line\n"
      "\n"
      "8 3 | (0 7)(1 2)(3 4)(5 6) ; (0 2)(1 7)(3 5)(4 6) ; (0 4)(1 5)(2 6)(3 "
      "7)\n"
      "2 1 C2 | (0 1)\n");
  const auto db = load_db(in);
  REQUIRE(db.size() == 2);
  CHECK(db[0].degree == 8);
  CHECK(db[0].index == 3);
  CHECK(db[0].label() == "8T3");
  CHECK(db[0].order == 8);
  CHECK(db[0].name_hint.empty());
  CHECK(db[1].name_hint == "C2");
}

TEST_CASE("load_db handles the empty stream") {
  std::istringstream in("");
  CHECK(load_db(in).empty());
}

TEST_CASE("load_db rejects malformed and invalid entries") {
  {
    std::istringstream in("8 3 (0 1)\n");
    CHECK_THROWS_AS(load_db(in), ParseError);
  }
  {
    std::istringstream in("8 | (0 1)\n");
    CHECK_THROWS_AS(load_db(in), ParseError);
  }
  {
    std::istringstream in("4 1 | (0 9)\n");
    CHECK_THROWS_AS(load_db(in), ParseError);
  }
  {
    // Intransitive generators violate the entry invariant.
    std::istringstream in("8 1 | (0 1)\n");
    CHECK_THROWS_AS(load_db(in), ValidationError);
  }
  {
    std::istringstream in("2 1 | (0 1)\n2 1 | (0 1)\n");
    CHECK_THROWS_AS(load_db(in), ValidationError);
  }
}

TEST_CASE("transitive oracle counts for small degrees") {
  CHECK(enumerate_transitive_oracle(2).size() == 1);
  CHECK(enumerate_transitive_oracle(3).size() == 2);
  CHECK(enumerate_transitive_oracle(4).size() == 5);
  CHECK(enumerate_transitive_oracle(5).size() == 5);
  CHECK(enumerate_transitive_oracle(6).size() == 16);
  CHECK_THROWS(enumerate_transitive_oracle(7));
}

TEST_CASE("bundled database has the classification counts and is valid") {
  const auto& db = bundled_db();
  const std::map<int, size_t> expected = {{2, 1},  {3, 2},  {4, 5},  {5, 5},
                                          {6, 16}, {7, 7},  {8, 50}, {9, 34},
                                          {10, 45}, {11, 8}};
  for (const auto& [degree, count] : expected)
    CHECK(entries_of_degree(db, degree).size() == count);
  for (const auto& e : db) CHECK(e.group.is_transitive());
}

TEST_CASE("bundled entries of degree <= 6 match the oracle up to conjugacy") {
  const auto& db = bundled_db();
  for (int g = 2; g <= 6; ++g) {
    std::set<std::vector<uint64_t>> oracle_keys;
    for (const PermGroup& h : enumerate_transitive_oracle(g))
      oracle_keys.insert(h.key());  // oracle reps are already minimal
    std::set<std::vector<uint64_t>> db_keys;
    for (const TransitiveGroupEntry* e : entries_of_degree(db, g))
      db_keys.insert(min_conjugacy_key(e->group));
    CHECK(oracle_keys == db_keys);
  }
}

TEST_CASE("bundled entries of degree 7 and 8 are pairwise non-conjugate") {
  const auto& db = bundled_db();
  for (int g : {7, 8}) {
    std::set<std::vector<uint64_t>> keys;
    for (const TransitiveGroupEntry* e : entries_of_degree(db, g))
      keys.insert(min_conjugacy_key(e->group));
    CHECK(keys.size() == (g == 7 ? 7 : 50));
  }
}

TEST_CASE("known structure of specific entries") {
  const auto& db = bundled_db();
  auto entry = [&](int d, int i) -> const TransitiveGroupEntry& {
    for (const auto& e : db)
      if (e.degree == d && e.index == i) return e;
    REQUIRE(false);
    throw std::logic_error("missing");
  };
  CHECK(entry(8, 3).order == 8);
  CHECK(entry(8, 3).group.contains(
      Perm::parse_cycles("(0 7)(1 2)(3 4)(5 6)", 8)));
  CHECK(entry(8, 25).order == 56);
  CHECK(entry(8, 49).order == 20160);
  CHECK(entry(8, 50).order == 40320);
  CHECK(entry(7, 5).order == 168);
  CHECK(entry(9, 1).order == 9);
  CHECK(entry(11, 6).order == 7920);   // Mathieu group
  CHECK(entry(11, 5).order == 660);    // PSL(2,11)
  CHECK(entry(11, 8).order == 39916800);
  CHECK(entry(10, 45).order == 3628800);
}
