#include "doctest.h"
#include "hgs/byott.hpp"
#include "hgs/closedform.hpp"
#include "hgs/reference_data.hpp"

using namespace hgs;

namespace {

const TransitiveGroupEntry& entry(int d, int i) {
  for (const auto& e : bundled_db())
    if (e.degree == d && e.index == i) return e;
  REQUIRE(false);
  throw std::logic_error("missing");
}

const GroupType& type_by_name(int order, const std::string& name) {
  for (const GroupType& t : catalogue(order))
    if (t.name == name) return t;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("aut_fixing spot values used by the counting formula") {
  // |Aut(C2^3, trivial)| = |GL(3,2)|.
  const PermGroup c2cubed = type_by_name(8, "C2^3").standard_rep;
  CHECK(aut_fixing(c2cubed, PermGroup::trivial(8)) == 168);
  // Frobenius group of order 20 fixing its stabilizer: p(p-1) = 20.
  const TransitiveGroupEntry& d10 = entry(10, 2);
  CHECK(aut_fixing(d10.group, point_stabilizer(d10.group, 0)) == 20);
}

TEST_CASE("counting formula on the worked degree-8 rows") {
  ByottContext ctx(8);
  // 8T3 of type D4: a = 42 (Table 1).
  CHECK(ctx.count(type_by_name(8, "D4"), entry(8, 3)).a == 42);
  // 8T3 of type C2^3: a = 8.
  CHECK(ctx.count(type_by_name(8, "C2^3"), entry(8, 3)).a == 8);
  // 8T25 of type C2^3: a = 1 (Table 2).
  CHECK(ctx.count(type_by_name(8, "C2^3"), entry(8, 25)).a == 1);
  // No C8-type structures on the elementary abelian extension.
  CHECK(ctx.count(type_by_name(8, "C8"), entry(8, 3)).a == 0);
  // Groups larger than the holomorph get b = 0 = a.
  const ByottCount big = ctx.count(type_by_name(8, "C2^3"), entry(8, 50));
  CHECK(big.b == 0);
  CHECK(big.a == 0);
}

TEST_CASE("degree 9 cyclic counts follow the p^2 theorem") {
  ByottContext ctx(9);
  // The cyclic Galois extension of degree 9 has p = 3 structures.
  CHECK(ctx.count(type_by_name(9, "C9"), entry(9, 1)).a == 3);
}

TEST_CASE("b = 0 exactly when a = 0 across a full degree") {
  ByottContext ctx(6);
  const DegreeContext dctx = DegreeContext::build(6);
  for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), 6))
    for (size_t ti = 0; ti < dctx.types->size(); ++ti) {
      const ByottCount c = ctx.count((*dctx.types)[ti], *e);
      CHECK((c.b == 0) == (c.a == 0));
      const size_t direct =
          step1_enumerate(*e, (*dctx.types)[ti], dctx.orbits[ti]).size();
      CHECK(c.a == direct);
    }
}

TEST_CASE("prime degrees: one structure per solvable group, none otherwise") {
  for (int p : {2, 3, 5, 7, 11}) {
    ByottContext ctx(p);
    const DegreeContext dctx = DegreeContext::build(p);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), p)) {
      uint64_t total = 0;
      for (size_t ti = 0; ti < dctx.types->size(); ++ti)
        total += ctx.count((*dctx.types)[ti], *e).a;
      CHECK(total == (is_solvable(e->group) ? 1 : 0));
    }
  }
}
