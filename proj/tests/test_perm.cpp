#include "doctest.h"
#include "hgs/perm.hpp"

using hgs::Perm;

TEST_CASE("compose follows the right-acts-first convention") {
  const Perm swap01 = Perm::parse_cycles("(0 1)", 4);
  CHECK(swap01.compose(swap01).is_identity());

  const Perm p = Perm::parse_cycles("(0 2 3)", 4);
  CHECK(p.compose(Perm(4)) == p);
  CHECK(Perm(4).compose(p) == p);

  // Pointwise application oracle: r(i) must equal p(q(i)) for every point.
  const Perm q = Perm::parse_cycles("(0 1)", 3);
  const Perm p3 = Perm::parse_cycles("(0 1 2)", 3);
  const Perm r = p3.compose(q);
  for (int i = 0; i < 3; ++i) CHECK(r[i] == p3[q[i]]);
  CHECK(r == Perm::parse_cycles("(0 2)", 3));
}

TEST_CASE("inverse and order") {
  const Perm p = Perm::parse_cycles("(0 3 1)(2 4)", 5);
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK(p.inverse().inverse() == p);
  CHECK(p.order() == 6);
  CHECK(Perm(7).order() == 1);
}

TEST_CASE("conjugation matches s p s^-1") {
  const Perm p = Perm::parse_cycles("(0 1 2)", 5);
  const Perm s = Perm::parse_cycles("(0 4)(1 3)", 5);
  CHECK(p.conjugated_by(s) == s.compose(p).compose(s.inverse()));
}

TEST_CASE("packed keys compare lexicographically") {
  const Perm a = Perm::from_images({0, 2, 1, 3});
  const Perm b = Perm::from_images({1, 0, 2, 3});
  CHECK(a < b);
  CHECK(a.key() < b.key());
  CHECK_FALSE(b < a);
}

TEST_CASE("cycle parsing round trip and errors") {
  const Perm p = Perm::parse_cycles("(0 7)(1 2)(3 4)(5 6)", 8);
  CHECK(p[0] == 7);
  CHECK(p[7] == 0);
  CHECK(Perm::parse_cycles(p.cycles(), 8) == p);
  CHECK(Perm::parse_cycles("()", 6).is_identity());
  CHECK(Perm::parse_cycles("(0,1,2)", 3) == Perm::parse_cycles("(0 1 2)", 3));
  CHECK_THROWS(Perm::parse_cycles("(0 8)", 8));
  CHECK_THROWS(Perm::parse_cycles("(0 1)(1 2)", 4));
  CHECK_THROWS(Perm::parse_cycles("(0 1", 4));
  CHECK_THROWS(Perm::from_images({0, 0, 1}));
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(Perm(3).compose(Perm(4)), hgs::DegreeMismatch);
}
