#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hgs/group_table.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

// An isomorphism class of abstract groups of order 2..11 together with a
// canonical regular representation (the left regular action on 0..order-1).
struct GroupType {
  std::string name;
  int order = 0;
  bool abelian = false;
  // order_profile[k] = number of elements of order k.
  std::map<int, int> order_profile;
  PermGroup standard_rep;
};

// One GroupType per isomorphism class of groups of the given order (2..11).
const std::vector<GroupType>& catalogue(int order);

// The unique catalogue entry matching (order, abelian, order profile).
// (order, abelian, profile) separates all isomorphism classes up to order 11.
const GroupType& identify_type(const PermGroup& h);

// All automorphisms of a regular group, realized as permutations of the point
// set through the identification point i <-> n_i with n_i(0) = i. They fix 0.
std::vector<Perm> automorphisms(const PermGroup& n);

// N together with its automorphisms generates the holomorph, which equals the
// normalizer of N in S_g for regular N; |Hol(N)| = |N| * |Aut(N)|.
PermGroup holomorph(const PermGroup& n);

// All isomorphisms A -> B as element-level lookup tables: entry i is the index
// (into B.elements()) of the image of A.elements()[i]. Empty iff A and B are
// not isomorphic.
std::vector<std::vector<uint16_t>> isomorphisms(const PermGroup& a,
                                                const PermGroup& b);

// True iff some isomorphism f: N1 -> N2 commutes with conjugation by every
// generator of G: f(s n s^-1) = s f(n) s^-1. Stops at the first success.
bool g_isomorphic(const PermGroup& n1, const PermGroup& n2, const PermGroup& g);

// Number of automorphisms of G mapping Gp onto Gp (Gp <= G). The generating
// sequence starts inside Gp so the constraint prunes the backtrack directly.
uint64_t aut_fixing(const PermGroup& g, const PermGroup& gp);

// ---- generic generator-image backtrack ---------------------------------

// Searches injective homomorphisms from the group of `a` onto a subgroup of
// the ambient table `b`. Targets must be a subgroup of b of the same order as
// a. Constrained prefix generators may only map into `prefix_targets`.
struct IsoSearchSpec {
  const GroupTable* a = nullptr;
  const GroupTable* b = nullptr;
  std::vector<uint16_t> targets;         // sorted element indices of B in b
  std::vector<uint16_t> prefix_gens;     // indices in a; must generate first
  std::vector<uint16_t> prefix_targets;  // sorted; images of prefix gens
  // Invoked on each complete mapping (size a->n table of b-indices);
  // return true to stop the search.
  std::function<bool(const std::vector<uint16_t>&)> on_found;
};

// Returns the number of isomorphisms found (all of them unless on_found
// stopped the search early).
uint64_t search_isomorphisms(const IsoSearchSpec& spec);

// Greedy generating sequence: repeatedly adds the element that enlarges the
// generated subgroup most, after the forced prefix.
std::vector<uint16_t> generating_sequence(const GroupTable& t,
                                          const std::vector<uint16_t>& prefix);

}  // namespace hgs
