#pragma once

#include <cstdint>
#include <vector>

#include "hgs/perm_group.hpp"

namespace hgs {

// Multiplication table of a materialized group. Element indices refer to the
// canonical (lexicographically sorted) element list, so they are stable and
// shared with PermGroup::elements(). Tables are quadratic in the order; the
// largest one the pipeline ever builds is Hol(C2^3) with 1344 elements, and
// the database derivation tool stays below 4000.
struct GroupTable {
  int n = 0;
  int degree = 0;
  std::vector<Perm> elems;
  std::vector<uint16_t> mul;
  std::vector<uint16_t> inv;
  std::vector<uint16_t> elem_order;
  uint16_t identity = 0;

  static GroupTable build(const PermGroup& g, uint64_t cap = kDefaultCap);

  uint16_t prod(uint16_t a, uint16_t b) const {
    return mul[size_t(a) * n + b];
  }
  // Index of p in the element list; -1 if absent.
  int index_of(const Perm& p) const;
};

// A subgroup inside a GroupTable: sorted element indices plus a small
// generating set used to restart closures cheaply.
struct TableSubgroup {
  std::vector<uint16_t> elems;
  std::vector<uint16_t> gens;
};

// Closure of base+adjoined inside the table, by coset filling. Linear in the
// result order, not quadratic.
TableSubgroup table_closure(const GroupTable& t,
                            const TableSubgroup& base,
                            uint16_t adjoined);

// Every subgroup K with base <= K <= the full group, BFS by adjoining one
// coset representative at a time. Sorted by element list.
std::vector<TableSubgroup> table_subgroups_above(const GroupTable& t,
                                                 std::vector<uint16_t> base_elems);

}  // namespace hgs
