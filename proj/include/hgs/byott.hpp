#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hgs/enumerate.hpp"
#include "hgs/grouplib.hpp"
#include "hgs/tgdb.hpp"

namespace hgs {

// The terms of the holomorph counting formula
//   a(N, L/K) = |Aut(G,G')| / |Aut(N)| * b(N, G, G').
struct ByottCount {
  const TransitiveGroupEntry* group = nullptr;
  const GroupType* type = nullptr;
  uint64_t b = 0;
  uint64_t aut_G_Gprime = 0;
  uint64_t aut_N = 0;
  uint64_t a = 0;
};

// Per-degree cache: each type's holomorph table, its full subgroup list
// grouped by order, and the stabilizer-constrained data reused across G's.
// Not safe for concurrent use; give each worker its own context.
class ByottContext {
 public:
  explicit ByottContext(int degree);

  ByottCount count(const GroupType& type, const TransitiveGroupEntry& g);

  // Number of subgroups G* of Hol(N) of order |G| isomorphic to G through an
  // isomorphism carrying the stabilizer of 0 in G onto the one in G*.
  uint64_t b_count(const GroupType& type, const TransitiveGroupEntry& g);

 private:
  struct HolData {
    PermGroup hol;
    GroupTable table;
    uint64_t aut_n = 0;
    // subgroups grouped by order
    std::map<uint64_t, std::vector<TableSubgroup>> by_order;
    // element indices of Stab_Hol(0)
    std::vector<char> fixes_zero;
  };
  struct GroupData {
    GroupTable table;
    std::vector<uint16_t> stab_gens;   // generating sequence of G'
    std::vector<uint16_t> stab_elems;  // sorted indices of G'
    uint64_t aut_fix = 0;              // |Aut(G, G')|
  };

  const HolData& hol_data(const GroupType& type);
  const GroupData& group_data(const TransitiveGroupEntry& g);

  int degree_;
  std::map<const GroupType*, std::unique_ptr<HolData>> hols_;
  std::map<const TransitiveGroupEntry*, std::unique_ptr<GroupData>> groups_;
};

}  // namespace hgs
