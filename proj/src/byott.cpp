#include "hgs/byott.hpp"

#include <algorithm>

namespace hgs {

ByottContext::ByottContext(int degree) : degree_(degree) {}

const ByottContext::HolData& ByottContext::hol_data(const GroupType& type) {
  auto it = hols_.find(&type);
  if (it != hols_.end()) return *it->second;

  auto data = std::make_unique<HolData>();
  data->hol = holomorph(type.standard_rep);
  data->table = GroupTable::build(data->hol);
  data->aut_n = automorphisms(type.standard_rep).size();
  std::vector<uint16_t> trivial{data->table.identity};
  for (TableSubgroup& sg : table_subgroups_above(data->table, trivial))
    data->by_order[sg.elems.size()].push_back(std::move(sg));
  data->fixes_zero.assign(data->table.n, 0);
  for (int e = 0; e < data->table.n; ++e)
    if (data->table.elems[e][0] == 0) data->fixes_zero[e] = 1;
  return *hols_.emplace(&type, std::move(data)).first->second;
}

const ByottContext::GroupData& ByottContext::group_data(
    const TransitiveGroupEntry& g) {
  auto it = groups_.find(&g);
  if (it != groups_.end()) return *it->second;

  auto data = std::make_unique<GroupData>();
  data->table = GroupTable::build(g.group);
  const PermGroup stab = point_stabilizer(g.group, 0);
  for (const Perm& p : stab.elements())
    data->stab_elems.push_back(uint16_t(data->table.index_of(p)));
  std::sort(data->stab_elems.begin(), data->stab_elems.end());

  // Greedy generating sequence of G' so the backtrack starts constrained.
  TableSubgroup cur;
  cur.elems = {data->table.identity};
  while (cur.elems.size() < data->stab_elems.size()) {
    uint16_t best = 0;
    size_t best_size = cur.elems.size();
    for (uint16_t e : data->stab_elems) {
      if (std::binary_search(cur.elems.begin(), cur.elems.end(), e)) continue;
      const size_t sz = table_closure(data->table, cur, e).elems.size();
      if (sz > best_size) {
        best_size = sz;
        best = e;
      }
    }
    cur = table_closure(data->table, cur, best);
    data->stab_gens.push_back(best);
  }

  data->aut_fix = aut_fixing(g.group, stab);
  return *groups_.emplace(&g, std::move(data)).first->second;
}

uint64_t ByottContext::b_count(const GroupType& type,
                               const TransitiveGroupEntry& g) {
  const HolData& hol = hol_data(type);
  if (g.order > uint64_t(hol.table.n)) return 0;
  auto bucket = hol.by_order.find(g.order);
  if (bucket == hol.by_order.end()) return 0;

  const GroupData& gd = group_data(g);
  const uint64_t stab_order = gd.stab_elems.size();

  uint64_t b = 0;
  for (const TableSubgroup& cand : bucket->second) {
    // The image of G' must be the stabilizer of 0 inside the candidate; a
    // size mismatch rules the candidate out before any search.
    std::vector<uint16_t> cand_stab;
    for (uint16_t e : cand.elems)
      if (hol.fixes_zero[e]) cand_stab.push_back(e);
    if (cand_stab.size() != stab_order) continue;

    IsoSearchSpec spec;
    spec.a = &gd.table;
    spec.b = &hol.table;
    spec.targets = cand.elems;
    spec.prefix_gens = gd.stab_gens;
    spec.prefix_targets = cand_stab;
    spec.on_found = [](const std::vector<uint16_t>&) { return true; };
    if (search_isomorphisms(spec) > 0) ++b;
  }
  return b;
}

ByottCount ByottContext::count(const GroupType& type,
                               const TransitiveGroupEntry& g) {
  ByottCount out;
  out.group = &g;
  out.type = &type;
  out.aut_N = hol_data(type).aut_n;
  out.b = b_count(type, g);
  if (out.b == 0) {
    // b = 0 iff a = 0; skip |Aut(G,G')| so huge groups never materialize.
    out.aut_G_Gprime = 0;
    out.a = 0;
    return out;
  }
  const GroupData& gd = group_data(g);
  out.aut_G_Gprime = gd.aut_fix;
  const uint64_t numerator = out.aut_G_Gprime * out.b;
  if (numerator % out.aut_N != 0)
    throw NonIntegralCount(g.label() + " type " + type.name + ": " +
                           std::to_string(out.aut_G_Gprime) + "*" +
                           std::to_string(out.b) + " not divisible by " +
                           std::to_string(out.aut_N));
  out.a = numerator / out.aut_N;
  return out;
}

}  // namespace hgs
