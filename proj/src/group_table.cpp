#include "hgs/group_table.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace hgs {

GroupTable GroupTable::build(const PermGroup& g, uint64_t cap) {
  GroupTable t;
  t.degree = g.degree();
  const std::vector<Perm>& elems = g.elements(cap);
  t.n = int(elems.size());
  if (t.n > 8192)
    throw CapExceeded("multiplication table for order " + std::to_string(t.n));
  t.elems = elems;

  const std::vector<uint64_t>& keys = g.key();
  auto index_of_key = [&](uint64_t k) {
    return uint16_t(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
  };

  t.mul.resize(size_t(t.n) * t.n);
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      t.mul[size_t(a) * t.n + b] = index_of_key(elems[a].compose(elems[b]).key());

  t.inv.resize(t.n);
  t.elem_order.resize(t.n);
  for (int a = 0; a < t.n; ++a) {
    t.inv[a] = index_of_key(elems[a].inverse().key());
    t.elem_order[a] = uint16_t(elems[a].order());
    if (elems[a].is_identity()) t.identity = uint16_t(a);
  }
  return t;
}

int GroupTable::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || !(*it == p)) return -1;
  return int(it - elems.begin());
}

namespace {

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(int n) : w((n + 63) / 64, 0) {}
  bool test(uint16_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(uint16_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
};

}  // namespace

TableSubgroup table_closure(const GroupTable& t, const TableSubgroup& base,
                            uint16_t adjoined) {
  TableSubgroup h;
  h.gens = base.gens;
  h.gens.push_back(adjoined);

  Bitset in(t.n);
  std::vector<uint16_t> elems = base.elems;
  for (uint16_t e : elems) in.set(e);

  // Right cosets (base)*t fill the closure; new coset reps come from right
  // multiplication of old reps by the generators.
  std::vector<uint16_t> reps{t.identity};
  const size_t base_order = base.elems.size();
  for (size_t ri = 0; ri < reps.size(); ++ri) {
    for (uint16_t g : h.gens) {
      const uint16_t u = t.prod(reps[ri], g);
      if (in.test(u)) continue;
      if ((elems.size() + base_order) * 2 > size_t(t.n)) {
        // The order divides n, so past n/2 the closure is the whole group.
        h.elems.resize(t.n);
        for (int i = 0; i < t.n; ++i) h.elems[i] = uint16_t(i);
        return h;
      }
      reps.push_back(u);
      for (size_t k = 0; k < base_order; ++k) {
        const uint16_t e = t.prod(base.elems[k], u);
        assert(!in.test(e));
        in.set(e);
        elems.push_back(e);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  h.elems = std::move(elems);
  return h;
}

std::vector<TableSubgroup> table_subgroups_above(const GroupTable& t,
                                                 std::vector<uint16_t> base_elems) {
  std::sort(base_elems.begin(), base_elems.end());

  std::vector<TableSubgroup> found;
  std::unordered_map<uint64_t, std::vector<uint32_t>> dedup;
  auto key_hash = [](const std::vector<uint16_t>& v) {
    uint64_t h = 0xcbf29ce484222325ull ^ v.size();
    for (uint16_t x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  };
  auto try_insert = [&](TableSubgroup sg) -> bool {
    const uint64_t h = key_hash(sg.elems);
    for (uint32_t id : dedup[h])
      if (found[id].elems == sg.elems) return false;
    dedup[h].push_back(uint32_t(found.size()));
    found.push_back(std::move(sg));
    return true;
  };

  TableSubgroup base;
  base.elems = base_elems;
  // A small generating set of the base keeps later closures cheap.
  {
    TableSubgroup cur;
    cur.elems = {t.identity};
    for (uint16_t e : base_elems) {
      if (std::binary_search(cur.elems.begin(), cur.elems.end(), e)) continue;
      cur = table_closure(t, cur, e);
    }
    assert(cur.elems == base_elems && "base is not closed");
    base.gens = cur.gens;
  }
  try_insert(base);

  for (size_t qi = 0; qi < found.size(); ++qi) {
    // found[qi] may move if `found` reallocates; copy what we need.
    const TableSubgroup cur = found[qi];
    if (int(cur.elems.size()) == t.n) continue;

    Bitset covered(t.n);
    for (uint16_t e : cur.elems) covered.set(e);
    for (int j = 0; j < t.n; ++j) {
      if (covered.test(uint16_t(j))) continue;
      // j is a fresh coset representative; adjoining any element of the same
      // coset yields the same join, so only j itself is tried.
      for (uint16_t e : cur.elems) covered.set(t.prod(e, uint16_t(j)));
      try_insert(table_closure(t, cur, uint16_t(j)));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const TableSubgroup& a, const TableSubgroup& b) {
              return a.elems < b.elems;
            });
  return found;
}

std::vector<PermGroup> subgroups_above(const PermGroup& g, const PermGroup& h,
                                       uint64_t cap) {
  const GroupTable t = GroupTable::build(g, cap);
  std::vector<uint16_t> base;
  for (const Perm& p : h.elements(cap)) {
    const int i = t.index_of(p);
    if (i < 0)
      throw std::invalid_argument("subgroups_above: H is not contained in G");
    base.push_back(uint16_t(i));
  }
  std::vector<PermGroup> out;
  for (const TableSubgroup& sg : table_subgroups_above(t, std::move(base))) {
    std::vector<Perm> elems;
    elems.reserve(sg.elems.size());
    for (uint16_t e : sg.elems) elems.push_back(t.elems[e]);
    PermGroup grp(g.degree(), std::move(elems));
    grp.elements(cap);
    out.push_back(std::move(grp));
  }
  return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& n, uint64_t cap) {
  return subgroups_above(n, PermGroup::trivial(n.degree()), cap);
}

}  // namespace hgs
