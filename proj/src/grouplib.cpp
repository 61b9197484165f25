#include "hgs/grouplib.hpp"

#include <algorithm>
#include <cassert>

namespace hgs {

namespace {

// Left regular representation of an abstract group given by a multiplication
// function on indices 0..n-1 with identity 0.
PermGroup regular_rep(int n, const std::function<int(int, int)>& mul,
                      const std::vector<int>& gens) {
  std::vector<Perm> perm_gens;
  for (int g : gens) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = mul(g, x);
    perm_gens.push_back(Perm::from_images(images));
  }
  PermGroup grp(n, perm_gens);
  grp.elements();
  return grp;
}

PermGroup cyclic_rep(int n) {
  return regular_rep(
      n, [n](int a, int b) { return (a + b) % n; }, {1});
}

// Direct product C_a x C_b, index = x*b + y.
PermGroup product_rep(int a, int b) {
  const int n = a * b;
  auto mul = [a, b](int x, int y) {
    return ((x / b + y / b) % a) * b + (x % b + y % b) % b;
  };
  return regular_rep(n, mul, {b, 1});
}

// C2 x C2 x C2, index = 4x + 2y + z.
PermGroup elementary8_rep() {
  return regular_rep(
      8, [](int x, int y) { return x ^ y; }, {4, 2, 1});
}

// Dihedral group of order 2m, index a*m + b for s^a r^b.
PermGroup dihedral_rep(int m) {
  auto mul = [m](int x, int y) {
    const int a1 = x / m, b1 = x % m, a2 = y / m, b2 = y % m;
    const int a = (a1 + a2) % 2;
    const int b = (((a2 ? -b1 : b1) + b2) % m + m) % m;
    return a * m + b;
  };
  return regular_rep(2 * m, mul, {1, m});
}

// Quaternion group, index e*4 + m for a^m b^e with a^4 = 1, b^2 = a^2,
// b a b^-1 = a^-1.
PermGroup quaternion_rep() {
  auto mul = [](int x, int y) {
    const int e1 = x / 4, m1 = x % 4, e2 = y / 4, m2 = y % 4;
    int m = (m1 + (e1 ? 4 - m2 : m2)) % 4;
    int e = e1 + e2;
    if (e == 2) {
      e = 0;
      m = (m + 2) % 4;
    }
    return e * 4 + m;
  };
  return regular_rep(8, mul, {1, 4});
}

GroupType make_type(std::string name, PermGroup rep) {
  GroupType t;
  t.name = std::move(name);
  t.order = int(rep.order());
  t.abelian = true;
  const std::vector<Perm>& elems = rep.elements();
  for (const Perm& p : elems) t.order_profile[p.order()]++;
  for (size_t i = 0; i < elems.size() && t.abelian; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!(elems[i].compose(elems[j]) == elems[j].compose(elems[i]))) {
        t.abelian = false;
        break;
      }
  t.standard_rep = std::move(rep);
  return t;
}

std::vector<GroupType> build_catalogue(int order) {
  std::vector<GroupType> out;
  switch (order) {
    case 2:
    case 3:
    case 5:
    case 7:
    case 11:
      out.push_back(make_type("C" + std::to_string(order), cyclic_rep(order)));
      break;
    case 4:
      out.push_back(make_type("C4", cyclic_rep(4)));
      out.push_back(make_type("C2^2", product_rep(2, 2)));
      break;
    case 6:
      out.push_back(make_type("C6", cyclic_rep(6)));
      out.push_back(make_type("S3", dihedral_rep(3)));
      break;
    case 8:
      out.push_back(make_type("C8", cyclic_rep(8)));
      out.push_back(make_type("C4xC2", product_rep(4, 2)));
      out.push_back(make_type("C2^3", elementary8_rep()));
      out.push_back(make_type("D4", dihedral_rep(4)));
      out.push_back(make_type("Q8", quaternion_rep()));
      break;
    case 9:
      out.push_back(make_type("C9", cyclic_rep(9)));
      out.push_back(make_type("C3^2", product_rep(3, 3)));
      break;
    case 10:
      out.push_back(make_type("C10", cyclic_rep(10)));
      out.push_back(make_type("D5", dihedral_rep(5)));
      break;
    default:
      throw std::out_of_range("catalogue order must be 2..11, got " +
                              std::to_string(order));
  }
  return out;
}

}  // namespace

const std::vector<GroupType>& catalogue(int order) {
  static std::vector<std::vector<GroupType>> cache(12);
  static std::once_flag once[12];
  if (order < 2 || order > 11)
    throw std::out_of_range("catalogue order must be 2..11, got " +
                            std::to_string(order));
  std::call_once(once[order], [order] { cache[order] = build_catalogue(order); });
  return cache[order];
}

const GroupType& identify_type(const PermGroup& h) {
  const std::vector<Perm>& elems = h.elements();
  const int order = int(elems.size());
  if (order < 2 || order > 11) throw NoMatch("order outside catalogue range");
  std::map<int, int> profile;
  for (const Perm& p : elems) profile[p.order()]++;
  bool abelian = true;
  for (size_t i = 0; i < elems.size() && abelian; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!(elems[i].compose(elems[j]) == elems[j].compose(elems[i]))) {
        abelian = false;
        break;
      }
  for (const GroupType& t : catalogue(order))
    if (t.abelian == abelian && t.order_profile == profile) return t;
  throw NoMatch("no catalogue entry of order " + std::to_string(order) +
                " with this order profile");
}

// ---- generator-image backtrack ------------------------------------------

std::vector<uint16_t> generating_sequence(const GroupTable& t,
                                          const std::vector<uint16_t>& prefix) {
  std::vector<uint16_t> seq;
  TableSubgroup cur;
  cur.elems = {t.identity};
  auto grow = [&](uint16_t e) {
    cur = table_closure(t, cur, e);
    seq.push_back(e);
  };
  for (uint16_t e : prefix)
    if (!std::binary_search(cur.elems.begin(), cur.elems.end(), e)) grow(e);
  while (int(cur.elems.size()) < t.n) {
    uint16_t best = 0;
    size_t best_size = cur.elems.size();
    for (int e = 0; e < t.n; ++e) {
      if (std::binary_search(cur.elems.begin(), cur.elems.end(), uint16_t(e)))
        continue;
      const size_t sz = table_closure(t, cur, uint16_t(e)).elems.size();
      if (sz > best_size) {
        best_size = sz;
        best = uint16_t(e);
      }
    }
    grow(best);
  }
  return seq;
}

namespace {

// Per-depth bookkeeping for the incremental homomorphism definition: every
// element of <g_1..g_j> is defined from an earlier element times a generator,
// and every Cayley edge inside the prefix subgroup is either a definition or
// gets verified. Edge consistency over the whole subgroup is equivalent to
// the partial map being a homomorphism.
struct SearchPlan {
  struct Def {
    uint16_t elem;
    uint16_t parent;
    uint16_t gen;  // index into seq; elem == parent * seq[gen]
  };
  struct Edge {
    uint16_t from;
    uint16_t gen;
    uint16_t to;  // to == from * seq[gen]
  };
  struct Depth {
    uint16_t gen_elem;
    std::vector<Def> defs;     // new elements, definition order
    std::vector<Edge> checks;  // new edges to verify
  };
  std::vector<Depth> depths;
};

SearchPlan build_plan(const GroupTable& a, const std::vector<uint16_t>& seq) {
  SearchPlan plan;
  std::vector<char> known(a.n, 0);
  known[a.identity] = 1;
  std::vector<uint16_t> members{a.identity};
  std::vector<char> edge_done(size_t(a.n) * seq.size(), 0);

  for (size_t depth = 0; depth < seq.size(); ++depth) {
    SearchPlan::Depth d;
    d.gen_elem = seq[depth];
    if (!known[seq[depth]]) {
      known[seq[depth]] = 1;
      members.push_back(seq[depth]);
    }
    // BFS closure of the previous subgroup with the new generator.
    for (size_t qi = 0; qi < members.size(); ++qi) {
      const uint16_t e = members[qi];
      for (size_t gi = 0; gi <= depth; ++gi) {
        const uint16_t to = a.prod(e, seq[gi]);
        if (!known[to]) {
          known[to] = 1;
          members.push_back(to);
          d.defs.push_back({to, e, uint16_t(gi)});
          edge_done[size_t(e) * seq.size() + gi] = 1;
        }
      }
    }
    // Remaining new edges become consistency checks.
    for (uint16_t e : members)
      for (size_t gi = 0; gi <= depth; ++gi) {
        if (edge_done[size_t(e) * seq.size() + gi]) continue;
        edge_done[size_t(e) * seq.size() + gi] = 1;
        d.checks.push_back({e, uint16_t(gi), a.prod(e, seq[gi])});
      }
    plan.depths.push_back(std::move(d));
  }
  return plan;
}

}  // namespace

uint64_t search_isomorphisms(const IsoSearchSpec& spec) {
  const GroupTable& a = *spec.a;
  const GroupTable& b = *spec.b;
  if (spec.targets.size() != size_t(a.n)) return 0;

  const std::vector<uint16_t> seq = generating_sequence(a, spec.prefix_gens);
  const SearchPlan plan = build_plan(a, seq);

  // Candidate images per depth, filtered by element order and the prefix
  // constraint.
  size_t prefix_len = 0;
  {
    TableSubgroup cur;
    cur.elems = {a.identity};
    for (uint16_t e : spec.prefix_gens)
      if (!std::binary_search(cur.elems.begin(), cur.elems.end(), e)) {
        cur = table_closure(a, cur, e);
        ++prefix_len;
      }
  }
  std::vector<std::vector<uint16_t>> candidates(seq.size());
  for (size_t depth = 0; depth < seq.size(); ++depth) {
    const std::vector<uint16_t>& pool =
        depth < prefix_len ? spec.prefix_targets : spec.targets;
    for (uint16_t e : pool)
      if (b.elem_order[e] == a.elem_order[seq[depth]])
        candidates[depth].push_back(e);
  }

  std::vector<uint16_t> image(a.n, 0xFFFF);
  std::vector<char> used(b.n, 0);
  image[a.identity] = b.identity;
  used[b.identity] = 1;

  uint64_t found = 0;
  bool stop = false;

  std::function<void(size_t)> descend = [&](size_t depth) {
    if (stop) return;
    if (depth == seq.size()) {
      ++found;
      if (spec.on_found && spec.on_found(image)) stop = true;
      return;
    }
    const SearchPlan::Depth& d = plan.depths[depth];
    for (uint16_t cand : candidates[depth]) {
      if (used[cand]) continue;
      // Define images of the new elements, then verify the new edges.
      std::vector<uint16_t> defined;
      bool ok = true;
      if (image[d.gen_elem] == 0xFFFF) {
        image[d.gen_elem] = cand;
        used[cand] = 1;
        defined.push_back(d.gen_elem);
      } else if (image[d.gen_elem] != cand) {
        continue;
      }
      for (const SearchPlan::Def& def : d.defs) {
        const uint16_t img = b.prod(image[def.parent], image[seq[def.gen]]);
        if (used[img]) {
          ok = false;
          break;
        }
        image[def.elem] = img;
        used[img] = 1;
        defined.push_back(def.elem);
      }
      if (ok)
        for (const SearchPlan::Edge& edge : d.checks) {
          if (b.prod(image[edge.from], image[seq[edge.gen]]) !=
              image[edge.to]) {
            ok = false;
            break;
          }
        }
      if (ok) descend(depth + 1);
      for (uint16_t e : defined) {
        used[image[e]] = 0;
        image[e] = 0xFFFF;
      }
      if (stop) return;
    }
  };
  descend(0);
  return found;
}

// ---- higher-level wrappers ----------------------------------------------

namespace {

std::vector<uint16_t> all_indices(int n) {
  std::vector<uint16_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = uint16_t(i);
  return v;
}

}  // namespace

std::vector<std::vector<uint16_t>> isomorphisms(const PermGroup& a,
                                                const PermGroup& b) {
  if (a.elements().size() != b.elements().size()) return {};
  const GroupTable ta = GroupTable::build(a);
  const GroupTable tb = GroupTable::build(b);
  std::vector<std::vector<uint16_t>> out;
  IsoSearchSpec spec;
  spec.a = &ta;
  spec.b = &tb;
  spec.targets = all_indices(tb.n);
  spec.on_found = [&](const std::vector<uint16_t>& image) {
    out.push_back(image);
    return false;
  };
  search_isomorphisms(spec);
  return out;
}

std::vector<Perm> automorphisms(const PermGroup& n) {
  if (!is_regular(n)) throw NotRegular("automorphisms: not regular");
  const int g = n.degree();
  const std::vector<Perm>& elems = n.elements();
  std::vector<std::vector<uint16_t>> autos = isomorphisms(n, n);
  std::vector<Perm> out;
  out.reserve(autos.size());
  for (const std::vector<uint16_t>& f : autos) {
    std::vector<int> images(g);
    for (int ei = 0; ei < g; ++ei) images[elems[ei][0]] = elems[f[ei]][0];
    out.push_back(Perm::from_images(images));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup holomorph(const PermGroup& n) {
  std::vector<Perm> gens = n.generators();
  const std::vector<Perm> autos = automorphisms(n);
  gens.insert(gens.end(), autos.begin(), autos.end());
  return close(gens);
}

bool g_isomorphic(const PermGroup& n1, const PermGroup& n2,
                  const PermGroup& g) {
  if (n1.elements().size() != n2.elements().size()) return false;
  const GroupTable t1 = GroupTable::build(n1);
  const GroupTable t2 = GroupTable::build(n2);
  IsoSearchSpec spec;
  spec.a = &t1;
  spec.b = &t2;
  spec.targets = all_indices(t2.n);
  bool hit = false;
  spec.on_found = [&](const std::vector<uint16_t>& image) {
    for (const Perm& s : g.generators()) {
      for (int ei = 0; ei < t1.n; ++ei) {
        const Perm lhs_elem = t1.elems[ei].conjugated_by(s);
        const int lhs_index = t1.index_of(lhs_elem);
        if (lhs_index < 0) return false;  // s does not normalize n1
        const Perm want = t2.elems[image[lhs_index]];
        const Perm got = t2.elems[image[ei]].conjugated_by(s);
        if (!(want == got)) return false;
      }
    }
    hit = true;
    return true;
  };
  search_isomorphisms(spec);
  return hit;
}

uint64_t aut_fixing(const PermGroup& g, const PermGroup& gp) {
  const GroupTable t = GroupTable::build(g);
  std::vector<uint16_t> gp_idx;
  for (const Perm& p : gp.elements()) {
    const int i = t.index_of(p);
    if (i < 0) throw std::invalid_argument("aut_fixing: Gp not inside G");
    gp_idx.push_back(uint16_t(i));
  }
  std::sort(gp_idx.begin(), gp_idx.end());

  // A generating set of Gp, found greedily inside Gp.
  std::vector<uint16_t> gp_gens;
  {
    TableSubgroup cur;
    cur.elems = {t.identity};
    while (cur.elems.size() < gp_idx.size()) {
      uint16_t best = 0;
      size_t best_size = cur.elems.size();
      for (uint16_t e : gp_idx) {
        if (std::binary_search(cur.elems.begin(), cur.elems.end(), e)) continue;
        const size_t sz = table_closure(t, cur, e).elems.size();
        if (sz > best_size) {
          best_size = sz;
          best = e;
        }
      }
      cur = table_closure(t, cur, best);
      gp_gens.push_back(best);
    }
  }

  IsoSearchSpec spec;
  spec.a = &t;
  spec.b = &t;
  spec.targets = all_indices(t.n);
  spec.prefix_gens = gp_gens;
  spec.prefix_targets = gp_idx;
  return search_isomorphisms(spec);
}

}  // namespace hgs
