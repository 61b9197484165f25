#include "hgs/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace hgs {

// ---- StabChain ----------------------------------------------------------

StabChain::StabChain(int degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  levels_.resize(degree ? degree : 1);
  for (int l = 0; l < int(levels_.size()); ++l) {
    levels_[l].base = l;
    levels_[l].transversal.assign(degree, Perm(0));
    levels_[l].in_orbit.assign(degree, false);
    levels_[l].transversal[l] = Perm(degree);
    levels_[l].in_orbit[l] = true;
    levels_[l].orbit_size = 1;
  }
  // A generator fixing the first j base points belongs to the generating
  // sets of levels 0..j.
  auto install = [&](const Perm& g, int from) {
    int j = from;
    while (j < degree_ && g[j] == j) ++j;
    if (j >= int(levels_.size())) return;  // identity
    for (int k = from; k <= j; ++k) levels_[k].gens.push_back(g);
    for (int k = from; k <= j; ++k) extend_orbit(k);
  };
  for (const Perm& g : generators)
    if (!g.is_identity()) install(g, 0);

  // Verify Schreier generators sweep by sweep until everything sifts to the
  // identity; each failure installs the residue below the failing level.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (int l = 0; l < int(levels_.size()); ++l) {
      Level& lev = levels_[l];
      for (int u = 0; u < degree_; ++u) {
        if (!lev.in_orbit[u]) continue;
        for (size_t k = 0; k < lev.gens.size(); ++k) {
          const Perm s = lev.gens[k];
          const int v = s[u];
          const Perm schreier =
              lev.transversal[v].inverse().compose(s).compose(
                  lev.transversal[u]);
          Perm residue = schreier;
          for (int j = l + 1; j < int(levels_.size()); ++j) {
            if (residue.is_identity()) break;
            const int w = residue[levels_[j].base];
            if (w == levels_[j].base) continue;
            if (!levels_[j].in_orbit[w]) break;
            residue = levels_[j].transversal[w].inverse().compose(residue);
          }
          if (!residue.is_identity()) {
            install(residue, l + 1);
            dirty = true;
          }
        }
      }
    }
  }

  order_ = 1;
  for (const Level& lev : levels_) order_ *= uint64_t(lev.orbit_size);
}

bool StabChain::extend_orbit(int level) {
  Level& lev = levels_[level];
  bool grew = false;
  std::vector<int> queue;
  for (int u = 0; u < degree_; ++u)
    if (lev.in_orbit[u]) queue.push_back(u);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    for (const Perm& s : lev.gens) {
      const int v = s[u];
      if (!lev.in_orbit[v]) {
        lev.in_orbit[v] = true;
        lev.transversal[v] = s.compose(lev.transversal[u]);
        lev.orbit_size++;
        queue.push_back(v);
        grew = true;
      }
    }
  }
  return grew;
}

bool StabChain::contains(const Perm& p) const {
  Perm r = p;
  for (const Level& lev : levels_) {
    if (r.is_identity()) return true;
    const int u = r[lev.base];
    if (u == lev.base) continue;
    if (!lev.in_orbit[u]) return false;
    r = lev.transversal[u].inverse().compose(r);
  }
  return r.is_identity();
}

// ---- PermGroup ----------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) gens_.push_back(Perm(degree));
  for (const Perm& g : gens_)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree differs from group degree");
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Perm(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<int> cyc(degree);
  for (int i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
  std::vector<int> swp(degree);
  for (int i = 0; i < degree; ++i) swp[i] = i;
  if (degree >= 2) std::swap(swp[0], swp[1]);
  std::vector<Perm> gens{Perm::from_images(swp)};
  if (degree >= 3) gens.push_back(Perm::from_images(cyc));
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(int degree) {
  std::vector<int> cyc(degree);
  for (int i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
  return PermGroup(degree, {Perm::from_images(cyc)});
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->chain_once, [this] {
    cache_->chain = std::make_unique<StabChain>(degree_, gens_);
  });
  return *cache_->chain;
}

uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("membership test across degrees");
  return chain().contains(p);
}

const std::vector<Perm>& PermGroup::elements(uint64_t cap) const& {
  // On a cap overflow the lambda throws, which leaves the once-flag unset;
  // a later call (possibly with a larger cap) retries the closure.
  std::call_once(cache_->elements_once, [this, cap] {
    std::unordered_set<uint64_t> seen;
    std::vector<Perm> out{Perm(degree_)};
    seen.insert(out[0].key());
    for (size_t qi = 0; qi < out.size(); ++qi) {
      const Perm cur = out[qi];
      for (const Perm& g : gens_) {
        const Perm nxt = cur.compose(g);
        if (seen.insert(nxt.key()).second) {
          if (out.size() + 1 > cap)
            throw CapExceeded("group closure exceeds cap of " +
                              std::to_string(cap));
          out.push_back(nxt);
        }
      }
    }
    std::sort(out.begin(), out.end());
    cache_->elements = std::move(out);
    cache_->key.reserve(cache_->elements.size());
    for (const Perm& p : cache_->elements) cache_->key.push_back(p.key());
    cache_->elements_ok = true;
  });
  return cache_->elements;
}

bool PermGroup::has_elements() const { return cache_ && cache_->elements_ok; }

const std::vector<uint64_t>& PermGroup::key(uint64_t cap) const& {
  elements(cap);
  return cache_->key;
}

std::vector<int> PermGroup::orbit_of(int pt) const {
  std::vector<bool> in(degree_, false);
  std::vector<int> orb{pt};
  in[pt] = true;
  for (size_t qi = 0; qi < orb.size(); ++qi)
    for (const Perm& g : gens_) {
      const int v = g[orb[qi]];
      if (!in[v]) {
        in[v] = true;
        orb.push_back(v);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && int(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_trivial() const {
  for (const Perm& g : gens_)
    if (!g.is_identity()) return false;
  return true;
}

// ---- free operations ----------------------------------------------------

PermGroup close(const std::vector<Perm>& generators, uint64_t cap) {
  if (generators.empty()) throw std::invalid_argument("close: no generators");
  PermGroup g(generators.front().degree(), generators);
  g.elements(cap);
  return g;
}

bool is_regular(const PermGroup& n) {
  return n.is_transitive() && n.order() == uint64_t(n.degree());
}

PermGroup point_stabilizer(const PermGroup& g, int pt, uint64_t cap) {
  std::vector<Perm> stab;
  for (const Perm& p : g.elements(cap))
    if (p[pt] == pt) stab.push_back(p);
  PermGroup out(g.degree(), stab);
  out.elements(cap);  // already closed; materializes the cache
  return out;
}

bool normalizes(const PermGroup& g, const PermGroup& n) {
  const std::vector<Perm>& elems = n.elements();
  const std::vector<uint64_t>& key = n.key();
  for (const Perm& s : g.generators()) {
    // Cheap reject on the first non-identity element before conjugating all.
    for (const Perm& e : elems) {
      const uint64_t k = e.conjugated_by(s).key();
      if (!std::binary_search(key.begin(), key.end(), k)) return false;
    }
  }
  return true;
}

PermGroup centralizer_of_regular(const PermGroup& n) {
  if (!is_regular(n)) throw NotRegular("centralizer_of_regular: not regular");
  const int g = n.degree();
  // n_i is the unique element with n_i(0) = i.
  std::vector<Perm> by_point(g, Perm(0));
  for (const Perm& e : n.elements()) by_point[e[0]] = e;
  std::vector<Perm> cent;
  cent.reserve(g);
  for (const Perm& m : n.elements()) {
    std::vector<int> images(g);
    for (int i = 0; i < g; ++i) images[i] = by_point[i].compose(m)[0];
    cent.push_back(Perm::from_images(images));
  }
  PermGroup out(g, cent);
  out.elements();
  return out;
}

namespace {

// Open-addressing index over fixed-stride key slices in an arena. Slices are
// compared in full on hash collision, so dedup is exact.
class SliceIndex {
 public:
  SliceIndex(const std::vector<uint64_t>* arena, int stride)
      : arena_(arena), stride_(stride) {}

  static uint64_t hash(const uint64_t* s, int n) {
    uint64_t h = 0xcbf29ce484222325ull ^ uint64_t(n);
    for (int i = 0; i < n; ++i) {
      h ^= s[i];
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  // True if an arena member equal to `slice` is already indexed. `slice` need
  // not live in the arena.
  bool contains(const uint64_t* slice) const {
    if (slots_.empty()) return false;
    const uint64_t h = hash(slice, stride_);
    size_t pos = h & (slots_.size() - 1);
    while (slots_[pos] != kEmpty) {
      const uint64_t* other = arena_->data() + size_t(slots_[pos]) * stride_;
      if (std::equal(slice, slice + stride_, other)) return true;
      pos = (pos + 1) & (slots_.size() - 1);
    }
    return false;
  }

  // Indexes arena member `id`, which the caller has just appended.
  void add(uint32_t id) {
    if ((count_ + 1) * 10 > slots_.size() * 7) grow();
    const uint64_t* slice = arena_->data() + size_t(id) * stride_;
    const uint64_t h = hash(slice, stride_);
    size_t pos = h & (slots_.size() - 1);
    while (slots_[pos] != kEmpty) pos = (pos + 1) & (slots_.size() - 1);
    slots_[pos] = id;
    ++count_;
  }

 private:
  static constexpr uint32_t kEmpty = 0xFFFFFFFFu;

  void grow() {
    const size_t n = slots_.empty() ? 1024 : slots_.size() * 2;
    std::vector<uint32_t> fresh(n, kEmpty);
    std::swap(slots_, fresh);
    count_ = 0;
    const size_t members = arena_->size() / stride_;
    for (size_t id = 0; id < members; ++id) {
      const uint64_t* s = arena_->data() + id * stride_;
      const uint64_t h = hash(s, stride_);
      size_t pos = h & (slots_.size() - 1);
      while (slots_[pos] != kEmpty) pos = (pos + 1) & (slots_.size() - 1);
      slots_[pos] = uint32_t(id);
      ++count_;
    }
  }

  const std::vector<uint64_t>* arena_;
  int stride_;
  std::vector<uint32_t> slots_;
  size_t count_ = 0;
};

}  // namespace

std::vector<uint64_t> subgroup_key(const PermGroup& g) { return g.key(); }

PermGroup group_from_keys(const uint64_t* keys, int count, int degree) {
  std::vector<Perm> elems;
  elems.reserve(count);
  for (int i = 0; i < count; ++i) elems.push_back(Perm::unpack(keys[i], degree));
  PermGroup grp(degree, elems);
  grp.elements();
  return grp;
}

OrbitKeys conjugation_orbit_keys(const PermGroup& n0) {
  if (!is_regular(n0)) throw NotRegular("conjugation_orbit: not regular");
  const int g = n0.degree();
  const int m = int(n0.order());
  const std::vector<Perm> sgens = PermGroup::symmetric(g).generators();

  OrbitKeys orbit;
  orbit.degree = g;
  orbit.sub_order = m;
  orbit.arena = n0.key();
  SliceIndex index(&orbit.arena, m);
  index.add(0);

  std::vector<uint64_t> scratch(m);
  for (size_t qi = 0; qi * m < orbit.arena.size(); ++qi) {
    for (const Perm& s : sgens) {
      const uint64_t* cur = orbit.arena.data() + qi * m;
      for (int i = 0; i < m; ++i)
        scratch[i] = Perm::unpack(cur[i], g).conjugated_by(s).key();
      std::sort(scratch.begin(), scratch.end());
      if (!index.contains(scratch.data())) {
        const uint32_t id = uint32_t(orbit.arena.size() / m);
        orbit.arena.insert(orbit.arena.end(), scratch.begin(), scratch.end());
        index.add(id);
      }
    }
  }

  // Canonical order, independent of BFS schedule.
  std::vector<uint32_t> ids(orbit.size());
  for (uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](uint32_t a, uint32_t b) {
    const uint64_t* pa = orbit.member(a);
    const uint64_t* pb = orbit.member(b);
    return std::lexicographical_compare(pa, pa + m, pb, pb + m);
  });
  std::vector<uint64_t> sorted;
  sorted.reserve(orbit.arena.size());
  for (uint32_t id : ids) {
    const uint64_t* p = orbit.member(id);
    sorted.insert(sorted.end(), p, p + m);
  }
  orbit.arena = std::move(sorted);
  return orbit;
}

std::vector<PermGroup> conjugation_orbit(const PermGroup& n0) {
  const OrbitKeys orbit = conjugation_orbit_keys(n0);
  std::vector<PermGroup> out;
  out.reserve(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i)
    out.push_back(group_from_keys(orbit.member(i), orbit.sub_order, orbit.degree));
  return out;
}

}  // namespace hgs
