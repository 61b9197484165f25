#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hgs/perm.hpp"

namespace hgs {

// Default materialization cap. Groups larger than this (S_11 and friends)
// participate only through generator-level checks and the stabilizer chain.
inline constexpr uint64_t kDefaultCap = 1000000;

// Deterministic Schreier-Sims stabilizer chain with base 0,1,2,...
class StabChain {
 public:
  StabChain(int degree, const std::vector<Perm>& generators);

  uint64_t order() const { return order_; }
  bool contains(const Perm& p) const;

 private:
  struct Level {
    std::vector<Perm> gens;
    // transversal[u] maps the base point of this level to u; degree 0 marks
    // points outside the orbit.
    std::vector<Perm> transversal;
    std::vector<bool> in_orbit;
    int base = 0;
    int orbit_size = 0;
  };

  bool extend_orbit(int level);

  int degree_;
  std::vector<Level> levels_;
  uint64_t order_ = 1;
};

// A subgroup of S_g given by generators. Value type; the element set, order
// and stabilizer chain are computed on first use and shared between copies.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup cyclic(int degree);  // generated by the full g-cycle

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  uint64_t order() const;
  bool contains(const Perm& p) const;

  // Full element set in canonical order (lexicographic on image sequences).
  // Throws CapExceeded if the closure grows past `cap`. Rvalue calls return
  // a copy so that iterating a temporary's elements stays valid.
  const std::vector<Perm>& elements(uint64_t cap = kDefaultCap) const&;
  std::vector<Perm> elements(uint64_t cap = kDefaultCap) const&& {
    return static_cast<const PermGroup&>(*this).elements(cap);
  }
  bool has_elements() const;

  std::vector<int> orbit_of(int pt) const;
  bool is_transitive() const;
  bool is_trivial() const;

  // Canonical key: the sorted element key list. Used for hashing, dedup and
  // tie-breaking everywhere.
  const std::vector<uint64_t>& key(uint64_t cap = kDefaultCap) const&;
  std::vector<uint64_t> key(uint64_t cap = kDefaultCap) const&& {
    return static_cast<const PermGroup&>(*this).key(cap);
  }

 private:
  struct Cache {
    std::once_flag elements_once;
    std::once_flag chain_once;
    std::vector<Perm> elements;
    std::vector<uint64_t> key;
    bool elements_ok = false;
    std::unique_ptr<StabChain> chain;
  };

  const StabChain& chain() const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<Cache> cache_;
};

// ---- permcore operations ----------------------------------------------

// Full element set by BFS closure under composition; throws CapExceeded.
PermGroup close(const std::vector<Perm>& generators, uint64_t cap = kDefaultCap);

inline uint64_t group_order(const PermGroup& g) { return g.order(); }
inline bool is_transitive(const PermGroup& g) { return g.is_transitive(); }

// Transitive with |N| = degree; equivalently transitive and fixed-point-free
// away from the identity.
bool is_regular(const PermGroup& n);

PermGroup point_stabilizer(const PermGroup& g, int pt, uint64_t cap = kDefaultCap);

// True iff every generator of g conjugates the (materialized) n onto itself.
// g may be huge; only its generators are used.
bool normalizes(const PermGroup& g, const PermGroup& n);

// The opposite regular representation: for regular n, the centralizer of n in
// S_g, built directly through the identification point i <-> n_i, n_i(0) = i.
PermGroup centralizer_of_regular(const PermGroup& n);

// Compact storage for an orbit of equal-order subgroups: each member is a
// slice of `sub_order` sorted element keys inside one flat arena. Degree 11
// orbits have 362880 members, so the PermGroup representation is too heavy.
struct OrbitKeys {
  int degree = 0;
  int sub_order = 0;
  std::vector<uint64_t> arena;

  size_t size() const { return sub_order ? arena.size() / sub_order : 0; }
  const uint64_t* member(size_t i) const { return arena.data() + i * sub_order; }
};

OrbitKeys conjugation_orbit_keys(const PermGroup& n0);

// Rebuilds a materialized PermGroup from a slice of sorted element keys.
PermGroup group_from_keys(const uint64_t* keys, int count, int degree);

// All distinct S_g-conjugates of a regular subgroup, BFS on the conjugation
// action of two generators of S_g, deduplicated by canonical key. This is the
// set of all regular subgroups of the same abstract type.
std::vector<PermGroup> conjugation_orbit(const PermGroup& n0);

// All subgroups K with h <= K <= g, by closure BFS (adjoin one coset
// representative at a time). Results sorted by canonical key.
std::vector<PermGroup> subgroups_above(const PermGroup& g, const PermGroup& h,
                                       uint64_t cap = kDefaultCap);

std::vector<PermGroup> all_subgroups(const PermGroup& n, uint64_t cap = kDefaultCap);

// Sorted element-key list of a materialized group (the canonical subgroup key).
std::vector<uint64_t> subgroup_key(const PermGroup& g);

}  // namespace hgs
