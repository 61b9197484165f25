#include "hgs/closedform.hpp"

#include <algorithm>
#include <unordered_set>

#include "hgs/grouplib.hpp"

namespace hgs {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PermGroup derived_subgroup(const PermGroup& g, uint64_t cap) {
  std::vector<Perm> dgens;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators())
      dgens.push_back(
          a.compose(b).compose(a.inverse()).compose(b.inverse()));
  if (dgens.empty()) dgens.push_back(Perm(g.degree()));

  // Normal closure under the generators of g.
  for (;;) {
    PermGroup d = close(dgens, cap);
    const size_t before = dgens.size();
    for (const Perm& s : g.generators())
      for (size_t i = 0; i < before; ++i) {
        const Perm c = dgens[i].conjugated_by(s);
        if (!std::binary_search(d.key().begin(), d.key().end(), c.key()))
          dgens.push_back(c);
      }
    if (dgens.size() == before) return d;
  }
}

// True when x is a power of an order-m element generating the same subgroup?
// Not needed; complements are matched by abstract shape instead.

bool is_cyclic(const PermGroup& h) {
  const uint64_t n = h.elements().size();
  for (const Perm& p : h.elements())
    if (uint64_t(p.order()) == n) return true;
  return n == 1;
}

bool is_elementary_p2(const PermGroup& h, int p) {
  if (h.elements().size() != size_t(p) * p) return false;
  for (const Perm& e : h.elements())
    if (!e.is_identity() && e.order() != p) return false;
  // p^2 with exponent p is abelian automatically.
  return true;
}

bool is_c2_x_cm(const PermGroup& h, int m) {
  // C2 x C_m with m even: order 2m, abelian, not cyclic, and cyclic of
  // index 2 exists.
  if (h.elements().size() != size_t(2) * m) return false;
  for (const Perm& a : h.elements())
    for (const Perm& b : h.elements())
      if (!(a.compose(b) == b.compose(a))) return false;
  if (is_cyclic(h)) return false;
  int max_order = 1;
  for (const Perm& a : h.elements()) max_order = std::max(max_order, a.order());
  return max_order == m;
}

// Faithful action: no non-identity element of c centralizes all of a.
bool acts_faithfully(const PermGroup& c, const PermGroup& a) {
  for (const Perm& x : c.elements()) {
    if (x.is_identity()) continue;
    bool central = true;
    for (const Perm& y : a.elements())
      if (!(x.compose(y) == y.compose(x))) {
        central = false;
        break;
      }
    if (central) return false;
  }
  return true;
}

bool intersects_trivially(const PermGroup& a, const PermGroup& c) {
  for (const Perm& x : c.elements()) {
    if (x.is_identity()) continue;
    if (std::binary_search(a.key().begin(), a.key().end(), x.key()))
      return false;
  }
  return true;
}

struct NormalComplementMatch {
  bool found = false;
  int m = 0;
};

// Searches a normal subgroup A (selected by `normal_pred`) with a complement
// C (selected by `comp_pred`) acting faithfully on A.
template <typename PredA, typename PredC>
NormalComplementMatch find_split(const std::vector<PermGroup>& subgroups,
                                 const PermGroup& g, uint64_t a_order,
                                 PredA normal_pred, PredC comp_pred) {
  const uint64_t g_order = g.elements().size();
  for (const PermGroup& a : subgroups) {
    if (a.elements().size() != a_order) continue;
    if (!normal_pred(a)) continue;
    if (!normalizes(g, a)) continue;
    for (const PermGroup& c : subgroups) {
      if (c.elements().size() * a_order != g_order) continue;
      if (!comp_pred(c)) continue;
      if (!intersects_trivially(a, c)) continue;
      if (!acts_faithfully(c, a)) continue;
      return {true, int(c.elements().size())};
    }
  }
  return {false, 0};
}

}  // namespace

bool is_solvable(const PermGroup& g) {
  if (g.order() > kDefaultCap) return false;  // A_g or S_g at these degrees
  PermGroup d = g;
  uint64_t prev = g.order();
  for (;;) {
    d = derived_subgroup(d, kDefaultCap);
    const uint64_t n = d.order();
    if (n == 1) return true;
    if (n == prev) return false;  // perfect group
    prev = n;
  }
}

int predict_prime(int p, const TransitiveGroupEntry& g) {
  (void)p;
  return is_solvable(g.group) ? 1 : 0;
}

GroupShape classify_shape(const TransitiveGroupEntry& g) {
  const int deg = g.degree;
  GroupShape shape;

  int p = 0;
  bool p_squared = false;
  if (deg == 9) {
    p = 3;
    p_squared = true;
  } else if (deg == 6 || deg == 10) {
    p = deg / 2;
  } else if (is_prime(deg)) {
    shape.p = deg;
    return shape;  // prime degrees carry no parameterized shape
  } else {
    throw std::out_of_range("classify_shape: unsupported degree " +
                            std::to_string(deg));
  }
  shape.p = p;

  // Every family embeds in a holomorph of order at most 2p^2(p-1) (degree
  // 2p) or p^3(p-1)/p... = p^2 * p(p-1) (degree p^2); anything larger is out.
  const uint64_t bound =
      p_squared ? uint64_t(p) * p * p * (p - 1) : uint64_t(2) * p * p * (p - 1);
  if (g.order > bound) return shape;

  const std::vector<PermGroup> subgroups = all_subgroups(g.group);

  if (p_squared) {
    // C_{p^2} : C_m for m | p(p-1).
    const int m = int(g.order / (uint64_t(p) * p));
    if (g.order % (uint64_t(p) * p) != 0 || (p * (p - 1)) % m != 0)
      return shape;
    const NormalComplementMatch hit = find_split(
        subgroups, g.group, uint64_t(p) * p,
        [&](const PermGroup& a) {
          return is_cyclic(a) && !is_elementary_p2(a, p);
        },
        [&](const PermGroup& c) { return is_cyclic(c); });
    if (hit.found && hit.m == m) {
      shape.kind = ShapeKind::PSquaredByCm;
      shape.m = m;
    }
    return shape;
  }

  // Degree 2p. Preference order: larger normal p-part first.
  // (C_p x C_p) : (C2 x C_m), m even | p-1.
  for (int m = p - 1; m >= 2; --m) {
    if ((p - 1) % m || m % 2) continue;
    if (g.order != uint64_t(p) * p * 2 * m) continue;
    const NormalComplementMatch hit = find_split(
        subgroups, g.group, uint64_t(p) * p,
        [&](const PermGroup& a) { return is_elementary_p2(a, p); },
        [&](const PermGroup& c) { return is_c2_x_cm(c, m); });
    if (hit.found) {
      shape.kind = ShapeKind::ElemSqByC2xCm;
      shape.m = m;
      return shape;
    }
  }
  // (C_p x C_p) : C_m, m even | p-1.
  for (int m = p - 1; m >= 2; --m) {
    if ((p - 1) % m || m % 2) continue;
    if (g.order != uint64_t(p) * p * m) continue;
    const NormalComplementMatch hit = find_split(
        subgroups, g.group, uint64_t(p) * p,
        [&](const PermGroup& a) { return is_elementary_p2(a, p); },
        [&](const PermGroup& c) { return is_cyclic(c); });
    if (hit.found) {
      shape.kind = ShapeKind::ElemSqByCm;
      shape.m = m;
      return shape;
    }
  }
  // C_{2p} : C_m, m | p-1.
  for (int m = p - 1; m >= 1; --m) {
    if ((p - 1) % m) continue;
    if (g.order != uint64_t(2) * p * m) continue;
    const NormalComplementMatch hit = find_split(
        subgroups, g.group, uint64_t(2) * p,
        [&](const PermGroup& a) { return is_cyclic(a); },
        [&](const PermGroup& c) { return is_cyclic(c); });
    if (hit.found) {
      shape.kind = ShapeKind::Cyclic2pByCm;
      shape.m = m;
      return shape;
    }
  }
  // C_p : C_m, m even | p-1.
  for (int m = p - 1; m >= 2; --m) {
    if ((p - 1) % m || m % 2) continue;
    if (g.order != uint64_t(p) * m) continue;
    const NormalComplementMatch hit = find_split(
        subgroups, g.group, uint64_t(p),
        [&](const PermGroup& a) { return is_cyclic(a); },
        [&](const PermGroup& c) { return is_cyclic(c); });
    if (hit.found) {
      shape.kind = ShapeKind::CpByCm;
      shape.m = m;
      return shape;
    }
  }
  return shape;
}

PSquaredPrediction predict_p_squared(int p, const GroupShape& shape,
                                     bool iff_mode) {
  PSquaredPrediction out;
  if (shape.kind == ShapeKind::PSquaredByCm) {
    out.cyclic = (shape.m == 1 || shape.m == p) ? p : 1;
    out.elementary = 0;
    return out;
  }
  if (iff_mode) out.cyclic = 0;
  return out;
}

std::optional<int> predict_2p_cyclic(int p, const GroupShape& shape,
                                     bool iff_mode) {
  switch (shape.kind) {
    case ShapeKind::Cyclic2pByCm:
      return 1;
    case ShapeKind::CpByCm:
      return shape.m == 2 ? p : 1;  // m = 2 is the dihedral group D_{2p}
    default:
      if (iff_mode) return 0;
      return std::nullopt;
  }
}

std::optional<int> predict_2p_dihedral(int p, const GroupShape& shape,
                                       bool iff_mode) {
  (void)p;
  switch (shape.kind) {
    case ShapeKind::ElemSqByCm:
    case ShapeKind::ElemSqByC2xCm:
    case ShapeKind::Cyclic2pByCm:
    case ShapeKind::CpByCm:
      return 2;
    default:
      if (iff_mode) return 0;
      return std::nullopt;
  }
}

}  // namespace hgs
