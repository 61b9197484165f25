#pragma once

#include <optional>

#include "hgs/tgdb.hpp"

namespace hgs {

// The parameterized families appearing in the degree p^2 and degree 2p
// classification theorems. `m` is always the order of the complement.
enum class ShapeKind {
  Unrecognized,
  PSquaredByCm,    // C_{p^2} : C_m,        m | p(p-1), faithful
  Cyclic2pByCm,    // C_{2p} : C_m,         m | p-1,    faithful
  CpByCm,          // C_p : C_m,            m even | p-1, faithful
                   //   (m = 2 is the dihedral group of order 2p)
  ElemSqByCm,      // (C_p x C_p) : C_m,    m even | p-1, faithful
  ElemSqByC2xCm,   // (C_p x C_p) : (C2 x C_m), m even | p-1, faithful
};

struct GroupShape {
  ShapeKind kind = ShapeKind::Unrecognized;
  int p = 0;
  int m = 0;
};

// Structural recognition of the theorem hypotheses: normal subgroup of the
// required order and type plus a complement of the required type acting
// faithfully. Degrees p (prime), p^2 = 9 and 2p = 6, 10 are supported;
// anything else throws.
GroupShape classify_shape(const TransitiveGroupEntry& g);

// Derived series reaches the trivial group. Groups beyond the cap are A_g or
// S_g at the degrees this project handles, hence insolvable.
bool is_solvable(const PermGroup& g);

// Prime degree: a unique structure iff the Galois closure group is solvable.
int predict_prime(int p, const TransitiveGroupEntry& g);

struct PSquaredPrediction {
  std::optional<int> cyclic;      // count of C_{p^2}-type structures
  std::optional<int> elementary;  // count of (C_p x C_p)-type structures
};

// Degree p^2: cyclic count is p for m in {1, p} and 1 otherwise; a recognized
// cyclic shape excludes the elementary type entirely. In iff mode an
// unrecognized shape predicts 0 cyclic-type structures; otherwise it yields
// no prediction. The elementary count for unrecognized shapes is never
// predicted (the theorems do not cover it).
PSquaredPrediction predict_p_squared(int p, const GroupShape& shape,
                                     bool iff_mode = true);

// Degree 2p, cyclic type: p for the dihedral group of order 2p, 1 for every
// other recognized family member, 0 (iff mode) or no prediction otherwise.
std::optional<int> predict_2p_cyclic(int p, const GroupShape& shape,
                                     bool iff_mode = true);

// Degree 2p, dihedral type: always 2 on the four recognized families.
std::optional<int> predict_2p_dihedral(int p, const GroupShape& shape,
                                       bool iff_mode = true);

}  // namespace hgs
