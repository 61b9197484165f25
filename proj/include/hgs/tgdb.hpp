#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hgs/perm_group.hpp"

namespace hgs {

// One transitive group of degree g: the lambda(G) image of a Galois group
// acting on the cosets G/G'. Index follows the kTi numbering of the standard
// transitive-groups classification.
struct TransitiveGroupEntry {
  int degree = 0;
  int index = 0;
  std::string name_hint;  // optional label such as "C4xC2"
  std::vector<Perm> generators;
  uint64_t order = 0;
  PermGroup group;

  std::string label() const {
    return std::to_string(degree) + "T" + std::to_string(index);
  }
};

// Parses the database format: one entry per line,
//   <degree> <index> [name_hint] | <perm> ; <perm> ; ...
// with disjoint cycles over 0-based points, identity "()", and '#' comments.
// Every entry is validated: generators must generate a transitive group of
// the stated degree, and (degree, index) must be unique.
std::vector<TransitiveGroupEntry> load_db(std::istream& source);
std::vector<TransitiveGroupEntry> load_db_file(const std::string& path);

// The copy of the database shipped with the binary.
const std::vector<TransitiveGroupEntry>& bundled_db();

// Resolution order: explicit path > HGS_TGDB environment variable > bundled.
std::vector<TransitiveGroupEntry> resolve_db(const std::string& path_flag);

std::vector<const TransitiveGroupEntry*> entries_of_degree(
    const std::vector<TransitiveGroupEntry>& db, int degree);

// Independent self-enumeration for small degrees: all transitive subgroups of
// S_g up to conjugacy, from the full subgroup lattice of S_g. Each class is
// returned by its canonical representative (minimal subgroup key).
std::vector<PermGroup> enumerate_transitive_oracle(int g);

// Minimal subgroup key over the whole S_g-conjugation orbit of h; two
// subgroups are conjugate iff their minimal keys agree.
std::vector<uint64_t> min_conjugacy_key(const PermGroup& h);

}  // namespace hgs
