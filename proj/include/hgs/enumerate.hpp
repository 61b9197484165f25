#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hgs/grouplib.hpp"
#include "hgs/tgdb.hpp"

namespace hgs {

// One Hopf Galois structure on the extension belonging to a transitive G: a
// regular subgroup N of S_g normalized by lambda(G), plus the computed flags.
struct HGSRecord {
  int serial = 0;
  PermGroup n;
  const GroupType* type = nullptr;
  bool almost_classical = false;
  int sub_gst_count = 0;
  bool bijective_correspondence = false;
  int class_id = 0;  // smallest serial in the G-isomorphism class
};

struct TypeSummary {
  const GroupType* type = nullptr;
  int total = 0;
  int ac = 0;
  int bc = 0;
  int classes = 0;
  // class size -> number of classes of that size
  std::map<int, int> partition;
};

// Everything computed for one transitive group: one row of the result tables.
struct GroupReport {
  const TransitiveGroupEntry* group = nullptr;
  uint64_t intfields = 0;
  std::vector<HGSRecord> records;
  std::vector<TypeSummary> per_type;  // catalogue order

  int total() const;
  int total_ac() const;
  int total_bc() const;
  int total_classes() const;
};

// Shared per-degree state: the conjugation orbit of each catalogue type,
// computed once and reused by every transitive group of that degree.
struct DegreeContext {
  int degree = 0;
  const std::vector<GroupType>* types = nullptr;
  std::vector<OrbitKeys> orbits;  // parallel to *types

  static DegreeContext build(int degree);
};

// Step 1: members of the conjugation orbit of the type's regular model that
// lambda(G) normalizes, with the almost-classically-Galois flag
// (Z(N) contained in G, membership via the stabilizer chain).
std::vector<std::pair<PermGroup, bool>> step1_enumerate(
    const TransitiveGroupEntry& g, const GroupType& type,
    const OrbitKeys& orbit);

// Step 2: number of subgroups of G containing the stabilizer of 0, i.e. the
// number of intermediate fields of L/K.
uint64_t step2_intfields(const TransitiveGroupEntry& g);

// Step 3: number of G-stable subgroups of N.
int step3_sub_gst(const PermGroup& n, const TransitiveGroupEntry& g);

// Step 4: partitions records into G-isomorphism classes, testing only pairs
// with equal type and equal sub_gst_count; assigns class_id by smallest
// serial. `use_prefilter=false` drops the (type, subGst) prefilter; the
// partition must not change.
void step4_partition(std::vector<HGSRecord>& records,
                     const TransitiveGroupEntry& g, bool use_prefilter = true);

GroupReport enumerate_all(const TransitiveGroupEntry& g,
                          const DegreeContext& ctx);

// Shortest-word labels for the cosets G/G', identity coset "Id" at point 0;
// generator letters a, b, c, ... in the order the entry lists them.
std::vector<std::string> coset_labels(const TransitiveGroupEntry& g);

// The Hopf action map n |-> label of n^{-1}(0), one pair per element of N in
// canonical element order.
std::vector<std::pair<Perm, std::string>> action_map(
    const PermGroup& n, const TransitiveGroupEntry& g,
    const std::vector<std::string>& labels);

}  // namespace hgs
