#include "hgs/enumerate.hpp"

#include <algorithm>
#include <cassert>

namespace hgs {

int GroupReport::total() const {
  int t = 0;
  for (const TypeSummary& s : per_type) t += s.total;
  return t;
}
int GroupReport::total_ac() const {
  int t = 0;
  for (const TypeSummary& s : per_type) t += s.ac;
  return t;
}
int GroupReport::total_bc() const {
  int t = 0;
  for (const TypeSummary& s : per_type) t += s.bc;
  return t;
}
int GroupReport::total_classes() const {
  int t = 0;
  for (const TypeSummary& s : per_type) t += s.classes;
  return t;
}

DegreeContext DegreeContext::build(int degree) {
  DegreeContext ctx;
  ctx.degree = degree;
  ctx.types = &catalogue(degree);
  ctx.orbits.reserve(ctx.types->size());
  for (const GroupType& t : *ctx.types)
    ctx.orbits.push_back(conjugation_orbit_keys(t.standard_rep));
  return ctx;
}

std::vector<std::pair<PermGroup, bool>> step1_enumerate(
    const TransitiveGroupEntry& g, const GroupType& type,
    const OrbitKeys& orbit) {
  const int deg = g.degree;
  const int m = orbit.sub_order;
  std::vector<std::pair<PermGroup, bool>> out;

  for (size_t i = 0; i < orbit.size(); ++i) {
    const uint64_t* keys = orbit.member(i);
    // Normalization test directly on the key slice: conjugate each element
    // by each generator and binary-search the slice.
    bool normalized = true;
    for (const Perm& s : g.generators) {
      for (int e = 0; e < m && normalized; ++e) {
        const uint64_t conj =
            Perm::unpack(keys[e], deg).conjugated_by(s).key();
        normalized = std::binary_search(keys, keys + m, conj);
      }
      if (!normalized) break;
    }
    if (!normalized) continue;

    PermGroup n = group_from_keys(keys, m, deg);
    const PermGroup z = centralizer_of_regular(n);
    bool almost_classical = true;
    for (const Perm& p : z.elements())
      if (!g.group.contains(p)) {
        almost_classical = false;
        break;
      }
    out.emplace_back(std::move(n), almost_classical);
  }
  (void)type;
  return out;
}

uint64_t step2_intfields(const TransitiveGroupEntry& g) {
  const PermGroup stab = point_stabilizer(g.group, 0);
  return subgroups_above(g.group, stab).size();
}

int step3_sub_gst(const PermGroup& n, const TransitiveGroupEntry& g) {
  int count = 0;
  for (const PermGroup& s : all_subgroups(n))
    if (normalizes(g.group, s)) ++count;
  return count;
}

void step4_partition(std::vector<HGSRecord>& records,
                     const TransitiveGroupEntry& g, bool use_prefilter) {
  // Union by first-fit against class representatives; class_id is the
  // smallest serial, which is the representative's serial because records
  // arrive in serial order.
  std::vector<int> reps;
  for (HGSRecord& r : records) {
    int assigned = -1;
    for (int rep_index : reps) {
      const HGSRecord& rep = records[rep_index];
      if (use_prefilter &&
          (rep.type != r.type || rep.sub_gst_count != r.sub_gst_count))
        continue;
      if (g_isomorphic(rep.n, r.n, g.group)) {
        assigned = rep.class_id;
        break;
      }
    }
    if (assigned < 0) {
      r.class_id = r.serial;
      reps.push_back(int(&r - records.data()));
    } else {
      r.class_id = assigned;
    }
  }
}

GroupReport enumerate_all(const TransitiveGroupEntry& g,
                          const DegreeContext& ctx) {
  GroupReport report;
  report.group = &g;

  int serial = 0;
  for (size_t ti = 0; ti < ctx.types->size(); ++ti) {
    const GroupType& type = (*ctx.types)[ti];
    // Canonical-key order within a type: the orbit is already sorted, and
    // step1 preserves it, so serials are deterministic.
    for (auto& [n, ac] : step1_enumerate(g, type, ctx.orbits[ti])) {
      HGSRecord r;
      r.serial = serial++;
      r.n = std::move(n);
      r.type = &type;
      r.almost_classical = ac;
      report.records.push_back(std::move(r));
    }
  }

  if (!report.records.empty()) {
    report.intfields = step2_intfields(g);
    for (HGSRecord& r : report.records) {
      r.sub_gst_count = step3_sub_gst(r.n, g);
      r.bijective_correspondence =
          uint64_t(r.sub_gst_count) == report.intfields;
    }
    step4_partition(report.records, g);
  }

  for (const GroupType& type : *ctx.types) {
    TypeSummary s;
    s.type = &type;
    std::map<int, int> class_sizes;  // class_id -> size
    for (const HGSRecord& r : report.records) {
      if (r.type != &type) continue;
      s.total++;
      if (r.almost_classical) s.ac++;
      if (r.bijective_correspondence) s.bc++;
      class_sizes[r.class_id]++;
    }
    s.classes = int(class_sizes.size());
    for (auto& [id, size] : class_sizes) s.partition[size]++;
    report.per_type.push_back(std::move(s));
  }
  return report;
}

std::vector<std::string> coset_labels(const TransitiveGroupEntry& g) {
  const int deg = g.degree;
  std::vector<std::string> labels(deg);
  std::vector<bool> done(deg, false);
  labels[0] = "Id";
  done[0] = true;
  int remaining = deg - 1;

  // Words over the generator letters in (length, lex) order; a word w names
  // the coset of the product it spells, i.e. the point lambda(w)(0).
  std::vector<std::pair<std::string, int>> frontier{{"", 0}};
  while (remaining > 0 && !frontier.empty()) {
    std::vector<std::pair<std::string, int>> next;
    for (const auto& [word, point] : frontier) {
      for (size_t gi = 0; gi < g.generators.size(); ++gi) {
        // Appending a letter multiplies on the right... but cosets are
        // reached by left translation, so spell words left-to-right with the
        // new letter leftmost: w' = letter + w, point' = gen(point).
        const std::string next_word = std::string(1, char('a' + gi)) + word;
        const int next_point = g.generators[gi][point];
        next.emplace_back(next_word, next_point);
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& [word, point] : next)
      if (!done[point]) {
        done[point] = true;
        labels[point] = word;
        --remaining;
      }
    frontier = std::move(next);
  }
  assert(remaining == 0 && "entry is transitive, every coset gets a label");
  return labels;
}

std::vector<std::pair<Perm, std::string>> action_map(
    const PermGroup& n, const TransitiveGroupEntry& g,
    const std::vector<std::string>& labels) {
  if (n.degree() != g.degree || labels.size() != size_t(g.degree))
    throw std::invalid_argument("action_map: degree mismatch");
  std::vector<std::pair<Perm, std::string>> out;
  for (const Perm& e : n.elements())
    out.emplace_back(e, labels[e.inverse()[0]]);
  return out;
}

}  // namespace hgs
