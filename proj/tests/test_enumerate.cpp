#include <map>
#include <set>

#include "doctest.h"
#include "hgs/enumerate.hpp"
#include "hgs/reference_data.hpp"

using namespace hgs;

namespace {

TransitiveGroupEntry entry_8t3() {
  TransitiveGroupEntry e;
  e.degree = 8;
  e.index = 3;
  e.name_hint = "C2^3";
  e.generators = worked_example().lambda_gens;
  e.group = PermGroup(8, e.generators);
  e.order = 8;
  return e;
}

TransitiveGroupEntry entry_regular(int degree, int index, const GroupType& t) {
  TransitiveGroupEntry e;
  e.degree = degree;
  e.index = index;
  e.name_hint = t.name;
  e.generators = t.standard_rep.generators();
  e.group = t.standard_rep;
  e.order = t.order;
  return e;
}

const GroupType& type_by_name(int order, const std::string& name) {
  for (const GroupType& t : catalogue(order))
    if (t.name == name) return t;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("worked example: step1 counts for the C2xC2xC2 Galois group") {
  const TransitiveGroupEntry g = entry_8t3();
  const DegreeContext ctx = DegreeContext::build(8);

  std::map<std::string, std::pair<int, int>> counts;  // type -> (T, a-c)
  for (size_t ti = 0; ti < ctx.types->size(); ++ti) {
    const auto found = step1_enumerate(g, (*ctx.types)[ti], ctx.orbits[ti]);
    int ac = 0;
    for (const auto& [n, is_ac] : found) ac += is_ac;
    counts[(*ctx.types)[ti].name] = {int(found.size()), ac};
  }
  CHECK(counts["C8"] == std::pair<int, int>{0, 0});
  CHECK(counts["C4xC2"] == std::pair<int, int>{42, 0});
  CHECK(counts["C2^3"] == std::pair<int, int>{8, 1});
  CHECK(counts["D4"] == std::pair<int, int>{42, 0});
  CHECK(counts["Q8"] == std::pair<int, int>{14, 0});
}

TEST_CASE("worked example: full report for 8T3") {
  const TransitiveGroupEntry g = entry_8t3();
  const DegreeContext ctx = DegreeContext::build(8);
  const GroupReport rep = enumerate_all(g, ctx);

  CHECK(rep.intfields == 16);  // subgroup count of C2^3
  CHECK(rep.total() == 106);

  std::map<std::string, TypeQuad> quads;
  std::map<std::string, std::map<int, int>> parts;
  for (const TypeSummary& ts : rep.per_type) {
    quads[ts.type->name] = TypeQuad{ts.total, ts.ac, ts.bc, ts.classes};
    parts[ts.type->name] = ts.partition;
  }
  CHECK(quads["C4xC2"] == TypeQuad{42, 0, 0, 28});
  CHECK(quads["C2^3"] == TypeQuad{8, 1, 1, 8});
  CHECK(quads["D4"] == TypeQuad{42, 0, 0, 7});
  CHECK(quads["Q8"] == TypeQuad{14, 0, 0, 7});

  // Class size partitions: 42 = 21x1 + 7x3, 42 = 7x6, 14 = 7x2.
  CHECK(parts["C4xC2"] == std::map<int, int>{{1, 21}, {3, 7}});
  CHECK(parts["D4"] == std::map<int, int>{{6, 7}});
  CHECK(parts["Q8"] == std::map<int, int>{{2, 7}});

  // The six reference N_i all appear among the D4 records in one class of 6.
  const WorkedExample& fx = worked_example();
  std::set<int> class_ids;
  for (const auto& gens : fx.n_gens) {
    const PermGroup ni = close({gens[0], gens[1]});
    bool found = false;
    for (const HGSRecord& r : rep.records) {
      if (r.type->name != "D4") continue;
      if (r.n.key() == ni.key()) {
        found = true;
        class_ids.insert(r.class_id);
      }
    }
    CHECK(found);
  }
  CHECK(class_ids.size() == 1);
  int class_size = 0;
  for (const HGSRecord& r : rep.records)
    if (r.type->name == "D4" && r.class_id == *class_ids.begin()) ++class_size;
  CHECK(class_size == 6);
}

TEST_CASE("worked example: coset labels and the Hopf action of N1") {
  const TransitiveGroupEntry g = entry_8t3();
  const std::vector<std::string> labels = coset_labels(g);
  CHECK(labels ==
        std::vector<std::string>{"Id", "ab", "b", "ac", "c", "abc", "bc", "a"});

  const WorkedExample& fx = worked_example();
  const Perm s = fx.n_gens[0][0];
  const Perm r = fx.n_gens[0][1];
  const PermGroup n1 = close({s, r});
  const auto amap = action_map(n1, g, labels);
  auto label_of = [&](const Perm& x) {
    for (const auto& [e, l] : amap)
      if (e == x) return l;
    return std::string("?");
  };
  for (const auto& [elem_name, want] : fx.n1_action) {
    Perm x(8);
    for (char c : elem_name) {
      if (c == 's') x = x.compose(s);
      if (c == 'r') x = x.compose(r);
      if (c >= '2' && c <= '3')
        for (int k = 1; k < c - '0'; ++k) x = x.compose(r);
    }
    CHECK(label_of(x) == want);
  }
  // The identity always maps to the class of 1_G.
  CHECK(label_of(Perm(8)) == "Id");
}

TEST_CASE("steps 2 and 3 on regular Galois entries") {
  // Galois quaternion extension: intfields = 6 subgroups of Q8.
  const TransitiveGroupEntry q8 = entry_regular(8, 5, type_by_name(8, "Q8"));
  CHECK(step2_intfields(q8) == 6);

  // Abelian Galois: the classical structure N = lambda(G) has every subgroup
  // stable, so subGst = intfields.
  const TransitiveGroupEntry t3 = entry_8t3();
  CHECK(step2_intfields(t3) == 16);
  CHECK(step3_sub_gst(t3.group, t3) == 16);

  // Degenerate chain.
  const TransitiveGroupEntry c2 = entry_regular(2, 1, type_by_name(2, "C2"));
  CHECK(step2_intfields(c2) == 2);
}

TEST_CASE("step4 without the prefilter yields the same partition") {
  const TransitiveGroupEntry g = entry_8t3();
  const DegreeContext ctx = DegreeContext::build(8);
  GroupReport rep = enumerate_all(g, ctx);
  std::vector<HGSRecord> again = rep.records;
  for (HGSRecord& r : again) r.class_id = 0;
  step4_partition(again, g, /*use_prefilter=*/false);
  for (size_t i = 0; i < again.size(); ++i)
    CHECK(again[i].class_id == rep.records[i].class_id);

  // Same check over every entry of the small degrees.
  for (int degree = 2; degree <= 6; ++degree) {
    const DegreeContext dctx = DegreeContext::build(degree);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), degree)) {
      GroupReport r = enumerate_all(*e, dctx);
      std::vector<HGSRecord> redo = r.records;
      for (HGSRecord& rec : redo) rec.class_id = 0;
      step4_partition(redo, *e, /*use_prefilter=*/false);
      for (size_t i = 0; i < redo.size(); ++i)
        CHECK(redo[i].class_id == r.records[i].class_id);
    }
  }
}

TEST_CASE("abelian Galois entries carry the classical structure with BC") {
  for (int degree = 2; degree <= 8; ++degree) {
    const DegreeContext ctx = DegreeContext::build(degree);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), degree)) {
      if (e->order != uint64_t(degree)) continue;  // not Galois
      bool abelian = true;
      const std::vector<Perm>& elems = e->group.elements();
      for (size_t i = 0; i < elems.size() && abelian; ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
          if (!(elems[i].compose(elems[j]) == elems[j].compose(elems[i]))) {
            abelian = false;
            break;
          }
      if (!abelian) continue;
      const GroupReport rep = enumerate_all(*e, ctx);
      bool found = false;
      for (const HGSRecord& r : rep.records)
        if (r.n.key() == e->group.key()) {
          found = true;
          CHECK(r.bijective_correspondence);
        }
      CHECK(found);
    }
  }
}

TEST_CASE("record invariants on the worked example") {
  const TransitiveGroupEntry g = entry_8t3();
  const DegreeContext ctx = DegreeContext::build(8);
  const GroupReport rep = enumerate_all(g, ctx);
  for (const HGSRecord& r : rep.records) {
    CHECK(is_regular(r.n));
    CHECK(normalizes(g.group, r.n));
    CHECK(identify_type(r.n).name == r.type->name);
    CHECK(uint64_t(r.sub_gst_count) <= rep.intfields);
    if (r.almost_classical) CHECK(r.bijective_correspondence);
    CHECK(r.bijective_correspondence ==
          (uint64_t(r.sub_gst_count) == rep.intfields));
  }
  // Records in one class share type and subGst count.
  for (const HGSRecord& a : rep.records)
    for (const HGSRecord& b : rep.records)
      if (a.class_id == b.class_id) {
        CHECK(a.type == b.type);
        CHECK(a.sub_gst_count == b.sub_gst_count);
      }
}
