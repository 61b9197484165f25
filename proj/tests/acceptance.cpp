// Acceptance suite: runs every criterion the project must meet at its stated
// tolerance (all exact) and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/byott.hpp"
#include "hgs/closedform.hpp"
#include "hgs/reference_data.hpp"
#include "hgs/reports.hpp"

using namespace hgs;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

}  // namespace

// 1. Summary-table reproduction for degrees 2..8, exact, with the degree-8
//    run completing within the stated budget.
void criterion1(std::map<int, DegreeResult>& results) {
  bool ok = true;
  std::string detail;
  double degree8_seconds = 0;
  for (int degree = 2; degree <= 8; ++degree) {
    const auto start = std::chrono::steady_clock::now();
    results.emplace(degree, run_degree(degree, bundled_db()));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (degree == 8) degree8_seconds = secs;
    const DegreeSummary& s = results.at(degree).summary;
    const SummaryRow* want = summary_row(degree);
    const bool row_ok =
        want && s.transitive_total == want->transitive_total &&
        s.transitive_max == want->transitive_max &&
        s.types_count == want->types && 
        s.structures_total == want->structures_total &&
        s.ac_total == want->ac_total && s.bc_total == want->bc_total &&
        s.bc_not_ac == want->bc_not_ac && s.giso_total == want->giso_total &&
        s.giso_galois == want->giso_galois;
    if (!row_ok) {
      ok = false;
      detail += "degree " + std::to_string(degree) + " mismatch; ";
    }
  }
  if (degree8_seconds > 120.0) {
    ok = false;
    detail += "degree 8 took " + std::to_string(degree8_seconds) + "s";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "degree 8 in %.2fs", degree8_seconds);
    detail += buf;
  }
  report(1, "summary counts for degrees 2..8 match the published table", ok,
         detail);
}

// 2 and 3. Per-group tables for degree 8: quadruples and class partitions.
void criteria23(const DegreeResult& d8) {
  const VerifyOutcome outcome = verify_reference(d8);
  // verify_reference also rechecks the summary row; split the diff lines.
  bool quads_ok = true, parts_ok = true;
  std::istringstream diff(outcome.diff);
  std::string line;
  while (std::getline(diff, line)) {
    if (line.find("partition") != std::string::npos)
      parts_ok = false;
    else if (line.find("type") != std::string::npos)
      quads_ok = false;
  }
  report(2, "degree-8 (T, a-c, BC, G-i) quadruples match per group and type",
         quads_ok);
  report(3, "degree-8 class-size partitions match", parts_ok);
}

// 4. The worked C2xC2xC2 example.
void criterion4(const DegreeResult& d8) {
  const WorkedExample& fx = worked_example();
  const GroupReport* rep = nullptr;
  for (const GroupReport& r : d8.reports)
    if (r.group->index == 3) rep = &r;
  bool ok = rep != nullptr;
  std::string detail;

  std::set<int> class_ids;
  if (ok) {
    for (const auto& gens : fx.n_gens) {
      const PermGroup ni = close({gens[0], gens[1]});
      bool found = false;
      for (const HGSRecord& r : rep->records)
        if (r.type->name == "D4" && r.n.key() == ni.key()) {
          found = true;
          class_ids.insert(r.class_id);
        }
      if (!found) {
        ok = false;
        detail += "an N_i is missing from the D4 records; ";
      }
    }
    if (class_ids.size() != 1) {
      ok = false;
      detail += "the six N_i span several classes; ";
    } else {
      int size = 0;
      for (const HGSRecord& r : rep->records)
        if (r.type->name == "D4" && r.class_id == *class_ids.begin()) ++size;
      if (size != 6) {
        ok = false;
        detail += "their class has size " + std::to_string(size) + "; ";
      }
    }
    for (size_t i = 0; ok && i < fx.n_gens.size(); ++i)
      for (size_t j = 0; ok && j < fx.n_gens.size(); ++j) {
        if (i == j) continue;
        if (!g_isomorphic(close({fx.n_gens[i][0], fx.n_gens[i][1]}),
                          close({fx.n_gens[j][0], fx.n_gens[j][1]}),
                          rep->group->group)) {
          ok = false;
          detail += "N_i pair not G-isomorphic; ";
        }
      }
    // Action map of N1.
    const std::vector<std::string> labels = coset_labels(*rep->group);
    const Perm s = fx.n_gens[0][0];
    const Perm r = fx.n_gens[0][1];
    for (const auto& [name, want] : fx.n1_action) {
      Perm x(8);
      for (char c : name) {
        if (c == 's') x = x.compose(s);
        if (c == 'r') x = x.compose(r);
        if (c >= '2' && c <= '3')
          for (int k = 1; k < c - '0'; ++k) x = x.compose(r);
      }
      if (labels[x.inverse()[0]] != want) {
        ok = false;
        detail += name + " maps to " + labels[x.inverse()[0]] + " not " +
                  want + "; ";
      }
    }
  }
  report(4, "worked example: six D4 structures, one class of six, action map",
         ok, detail);
}

// 5. Byott counts equal direct enumeration for every (G, type), degrees 2-11.
void criterion5() {
  bool ok = true;
  std::string detail;
  for (int degree = 2; degree <= 11; ++degree) {
    const DegreeContext ctx = DegreeContext::build(degree);
    ByottContext byott(degree);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), degree))
      for (size_t ti = 0; ti < ctx.types->size(); ++ti) {
        const uint64_t a = byott.count((*ctx.types)[ti], *e).a;
        const size_t direct =
            step1_enumerate(*e, (*ctx.types)[ti], ctx.orbits[ti]).size();
        if (a != direct) {
          ok = false;
          detail += e->label() + "/" + (*ctx.types)[ti].name + ": a=" +
                    std::to_string(a) + " direct=" + std::to_string(direct) +
                    "; ";
        }
      }
  }
  report(5, "holomorph-side counts equal direct enumeration, degrees 2..11",
         ok, detail);
}

// 6. Closed-form predictions match enumeration.
void criterion6() {
  bool ok = true;
  std::string detail;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += what + "; ";
    }
  };
  for (int degree : {2, 3, 5, 7, 11}) {
    const DegreeContext ctx = DegreeContext::build(degree);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), degree)) {
      size_t total = 0;
      for (size_t ti = 0; ti < ctx.types->size(); ++ti)
        total += step1_enumerate(*e, (*ctx.types)[ti], ctx.orbits[ti]).size();
      check(size_t(predict_prime(degree, *e)) == total,
            e->label() + " prime count");
    }
  }
  for (int degree : {6, 9, 10}) {
    const DegreeContext ctx = DegreeContext::build(degree);
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), degree)) {
      std::vector<size_t> direct;
      for (size_t ti = 0; ti < ctx.types->size(); ++ti)
        direct.push_back(
            step1_enumerate(*e, (*ctx.types)[ti], ctx.orbits[ti]).size());
      const GroupShape shape = classify_shape(*e);
      if (degree == 9) {
        const PSquaredPrediction pred = predict_p_squared(3, shape);
        check(pred.cyclic && *pred.cyclic == int(direct[0]),
              e->label() + " cyclic count");
        if (pred.elementary)
          check(*pred.elementary == int(direct[1]),
                e->label() + " elementary count");
      } else {
        const int p = degree / 2;
        check(predict_2p_cyclic(p, shape) == int(direct[0]),
              e->label() + " cyclic count");
        check(predict_2p_dihedral(p, shape) == int(direct[1]),
              e->label() + " dihedral count");
      }
    }
  }
  report(6, "closed-form predictions match enumeration (p, p^2, 2p)", ok,
         detail);
}

// 7. Structural invariants over the full degree-2..8 output.
void criterion7(const std::map<int, DegreeResult>& results) {
  bool ok = true;
  std::string detail;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  };
  for (const auto& [degree, result] : results) {
    for (const GroupReport& rep : result.reports) {
      std::map<int, int> class_sizes;
      for (const HGSRecord& r : rep.records) class_sizes[r.class_id]++;
      for (const HGSRecord& r : rep.records) {
        if (r.almost_classical) {
          check(r.bijective_correspondence,
                rep.group->label() + ": a-c without BC");
          check(class_sizes[r.class_id] == 1,
                rep.group->label() + ": a-c record in a class of " +
                    std::to_string(class_sizes[r.class_id]));
        }
        check(uint64_t(r.sub_gst_count) <= rep.intfields,
              rep.group->label() + ": subGst exceeds intfields");
        check(r.bijective_correspondence ==
                  (uint64_t(r.sub_gst_count) == rep.intfields),
              rep.group->label() + ": BC flag inconsistent");
      }
      // g_isomorphic agrees with the class partition on every pair, which
      // makes it an equivalence relation on the records.
      if (degree == 8 && rep.records.size() > 60) continue;  // 8T3: covered below
      for (const HGSRecord& a : rep.records)
        for (const HGSRecord& b : rep.records) {
          if (a.type != b.type || a.sub_gst_count != b.sub_gst_count) continue;
          const bool iso = g_isomorphic(a.n, b.n, rep.group->group);
          check(iso == (a.class_id == b.class_id),
                rep.group->label() + ": relation/partition mismatch");
        }
    }
  }
  // The largest report gets the pairwise sweep too (8T3, 106 records).
  {
    const GroupReport* t3 = nullptr;
    for (const GroupReport& r : results.at(8).reports)
      if (r.group->index == 3) t3 = &r;
    for (const HGSRecord& a : t3->records)
      for (const HGSRecord& b : t3->records) {
        if (a.type != b.type || a.sub_gst_count != b.sub_gst_count) continue;
        const bool iso = g_isomorphic(a.n, b.n, t3->group->group);
        check(iso == (a.class_id == b.class_id),
              "8T3: relation/partition mismatch");
      }
  }
  // Degree 9: no group mixes the cyclic and elementary types.
  const DegreeResult d9 = run_degree(9, bundled_db());
  for (const GroupReport& rep : d9.reports) {
    int cyc = 0, elem = 0;
    for (const TypeSummary& ts : rep.per_type)
      (ts.type->name == "C9" ? cyc : elem) += ts.total;
    check(cyc == 0 || elem == 0,
          rep.group->label() + ": both degree-9 types present");
  }
  report(7, "invariants: a-c => BC and singleton class, subGst bounds, "
            "degree-9 exclusivity, G-isomorphism is the class relation",
         ok, detail);
}

// 8. Database validation against the independent oracle.
void criterion8() {
  bool ok = true;
  std::string detail;
  for (int g = 2; g <= 6; ++g) {
    std::set<std::vector<uint64_t>> oracle;
    for (const PermGroup& h : enumerate_transitive_oracle(g))
      oracle.insert(h.key());
    std::set<std::vector<uint64_t>> db;
    for (const TransitiveGroupEntry* e : entries_of_degree(bundled_db(), g))
      db.insert(min_conjugacy_key(e->group));
    if (oracle != db) {
      ok = false;
      detail += "degree " + std::to_string(g) + " differs from oracle; ";
    }
  }
  for (int g : {7, 8}) {
    std::set<std::vector<uint64_t>> keys;
    const auto entries = entries_of_degree(bundled_db(), g);
    for (const TransitiveGroupEntry* e : entries)
      keys.insert(min_conjugacy_key(e->group));
    const size_t want = g == 7 ? 7 : 50;
    if (entries.size() != want || keys.size() != want) {
      ok = false;
      detail += "degree " + std::to_string(g) + " count or conjugacy; ";
    }
  }
  report(8, "database matches the self-enumeration oracle (2..6) and is "
            "pairwise non-conjugate with published counts (7, 8)",
         ok, detail);
}

// 9. Property tests on the group machinery.
void criterion9() {
  bool ok = true;
  std::string detail;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += what + "; ";
    }
  };

  // Orbit size = g!/|Hol(N)| for every catalogue type.
  for (int order = 2; order <= 11; ++order) {
    uint64_t fact = 1;
    for (int k = 2; k <= order; ++k) fact *= uint64_t(k);
    for (const GroupType& t : catalogue(order)) {
      const uint64_t hol = holomorph(t.standard_rep).order();
      const size_t orbit = conjugation_orbit_keys(t.standard_rep).size();
      check(orbit == fact / hol,
            t.name + " orbit " + std::to_string(orbit) + " != " +
                std::to_string(fact / hol));
    }
  }

  // Centralizer construction agrees with brute force for degrees <= 6.
  for (int g = 2; g <= 6; ++g) {
    const PermGroup sg = PermGroup::symmetric(g);
    for (const PermGroup& h : all_subgroups(sg)) {
      if (!is_regular(h)) continue;
      std::vector<Perm> brute;
      for (const Perm& s : sg.elements()) {
        bool commutes = true;
        for (const Perm& e : h.elements())
          if (!(s.compose(e) == e.compose(s))) {
            commutes = false;
            break;
          }
        if (commutes) brute.push_back(s);
      }
      std::sort(brute.begin(), brute.end());
      check(centralizer_of_regular(h).elements() == brute,
            "centralizer mismatch at degree " + std::to_string(g));
    }
  }

  // Subgroup counts against the subset-closure oracle for all groups of
  // order <= 12 (regular representations).
  auto regular_of_table = [](const GroupTable& t) {
    std::vector<Perm> gens;
    for (int a = 0; a < t.n; ++a) {
      std::vector<int> img(t.n);
      for (int b = 0; b < t.n; ++b) img[b] = t.prod(uint16_t(a), uint16_t(b));
      gens.push_back(Perm::from_images(img));
    }
    return close(gens);
  };
  std::vector<PermGroup> all_small;
  for (int order = 2; order <= 11; ++order)
    for (const GroupType& t : catalogue(order))
      all_small.push_back(t.standard_rep);
  // The five groups of order 12: C12, C6 x C2, D6, A4, Dic3.
  all_small.push_back(PermGroup::cyclic(12));
  {
    std::vector<int> img(12);
    for (int x = 0; x < 12; ++x) img[x] = (x / 2 + 1) % 6 * 2 + x % 2;
    std::vector<int> img2(12);
    for (int x = 0; x < 12; ++x) img2[x] = x ^ 1;
    all_small.push_back(close({Perm::from_images(img), Perm::from_images(img2)}));
  }
  {
    auto mul = [](int x, int y) {  // dihedral of order 12
      const int a1 = x / 6, b1 = x % 6, a2 = y / 6, b2 = y % 6;
      return ((a1 + a2) % 2) * 6 + (((a2 ? -b1 : b1) + b2) % 6 + 6) % 6;
    };
    std::vector<int> r(12), s(12);
    for (int x = 0; x < 12; ++x) {
      r[x] = mul(1, x);
      s[x] = mul(6, x);
    }
    all_small.push_back(close({Perm::from_images(r), Perm::from_images(s)}));
  }
  {
    // A4 regular: left translations on the degree-4 table.
    const GroupTable t = GroupTable::build(
        close({Perm::parse_cycles("(0 1 2)", 4), Perm::parse_cycles("(0 1)(2 3)", 4)}));
    all_small.push_back(regular_of_table(t));
  }
  {
    auto mul = [](int x, int y) {  // dicyclic of order 12: b^2 = a^3
      const int e1 = x / 6, m1 = x % 6, e2 = y / 6, m2 = y % 6;
      int m = (m1 + (e1 ? 6 - m2 : m2)) % 6;
      int e = e1 + e2;
      if (e == 2) {
        e = 0;
        m = (m + 3) % 6;
      }
      return e * 6 + m;
    };
    std::vector<int> a(12), b(12);
    for (int x = 0; x < 12; ++x) {
      a[x] = mul(1, x);
      b[x] = mul(6, x);
    }
    all_small.push_back(close({Perm::from_images(a), Perm::from_images(b)}));
  }

  for (const PermGroup& g : all_small) {
    const std::vector<Perm>& elems = g.elements();
    std::set<std::vector<uint64_t>> closures;
    const size_t n = elems.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      std::vector<Perm> gens;
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) gens.push_back(elems[i]);
      if (gens.empty()) gens.push_back(Perm(g.degree()));
      closures.insert(close(gens).key());
    }
    check(all_subgroups(g).size() == closures.size(),
          "subgroup count mismatch at order " + std::to_string(n));
  }

  report(9, "property checks: orbit sizes, brute-force centralizers, "
            "subset-closure subgroup counts",
         ok, detail);
}

int main() {
  std::map<int, DegreeResult> results;
  criterion1(results);
  criteria23(results.at(8));
  criterion4(results.at(8));
  criterion5();
  criterion6();
  criterion7(results);
  criterion8();
  criterion9();
  if (failures == 0) {
    std::printf("all acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
