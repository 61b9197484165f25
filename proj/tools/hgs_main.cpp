#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hgs/byott.hpp"
#include "hgs/closedform.hpp"
#include "hgs/reference_data.hpp"
#include "hgs/reports.hpp"

namespace {

using namespace hgs;

int cmd_enumerate(int degree, int group_index, const std::string& format,
                  const std::string& tgdb_path, int jobs) {
  const auto db = resolve_db(tgdb_path);
  RunOptions opts;
  opts.jobs = jobs;
  opts.only_index = group_index;
  const DegreeResult result = run_degree(degree, db, opts);
  std::cout << render(result, format);
  return 0;
}

int cmd_verify(int degree, const std::string& tgdb_path, int jobs) {
  const auto db = resolve_db(tgdb_path);
  RunOptions opts;
  opts.jobs = jobs;
  const DegreeResult result = run_degree(degree, db, opts);
  const VerifyOutcome outcome = verify_reference(result);
  if (outcome.ok) {
    std::cout << "degree " << degree << ": ok\n";
    return 0;
  }
  std::cout << "degree " << degree << ": MISMATCH\n" << outcome.diff;
  return 1;
}

int cmd_example(const std::string& tgdb_path) {
  const auto db = resolve_db(tgdb_path);
  const TransitiveGroupEntry* t3 = nullptr;
  for (const TransitiveGroupEntry& e : db)
    if (e.degree == 8 && e.index == 3) t3 = &e;
  if (!t3) {
    std::cerr << "database has no entry 8T3\n";
    return 2;
  }
  const WorkedExample& fx = worked_example();
  const std::vector<std::string> labels = coset_labels(*t3);

  std::cout << "Galois group 8T3 = C2xC2xC2, generators a, b, c:\n";
  for (size_t i = 0; i < t3->generators.size(); ++i)
    std::cout << "  " << char('a' + i) << " = " << t3->generators[i].cycles()
              << "\n";
  std::cout << "\nThe six D4-type structures N_i = <s_i, r_i>:\n";
  for (size_t i = 0; i < fx.n_gens.size(); ++i)
    std::cout << "  N" << i + 1 << ": s = " << fx.n_gens[i][0].cycles()
              << ", r = " << fx.n_gens[i][1].cycles() << "\n";

  std::cout << "\nPairwise G-isomorphisms (s_i -> s_j, r_i -> r_j):\n";
  for (size_t i = 0; i < fx.n_gens.size(); ++i) {
    for (size_t j = 0; j < fx.n_gens.size(); ++j) {
      if (i == j) continue;
      const PermGroup ni = close({fx.n_gens[i][0], fx.n_gens[i][1]});
      const PermGroup nj = close({fx.n_gens[j][0], fx.n_gens[j][1]});
      if (!g_isomorphic(ni, nj, t3->group)) {
        std::cout << "  N" << i + 1 << " and N" << j + 1
                  << ": NOT G-isomorphic\n";
        return 1;
      }
    }
  }
  std::cout << "  all pairs are G-isomorphic (one class of six)\n";

  std::cout << "\nHopf action of N1 (n -> coset of n^-1(0)):\n";
  const PermGroup n1 = close({fx.n_gens[0][0], fx.n_gens[0][1]});
  const Perm s = fx.n_gens[0][0];
  const Perm r = fx.n_gens[0][1];
  for (int e = 0; e <= 1; ++e)
    for (int k = 0; k <= 3; ++k) {
      Perm el(8);
      for (int rep = 0; rep < k; ++rep) el = el.compose(r);
      if (e) el = s.compose(el);
      std::string name = e ? "s1" : "";
      if (k == 1) name += e ? "r1" : "r1";
      if (k > 1) name += std::string("r1^") + std::to_string(k);
      if (name.empty()) name = "1";
      std::cout << "  " << name << " -> " << labels[el.inverse()[0]] << "\n";
    }
  (void)n1;
  return 0;
}

int cmd_byott(int degree, const std::string& tgdb_path) {
  const auto db = resolve_db(tgdb_path);
  const auto entries = entries_of_degree(db, degree);
  const DegreeContext ctx = DegreeContext::build(degree);
  ByottContext byott(degree);
  bool all_match = true;
  for (const TransitiveGroupEntry* e : entries) {
    for (size_t ti = 0; ti < ctx.types->size(); ++ti) {
      const GroupType& type = (*ctx.types)[ti];
      const ByottCount c = byott.count(type, *e);
      const size_t direct = step1_enumerate(*e, type, ctx.orbits[ti]).size();
      const bool match = c.a == direct;
      all_match = all_match && match;
      if (c.a != 0 || direct != 0)
        std::cout << e->label() << " type " << type.name << ": a = " << c.a
                  << " (|Aut(G,G')| = " << c.aut_G_Gprime
                  << ", |Aut(N)| = " << c.aut_N << ", b = " << c.b
                  << "), direct = " << direct
                  << (match ? "" : "  << MISMATCH") << "\n";
    }
  }
  std::cout << (all_match ? "cross-check ok\n" : "cross-check FAILED\n");
  return all_match ? 0 : 1;
}

int cmd_predict(int degree, const std::string& tgdb_path) {
  const auto db = resolve_db(tgdb_path);
  const auto entries = entries_of_degree(db, degree);
  const DegreeContext ctx = DegreeContext::build(degree);
  bool all_match = true;

  for (const TransitiveGroupEntry* e : entries) {
    std::vector<size_t> direct;
    for (size_t ti = 0; ti < ctx.types->size(); ++ti)
      direct.push_back(step1_enumerate(*e, (*ctx.types)[ti], ctx.orbits[ti]).size());

    std::cout << e->label() << " (order " << e->order << "): ";
    if (degree == 9) {
      const GroupShape shape = classify_shape(*e);
      const PSquaredPrediction pred = predict_p_squared(3, shape);
      std::cout << "predicted cyclic "
                << (pred.cyclic ? std::to_string(*pred.cyclic) : "-")
                << ", elementary "
                << (pred.elementary ? std::to_string(*pred.elementary) : "-")
                << "; enumerated " << direct[0] << ", " << direct[1];
      if (pred.cyclic && *pred.cyclic != int(direct[0])) all_match = false;
      if (pred.elementary && *pred.elementary != int(direct[1]))
        all_match = false;
    } else if (degree == 6 || degree == 10) {
      const int p = degree / 2;
      const GroupShape shape = classify_shape(*e);
      const auto cyc = predict_2p_cyclic(p, shape);
      const auto dih = predict_2p_dihedral(p, shape);
      std::cout << "predicted cyclic " << (cyc ? std::to_string(*cyc) : "-")
                << ", dihedral " << (dih ? std::to_string(*dih) : "-")
                << "; enumerated " << direct[0] << ", " << direct[1];
      if (cyc && *cyc != int(direct[0])) all_match = false;
      if (dih && *dih != int(direct[1])) all_match = false;
    } else {
      const int pred = predict_prime(degree, *e);
      size_t total = 0;
      for (size_t d : direct) total += d;
      std::cout << "predicted " << pred << "; enumerated " << total;
      if (size_t(pred) != total) all_match = false;
    }
    std::cout << "\n";
  }
  std::cout << (all_match ? "predictions match enumeration\n"
                          : "prediction MISMATCH\n");
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hopf Galois structures on separable field extensions of degree 2-11"};
  app.require_subcommand(1);
  // Options of the parent (like --tgdb) may follow the subcommand.
  app.fallthrough();

  std::string tgdb_path;
  app.add_option("--tgdb", tgdb_path,
                 "transitive groups database file (default: $HGS_TGDB or the "
                 "bundled copy)");

  int degree = 8;
  int group_index = 0;
  int jobs = 1;
  std::string format = "md";

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "enumerate all Hopf Galois structures of a degree");
  enumerate->add_option("--degree", degree, "field extension degree (2-11)")
      ->required()
      ->check(CLI::Range(2, 11));
  enumerate->add_option("--group", group_index, "restrict to one kTi index");
  enumerate->add_option("--format", format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  enumerate->add_option("--jobs", jobs, "worker threads");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare computed tables against the published values");
  verify->add_option("--degree", degree, "degree to verify")
      ->required()
      ->check(CLI::Range(2, 11));
  verify->add_option("--jobs", jobs, "worker threads");

  CLI::App* example = app.add_subcommand(
      "example", "the worked C2xC2xC2 example with its Hopf action table");
  bool section6_flag = false;
  example->add_flag("--section6", section6_flag,
                    "print the six D4-type structures and the action map");

  CLI::App* byott = app.add_subcommand(
      "byott", "holomorph-side structure counts and cross-check");
  byott->add_option("--degree", degree, "degree to count")
      ->required()
      ->check(CLI::Range(2, 11));

  CLI::App* predict = app.add_subcommand(
      "predict", "closed-form predictions versus enumeration");
  predict->add_option("--degree", degree, "degree to predict")
      ->required()
      ->check(CLI::Range(2, 11));

  try {
    app.parse(argc, argv);
    if (enumerate->parsed())
      return cmd_enumerate(degree, group_index, format, tgdb_path, jobs);
    if (verify->parsed()) return cmd_verify(degree, tgdb_path, jobs);
    if (example->parsed()) return cmd_example(tgdb_path);
    if (byott->parsed()) return cmd_byott(degree, tgdb_path);
    if (predict->parsed()) return cmd_predict(degree, tgdb_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
