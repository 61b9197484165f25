#include "hgs/reports.hpp"

#include <sys/resource.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "hgs/reference_data.hpp"
#include "json.hpp"

namespace hgs {

long peak_memory_kb() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0)
    return usage.ru_maxrss;
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream is(line.substr(6));
      long kb = 0;
      is >> kb;
      return kb;
    }
  }
  return 0;
}

DegreeResult run_degree(int degree, const std::vector<TransitiveGroupEntry>& db,
                        const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<const TransitiveGroupEntry*> entries =
      entries_of_degree(db, degree);
  if (entries.empty())
    throw std::invalid_argument("database has no entries of degree " +
                                std::to_string(degree));
  if (options.only_index) {
    std::erase_if(entries, [&](const TransitiveGroupEntry* e) {
      return e->index != options.only_index;
    });
    if (entries.empty())
      throw std::invalid_argument("no entry " + std::to_string(degree) + "T" +
                                  std::to_string(options.only_index));
  }

  const DegreeContext ctx = DegreeContext::build(degree);

  DegreeResult result;
  result.degree = degree;
  result.reports.resize(entries.size());

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < entries.size(); ++i)
      result.reports[i] = enumerate_all(*entries[i], ctx);
  } else {
    // Entries are independent; results land at fixed positions, so the
    // output does not depend on scheduling.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= entries.size()) return;
          result.reports[i] = enumerate_all(*entries[i], ctx);
        }
      });
    for (std::thread& t : pool) t.join();
  }

  DegreeSummary& s = result.summary;
  s.degree = degree;
  s.transitive_total = int(entries.size());
  s.types_count = int(ctx.types->size());
  uint64_t max_hol = 0;
  for (size_t ti = 0; ti < ctx.types->size(); ++ti) {
    // |Hol(N)| = g! / orbit size, since the orbit is all regular subgroups
    // of this type.
    uint64_t fact = 1;
    for (int k = 2; k <= degree; ++k) fact *= uint64_t(k);
    max_hol = std::max(max_hol, fact / ctx.orbits[ti].size());
  }
  for (const TransitiveGroupEntry* e : entries)
    if (e->order <= max_hol) s.transitive_max++;
  for (const GroupReport& r : result.reports) {
    s.structures_total += r.total();
    s.ac_total += r.total_ac();
    s.bc_total += r.total_bc();
    s.giso_total += r.total_classes();
    if (r.group->order == uint64_t(degree)) s.giso_galois += r.total_classes();
  }
  s.bc_not_ac = s.bc_total - s.ac_total;
  s.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  s.peak_memory_kb = peak_memory_kb();
  return result;
}

TableModel to_model(const DegreeResult& result) {
  TableModel m;
  m.degree = result.degree;
  m.summary = result.summary;
  for (const GroupType& t : catalogue(result.degree)) m.types.push_back(t.name);
  for (const GroupReport& r : result.reports) {
    if (r.records.empty()) continue;
    TableModel::Row row;
    row.label = r.group->label();
    row.index = r.group->index;
    row.order = r.group->order;
    row.intfields = r.intfields;
    for (const TypeSummary& ts : r.per_type) {
      TableModel::Cell cell;
      cell.type = ts.type->name;
      cell.total = ts.total;
      cell.ac = ts.ac;
      cell.bc = ts.bc;
      cell.gi = ts.classes;
      for (const auto& [size, count] : ts.partition)
        cell.partition.emplace_back(size, count);
      row.cells.push_back(std::move(cell));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

// ---- rendering ------------------------------------------------------------

namespace {

std::string partition_string(int total,
                             const std::vector<std::pair<int, int>>& parts) {
  if (total == 0) return "0";
  std::string out = std::to_string(total) + "=";
  bool first = true;
  for (const auto& [size, count] : parts) {
    if (!first) out += "+";
    out += std::to_string(count) + "x" + std::to_string(size);
    first = false;
  }
  return out;
}

}  // namespace

std::string render_markdown(const TableModel& m) {
  std::ostringstream os;
  os << "# Degree " << m.degree << "\n\n";

  os << "## Structures by Galois group and type\n\n";
  os << "| Group |";
  for (const std::string& t : m.types) os << " " << t << " |";
  os << "\n|---|";
  for (size_t i = 0; i < m.types.size(); ++i) os << "---|";
  os << "\n";
  for (const TableModel::Row& row : m.rows) {
    os << "| " << row.label << " |";
    for (const TableModel::Cell& c : row.cells) {
      if (c.total == 0)
        os << " - |";
      else
        os << " T=" << c.total << " a-c=" << c.ac << " BC=" << c.bc
           << " G-i=" << c.gi << " |";
    }
    os << "\n";
  }

  os << "\n## Isomorphism class partitions\n\n";
  os << "| Group |";
  for (const std::string& t : m.types) os << " " << t << " |";
  os << "\n|---|";
  for (size_t i = 0; i < m.types.size(); ++i) os << "---|";
  os << "\n";
  for (const TableModel::Row& row : m.rows) {
    os << "| " << row.label << " |";
    for (const TableModel::Cell& c : row.cells)
      os << " " << partition_string(c.total, c.partition) << " |";
    os << "\n";
  }

  const DegreeSummary& s = m.summary;
  os << "\n## Summary\n\n";
  os << "| degree | transitive | max | types | structures | a-c | BC "
        "| BC not a-c | G-iso | G-iso Galois | time (s) | peak mem (MB) |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  os << "| " << s.degree << " | " << s.transitive_total << " | "
     << s.transitive_max << " | " << s.types_count << " | "
     << s.structures_total << " | " << s.ac_total << " | " << s.bc_total
     << " | " << s.bc_not_ac << " | " << s.giso_total << " | "
     << s.giso_galois << " | " << s.wall_time_s << " | "
     << (s.peak_memory_kb / 1024.0) << " |\n";
  return os.str();
}

std::string render_csv(const TableModel& m) {
  std::ostringstream os;
  os << "group,type,total,ac,bc,gi,partition\n";
  for (const TableModel::Row& row : m.rows)
    for (const TableModel::Cell& c : row.cells)
      os << row.label << "," << c.type << "," << c.total << "," << c.ac << ","
         << c.bc << "," << c.gi << ","
         << partition_string(c.total, c.partition) << "\n";
  const DegreeSummary& s = m.summary;
  os << "summary,degree=" << s.degree << "," << s.structures_total << ","
     << s.ac_total << "," << s.bc_total << "," << s.giso_total << ","
     << s.giso_galois << ",\n";
  return os.str();
}

std::string render_json(const TableModel& m) {
  nlohmann::json j;
  j["degree"] = m.degree;
  j["types"] = m.types;
  j["rows"] = nlohmann::json::array();
  for (const TableModel::Row& row : m.rows) {
    nlohmann::json jr;
    jr["label"] = row.label;
    jr["index"] = row.index;
    jr["order"] = row.order;
    jr["intfields"] = row.intfields;
    jr["cells"] = nlohmann::json::array();
    for (const TableModel::Cell& c : row.cells) {
      nlohmann::json jc;
      jc["type"] = c.type;
      jc["total"] = c.total;
      jc["ac"] = c.ac;
      jc["bc"] = c.bc;
      jc["gi"] = c.gi;
      jc["partition"] = c.partition;
      jr["cells"].push_back(std::move(jc));
    }
    j["rows"].push_back(std::move(jr));
  }
  const DegreeSummary& s = m.summary;
  j["summary"] = {{"degree", s.degree},
                  {"transitive_total", s.transitive_total},
                  {"transitive_max", s.transitive_max},
                  {"types_count", s.types_count},
                  {"structures_total", s.structures_total},
                  {"ac_total", s.ac_total},
                  {"bc_total", s.bc_total},
                  {"bc_not_ac", s.bc_not_ac},
                  {"giso_total", s.giso_total},
                  {"giso_galois", s.giso_galois},
                  {"wall_time_s", s.wall_time_s},
                  {"peak_memory_kb", s.peak_memory_kb}};
  return j.dump(2);
}

TableModel model_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  TableModel m;
  m.degree = j.at("degree").get<int>();
  m.types = j.at("types").get<std::vector<std::string>>();
  for (const nlohmann::json& jr : j.at("rows")) {
    TableModel::Row row;
    row.label = jr.at("label").get<std::string>();
    row.index = jr.at("index").get<int>();
    row.order = jr.at("order").get<uint64_t>();
    row.intfields = jr.at("intfields").get<uint64_t>();
    for (const nlohmann::json& jc : jr.at("cells")) {
      TableModel::Cell c;
      c.type = jc.at("type").get<std::string>();
      c.total = jc.at("total").get<int>();
      c.ac = jc.at("ac").get<int>();
      c.bc = jc.at("bc").get<int>();
      c.gi = jc.at("gi").get<int>();
      c.partition =
          jc.at("partition").get<std::vector<std::pair<int, int>>>();
      row.cells.push_back(std::move(c));
    }
    m.rows.push_back(std::move(row));
  }
  const nlohmann::json& js = j.at("summary");
  DegreeSummary& s = m.summary;
  s.degree = js.at("degree").get<int>();
  s.transitive_total = js.at("transitive_total").get<int>();
  s.transitive_max = js.at("transitive_max").get<int>();
  s.types_count = js.at("types_count").get<int>();
  s.structures_total = js.at("structures_total").get<int>();
  s.ac_total = js.at("ac_total").get<int>();
  s.bc_total = js.at("bc_total").get<int>();
  s.bc_not_ac = js.at("bc_not_ac").get<int>();
  s.giso_total = js.at("giso_total").get<int>();
  s.giso_galois = js.at("giso_galois").get<int>();
  s.wall_time_s = js.at("wall_time_s").get<double>();
  s.peak_memory_kb = js.at("peak_memory_kb").get<long>();
  return m;
}

// ---- verification against the embedded reference data ---------------------

VerifyOutcome verify_reference(const DegreeResult& result) {
  VerifyOutcome out;
  std::ostringstream diff;
  auto fail = [&](const std::string& line) {
    out.ok = false;
    diff << line << "\n";
  };

  const SummaryRow* want = summary_row(result.degree);
  if (!want) {
    fail("no reference summary row for degree " +
         std::to_string(result.degree));
    out.diff = diff.str();
    return out;
  }
  const DegreeSummary& s = result.summary;
  auto cmp = [&](const char* name, int got, int expect) {
    if (got != expect)
      fail("summary " + std::string(name) + ": computed " +
           std::to_string(got) + ", published " + std::to_string(expect));
  };
  cmp("transitive total", s.transitive_total, want->transitive_total);
  cmp("transitive max", s.transitive_max, want->transitive_max);
  cmp("types", s.types_count, want->types);
  cmp("structures", s.structures_total, want->structures_total);
  cmp("a-c", s.ac_total, want->ac_total);
  cmp("BC", s.bc_total, want->bc_total);
  cmp("BC not a-c", s.bc_not_ac, want->bc_not_ac);
  cmp("G-iso", s.giso_total, want->giso_total);
  cmp("G-iso Galois", s.giso_galois, want->giso_galois);

  if (result.degree == 8) {
    // Tables of per-group quadruples and class partitions.
    for (const GroupReport& r : result.reports) {
      const int index = r.group->index;
      const Degree8Row* row = nullptr;
      for (const Degree8Row& fr : degree8_rows())
        if (fr.index == index) row = &fr;
      if (!row) {
        if (!r.records.empty())
          fail(r.group->label() + ": published tables list no structures, computed " +
               std::to_string(r.records.size()));
        continue;
      }
      for (size_t ti = 0; ti < r.per_type.size(); ++ti) {
        const TypeSummary& ts = r.per_type[ti];
        const TypeQuad got{ts.total, ts.ac, ts.bc, ts.classes};
        const TypeQuad expect = row->by_type[ti].value_or(TypeQuad{});
        if (!(got == expect))
          fail(r.group->label() + " type " + ts.type->name + ": computed T=" +
               std::to_string(got.total) + " a-c=" + std::to_string(got.ac) +
               " BC=" + std::to_string(got.bc) +
               " G-i=" + std::to_string(got.gi) + ", published T=" +
               std::to_string(expect.total) + " a-c=" +
               std::to_string(expect.ac) + " BC=" + std::to_string(expect.bc) +
               " G-i=" + std::to_string(expect.gi));
      }
      // Partitions: cells absent from the reference table are all-singleton.
      for (size_t ti = 0; ti < r.per_type.size(); ++ti) {
        const TypeSummary& ts = r.per_type[ti];
        std::vector<std::pair<int, int>> expect;
        bool listed = false;
        for (const PartitionCell& cell : degree8_partitions())
          if (cell.index == index && cell.type_column == int(ti)) {
            expect = cell.parts;
            listed = true;
          }
        if (!listed && ts.total > 0) expect = {{1, ts.total}};
        std::vector<std::pair<int, int>> got(ts.partition.begin(),
                                             ts.partition.end());
        if (got != expect)
          fail(r.group->label() + " type " + ts.type->name +
               ": partition mismatch, computed " +
               partition_string(ts.total, got) + ", published " +
               partition_string(ts.total, expect));
      }
    }
  }

  out.diff = diff.str();
  return out;
}

}  // namespace hgs
