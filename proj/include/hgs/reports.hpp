#pragma once

#include <string>
#include <vector>

#include "hgs/enumerate.hpp"

namespace hgs {

struct DegreeSummary {
  int degree = 0;
  int transitive_total = 0;
  int transitive_max = 0;  // entries with order <= the largest holomorph
  int types_count = 0;
  int structures_total = 0;
  int ac_total = 0;
  int bc_total = 0;
  int bc_not_ac = 0;
  int giso_total = 0;
  int giso_galois = 0;
  double wall_time_s = 0.0;
  long peak_memory_kb = 0;  // VmHWM, informational only
};

struct RunOptions {
  int jobs = 1;
  int only_index = 0;  // restrict to one kTi (0 = all)
};

struct DegreeResult {
  int degree = 0;
  std::vector<GroupReport> reports;  // entry-index order
  DegreeSummary summary;
};

// Full pipeline over every database entry of the degree.
DegreeResult run_degree(int degree, const std::vector<TransitiveGroupEntry>& db,
                        const RunOptions& options = {});

// Neutral rendering model; JSON round-trips through it bit-for-bit.
struct TableModel {
  struct Cell {
    std::string type;
    int total = 0, ac = 0, bc = 0, gi = 0;
    // (class size, count), sizes ascending
    std::vector<std::pair<int, int>> partition;
  };
  struct Row {
    std::string label;
    int index = 0;
    uint64_t order = 0;
    uint64_t intfields = 0;
    std::vector<Cell> cells;  // catalogue order; cells with total=0 included
  };
  int degree = 0;
  std::vector<std::string> types;
  std::vector<Row> rows;  // only entries with at least one structure
  DegreeSummary summary;
};

TableModel to_model(const DegreeResult& result);
TableModel model_from_json(const std::string& text);

std::string render_markdown(const TableModel& model);
std::string render_csv(const TableModel& model);
std::string render_json(const TableModel& model);

inline std::string render(const DegreeResult& r, const std::string& format) {
  const TableModel m = to_model(r);
  if (format == "csv") return render_csv(m);
  if (format == "json") return render_json(m);
  return render_markdown(m);
}

// Structural diff between computed results and the embedded reference data:
// full tables for degree 8, the summary row for every degree.
struct VerifyOutcome {
  bool ok = true;
  std::string diff;  // one line per mismatch
};

VerifyOutcome verify_reference(const DegreeResult& result);

long peak_memory_kb();

}  // namespace hgs
