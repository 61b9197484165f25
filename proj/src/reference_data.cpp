#include "hgs/reference_data.hpp"

namespace hgs {

namespace {

constexpr std::optional<TypeQuad> none = std::nullopt;

std::optional<TypeQuad> q(int t, int ac, int bc, int gi) {
  return TypeQuad{t, ac, bc, gi};
}

}  // namespace

const std::vector<Degree8Row>& degree8_rows() {
  static const std::vector<Degree8Row> rows = {
      //       C8            C4xC2          C2^3          D4            Q8
      {1, {q(2, 1, 2, 2), none, none, q(2, 0, 2, 2), q(2, 0, 2, 2)}},
      {2, {q(4, 0, 0, 2), q(10, 1, 1, 7), q(4, 0, 1, 4), q(6, 0, 2, 5), q(2, 0, 0, 2)}},
      {3, {none, q(42, 0, 0, 28), q(8, 1, 1, 8), q(42, 0, 0, 7), q(14, 0, 0, 7)}},
      {4, {q(2, 0, 0, 1), q(14, 0, 0, 9), q(6, 0, 0, 4), q(6, 1, 1, 4), q(2, 0, 0, 2)}},
      {5, {q(6, 0, 0, 3), q(6, 0, 6, 3), q(2, 0, 2, 1), q(6, 0, 6, 6), q(2, 1, 2, 2)}},
      {6, {q(2, 1, 2, 2), none, none, q(2, 1, 2, 2), q(2, 0, 2, 2)}},
      {7, {q(2, 2, 2, 2), none, none, q(2, 0, 2, 2), q(2, 0, 2, 2)}},
      {8, {q(2, 1, 2, 2), none, none, q(2, 0, 2, 2), q(2, 1, 2, 2)}},
      {9, {none, q(10, 1, 1, 9), q(4, 1, 1, 4), q(6, 2, 2, 5), q(2, 0, 0, 2)}},
      {10, {none, q(6, 2, 3, 6), q(4, 0, 1, 4), none, none}},
      {11, {q(2, 0, 0, 1), q(6, 2, 6, 5), q(2, 0, 2, 2), q(6, 1, 6, 6), q(2, 1, 2, 2)}},
      {12, {none, none, q(2, 0, 2, 1), none, q(2, 1, 2, 2)}},
      {13, {none, none, q(2, 1, 1, 2), none, q(2, 0, 0, 1)}},
      {14, {none, none, q(4, 0, 1, 3), none, none}},
      {15, {q(2, 2, 2, 2), none, none, q(2, 1, 2, 2), q(2, 1, 2, 2)}},
      {16, {none, none, none, q(2, 0, 2, 2), q(2, 0, 2, 2)}},
      {17, {none, none, none, q(2, 1, 2, 2), q(2, 1, 2, 2)}},
      {18, {none, q(6, 3, 3, 6), q(4, 1, 1, 4), none, none}},
      {19, {none, q(2, 1, 2, 2), q(2, 1, 2, 2), none, none}},
      {20, {none, q(2, 0, 2, 2), q(2, 0, 2, 2), none, none}},
      {22, {none, q(6, 6, 6, 6), q(2, 2, 2, 2), q(6, 6, 6, 6), q(2, 2, 2, 2)}},
      {23, {none, none, none, none, q(2, 1, 2, 2)}},
      {24, {none, none, q(2, 1, 1, 2), none, none}},
      {25, {none, none, q(1, 1, 1, 1), none, none}},
      {26, {none, none, none, q(2, 2, 2, 2), q(2, 2, 2, 2)}},
      {29, {none, q(2, 2, 2, 2), q(2, 2, 2, 2), none, none}},
      {32, {none, none, q(2, 2, 2, 2), none, q(2, 2, 2, 2)}},
      {33, {none, none, q(1, 1, 1, 1), none, none}},
      {34, {none, none, q(3, 0, 3, 3), none, none}},
      {36, {none, none, q(1, 1, 1, 1), none, none}},
      {37, {none, none, q(2, 0, 2, 2), none, none}},
      {39, {none, none, q(2, 2, 2, 2), none, none}},
      {40, {none, none, none, none, q(2, 2, 2, 2)}},
      {41, {none, none, q(1, 1, 1, 1), none, none}},
      {48, {none, none, q(1, 1, 1, 1), none, none}},
  };
  return rows;
}

const std::vector<PartitionCell>& degree8_partitions() {
  static const std::vector<PartitionCell> cells = {
      {2, 0, {{2, 2}}},                  // 4 = 2x2
      {2, 1, {{1, 5}, {2, 1}, {3, 1}}},  // 10 = 5x1 + 1x2 + 1x3
      {2, 2, {{1, 4}}},
      {2, 3, {{1, 4}, {2, 1}}},
      {2, 4, {{1, 2}}},
      {3, 1, {{1, 21}, {3, 7}}},  // 42 = 21x1 + 7x3
      {3, 2, {{1, 8}}},
      {3, 3, {{6, 7}}},  // 42 = 7x6
      {3, 4, {{2, 7}}},
      {4, 0, {{2, 1}}},
      {4, 1, {{1, 4}, {2, 5}}},
      {4, 2, {{1, 2}, {2, 2}}},
      {4, 3, {{1, 3}, {3, 1}}},
      {4, 4, {{1, 2}}},
      {5, 0, {{2, 3}}},
      {5, 1, {{2, 3}}},
      {5, 2, {{2, 1}}},
      {5, 3, {{1, 6}}},
      {5, 4, {{1, 2}}},
      {9, 1, {{1, 8}, {2, 1}}},
      {9, 2, {{1, 4}}},
      {9, 3, {{1, 4}, {2, 1}}},
      {9, 4, {{1, 2}}},
      {11, 0, {{2, 1}}},
      {11, 1, {{1, 4}, {2, 1}}},
      {11, 2, {{1, 2}}},
      {11, 3, {{1, 6}}},
      {11, 4, {{1, 2}}},
      {12, 2, {{2, 1}}},
      {12, 4, {{1, 2}}},
      {13, 2, {{1, 2}}},
      {13, 4, {{2, 1}}},
      {14, 2, {{1, 2}, {2, 1}}},
  };
  return cells;
}

const std::vector<SummaryRow>& summary_rows() {
  static const std::vector<SummaryRow> rows = {
      {2, 1, 1, 1, 1, 1, 1, 0, 1, 1},
      {3, 2, 2, 1, 2, 2, 2, 0, 2, 1},
      {4, 5, 5, 2, 10, 6, 7, 1, 10, 6},
      {5, 5, 3, 1, 3, 3, 3, 0, 3, 1},
      {6, 16, 10, 2, 15, 7, 9, 2, 13, 6},
      {7, 7, 4, 1, 4, 4, 4, 0, 4, 1},
      {8, 50, 48, 5, 348, 74, 147, 73, 262, 111},
      {9, 34, 26, 2, 38, 26, 28, 2, 33, 8},
      {10, 45, 21, 2, 27, 11, 17, 6, 23, 6},
      {11, 8, 4, 1, 4, 4, 4, 0, 4, 1},
  };
  return rows;
}

const SummaryRow* summary_row(int degree) {
  for (const SummaryRow& r : summary_rows())
    if (r.degree == degree) return &r;
  return nullptr;
}

const WorkedExample& worked_example() {
  static const WorkedExample fx = [] {
    WorkedExample f;
    auto p8 = [](const char* s) { return Perm::parse_cycles(s, 8); };
    // 1-based cycles from the worked example, shifted to 0-based points.
    f.lambda_gens = {p8("(0 7)(1 2)(3 4)(5 6)"), p8("(0 2)(1 7)(3 5)(4 6)"),
                     p8("(0 4)(1 5)(2 6)(3 7)")};
    f.n_gens = {
        {{p8("(0 7)(1 2)(3 4)(5 6)"), p8("(0 5 4 1)(2 3 6 7)")}},
        {{p8("(0 7)(1 2)(3 4)(5 6)"), p8("(0 3 6 1)(2 5 4 7)")}},
        {{p8("(0 5)(1 4)(2 3)(6 7)"), p8("(0 3 4 7)(1 2 5 6)")}},
        {{p8("(0 1)(2 7)(3 6)(4 5)"), p8("(0 3 2 5)(1 4 7 6)")}},
        {{p8("(0 5)(1 4)(2 3)(6 7)"), p8("(0 1 2 7)(3 4 5 6)")}},
        {{p8("(0 3)(1 6)(2 5)(4 7)"), p8("(0 5 6 7)(1 2 3 4)")}},
    };
    f.n1_action = {
        {"1", "Id"},      {"r1", "ab"},     {"r1^2", "c"},   {"r1^3", "abc"},
        {"s1", "a"},      {"s1r1", "bc"},   {"s1r1^2", "ac"}, {"s1r1^3", "b"},
    };
    return f;
  }();
  return fx;
}

}  // namespace hgs
