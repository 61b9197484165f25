#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hgs/perm.hpp"

namespace hgs {

// Reference data for degree-8 extensions: for each transitive group with at
// least one structure, the (T, a-c, BC, G-i) quadruple per type. Type columns
// are ordered C8, C4xC2, C2^3, D4, Q8.
struct TypeQuad {
  int total = 0;
  int ac = 0;
  int bc = 0;
  int gi = 0;
  friend bool operator==(const TypeQuad&, const TypeQuad&) = default;
};

struct Degree8Row {
  int index = 0;
  std::array<std::optional<TypeQuad>, 5> by_type;
};

const std::vector<Degree8Row>& degree8_rows();

// Class-size partitions for the degree-8 groups having a class with more than
// one element: (class size, number of classes), sizes ascending.
struct PartitionCell {
  int index = 0;
  int type_column = 0;  // 0..4 in the order above
  std::vector<std::pair<int, int>> parts;
};

const std::vector<PartitionCell>& degree8_partitions();

// Summary table over all degrees: every published count column (timing and
// memory are reported, never verified).
struct SummaryRow {
  int degree = 0;
  int transitive_total = 0;
  int transitive_max = 0;
  int types = 0;
  int structures_total = 0;
  int ac_total = 0;
  int bc_total = 0;
  int bc_not_ac = 0;
  int giso_total = 0;
  int giso_galois = 0;
};

const std::vector<SummaryRow>& summary_rows();
const SummaryRow* summary_row(int degree);

// The worked example: a Galois extension with group C2xC2xC2, its six
// D4-type structures N_1..N_6 forming one isomorphism class, and the Hopf
// action of N_1 on the coset labels.
struct WorkedExample {
  std::vector<Perm> lambda_gens;                  // images of a, b, c
  std::vector<std::array<Perm, 2>> n_gens;        // (s_i, r_i) per N_i
  // Expected action map of N_1: element written s^e r^k -> coset word.
  std::vector<std::pair<std::string, std::string>> n1_action;
};

const WorkedExample& worked_example();

}  // namespace hgs
