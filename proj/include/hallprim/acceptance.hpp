#pragma once

#include "hallprim/hall_jordan.hpp"

#include <string>
#include <vector>

namespace hallprim {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Runs one acceptance criterion (1..11) at exact equality. fast = true shrinks the
/// ranges for a quick smoke run; the acceptance binary always uses the full ranges.
CriterionResult run_criterion(int id, bool fast = false);
std::string criterion_title(int id);

/// The worked p_3 example puts coefficient 1 on z_1^3 where the closed formula
/// gives (1/3) * multinomial(3; 3) = 1/3.
struct WorkedP3Report {
  HallElem formula{};
  HallElem unit_z1_cubed{};
  HallElem displayed_final{};
  bool formula_primitive = false;
  bool unit_z1_cubed_primitive = false;
  bool displayed_final_primitive = false;
};
WorkedP3Report worked_p3_report();

/// Jordan quiver: brute-force submodule census and automorphism counts against the
/// Hall polynomials and aut_order, for every lambda with |lambda| <= max_weight.
struct CrosscheckResult {
  long compared = 0;
  std::vector<std::string> mismatches;
};
CrosscheckResult jordan_crosscheck(int max_weight, const std::vector<int>& qs);

std::string worked_p3_warning();
std::string two_vertex_z_warning();

}  // namespace hallprim
