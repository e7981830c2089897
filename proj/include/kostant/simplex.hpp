#ifndef KOSTANT_SIMPLEX_HPP
#define KOSTANT_SIMPLEX_HPP

#include <vector>

#include "kostant/rational.hpp"

namespace kostant {

// Exact feasibility of {c >= 0, A c = b} by phase-I simplex with Bland's
// rule.  On infeasibility, `dual` holds y with y^T A <= 0 (componentwise
// over columns) and y^T b > 0 — a Farkas certificate.  Fixed-shape internal
// solver; not a general LP surface.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> solution;  // size = #columns, when feasible
  std::vector<Rational> dual;      // size = #rows, when infeasible
};

FeasibilityResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& a,
                                             const std::vector<Rational>& b);

}  // namespace kostant

#endif
