#ifndef KOSTANT_GRID_HPP
#define KOSTANT_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kostant/invariants.hpp"
#include "kostant/positivity.hpp"

namespace kostant {

// Every parabolic datum for (type, n): ordered set partitions, sign maps up
// to the per-part global flip, and every admissible I_0 designation.
std::vector<ParabolicDatum> enumerate_data(LieType type, int n);

// The full verification grid: gl_n (n <= 4), B_n/C_n (n <= 3), D_4.
std::vector<ParabolicDatum> standard_grid();

// Keeps one representative per isomorphism class under part reordering and
// per-part sign flips (these relabel the delta coordinates bijectively, so
// subset sweeps transfer verbatim).
std::vector<ParabolicDatum> sweep_representatives(const std::vector<ParabolicDatum>& data);

struct DatumCheck {
  bool projection_match = false;  // projected root multiset == t-root table
  bool dimension_match = false;   // dim s + sum of t-space dims == dim g
};
DatumCheck check_datum(const ParabolicDatum& d);

struct SweepStats {
  std::int64_t datums = 0;
  std::int64_t subsets = 0;        // saturated subsets examined
  std::int64_t order_ok = 0;
  std::int64_t cone_feasible = 0;
  std::int64_t cap_hits = 0;       // instances aborted by enumeration caps
  std::vector<std::string> violations;         // order <=/=> invariants
  std::vector<std::string> tlevel_violations;  // cone <=/=> zero compositions
  std::vector<std::string> capped;             // instances hitting caps
  void merge(const SweepStats& o);
};

// For every saturated S of one datum, compares both sides of the
// equivalence "order extension succeeds iff the invariant table vanishes in
// degrees 1..D", D = 4k+4.  Acyclic subsets are certified by a positive
// functional read off the order (it grades every composition away from
// zero); cyclic ones search for a positive trivial multiplicity at some
// degree <= D.  Discordant subsets land in `violations`; the only known
// family is D Type I with a doubled t-root plus singleton parts, where the
// equivalence genuinely fails (see test_grid for the full certification).
// Also records the t-level comparison: cone feasibility iff a zero-weight
// composition of degree <= D exists.
SweepStats sweep_datum(const ParabolicDatum& d);

SweepStats sweep_serial(const std::vector<ParabolicDatum>& data);
// OpenMP over datums; identical output to sweep_serial by construction.
SweepStats sweep_parallel(const std::vector<ParabolicDatum>& data);

}  // namespace kostant

#endif
