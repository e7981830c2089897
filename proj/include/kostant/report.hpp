#ifndef KOSTANT_REPORT_HPP
#define KOSTANT_REPORT_HPP

#include <string>
#include <vector>

#include "kostant/exceptional.hpp"
#include "kostant/positivity.hpp"

namespace kostant {

// Outcome of a containment decision.  Exit codes: 0 = a parabolic exists,
// 2 = certified nonexistence, 3 = undecided within the degree budget.
struct Report {
  std::string verdict;  // PARABOLIC_EXISTS, NO_PARABOLIC_CYCLE,
                        // NO_PARABOLIC_CONE_CERTIFICATE, INCONCLUSIVE_AT_DEGREE_<D>
  int exit_code = 3;
  std::string json;  // full machine-readable report (pretty-printed, stable)
};

// Full pipeline for a classical datum: saturation closure, exact cone test
// with certificate, order extension with witness or cycle, invariant table
// to max_degree.  The order decides the verdict; the other sections are
// evidence.
Report check_classical(const ParabolicDatum& d, const std::vector<Vec>& s, int max_degree);

// Fixed reference instances reproduced end to end.
// Ids: B, C, D-nonsat, G2-sat, G2-nonsat, F4, E6, E7, E8.
std::vector<std::string> reference_example_ids();
Report reference_example(const std::string& id);

// Input grammars for the CLI.
// "[1,2];[3]" -> {{1,2},{3}}
std::vector<std::vector<int>> parse_parts(const std::string& text);
// "++-" -> signs for ambient indices 1..n
std::vector<int> parse_signs(const std::string& text, int n);
// "2d1,-d1+d2" -> delta vectors of length k
std::vector<Vec> parse_troots(const std::string& text, int k);

}  // namespace kostant

#endif
