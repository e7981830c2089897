#ifndef KOSTANT_POSITIVITY_HPP
#define KOSTANT_POSITIVITY_HPP

#include <string>
#include <vector>

#include "kostant/parabolic.hpp"

namespace kostant {

// {mu in ambient : mu = r*nu for some nu in s and a positive rational r};
// sorted, idempotent.
std::vector<Vec> saturate(const std::vector<Vec>& ambient, const std::vector<Vec>& s);

// Exact feasibility of 0 in the convex hull of s.  Feasible: coefficients
// (only the nonzero ones) summing to 1 with sum of coeff*nu = 0.  Infeasible:
// phi with phi(nu) > 0 for every nu in s, in the same coordinate basis.
struct ConeResult {
  bool feasible = false;
  std::vector<std::pair<Vec, Rational>> certificate;
  Vec phi;
};
ConeResult zero_in_positive_span(const std::vector<Vec>& s);

// The relation "x comes before y" on {+-delta_1..+-delta_k} (or on
// {delta_1..delta_k} for gl).  Signed vertices: v < k is +delta_{v+1},
// v >= k is -delta_{v-k+1}.  Closed under (x->y) => (-y->-x).
struct SignedDigraph {
  int k = 0;
  bool with_signs = true;
  std::vector<std::vector<bool>> edge;  // adjacency matrix
  std::vector<std::vector<Vec>> witness;  // the s-element behind each edge

  int vertex_count() const { return with_signs ? 2 * k : k; }
  int negate(int v) const { return v < k ? v + k : v - k; }
  std::string vertex_name(int v) const {
    return (v < k ? "d" : "-d") + std::to_string(v % k + 1);
  }
};

// Edges: x - y in s gives x->y (distinct deltas); any positive multiple of
// x in s gives x->-x.  For gl, delta_i - delta_j in s gives i->j.
SignedDigraph build_relation(bool with_signs, int k, const std::vector<Vec>& s);

struct CycleCertificate {
  std::vector<int> vertices;   // v_1 .. v_l v_1 (first repeated last)
  std::vector<Vec> witnesses;  // s-element for each consecutive edge
};

// A total order extending every edge (negation-compatible in the signed
// case), or a minimal-length cycle.  Deterministic: sources are consumed in
// ascending vertex order; cycles are found by BFS with ascending tie-breaks.
struct OrderResult {
  bool acyclic = false;
  std::vector<int> order;
  CycleCertificate cycle;
};
OrderResult extend_to_order(const SignedDigraph& g);

// End-to-end: a parabolic with the reductive part of d containing every
// root space over s, or a cycle certifying there is none compatible with
// the order relation.  The containment is re-verified root by root.
struct ParabolicSearchResult {
  bool found = false;
  ParabolicDatum parabolic;
  std::vector<Vec> roots;  // epsilon-roots of the found parabolic
  std::vector<int> order;
  CycleCertificate cycle;
};
ParabolicSearchResult find_parabolic_containing(const ParabolicDatum& d,
                                                const std::vector<Vec>& s);

// Positive-system axioms: t and -t partition rsh, and t is closed under
// addition inside rsh.
bool check_positive_system(const std::vector<Vec>& t, const std::vector<Vec>& rsh);

}  // namespace kostant

#endif
