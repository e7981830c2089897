#ifndef KOSTANT_EXCEPTIONAL_HPP
#define KOSTANT_EXCEPTIONAL_HPP

#include "kostant/invariants.hpp"
#include "kostant/positivity.hpp"

namespace kostant {

// One t-root of an exceptional instance: its t-coordinates, the ambient
// roots over it (simple-root basis of g), and whether the A_1 factor acts
// by its natural module (versus trivially).
struct ExcTRoot {
  Vec delta;
  int dim = 0;
  std::vector<Vec> roots;
  bool m_natural = false;
};

// G2 with s generated by one simple root pair (s ~ gl_2), or s = h.
// t has rank 1 (resp. 2); delta coordinates are the coefficient of the
// other simple root (resp. the simple-root coordinates themselves).
struct G2Case {
  RootSystem g;
  int s_simple = 0;  // 1 or 2, 0 for s = h
  std::vector<Vec> s_roots;
  std::vector<ExcTRoot> troots;
  ReductiveStructure structure;

  const ExcTRoot* troot(const Vec& delta) const;
  Character piece(const Vec& delta) const;  // weights of g^delta
};

G2Case g2_case(int s_simple_root);
G2Case g2_cartan_case();

struct CounterexampleReport {
  std::vector<Vec> s;
  std::vector<Vec> saturation;
  bool saturated = false;
  ConeResult cone;
  bool order_exists = false;
  bool has_cycle = false;
  CycleCertificate cycle;  // valid when has_cycle
  DecompositionReport invariants;
};

// S = {-delta, 2 delta} in the s ~ gl_2 (roots +-alpha_2) case: the zero
// combination 2(-delta) + (2 delta), a 2-cycle in the order relation, and
// an all-zero invariant table.
CounterexampleReport g2_nonsaturated_example(int max_degree = 12);

// F4/E6/E7/E8 split along the extended diagram: m ~ A_1 on +-alpha_0,
// c the complementary subalgebra, s = m + h, t = h_c.  t-coordinates of a
// g-root are its pairings against the beta_i coroots of c.
struct AffineNodeInstance {
  LieType g_type;
  RootSystem g;
  ExtendedDiagramSplit split;
  RootSystem c;               // c in its own realization
  std::vector<Vec> beta;      // c simple roots, g simple-root basis
  int u_index = 0;            // fundamental weight of c carried by U
  std::vector<Rational> q;    // highest weight of U in beta coordinates
  std::int64_t dim_u = 0;
  Vec omega;                  // restriction of U's highest weight
  std::vector<ExcTRoot> troots;
  ReductiveStructure structure;

  Vec restrict_root(const Vec& root) const;
  const ExcTRoot* troot(const Vec& delta) const;
  Character piece(const Vec& delta) const;
};

AffineNodeInstance affine_node_instance(LieType g_type);

// S = {-omega, beta_1, ..., beta_{n-1}}: saturated, zero combination
// proportional to (1, q_1, ..., q_{n-1}), all invariants zero.
CounterexampleReport paper_counterexample(LieType g_type, int max_degree = 8);

}  // namespace kostant

#endif
