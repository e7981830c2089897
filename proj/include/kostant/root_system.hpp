#ifndef KOSTANT_ROOT_SYSTEM_HPP
#define KOSTANT_ROOT_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kostant/linalg.hpp"

namespace kostant {

// GL is the reductive gl_n, realized natively in n epsilon coordinates.
// A is the simple type A_n, realized in n+1 epsilon coordinates.
enum class LieType { GL, A, B, C, D, E6, E7, E8, F4, G2 };

LieType lie_type_from_string(const std::string& s);
std::string lie_type_to_string(LieType t);

// Simple-root numbering follows the Bourbaki tables throughout:
//   A_n : a_i = e_i - e_{i+1}
//   B_n : a_i = e_i - e_{i+1} (i<n), a_n = e_n
//   C_n : a_i = e_i - e_{i+1} (i<n), a_n = 2 e_n
//   D_n : a_i = e_i - e_{i+1} (i<n), a_n = e_{n-1} + e_n
//   G2  : a_1 short, a_2 long
//   F4  : a_1, a_2 long; a_3, a_4 short; double bond between a_2 and a_3
//   E_n : chain 1-3-4-5-...-n with node 2 attached to node 4
struct RootSystem {
  LieType type;
  int rank;                       // n of the label (GL: number of eps coords)
  Basis basis;                    // Epsilon (classical/GL) or SimpleRoot
  int dim;                        // coordinate dimension of `basis`
  std::vector<Vec> simple_roots;  // in `basis` coordinates
  std::vector<Vec> all_roots;     // sorted, closed under negation
  std::vector<Vec> positive_roots;
  Vec highest_root;
  Matrix cartan;   // cartan[i][j] = <a_i, a_j^vee>
  Matrix gram;     // inner products of basis vectors of `basis`

  Rational inner(const Vec& v, const Vec& w) const;
  // <v, root^vee> = 2 (v, root) / (root, root)
  Rational pairing(const Vec& v, const Vec& root) const;
  bool is_root(const Vec& v) const;
  // Coordinates of v in the simple-root basis (v must lie in their span).
  std::vector<Rational> simple_root_coords(const Vec& v) const;
  // Converts a simple-root-basis vector into this system's native basis.
  Vec to_native(const Vec& v) const;
  Vec rho() const;  // half-sum of positive roots, native basis
};

// Builds the full root system.  Classical types come from the closed-form
// epsilon lists; exceptional types by reflection closure from the Cartan
// matrix.  Invalid (type, rank) pairs are rejected.
RootSystem generate_roots(LieType type, int rank);

// Fundamental weights in the simple-root basis (rows of the inverse of the
// pairing matrix <a_i, a_j^vee>).  Requires a simple type (not GL).
std::vector<Vec> fundamental_weights(const RootSystem& rs);

// Weyl group as explicit orthogonal transformations in the system's native
// basis, with determinant signs.  Generated by closure over the simple
// reflections; refuses groups larger than `cap`, naming the order.
struct WeylGroup {
  std::vector<Matrix> elements;
  std::vector<int> signs;
};
WeylGroup weyl_group(LieType type, int rank, std::int64_t cap = 1000000);

// Order of the Weyl group from the classical product formulas.
std::int64_t weyl_order(LieType type, int rank);

// Weyl dimension formula; highest_weight may be given in the simple-root
// basis or the system's native basis, and must be dominant.
std::int64_t weyl_dimension(const RootSystem& rs, const Vec& highest_weight);

// Extended-diagram split for F4/E6/E7/E8: removing the node adjacent to the
// affine node -a0 leaves A_1 (roots {+-a0}) plus the subalgebra c.  The
// c simple roots are returned in the Bourbaki order of c's own type, and
// linked_beta_index (1-based) is the c node adjacent to the removed one.
struct ExtendedDiagramSplit {
  Vec alpha0;           // negative of the highest root, simple-root basis
  int removed_node;     // 1-based index of the removed g simple root
  LieType c_type;
  int c_rank;
  std::vector<Vec> c_simple_roots;  // in g's simple-root basis
  int linked_beta_index;
};
ExtendedDiagramSplit extended_diagram_remove_adjacent(const RootSystem& rs);

}  // namespace kostant

#endif
