#ifndef KOSTANT_PARABOLIC_HPP
#define KOSTANT_PARABOLIC_HPP

#include <string>
#include <vector>

#include "kostant/root_system.hpp"

namespace kostant {

// A parabolic datum for gl_n / B_n / C_n / D_n: an ordered partition of
// {1..n} (1-based) with per-index signs, and an optional distinguished
// largest part I_0 carrying the simple B/C/D factor.  Parts are kept in
// their total order; when present, I_0 is stored last (it is the largest
// element of the order).  Signs inside I_0 are normalized to +1; gl_n
// carries no signs at all (all +1).
struct ParabolicDatum {
  LieType type = LieType::GL;  // GL, B, C or D
  int n = 0;
  std::vector<std::vector<int>> parts;  // each sorted ascending
  int i0 = -1;                          // index into parts, or -1 (Type I)
  std::vector<int> signs;               // size n+1, 1-based, each +1/-1

  bool type_two() const { return i0 >= 0; }
  // Number of delta coordinates = number of non-I_0 parts.
  int k() const { return int(parts.size()) - (type_two() ? 1 : 0); }
};

// Validates and canonicalizes (I_0 moved to the last position; signs on I_0
// and for gl forced to +1).  i0 indexes `parts` as passed in; pass -1 for
// Type I data.  Errors: bad partition, sign domain mismatch, gl with an
// explicit -1 sign or an I_0, D with |I_0| < 2, I_0 not of maximal size.
ParabolicDatum make_datum(LieType type, int n, std::vector<std::vector<int>> parts,
                          int i0 = -1, std::vector<int> signs = {});

// One reductive component: a gl factor on a non-I_0 part, or the simple
// B/C/D factor on I_0.  cartan_signs[j] is the sign attached to ambient
// index indices[j] (always +1 on I_0).
struct ReductiveComponent {
  LieType kind;  // GL, B, C or D
  std::vector<int> indices;
  std::vector<int> cartan_signs;
  std::vector<Vec> roots;  // epsilon basis of the ambient algebra
};

struct ReductivePart {
  std::vector<ReductiveComponent> components;  // I_0 component first if present
  std::vector<Vec> roots;                      // sorted union
};

ReductivePart reductive_part(const ParabolicDatum& d);

// One t-root: delta coordinates (length k), the dimension of its weight
// space, and a module label such as "V1+*V2-", "V1-*V0", "Lam2(V1+)",
// "Sym2(V1+)" or "V1+".
struct TRoot {
  Vec delta;
  int dim = 0;
  std::string label;
};

struct TRootSystem {
  ParabolicDatum datum;
  int k = 0;
  std::vector<TRoot> roots;  // sorted by delta, closed under negation
  // t_i as coefficient vectors over (h_1..h_n) in epsilon coordinates.
  std::vector<Vec> t_basis;
};

TRootSystem t_root_system(const ParabolicDatum& d);

// Value vector (alpha(t_1), ..., alpha(t_k)) of an ambient root; the zero
// vector for roots of the reductive part.  Rejects non-roots.
Vec project_root(const ParabolicDatum& d, const Vec& eps_root);

// (root, projection) for every root of the ambient algebra; one root-system
// generation per call instead of one per root.
std::vector<std::pair<Vec, Vec>> project_all(const ParabolicDatum& d);

// The epsilon-roots of the parabolic subalgebra attached to the datum.
std::vector<Vec> parabolic_roots(const ParabolicDatum& d);

// All parabolic data with the same reductive part: part reorderings plus a
// global sign flip per part (I_0 stays last).  For D Type I, two data whose
// order-maximal part is the same singleton and whose signs agree elsewhere
// give the same parabolic; they are deduplicated by canonicalizing that
// singleton's sign to +1.  Throws when k exceeds cap.
std::vector<ParabolicDatum> enumerate_parabolics(const ParabolicDatum& d, int cap = 8);

// Canonical JSON shapes.
std::string datum_to_json(const ParabolicDatum& d);
std::string troots_to_json(const TRootSystem& ts);

}  // namespace kostant

#endif
