#ifndef KOSTANT_INVARIANTS_HPP
#define KOSTANT_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kostant/parabolic.hpp"

namespace kostant {

// Weight multiset of a module; keys share one coordinate basis.
using Character = std::map<Vec, std::int64_t>;

std::int64_t character_dimension(const Character& c);

enum class ComponentKind { GL, B, C, D, A1Pairing };

// One factor of the reductive part, described by how ambient weights map to
// its own coordinates: coordinate i of a weight w is dot(functionals[i], w).
// GL/B/C/D components live in their epsilon realizations; A1Pairing is an
// sl_2 seen only through the coroot pairing <w, alpha^vee> (rank 1).
struct SComponent {
  ComponentKind kind;
  int rank;
  std::vector<Vec> functionals;
};

struct ReductiveStructure {
  Basis basis = Basis::Epsilon;  // ambient weight basis
  int dim = 0;
  std::vector<SComponent> components;
  // weight is central-character-zero iff it kills every center functional
  std::vector<Vec> center_functionals;
};

// The structure attached to a classical parabolic datum: one gl block per
// part (signed coordinates), the B/C/D block on I_0, centers = the t_i.
ReductiveStructure classical_structure(const ParabolicDatum& d);

// Weights of the sum of root spaces over s, multiplicity 1 each.
Character module_character(const ParabolicDatum& d, const std::vector<Vec>& s);

// Default enumeration cap; overridden by the KOSTANT_MAX_MULTISETS env var.
std::int64_t multiset_cap();

// Exact weights of Sym^k; refuses when the number of degree-k multisets
// exceeds the cap, naming the count.
Character sym_power_character(const Character& c, int k, std::int64_t cap = multiset_cap());

// Multiplicity of the trivial s-module: center-zero filter, then the Weyl
// alternation sum contracted component by component.  Asserts the projected
// character is Weyl-invariant first.
std::int64_t trivial_multiplicity(const Character& c, const ReductiveStructure& rs);

struct DecompositionReport {
  std::vector<std::pair<int, std::int64_t>> degrees;  // (k, dim invariants)
};

// dim (Sym^k M)^s for k = 0..max_degree, where M = sum of the root spaces
// g^nu over nu in s.  Graded path: Sym^k M splits over compositions
// (k_nu) and only zero-t-weight pieces can contribute; each surviving piece
// is a convolution of per-piece symmetric powers fed to the alternation.
// A separating functional makes every degree >= 1 vanish outright.
DecompositionReport invariants_up_to_degree(const ParabolicDatum& d,
                                            const std::vector<Vec>& s, int max_degree,
                                            std::int64_t cap = multiset_cap());

// Same computation for prebuilt pieces: troots[i] with character chars[i].
DecompositionReport invariants_up_to_degree(const std::vector<Vec>& troots,
                                            const std::vector<Character>& chars,
                                            const ReductiveStructure& rs, int max_degree,
                                            std::int64_t cap = multiset_cap());

// dim of the zero-t-weight component of Sym^k M for k = 0..max_degree
// (pure center grading, no alternation).
std::vector<std::int64_t> center_zero_dimensions(const std::vector<Vec>& troots,
                                                 const std::vector<int>& dims,
                                                 int max_degree,
                                                 std::int64_t cap = multiset_cap());

// Independent oracle: full decomposition into irreducibles by repeatedly
// stripping a maximal dominant weight, with irreducible characters built by
// Freudenthal's recursion.  Returns (projected dominant weight, mult) pairs;
// throws if the input is not a genuine module character.
struct IrreducibleSummand {
  std::vector<Rational> weight;  // concatenated component coordinates
  std::int64_t multiplicity;
  std::int64_t dimension;        // of one copy
};
std::vector<IrreducibleSummand> strip_down_decompose(const Character& c,
                                                     const ReductiveStructure& rs);

}  // namespace kostant

#endif
