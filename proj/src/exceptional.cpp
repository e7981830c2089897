#include "kostant/exceptional.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kostant {

namespace {

Character single_weights(const std::vector<ExcTRoot>& troots, const Vec& delta) {
  for (const ExcTRoot& r : troots)
    if (r.delta == delta) {
      Character c;
      for (const Vec& w : r.roots) c[w] = 1;
      return c;
    }
  throw std::invalid_argument("unknown t-root " + delta.str());
}

const ExcTRoot* find_troot(const std::vector<ExcTRoot>& troots, const Vec& delta) {
  for (const ExcTRoot& r : troots)
    if (r.delta == delta) return &r;
  return nullptr;
}

// <., alpha^vee> as a coefficient vector over the simple-root coordinates
Vec pairing_functional(const RootSystem& rs, const Vec& alpha) {
  Vec f(Basis::SimpleRoot, rs.dim);
  for (int j = 0; j < rs.dim; ++j) {
    Vec unit(Basis::SimpleRoot, rs.dim);
    unit[j] = Rational(1);
    f[j] = rs.pairing(unit, alpha);
  }
  return f;
}

}  // namespace

const ExcTRoot* G2Case::troot(const Vec& delta) const { return find_troot(troots, delta); }
Character G2Case::piece(const Vec& delta) const { return single_weights(troots, delta); }

G2Case g2_case(int s_simple_root) {
  if (s_simple_root != 1 && s_simple_root != 2)
    throw std::invalid_argument("s is generated by simple root 1 or 2");
  G2Case out;
  out.g = generate_roots(LieType::G2, 2);
  out.s_simple = s_simple_root;
  int s_idx = s_simple_root - 1;   // coordinate of the s-root
  int t_idx = 1 - s_idx;           // coordinate carrying the t-weight
  out.s_roots = {out.g.simple_roots[s_idx], -out.g.simple_roots[s_idx]};

  std::map<Vec, ExcTRoot> grouped;
  for (const Vec& a : out.g.all_roots) {
    Vec delta(Basis::Delta, 1);
    delta[0] = a[t_idx];
    if (delta.is_zero()) continue;  // roots of s
    auto& slot = grouped[delta];
    slot.delta = delta;
    slot.roots.push_back(a);
    slot.dim = int(slot.roots.size());
  }
  for (auto& [delta, r] : grouped) out.troots.push_back(r);

  out.structure.basis = Basis::SimpleRoot;
  out.structure.dim = 2;
  SComponent m;
  m.kind = ComponentKind::A1Pairing;
  m.rank = 1;
  m.functionals = {pairing_functional(out.g, out.g.simple_roots[s_idx])};
  out.structure.components = {m};
  Vec center(Basis::SimpleRoot, 2);
  center[t_idx] = Rational(1);
  out.structure.center_functionals = {center};
  return out;
}

G2Case g2_cartan_case() {
  G2Case out;
  out.g = generate_roots(LieType::G2, 2);
  for (const Vec& a : out.g.all_roots) {
    ExcTRoot r;
    r.delta = Vec(Basis::Delta, 2);
    r.delta[0] = a[0];
    r.delta[1] = a[1];
    r.dim = 1;
    r.roots = {a};
    out.troots.push_back(r);
  }
  out.structure.basis = Basis::SimpleRoot;
  out.structure.dim = 2;
  for (int i = 0; i < 2; ++i) {
    Vec center(Basis::SimpleRoot, 2);
    center[i] = Rational(1);
    out.structure.center_functionals.push_back(center);
  }
  return out;
}

CounterexampleReport g2_nonsaturated_example(int max_degree) {
  G2Case inst = g2_case(2);
  auto dvec = [](std::int64_t x) {
    Vec v(Basis::Delta, 1);
    v[0] = Rational(x);
    return v;
  };
  CounterexampleReport rep;
  rep.s = {dvec(-1), dvec(2)};

  std::vector<Vec> rsh;
  for (const ExcTRoot& r : inst.troots) rsh.push_back(r.delta);
  rep.saturation = saturate(rsh, rep.s);
  rep.saturated = rep.saturation == [&] {
    std::vector<Vec> sorted = rep.s;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }();

  rep.cone = zero_in_positive_span(rep.s);
  SignedDigraph g = build_relation(true, 1, rep.s);
  OrderResult ord = extend_to_order(g);
  rep.order_exists = ord.acyclic;
  if (!ord.acyclic) {
    rep.has_cycle = true;
    rep.cycle = ord.cycle;
  }

  std::vector<Character> chars;
  for (const Vec& nu : rep.s) chars.push_back(inst.piece(nu));
  rep.invariants = invariants_up_to_degree(rep.s, chars, inst.structure, max_degree);
  return rep;
}

Vec AffineNodeInstance::restrict_root(const Vec& root) const {
  Vec v(Basis::Delta, c.rank);
  for (int i = 0; i < c.rank; ++i) v[i] = g.pairing(root, beta[i]);
  return v;
}

const ExcTRoot* AffineNodeInstance::troot(const Vec& delta) const {
  return find_troot(troots, delta);
}
Character AffineNodeInstance::piece(const Vec& delta) const {
  return single_weights(troots, delta);
}

AffineNodeInstance affine_node_instance(LieType g_type) {
  AffineNodeInstance inst;
  inst.g_type = g_type;
  switch (g_type) {
    case LieType::F4: inst.g = generate_roots(LieType::F4, 4); break;
    case LieType::E6: inst.g = generate_roots(LieType::E6, 6); break;
    case LieType::E7: inst.g = generate_roots(LieType::E7, 7); break;
    case LieType::E8: inst.g = generate_roots(LieType::E8, 8); break;
    default: throw std::invalid_argument("affine-node construction needs F4/E6/E7/E8");
  }
  inst.split = extended_diagram_remove_adjacent(inst.g);
  inst.c = generate_roots(inst.split.c_type, inst.split.c_rank);
  inst.beta = inst.split.c_simple_roots;

  inst.u_index = inst.split.linked_beta_index;
  std::vector<Vec> fw = fundamental_weights(inst.c);
  const Vec& omega_c = fw[inst.u_index - 1];  // simple-root basis of c
  inst.q.assign(omega_c.c.begin(), omega_c.c.end());
  for (const Rational& qi : inst.q)
    if (qi.sign() <= 0) throw std::logic_error("nonpositive coefficient in the U weight");
  inst.dim_u = weyl_dimension(inst.c, omega_c);

  // roots of c inside g: integer beta-combinations of c's own roots
  std::set<Vec> c_roots;
  for (const Vec& a : inst.c.all_roots) {
    std::vector<Rational> coords = inst.c.simple_root_coords(a);
    Vec in_g(Basis::SimpleRoot, inst.g.dim);
    for (int i = 0; i < inst.c.rank; ++i) in_g = in_g + coords[i] * inst.beta[i];
    if (!inst.g.is_root(in_g)) throw std::logic_error("c-root is not a g-root");
    c_roots.insert(in_g);
  }

  Vec alpha0 = inst.split.alpha0;
  std::map<Vec, ExcTRoot> supp_u;
  for (const Vec& a : inst.g.all_roots) {
    if (a == alpha0 || a == -alpha0) continue;
    Vec delta = inst.restrict_root(a);
    if (c_roots.count(a)) {
      ExcTRoot r;
      r.delta = delta;
      r.dim = 1;
      r.roots = {a};
      r.m_natural = false;
      inst.troots.push_back(r);
      continue;
    }
    auto& slot = supp_u[delta];
    slot.delta = delta;
    slot.roots.push_back(a);
    slot.dim = int(slot.roots.size());
    slot.m_natural = true;
  }
  for (auto& [delta, r] : supp_u) {
    if (r.dim != 2) throw std::logic_error("U weight space of m-multiplicity != 2");
    if (!supp_u.count(-delta)) throw std::logic_error("supp U not closed under negation");
    inst.troots.push_back(r);
  }
  if (std::int64_t(supp_u.size()) != inst.dim_u)
    throw std::logic_error("support size disagrees with the dimension of U");

  // dim g = 3 + dim c + 2 dim U
  std::int64_t dim_g = inst.g.rank + std::int64_t(inst.g.all_roots.size());
  std::int64_t dim_c = inst.c.rank + std::int64_t(inst.c.all_roots.size());
  if (dim_g != 3 + dim_c + 2 * inst.dim_u)
    throw std::logic_error("dimension identity fails");

  inst.omega = Vec(Basis::Delta, inst.c.rank);
  inst.omega[inst.u_index - 1] = Rational(1);
  if (!find_troot(inst.troots, -inst.omega))
    throw std::logic_error("lowest U weight missing from the t-root set");

  inst.structure.basis = Basis::SimpleRoot;
  inst.structure.dim = inst.g.dim;
  SComponent m;
  m.kind = ComponentKind::A1Pairing;
  m.rank = 1;
  m.functionals = {pairing_functional(inst.g, alpha0)};
  inst.structure.components = {m};
  for (int i = 0; i < inst.c.rank; ++i)
    inst.structure.center_functionals.push_back(pairing_functional(inst.g, inst.beta[i]));
  return inst;
}

CounterexampleReport paper_counterexample(LieType g_type, int max_degree) {
  AffineNodeInstance inst = affine_node_instance(g_type);
  CounterexampleReport rep;
  rep.s.push_back(-inst.omega);
  for (const Vec& b : inst.beta) rep.s.push_back(inst.restrict_root(b));

  std::vector<Vec> rsh;
  for (const ExcTRoot& r : inst.troots) rsh.push_back(r.delta);
  rep.saturation = saturate(rsh, rep.s);
  std::vector<Vec> sorted = rep.s;
  std::sort(sorted.begin(), sorted.end());
  rep.saturated = rep.saturation == sorted;

  rep.cone = zero_in_positive_span(rep.s);
  rep.order_exists = !rep.cone.feasible;  // feasible => no positive functional

  std::vector<Character> chars;
  for (const Vec& nu : rep.s) chars.push_back(inst.piece(nu));
  rep.invariants = invariants_up_to_degree(rep.s, chars, inst.structure, max_degree);
  return rep;
}

}  // namespace kostant
