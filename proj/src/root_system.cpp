#include "kostant/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace kostant {

namespace {

using boost::multiprecision::cpp_int;

Vec eps(int n, std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Vec v(Basis::Epsilon, n);
  for (auto [i, x] : terms) v[i] = v[i] + Rational(x);
  return v;
}

void add_with_negatives(std::vector<Vec>& roots, const Vec& v) {
  roots.push_back(v);
  roots.push_back(-v);
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

// Gram matrix of the simple roots for the exceptional types (long roots of
// squared length 2 for the simply-laced ones; scaling is irrelevant).
Matrix exceptional_gram(LieType t) {
  auto simply_laced = [](int n, std::vector<std::pair<int, int>> edges) {
    Matrix g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) g[i][i] = Rational(2);
    for (auto [a, b] : edges) {
      g[a - 1][b - 1] = Rational(-1);
      g[b - 1][a - 1] = Rational(-1);
    }
    return g;
  };
  switch (t) {
    case LieType::G2: {
      Matrix g(2, std::vector<Rational>(2));
      g[0][0] = Rational(2);   // a_1 short
      g[1][1] = Rational(6);   // a_2 long
      g[0][1] = g[1][0] = Rational(-3);
      return g;
    }
    case LieType::F4: {
      Matrix g(4, std::vector<Rational>(4));
      g[0][0] = g[1][1] = Rational(4);  // a_1, a_2 long
      g[2][2] = g[3][3] = Rational(2);  // a_3, a_4 short
      g[0][1] = g[1][0] = Rational(-2);
      g[1][2] = g[2][1] = Rational(-2);
      g[2][3] = g[3][2] = Rational(-1);
      return g;
    }
    case LieType::E6:
      return simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}});
    case LieType::E7:
      return simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}});
    case LieType::E8:
      return simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}});
    default:
      throw std::logic_error("not an exceptional type");
  }
}

std::size_t expected_root_count(LieType t, int n) {
  switch (t) {
    case LieType::GL: return std::size_t(n) * (n - 1);
    case LieType::A: return std::size_t(n) * (n + 1);
    case LieType::B:
    case LieType::C: return 2 * std::size_t(n) * n;
    case LieType::D: return 2 * std::size_t(n) * (n - 1);
    case LieType::G2: return 12;
    case LieType::F4: return 48;
    case LieType::E6: return 72;
    case LieType::E7: return 126;
    case LieType::E8: return 240;
  }
  return 0;
}

void validate_type_rank(LieType t, int n) {
  bool ok = false;
  switch (t) {
    case LieType::GL:
    case LieType::A:
    case LieType::B:
    case LieType::C: ok = n >= 1; break;
    case LieType::D: ok = n >= 2; break;
    case LieType::G2: ok = n == 2; break;
    case LieType::F4: ok = n == 4; break;
    case LieType::E6: ok = n == 6; break;
    case LieType::E7: ok = n == 7; break;
    case LieType::E8: ok = n == 8; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid (type, rank): " + lie_type_to_string(t) +
                                "_" + std::to_string(n));
}

}  // namespace

LieType lie_type_from_string(const std::string& s) {
  if (s == "gl" || s == "GL") return LieType::GL;
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  if (s == "G2" || s == "g2") return LieType::G2;
  if (s == "F4" || s == "f4") return LieType::F4;
  if (s == "E6" || s == "e6") return LieType::E6;
  if (s == "E7" || s == "e7") return LieType::E7;
  if (s == "E8" || s == "e8") return LieType::E8;
  throw std::invalid_argument("unknown Lie type: " + s);
}

std::string lie_type_to_string(LieType t) {
  switch (t) {
    case LieType::GL: return "gl";
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G2";
    case LieType::F4: return "F4";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
  }
  return "?";
}

Rational RootSystem::inner(const Vec& v, const Vec& w) const {
  v.check_compatible(w);
  Rational r;
  for (int i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (w[j].is_zero() || gram[i][j].is_zero()) continue;
      r += v[i] * w[j] * gram[i][j];
    }
  }
  return r;
}

Rational RootSystem::pairing(const Vec& v, const Vec& root) const {
  return Rational(2) * inner(v, root) / inner(root, root);
}

bool RootSystem::is_root(const Vec& v) const {
  return std::binary_search(all_roots.begin(), all_roots.end(), v);
}

std::vector<Rational> RootSystem::simple_root_coords(const Vec& v) const {
  std::size_t k = simple_roots.size();
  Matrix g(k, std::vector<Rational>(k));
  std::vector<Rational> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    b[i] = inner(v, simple_roots[i]);
    for (std::size_t j = 0; j < k; ++j) g[i][j] = inner(simple_roots[i], simple_roots[j]);
  }
  std::vector<Rational> c = solve(g, b);
  Vec back(basis, dim);
  for (std::size_t i = 0; i < k; ++i) back = back + c[i] * simple_roots[i];
  if (!(back == v)) throw std::domain_error("vector not in the root lattice span");
  return c;
}

Vec RootSystem::to_native(const Vec& v) const {
  if (v.basis == basis && int(v.size()) == dim) return v;
  if (v.basis != Basis::SimpleRoot || v.size() != simple_roots.size())
    throw std::invalid_argument("cannot convert vector into native basis");
  Vec r(basis, dim);
  for (std::size_t i = 0; i < simple_roots.size(); ++i) r = r + v[i] * simple_roots[i];
  return r;
}

Vec RootSystem::rho() const {
  Vec r(basis, dim);
  for (const Vec& a : positive_roots) r = r + a;
  return Rational(1, 2) * r;
}

RootSystem generate_roots(LieType type, int rank) {
  validate_type_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;

  bool classical = type == LieType::GL || type == LieType::A || type == LieType::B ||
                   type == LieType::C || type == LieType::D;
  if (classical) {
    rs.basis = Basis::Epsilon;
    int n = (type == LieType::A) ? rank + 1 : rank;
    rs.dim = n;
    rs.gram = identity_matrix(n);
    std::vector<Vec>& roots = rs.all_roots;
    if (type == LieType::GL || type == LieType::A) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) roots.push_back(eps(n, {{i, 1}, {j, -1}}));
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(eps(n, {{i, 1}, {i + 1, -1}}));
      if (n >= 2) rs.highest_root = eps(n, {{0, 1}, {n - 1, -1}});
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          add_with_negatives(roots, eps(n, {{i, 1}, {j, -1}}));
          add_with_negatives(roots, eps(n, {{i, 1}, {j, 1}}));
        }
      if (type == LieType::B)
        for (int i = 0; i < n; ++i) add_with_negatives(roots, eps(n, {{i, 1}}));
      if (type == LieType::C)
        for (int i = 0; i < n; ++i) add_with_negatives(roots, eps(n, {{i, 2}}));
      for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(eps(n, {{i, 1}, {i + 1, -1}}));
      if (type == LieType::B) rs.simple_roots.push_back(eps(n, {{n - 1, 1}}));
      if (type == LieType::C) rs.simple_roots.push_back(eps(n, {{n - 1, 2}}));
      if (type == LieType::D) rs.simple_roots.push_back(eps(n, {{n - 2, 1}, {n - 1, 1}}));
      if (type == LieType::B) rs.highest_root = n >= 2 ? eps(n, {{0, 1}, {1, 1}}) : eps(n, {{0, 1}});
      if (type == LieType::C) rs.highest_root = eps(n, {{0, 2}});
      if (type == LieType::D) rs.highest_root = eps(n, {{0, 1}, {1, 1}});
    }
  } else {
    rs.basis = Basis::SimpleRoot;
    rs.dim = rank;
    rs.gram = exceptional_gram(type);
    for (int i = 0; i < rank; ++i) {
      Vec a(Basis::SimpleRoot, rank);
      a[i] = Rational(1);
      rs.simple_roots.push_back(a);
    }
    // Reflection closure from the Cartan matrix.
    std::set<Vec> closure(rs.simple_roots.begin(), rs.simple_roots.end());
    for (int i = 0; i < rank; ++i) closure.insert(-rs.simple_roots[i]);
    std::vector<Vec> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const Vec& r : frontier) {
        for (int j = 0; j < rank; ++j) {
          Vec image = r - rs.pairing(r, rs.simple_roots[j]) * rs.simple_roots[j];
          if (closure.insert(image).second) next.push_back(image);
        }
      }
      frontier = std::move(next);
    }
    rs.all_roots.assign(closure.begin(), closure.end());
  }

  std::sort(rs.all_roots.begin(), rs.all_roots.end());
  if (rs.all_roots.size() != expected_root_count(type, rank))
    throw std::logic_error("root count mismatch for " + lie_type_to_string(type));

  // Positive roots: nonnegative coordinates in the simple-root basis.
  for (const Vec& r : rs.all_roots) {
    std::vector<Rational> c = rs.simple_root_coords(r);
    bool pos = true, neg = true;
    for (const Rational& x : c) {
      if (x.sign() > 0) neg = false;
      if (x.sign() < 0) pos = false;
    }
    if (pos == neg) throw std::logic_error("root with mixed simple-root signs");
    if (pos) rs.positive_roots.push_back(r);
  }

  // Cartan matrix from the simple roots.
  std::size_t k = rs.simple_roots.size();
  rs.cartan.assign(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      rs.cartan[i][j] = rs.pairing(rs.simple_roots[i], rs.simple_roots[j]);

  if (!classical) {
    // Highest root: simple-root coordinates dominate all other roots.
    for (const Vec& r : rs.positive_roots) {
      bool dominates = true;
      for (const Vec& s : rs.all_roots) {
        for (int i = 0; i < rs.dim && dominates; ++i)
          if (r[i] < s[i]) dominates = false;
        if (!dominates) break;
      }
      if (dominates) {
        rs.highest_root = r;
        break;
      }
    }
    if (rs.highest_root.size() == 0) throw std::logic_error("no highest root found");
  }
  return rs;
}

std::vector<Vec> fundamental_weights(const RootSystem& rs) {
  if (rs.type == LieType::GL)
    throw std::invalid_argument("fundamental weights require a simple type");
  // <w_i, a_j^vee> = delta_ij, so the coefficient rows invert the pairing
  // matrix M[m][j] = <a_m, a_j^vee>.
  Matrix inv = invert(rs.cartan);
  std::vector<Vec> ws;
  for (std::size_t i = 0; i < inv.size(); ++i)
    ws.emplace_back(Basis::SimpleRoot, inv[i]);
  return ws;
}

std::int64_t weyl_order(LieType type, int rank) {
  auto fact = [](int m) {
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  switch (type) {
    case LieType::GL: return fact(rank);
    case LieType::A: return fact(rank + 1);
    case LieType::B:
    case LieType::C: return (std::int64_t(1) << rank) * fact(rank);
    case LieType::D: return (std::int64_t(1) << (rank - 1)) * fact(rank);
    case LieType::G2: return 12;
    case LieType::F4: return 1152;
    case LieType::E6: return 51840;
    case LieType::E7: return 2903040;
    case LieType::E8: return 696729600;
  }
  return 0;
}

WeylGroup weyl_group(LieType type, int rank, std::int64_t cap) {
  validate_type_rank(type, rank);
  std::int64_t order = weyl_order(type, rank);
  if (order > cap)
    throw std::invalid_argument("Weyl group of order " + std::to_string(order) +
                                " exceeds the cap " + std::to_string(cap));
  RootSystem rs = generate_roots(type, rank);
  int d = rs.dim;

  std::vector<Matrix> gens;
  for (const Vec& a : rs.simple_roots) {
    Matrix m = identity_matrix(d);
    for (int c = 0; c < d; ++c) {
      Vec e(rs.basis, d);
      e[c] = Rational(1);
      Rational p = rs.pairing(e, a);
      for (int r = 0; r < d; ++r) m[r][c] -= p * a[r];
    }
    gens.push_back(m);
  }

  WeylGroup w;
  std::map<Matrix, int> seen;
  w.elements.push_back(identity_matrix(d));
  w.signs.push_back(1);
  seen[w.elements[0]] = 0;
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    Matrix cur = w.elements[head];
    int sgn = w.signs[head];
    for (const Matrix& g : gens) {
      Matrix prod(d, std::vector<Rational>(d));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          for (int m = 0; m < d; ++m) prod[r][c] += g[r][m] * cur[m][c];
      if (seen.emplace(prod, 1).second) {
        w.elements.push_back(prod);
        w.signs.push_back(-sgn);
      }
    }
  }
  if (std::int64_t(w.elements.size()) != order)
    throw std::logic_error("Weyl group enumeration does not match the order formula");
  return w;
}

std::int64_t weyl_dimension(const RootSystem& rs, const Vec& highest_weight) {
  Vec lambda = rs.to_native(highest_weight);
  for (const Vec& a : rs.simple_roots) {
    Rational p = rs.pairing(lambda, a);
    if (p.sign() < 0 || !p.is_integer())
      throw std::invalid_argument("highest weight is not dominant integral");
  }
  Vec r = rs.rho();
  cpp_int num = 1, den = 1;
  for (const Vec& a : rs.positive_roots) {
    Rational top = rs.pairing(lambda + r, a);
    Rational bot = rs.pairing(r, a);
    num *= cpp_int(top.num()) * cpp_int(bot.den());
    den *= cpp_int(top.den()) * cpp_int(bot.num());
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  cpp_int d = num / den;
  if (d > INT64_MAX || d <= 0) throw overflow_error();
  return static_cast<std::int64_t>(d);
}

ExtendedDiagramSplit extended_diagram_remove_adjacent(const RootSystem& rs) {
  int removed = 0;
  LieType ct;
  int crank = 0;
  std::vector<int> beta_nodes;  // 1-based g node indices in c's Bourbaki order
  int linked = 0;
  switch (rs.type) {
    case LieType::F4:
      removed = 1; ct = LieType::C; crank = 3; beta_nodes = {4, 3, 2}; linked = 3;
      break;
    case LieType::E6:
      removed = 2; ct = LieType::A; crank = 5; beta_nodes = {1, 3, 4, 5, 6}; linked = 3;
      break;
    case LieType::E7:
      removed = 1; ct = LieType::D; crank = 6; beta_nodes = {7, 6, 5, 4, 2, 3}; linked = 6;
      break;
    case LieType::E8:
      removed = 8; ct = LieType::E7; crank = 7; beta_nodes = {1, 2, 3, 4, 5, 6, 7}; linked = 7;
      break;
    default:
      throw std::invalid_argument("extended-diagram split requires F4/E6/E7/E8");
  }

  ExtendedDiagramSplit split;
  split.alpha0 = -rs.highest_root;
  split.removed_node = removed;
  split.c_type = ct;
  split.c_rank = crank;
  split.linked_beta_index = linked;
  for (int node : beta_nodes) split.c_simple_roots.push_back(rs.simple_roots[node - 1]);

  // Consistency: the removed node is adjacent to a0; every other simple root
  // is orthogonal to it; the beta Cartan matrix matches c's Bourbaki table.
  if (rs.pairing(split.alpha0, rs.simple_roots[removed - 1]).is_zero())
    throw std::logic_error("removed node is not adjacent to the affine node");
  for (const Vec& b : split.c_simple_roots)
    if (!rs.pairing(split.alpha0, b).is_zero())
      throw std::logic_error("c simple root not orthogonal to alpha0");
  RootSystem crs = generate_roots(ct, crank);
  for (int i = 0; i < crank; ++i)
    for (int j = 0; j < crank; ++j)
      if (rs.pairing(split.c_simple_roots[i], split.c_simple_roots[j]) != crs.cartan[i][j])
        throw std::logic_error("c Cartan matrix mismatch in extended-diagram split");
  return split;
}

}  // namespace kostant
