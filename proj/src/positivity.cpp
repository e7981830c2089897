#include "kostant/positivity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kostant/simplex.hpp"

namespace kostant {

std::vector<Vec> saturate(const std::vector<Vec>& ambient, const std::vector<Vec>& s) {
  std::vector<Vec> out;
  for (const Vec& mu : ambient) {
    for (const Vec& nu : s) {
      // mu = r*nu for some positive rational r
      Rational r = positive_ratio(mu, nu);
      if (!r.is_zero()) {
        out.push_back(mu);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConeResult zero_in_positive_span(const std::vector<Vec>& s) {
  if (s.empty()) throw std::invalid_argument("empty generator set");
  std::size_t dim = s[0].size();
  for (const Vec& v : s) s[0].check_compatible(v);

  // rows: each coordinate sums to zero, plus the normalization sum = 1
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(s.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t r = 0; r < dim; ++r) a[r][j] = s[j][r];
    a[dim][j] = Rational(1);
  }
  b[dim] = Rational(1);

  FeasibilityResult lp = solve_equality_feasibility(a, b);
  ConeResult res;
  res.feasible = lp.feasible;
  if (lp.feasible) {
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!lp.solution[j].is_zero()) res.certificate.emplace_back(s[j], lp.solution[j]);
  } else {
    // y*nu + y_last <= 0 for all nu and y_last > 0, so phi = -y separates
    res.phi = Vec(s[0].basis, dim);
    for (std::size_t r = 0; r < dim; ++r) res.phi[r] = -lp.dual[r];
    for (const Vec& nu : s) {
      Rational val;
      for (std::size_t r = 0; r < dim; ++r) val += res.phi[r] * nu[r];
      if (val.sign() <= 0) throw std::logic_error("separating functional fails on a generator");
    }
  }
  return res;
}

SignedDigraph build_relation(bool with_signs, int k, const std::vector<Vec>& s) {
  SignedDigraph g;
  g.k = k;
  g.with_signs = with_signs;
  int n = g.vertex_count();
  g.edge.assign(n, std::vector<bool>(n, false));
  g.witness.assign(n, std::vector<Vec>(n));
  auto add_edge = [&](int u, int v, const Vec& w) {
    g.edge[u][v] = true;
    g.witness[u][v] = w;
    if (with_signs) {
      g.edge[g.negate(v)][g.negate(u)] = true;
      g.witness[g.negate(v)][g.negate(u)] = w;
    }
  };

  for (const Vec& nu : s) {
    if (int(nu.size()) != k) throw std::invalid_argument("t-root dimension mismatch");
    std::vector<int> support;
    for (int i = 0; i < k; ++i)
      if (!nu[i].is_zero()) support.push_back(i);
    if (!with_signs) {
      if (support.size() != 2 || nu[support[0]] + nu[support[1]] != Rational(0) ||
          (nu[support[0]] != Rational(1) && nu[support[0]] != Rational(-1)))
        throw std::invalid_argument("gl t-roots have the form delta_i - delta_j");
      int i = support[0], j = support[1];
      if (nu[i] == Rational(1))
        add_edge(i, j, nu);
      else
        add_edge(j, i, nu);
      continue;
    }
    if (support.size() == 1) {
      // positive multiple of a signed delta: that delta precedes its negative
      int i = support[0];
      int u = nu[i].sign() > 0 ? i : i + k;
      add_edge(u, g.negate(u), nu);
    } else if (support.size() == 2) {
      // nu = a*delta_i + b*delta_j with |a| = |b| = 1: (a di) -> (-b dj)
      int i = support[0], j = support[1];
      Rational a = nu[i], b = nu[j];
      if ((a != Rational(1) && a != Rational(-1)) || (b != Rational(1) && b != Rational(-1)))
        throw std::invalid_argument("unexpected two-support t-root coefficients");
      int u = a.sign() > 0 ? i : i + k;
      int v = b.sign() > 0 ? j + k : j;  // negation of (b dj)
      add_edge(u, v, nu);
    } else {
      throw std::invalid_argument("t-roots have support of size one or two");
    }
  }
  return g;
}

namespace {

// Minimal cycle among `alive` vertices: BFS from each vertex in ascending
// order, neighbors scanned ascending, best (length, start) kept.
CycleCertificate minimal_cycle(const SignedDigraph& g, const std::vector<bool>& alive) {
  int n = g.vertex_count();
  CycleCertificate best;
  for (int start = 0; start < n; ++start) {
    if (!alive[start]) continue;
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue = {start};
    dist[start] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || !g.edge[u][v] || dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
    // cheapest edge closing back into start
    int back = -1;
    for (int x = 0; x < n; ++x)
      if (alive[x] && g.edge[x][start] && dist[x] >= 0 &&
          (back < 0 || dist[x] < dist[back]))
        back = x;
    if (back < 0) continue;
    std::vector<int> cyc;
    for (int v = back; v >= 0; v = parent[v]) cyc.push_back(v);
    std::reverse(cyc.begin(), cyc.end());  // start .. back
    cyc.push_back(start);
    if (!best.vertices.empty() && cyc.size() >= best.vertices.size()) continue;
    best.vertices = cyc;
    best.witnesses.clear();
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
      best.witnesses.push_back(g.witness[cyc[i]][cyc[i + 1]]);
  }
  if (best.vertices.empty()) throw std::logic_error("no cycle found in a stuck digraph");
  return best;
}

}  // namespace

OrderResult extend_to_order(const SignedDigraph& g) {
  int n = g.vertex_count();
  if (g.with_signs) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.edge[u][v] && !g.edge[g.negate(v)][g.negate(u)])
          throw std::invalid_argument("digraph not closed under negation");
  }

  OrderResult res;
  std::vector<bool> alive(n, true);
  std::vector<int> front;
  int remaining = n;
  while (remaining > 0) {
    int src = -1;
    for (int v = 0; v < n && src < 0; ++v) {
      if (!alive[v]) continue;
      bool source = true;
      for (int u = 0; u < n && source; ++u)
        if (alive[u] && u != v && g.edge[u][v]) source = false;
      if (source) src = v;
    }
    if (src < 0) {
      res.acyclic = false;
      res.cycle = minimal_cycle(g, alive);
      return res;
    }
    front.push_back(src);
    alive[src] = false;
    --remaining;
    if (g.with_signs) {
      // the negation of a source is a sink: emit it at the matching end
      alive[g.negate(src)] = false;
      --remaining;
    }
  }

  res.acyclic = true;
  res.order = front;
  if (g.with_signs)
    for (auto it = front.rbegin(); it != front.rend(); ++it)
      res.order.push_back(g.negate(*it));
  // validation: the order extends every edge
  std::vector<int> pos(n);
  for (int i = 0; i < int(res.order.size()); ++i) pos[res.order[i]] = i;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.edge[u][v] && u != v && pos[u] >= pos[v])
        throw std::logic_error("constructed order violates an edge");
  return res;
}

ParabolicSearchResult find_parabolic_containing(const ParabolicDatum& d,
                                                const std::vector<Vec>& s) {
  bool with_signs = d.type != LieType::GL;
  int k = d.k();
  SignedDigraph g = build_relation(with_signs, k, s);
  OrderResult ext = extend_to_order(g);

  ParabolicSearchResult res;
  if (!ext.acyclic) {
    res.found = false;
    res.cycle = ext.cycle;
    return res;
  }
  res.found = true;
  res.order = ext.order;

  // First k entries of the order drive the part order and the sign flips.
  std::vector<int> free_parts;
  for (int i = 0; i < int(d.parts.size()); ++i)
    if (i != d.i0) free_parts.push_back(i);
  std::vector<std::vector<int>> parts;
  std::vector<int> signs = d.signs;
  for (int a = 0; a < k; ++a) {
    int v = ext.order[a];
    int di = v % k;
    int flip = v < k ? 1 : -1;
    parts.push_back(d.parts[free_parts[di]]);
    for (int j : d.parts[free_parts[di]]) signs[j] = flip * d.signs[j];
  }
  int i0 = -1;
  if (d.type_two()) {
    parts.push_back(d.parts[d.i0]);
    i0 = int(parts.size()) - 1;
  }
  res.parabolic = make_datum(d.type, d.n, parts, i0, signs);
  res.roots = parabolic_roots(res.parabolic);

  // soundness check: every root space over s lies in the parabolic
  std::set<Vec> sset(s.begin(), s.end());
  for (const auto& [alpha, proj] : project_all(d)) {
    if (!sset.count(proj)) continue;
    if (!std::binary_search(res.roots.begin(), res.roots.end(), alpha))
      throw std::logic_error("order witness produced a parabolic missing a root of M");
  }
  return res;
}

bool check_positive_system(const std::vector<Vec>& t, const std::vector<Vec>& rsh) {
  std::set<Vec> ts(t.begin(), t.end()), rs(rsh.begin(), rsh.end());
  for (const Vec& v : ts)
    if (!rs.count(v)) return false;
  for (const Vec& v : rs)
    if (ts.count(v) == ts.count(-v)) return false;  // exactly one of v, -v
  for (const Vec& a : ts)
    for (const Vec& b : ts) {
      Vec sum = a + b;
      if (rs.count(sum) && !ts.count(sum)) return false;
    }
  return true;
}

}  // namespace kostant
