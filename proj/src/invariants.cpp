#include "kostant/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

#include "kostant/positivity.hpp"

namespace kostant {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  __int128 p = __int128(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) throw overflow_error();
  return std::int64_t(p);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  __int128 p = __int128(a) + b;
  if (p > INT64_MAX || p < INT64_MIN) throw overflow_error();
  return std::int64_t(p);
}

// C(n, k) saturating at INT64_MAX
std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i);
    r /= i;
    if (r > INT64_MAX) return INT64_MAX;
  }
  return std::int64_t(r);
}

Rational dot(const Vec& f, const Vec& w) {
  f.check_compatible(w);
  Rational r;
  for (std::size_t i = 0; i < w.size(); ++i) r += f[i] * w[i];
  return r;
}

LieType component_lie_type(ComponentKind k) {
  switch (k) {
    case ComponentKind::GL: return LieType::GL;
    case ComponentKind::B: return LieType::B;
    case ComponentKind::C: return LieType::C;
    case ComponentKind::D: return LieType::D;
    default: throw std::logic_error("pairing components have no epsilon realization");
  }
}

using Key = std::vector<Rational>;

// concatenated component coordinates of an ambient weight
Key project_components(const ReductiveStructure& rs, const Vec& w) {
  Key key;
  for (const SComponent& c : rs.components)
    for (const Vec& f : c.functionals) key.push_back(dot(f, w));
  return key;
}

bool center_zero(const ReductiveStructure& rs, const Vec& w) {
  for (const Vec& f : rs.center_functionals)
    if (!dot(f, w).is_zero()) return false;
  return true;
}

// per-component alternation data: the vectors w(rho)-rho with det signs
struct AlternationTable {
  std::vector<std::pair<Key, int>> shifts;
};

AlternationTable alternation_table(const SComponent& c) {
  AlternationTable t;
  if (c.kind == ComponentKind::A1Pairing) {
    t.shifts.push_back({{Rational(0)}, 1});
    t.shifts.push_back({{Rational(-2)}, -1});
    return t;
  }
  LieType lt = component_lie_type(c.kind);
  RootSystem rs = generate_roots(lt, c.rank);
  WeylGroup w = weyl_group(lt, c.rank);
  Vec rho = rs.rho();
  std::set<Key> seen;
  for (std::size_t e = 0; e < w.elements.size(); ++e) {
    Key shift(c.rank);
    for (int r = 0; r < rs.dim; ++r) {
      Rational v;
      for (int m = 0; m < rs.dim; ++m) v += w.elements[e][r][m] * rho[m];
      shift[r] = v - rho[r];
    }
    if (!seen.insert(shift).second) throw std::logic_error("rho is not regular");
    t.shifts.push_back({std::move(shift), w.signs[e]});
  }
  return t;
}

// action of one simple reflection of a component on its block coordinates
std::vector<std::function<Key(const Key&)>> simple_reflections(const SComponent& c) {
  std::vector<std::function<Key(const Key&)>> out;
  if (c.kind == ComponentKind::A1Pairing) {
    out.push_back([](const Key& k) { return Key{-k[0]}; });
    return out;
  }
  RootSystem rs = generate_roots(component_lie_type(c.kind), c.rank);
  for (const Vec& a : rs.simple_roots) {
    out.push_back([rs, a](const Key& k) {
      Vec v(Basis::Epsilon, rs.dim);
      for (int i = 0; i < rs.dim; ++i) v[i] = k[i];
      Vec img = v - rs.pairing(v, a) * a;
      Key r(rs.dim);
      for (int i = 0; i < rs.dim; ++i) r[i] = img[i];
      return r;
    });
  }
  return out;
}

void assert_weyl_invariant(const std::map<Key, std::int64_t>& k,
                           const ReductiveStructure& rs) {
  int offset = 0;
  for (const SComponent& c : rs.components) {
    for (const auto& refl : simple_reflections(c)) {
      for (const auto& [key, m] : k) {
        Key block(key.begin() + offset, key.begin() + offset + c.rank);
        Key image = refl(block);
        Key full = key;
        std::copy(image.begin(), image.end(), full.begin() + offset);
        auto it = k.find(full);
        if (it == k.end() || it->second != m)
          throw std::invalid_argument("character is not Weyl-invariant");
      }
    }
    offset += c.rank;
  }
}

std::map<Key, std::int64_t> filtered_projection(const Character& c,
                                                const ReductiveStructure& rs) {
  std::map<Key, std::int64_t> k;
  for (const auto& [w, m] : c) {
    if (!center_zero(rs, w)) continue;
    k[project_components(rs, w)] += m;
  }
  return k;
}

// Zero-t-weight compositions (counts over troots summing to `degree` with
// zero weighted sum), DFS with per-coordinate reachability pruning.
void enumerate_zero_compositions(const std::vector<Vec>& troots, int degree,
                                 std::int64_t cap,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  if (troots.empty()) {
    if (degree == 0) fn({});
    return;
  }
  std::size_t n = troots.size();
  std::size_t dim = troots[0].size();
  // suffix-wise coordinate ranges
  std::vector<std::vector<Rational>> smin(n), smax(n);
  for (std::size_t i = n; i-- > 0;) {
    smin[i].resize(dim);
    smax[i].resize(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      smin[i][c] = troots[i][c];
      smax[i][c] = troots[i][c];
      if (i + 1 < n) {
        smin[i][c] = std::min(smin[i][c], smin[i + 1][c]);
        smax[i][c] = std::max(smax[i][c], smax[i + 1][c]);
      }
    }
  }
  std::vector<int> counts(n, 0);
  std::int64_t nodes = 0;
  std::function<void(std::size_t, int, Vec)> rec = [&](std::size_t i, int left, Vec sum) {
    if (++nodes > cap)
      throw std::runtime_error("composition enumeration exceeds the cap (" +
                               std::to_string(nodes) + " nodes)");
    if (left == 0) {
      if (sum.is_zero()) {
        for (std::size_t j = i; j < n; ++j) counts[j] = 0;
        fn(counts);
      }
      return;
    }
    if (i == n) return;
    for (std::size_t c = 0; c < dim; ++c) {
      Rational lo = Rational(left) * smin[i][c], hi = Rational(left) * smax[i][c];
      if (-sum[c] < lo || -sum[c] > hi) return;
    }
    Vec cur = sum;
    for (int take = 0; take <= left; ++take) {
      counts[i] = take;
      rec(i + 1, left - take, cur);
      if (take < left) cur = cur + troots[i];
    }
    counts[i] = 0;
  };
  rec(0, degree, Vec(troots[0].basis, dim));
}

Character convolve(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      auto& slot = out[wa + wb];
      slot = checked_add(slot, checked_mul(ma, mb));
    }
  return out;
}

// ---- Freudenthal ----

// Weight multiplicities of the irreducible with highest weight lambda
// (epsilon coordinates of one GL/B/C/D component).
std::map<Vec, std::int64_t> irreducible_weights(const RootSystem& rs, const Vec& lambda) {
  for (const Vec& a : rs.simple_roots) {
    Rational p = rs.pairing(lambda, a);
    if (p.sign() < 0 || !p.is_integer())
      throw std::invalid_argument("highest weight is not dominant integral");
  }
  Vec rho = rs.rho();
  auto norm2 = [&](const Vec& v) { return rs.inner(v, v); };
  Rational top = norm2(lambda + rho);

  std::map<Vec, std::int64_t> mult;
  mult[lambda] = 1;
  std::set<Vec> known_zero;
  std::vector<Vec> level = {lambda};
  // simple-root coordinates of positive roots, for string length bounds
  std::vector<std::vector<Rational>> pos_coords;
  for (const Vec& a : rs.positive_roots) pos_coords.push_back(rs.simple_root_coords(a));

  while (!level.empty()) {
    std::vector<Vec> next;
    std::set<Vec> candidates;
    for (const Vec& w : level)
      for (const Vec& a : rs.simple_roots) candidates.insert(w - a);
    for (const Vec& cand : candidates) {
      if (mult.count(cand) || known_zero.count(cand)) continue;
      std::vector<Rational> deficit = rs.simple_root_coords(lambda - cand);
      bool inside = true;
      for (const Rational& x : deficit)
        if (x.sign() < 0 || !x.is_integer()) inside = false;
      if (!inside) {
        known_zero.insert(cand);
        continue;
      }
      Rational num;
      for (std::size_t ai = 0; ai < rs.positive_roots.size(); ++ai) {
        const Vec& a = rs.positive_roots[ai];
        // longest j with lambda - cand - j*a still in the positive cone
        std::int64_t jmax = INT64_MAX;
        for (std::size_t ci = 0; ci < deficit.size(); ++ci) {
          if (pos_coords[ai][ci].sign() <= 0) continue;
          Rational q = deficit[ci] / pos_coords[ai][ci];
          std::int64_t f = q.num() / q.den();
          jmax = std::min(jmax, f);
        }
        if (jmax == INT64_MAX) jmax = 0;
        Vec u = cand;
        for (std::int64_t j = 1; j <= jmax; ++j) {
          u = u + a;
          auto it = mult.find(u);
          if (it == mult.end()) continue;
          num += Rational(2 * it->second) * rs.inner(u, a);
        }
      }
      if (num.is_zero()) {
        known_zero.insert(cand);
        continue;
      }
      Rational den = top - norm2(cand + rho);
      if (den.sign() <= 0) throw std::logic_error("Freudenthal denominator not positive");
      Rational m = num / den;
      std::int64_t mv = m.as_integer();
      if (mv <= 0) throw std::logic_error("Freudenthal produced a nonpositive multiplicity");
      mult[cand] = mv;
      next.push_back(cand);
    }
    level = std::move(next);
  }
  return mult;
}

// character of the component irreducible with the given block coordinates,
// as a map over block keys
std::map<Key, std::int64_t> component_irreducible(const SComponent& c, const Key& mu) {
  std::map<Key, std::int64_t> out;
  if (c.kind == ComponentKind::A1Pairing) {
    if (!mu[0].is_integer() || mu[0].sign() < 0)
      throw std::invalid_argument("highest weight is not dominant integral");
    for (Rational p = mu[0]; Rational(0) - mu[0] <= p; p -= Rational(2)) out[{p}] = 1;
    return out;
  }
  RootSystem rs = generate_roots(component_lie_type(c.kind), c.rank);
  Vec lambda(Basis::Epsilon, c.rank);
  for (int i = 0; i < c.rank; ++i) lambda[i] = mu[i];
  for (const auto& [w, m] : irreducible_weights(rs, lambda)) {
    Key k(c.rank);
    for (int i = 0; i < c.rank; ++i) k[i] = w[i];
    out[k] = m;
  }
  return out;
}

}  // namespace

std::int64_t character_dimension(const Character& c) {
  std::int64_t d = 0;
  for (const auto& [w, m] : c) d = checked_add(d, m);
  return d;
}

std::int64_t multiset_cap() {
  if (const char* env = std::getenv("KOSTANT_MAX_MULTISETS")) {
    std::int64_t v = std::atoll(env);
    if (v > 0) return v;
  }
  return 10000000;
}

ReductiveStructure classical_structure(const ParabolicDatum& d) {
  ReductiveStructure rs;
  rs.basis = Basis::Epsilon;
  rs.dim = d.n;
  auto unit = [&](int j, int sign) {
    Vec v(Basis::Epsilon, d.n);
    v[j - 1] = Rational(sign);
    return v;
  };
  for (int i = 0; i < int(d.parts.size()); ++i) {
    SComponent c;
    if (i == d.i0) {
      c.kind = d.type == LieType::B   ? ComponentKind::B
               : d.type == LieType::C ? ComponentKind::C
                                      : ComponentKind::D;
      for (int j : d.parts[i]) c.functionals.push_back(unit(j, 1));
    } else {
      c.kind = ComponentKind::GL;
      for (int j : d.parts[i]) c.functionals.push_back(unit(j, d.signs[j]));
      Vec center(Basis::Epsilon, d.n);
      for (int j : d.parts[i]) center[j - 1] = Rational(d.signs[j]);
      rs.center_functionals.push_back(center);
    }
    c.rank = int(c.functionals.size());
    rs.components.push_back(std::move(c));
  }
  return rs;
}

Character module_character(const ParabolicDatum& d, const std::vector<Vec>& s) {
  std::set<Vec> sset(s.begin(), s.end());
  Character c;
  for (const auto& [alpha, proj] : project_all(d))
    if (sset.count(proj)) c[alpha] = 1;
  return c;
}

Character sym_power_character(const Character& c, int k, std::int64_t cap) {
  std::int64_t d = character_dimension(c);
  std::int64_t count = binom(d + k - 1, k);
  if (count > cap)
    throw std::runtime_error("Sym^" + std::to_string(k) + " has " + std::to_string(count) +
                             " multisets, over the cap " + std::to_string(cap));
  std::vector<Character> by_degree(k + 1);
  if (c.empty()) {
    if (k == 0) {
      Character out;
      return out;  // Sym^0 of 0 handled by callers; stay empty-safe
    }
    return {};
  }
  Basis basis = c.begin()->first.basis;
  std::size_t dim = c.begin()->first.size();
  by_degree[0][Vec(basis, dim)] = 1;
  for (const auto& [w, m] : c) {
    for (int deg = k; deg >= 0; --deg) {
      for (int take = 1; take <= deg; ++take) {
        std::int64_t ways = binom(m + take - 1, take);
        for (const auto& [bw, bm] : by_degree[deg - take]) {
          Vec nw = bw;
          for (int t = 0; t < take; ++t) nw = nw + w;
          auto& slot = by_degree[deg][nw];
          slot = checked_add(slot, checked_mul(bm, ways));
        }
      }
    }
  }
  if (character_dimension(by_degree[k]) != count && count != INT64_MAX)
    throw std::logic_error("symmetric power dimension mismatch");
  return by_degree[k];
}

std::int64_t trivial_multiplicity(const Character& c, const ReductiveStructure& rs) {
  std::map<Key, std::int64_t> k = filtered_projection(c, rs);
  assert_weyl_invariant(k, rs);
  int offset = 0;
  for (const SComponent& comp : rs.components) {
    AlternationTable table = alternation_table(comp);
    std::map<Key, int> shift_sign;
    for (auto& [shift, sign] : table.shifts) shift_sign[shift] = sign;
    std::map<Key, std::int64_t> next;
    for (const auto& [key, m] : k) {
      Key block(key.begin() + offset, key.begin() + offset + comp.rank);
      auto it = shift_sign.find(block);
      if (it == shift_sign.end()) continue;
      Key rest;
      rest.insert(rest.end(), key.begin(), key.begin() + offset);
      rest.insert(rest.end(), key.begin() + offset + comp.rank, key.end());
      next[rest] = checked_add(next[rest], it->second * m);
    }
    k = std::move(next);
    // keys shrank by comp.rank; offset stays
  }
  if (k.empty()) return 0;
  if (k.size() != 1) throw std::logic_error("alternation left multiple keys");
  return k.begin()->second;
}

DecompositionReport invariants_up_to_degree(const std::vector<Vec>& troots,
                                            const std::vector<Character>& chars,
                                            const ReductiveStructure& rs, int max_degree,
                                            std::int64_t cap) {
  if (troots.size() != chars.size()) throw std::invalid_argument("piece count mismatch");
  DecompositionReport rep;
  rep.degrees.emplace_back(0, 1);
  bool separated = troots.empty() || !zero_in_positive_span(troots).feasible;
  if (separated) {
    // a functional positive on every t-weight kills every graded piece
    for (int k = 1; k <= max_degree; ++k) rep.degrees.emplace_back(k, 0);
    return rep;
  }
  // cache Sym^j of each piece
  std::vector<std::map<int, Character>> sym_cache(chars.size());
  auto sym = [&](std::size_t i, int j) -> const Character& {
    auto it = sym_cache[i].find(j);
    if (it == sym_cache[i].end())
      it = sym_cache[i].emplace(j, sym_power_character(chars[i], j, cap)).first;
    return it->second;
  };
  for (int k = 1; k <= max_degree; ++k) {
    std::int64_t total = 0;
    enumerate_zero_compositions(troots, k, cap, [&](const std::vector<int>& counts) {
      Character piece;
      bool first = true;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        piece = first ? sym(i, counts[i]) : convolve(piece, sym(i, counts[i]));
        first = false;
      }
      if (first) return;  // k > 0 has no empty composition
      total = checked_add(total, trivial_multiplicity(piece, rs));
    });
    rep.degrees.emplace_back(k, total);
  }
  return rep;
}

DecompositionReport invariants_up_to_degree(const ParabolicDatum& d,
                                            const std::vector<Vec>& s, int max_degree,
                                            std::int64_t cap) {
  TRootSystem ts = t_root_system(d);
  std::set<Vec> rsh;
  for (const TRoot& r : ts.roots) rsh.insert(r.delta);
  for (const Vec& nu : s)
    if (!rsh.count(nu)) throw std::invalid_argument("t-root outside the t-root system");
  std::vector<Character> chars;
  for (const Vec& nu : s) chars.push_back(module_character(d, {nu}));
  return invariants_up_to_degree(s, chars, classical_structure(d), max_degree, cap);
}

std::vector<std::int64_t> center_zero_dimensions(const std::vector<Vec>& troots,
                                                 const std::vector<int>& dims,
                                                 int max_degree, std::int64_t cap) {
  if (troots.size() != dims.size()) throw std::invalid_argument("piece count mismatch");
  std::vector<std::int64_t> out(max_degree + 1, 0);
  out[0] = 1;
  for (int k = 1; k <= max_degree; ++k) {
    std::int64_t total = 0;
    enumerate_zero_compositions(troots, k, cap, [&](const std::vector<int>& counts) {
      std::int64_t prod = 1;
      for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) prod = checked_mul(prod, binom(dims[i] + counts[i] - 1, counts[i]));
      total = checked_add(total, prod);
    });
    out[k] = total;
  }
  return out;
}

std::vector<IrreducibleSummand> strip_down_decompose(const Character& c,
                                                     const ReductiveStructure& rs) {
  // full projection, keyed by center coordinates ++ component coordinates
  std::map<Key, std::int64_t> k;
  for (const auto& [w, m] : c) {
    Key key;
    for (const Vec& f : rs.center_functionals) key.push_back(dot(f, w));
    Key comp = project_components(rs, w);
    key.insert(key.end(), comp.begin(), comp.end());
    k[key] = checked_add(k[key], m);
  }
  std::size_t center_n = rs.center_functionals.size();

  // regular dominant scoring vector per component block
  Key xi;
  for (const SComponent& comp : rs.components)
    for (int i = 0; i < comp.rank; ++i) xi.push_back(Rational(comp.rank - i));

  std::int64_t total_dim = character_dimension(c);
  std::int64_t accounted = 0;
  std::vector<IrreducibleSummand> out;

  while (true) {
    for (auto it = k.begin(); it != k.end();)
      it = it->second == 0 ? k.erase(it) : std::next(it);
    if (k.empty()) break;
    const Key* best = nullptr;
    Rational best_score;
    for (const auto& [key, m] : k) {
      Rational score;
      for (std::size_t i = 0; i < xi.size(); ++i) score += xi[i] * key[center_n + i];
      if (!best || best_score < score || (best_score == score && key < *best)) {
        best = &key;
        best_score = score;
      }
    }
    Key top = *best;
    std::int64_t mult = k[top];
    if (mult < 0) throw std::invalid_argument("not a module character: negative leading term");

    // product of component irreducibles at this highest weight
    std::map<Key, std::int64_t> irr;
    irr[Key{}] = 1;
    std::int64_t dim_one = 1;
    std::size_t offset = center_n;
    for (const SComponent& comp : rs.components) {
      Key mu(top.begin() + offset, top.begin() + offset + comp.rank);
      std::map<Key, std::int64_t> block;
      try {
        block = component_irreducible(comp, mu);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a module character: maximal weight not dominant");
      }
      std::int64_t bdim = 0;
      for (const auto& [bw, bm] : block) bdim = checked_add(bdim, bm);
      dim_one = checked_mul(dim_one, bdim);
      std::map<Key, std::int64_t> next;
      for (const auto& [prefix, pm] : irr)
        for (const auto& [bw, bm] : block) {
          Key key = prefix;
          key.insert(key.end(), bw.begin(), bw.end());
          next[key] = checked_add(next[key], checked_mul(pm, bm));
        }
      irr = std::move(next);
      offset += comp.rank;
    }
    for (const auto& [w, m] : irr) {
      Key full(top.begin(), top.begin() + center_n);
      full.insert(full.end(), w.begin(), w.end());
      auto& slot = k[full];
      slot -= checked_mul(mult, m);
      if (slot < 0)
        throw std::invalid_argument("not a module character: negative multiplicity");
    }
    out.push_back(IrreducibleSummand{top, mult, dim_one});
    accounted = checked_add(accounted, checked_mul(mult, dim_one));
    if (accounted > total_dim)
      throw std::invalid_argument("not a module character: dimension overshoot");
  }
  if (accounted != total_dim)
    throw std::logic_error("strip-down lost dimensions");
  return out;
}

}  // namespace kostant
