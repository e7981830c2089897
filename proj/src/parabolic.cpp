#include "kostant/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace kostant {

namespace {

void validate_partition(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<bool> seen(n + 1, false);
  int total = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty partition part");
    for (int j : part) {
      if (j < 1 || j > n) throw std::invalid_argument("partition index out of range");
      if (seen[j]) throw std::invalid_argument("overlapping partition parts");
      seen[j] = true;
      ++total;
    }
  }
  if (total != n) throw std::invalid_argument("partition does not cover {1..n}");
}

int v0_dim(LieType t, int r0) {
  switch (t) {
    case LieType::B: return 2 * r0 + 1;
    case LieType::C:
    case LieType::D: return 2 * r0;
    default: throw std::logic_error("V0 only exists for B/C/D");
  }
}

Vec delta_vec(int k, std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Vec v(Basis::Delta, k);
  for (auto [i, x] : terms) v[i] = v[i] + Rational(x);
  return v;
}

std::string nat(int i, int s) { return "V" + std::to_string(i) + (s > 0 ? "+" : "-"); }

// Epsilon unit combinations in the ambient algebra.
Vec eunit(int n, int j, std::int64_t c) {
  Vec v(Basis::Epsilon, n);
  v[j - 1] = Rational(c);
  return v;
}

}  // namespace

ParabolicDatum make_datum(LieType type, int n, std::vector<std::vector<int>> parts,
                          int i0, std::vector<int> signs) {
  if (type != LieType::GL && type != LieType::B && type != LieType::C && type != LieType::D)
    throw std::invalid_argument("parabolic data exist for gl/B/C/D only");
  if (n < 1 || (type == LieType::D && n < 2))
    throw std::invalid_argument("rank too small for the given type");
  for (auto& part : parts) std::sort(part.begin(), part.end());
  validate_partition(n, parts);
  if (i0 < -1 || i0 >= int(parts.size()))
    throw std::invalid_argument("i0 out of range");
  if (i0 >= 0) {
    if (type == LieType::GL) throw std::invalid_argument("gl data carry no I_0 part");
    for (const auto& part : parts)
      if (part.size() > parts[i0].size())
        throw std::invalid_argument("I_0 must be a largest part");
    if (type == LieType::D && parts[i0].size() < 2)
      throw std::invalid_argument("D-type I_0 requires at least two elements");
  }

  ParabolicDatum d;
  d.type = type;
  d.n = n;
  if (signs.empty()) {
    d.signs.assign(n + 1, 1);
  } else {
    if (int(signs.size()) == n) signs.insert(signs.begin(), 1);  // accept 0-based input
    if (int(signs.size()) != n + 1) throw std::invalid_argument("sign map must cover {1..n}");
    d.signs = signs;
    d.signs[0] = 1;
    for (int j = 1; j <= n; ++j)
      if (d.signs[j] != 1 && d.signs[j] != -1)
        throw std::invalid_argument("signs must be +1 or -1");
  }
  if (type == LieType::GL)
    for (int j = 1; j <= n; ++j)
      if (d.signs[j] != 1) throw std::invalid_argument("gl data carry no signs");

  // Canonical order: I_0 last (it is the largest element of the order).
  for (int i = 0; i < int(parts.size()); ++i)
    if (i != i0) d.parts.push_back(parts[i]);
  if (i0 >= 0) {
    d.parts.push_back(parts[i0]);
    d.i0 = int(d.parts.size()) - 1;
    for (int j : d.parts[d.i0]) d.signs[j] = 1;
  }
  return d;
}

ReductivePart reductive_part(const ParabolicDatum& d) {
  ReductivePart s;
  auto add_component = [&](int part_idx) {
    const auto& part = d.parts[part_idx];
    ReductiveComponent comp;
    comp.indices = part;
    if (part_idx == d.i0) {
      comp.kind = d.type;
      comp.cartan_signs.assign(part.size(), 1);
      for (std::size_t a = 0; a < part.size(); ++a) {
        int j = part[a];
        for (std::size_t b = 0; b < part.size(); ++b) {
          if (a == b) continue;
          int l = part[b];
          if (j < l) {
            comp.roots.push_back(eunit(d.n, j, 1) - eunit(d.n, l, 1));
            comp.roots.push_back(eunit(d.n, l, 1) - eunit(d.n, j, 1));
            comp.roots.push_back(eunit(d.n, j, 1) + eunit(d.n, l, 1));
            comp.roots.push_back(-(eunit(d.n, j, 1) + eunit(d.n, l, 1)));
          }
        }
        if (d.type == LieType::B) {
          comp.roots.push_back(eunit(d.n, j, 1));
          comp.roots.push_back(eunit(d.n, j, -1));
        }
        if (d.type == LieType::C) {
          comp.roots.push_back(eunit(d.n, j, 2));
          comp.roots.push_back(eunit(d.n, j, -2));
        }
      }
    } else {
      comp.kind = LieType::GL;
      for (int j : part) comp.cartan_signs.push_back(d.signs[j]);
      for (int j : part)
        for (int l : part)
          if (j != l)
            comp.roots.push_back(eunit(d.n, j, d.signs[j]) - eunit(d.n, l, d.signs[l]));
    }
    std::sort(comp.roots.begin(), comp.roots.end());
    s.components.push_back(std::move(comp));
  };
  if (d.type_two()) add_component(d.i0);
  for (int i = 0; i < int(d.parts.size()); ++i)
    if (i != d.i0) add_component(i);
  for (const auto& comp : s.components)
    s.roots.insert(s.roots.end(), comp.roots.begin(), comp.roots.end());
  std::sort(s.roots.begin(), s.roots.end());
  return s;
}

TRootSystem t_root_system(const ParabolicDatum& d) {
  TRootSystem ts;
  ts.datum = d;
  ts.k = d.k();
  int k = ts.k;

  std::vector<int> sizes;  // |I_i| for the delta-indexed parts
  for (int i = 0; i < int(d.parts.size()); ++i)
    if (i != d.i0) sizes.push_back(int(d.parts[i].size()));

  auto add = [&](Vec delta, int dim, std::string label) {
    ts.roots.push_back(TRoot{std::move(delta), dim, std::move(label)});
  };

  if (d.type == LieType::GL) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j)
          add(delta_vec(k, {{i, 1}, {j, -1}}), sizes[i] * sizes[j],
              nat(i + 1, 1) + "*" + nat(j + 1, -1));
  } else {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1})
            add(delta_vec(k, {{i, si}, {j, sj}}), sizes[i] * sizes[j],
                nat(i + 1, si) + "*" + nat(j + 1, sj));
    bool singles = d.type_two() || d.type == LieType::B;
    bool doubles_sym = d.type == LieType::C;  // Sym^2 in type C, always present
    int r0 = d.type_two() ? int(d.parts[d.i0].size()) : 0;
    for (int i = 0; i < k; ++i) {
      int r = sizes[i];
      if (singles) {
        for (int si : {1, -1}) {
          if (d.type_two())
            add(delta_vec(k, {{i, si}}), r * v0_dim(d.type, r0), nat(i + 1, si) + "*V0");
          else
            add(delta_vec(k, {{i, si}}), r, nat(i + 1, si));
        }
      }
      if (doubles_sym) {
        for (int si : {1, -1})
          add(delta_vec(k, {{i, 2 * si}}), r * (r + 1) / 2, "Sym2(" + nat(i + 1, si) + ")");
      } else if (r > 1) {
        for (int si : {1, -1})
          add(delta_vec(k, {{i, 2 * si}}), r * (r - 1) / 2, "Lam2(" + nat(i + 1, si) + ")");
      }
    }
  }
  std::sort(ts.roots.begin(), ts.roots.end(),
            [](const TRoot& a, const TRoot& b) { return a.delta < b.delta; });

  int di = 0;
  for (int i = 0; i < int(d.parts.size()); ++i) {
    if (i == d.i0) continue;
    Vec t(Basis::Epsilon, d.n);
    for (int j : d.parts[i]) t[j - 1] = Rational(d.signs[j], int(d.parts[i].size()));
    ts.t_basis.push_back(std::move(t));
    ++di;
  }
  (void)di;
  return ts;
}

namespace {

// delta_i is the t-weight of the natural module of the i-th gl block, so
// the i-th coordinate is the pairing with |I_i| * t_i (the averaging factor
// in t_i would otherwise scale the natural weights down to delta_i/|I_i|).
Vec project_unchecked(const ParabolicDatum& d, const Vec& eps_root) {
  Vec out(Basis::Delta, d.k());
  int di = 0;
  for (int i = 0; i < int(d.parts.size()); ++i) {
    if (i == d.i0) continue;
    Rational v;
    for (int j : d.parts[i]) v += Rational(d.signs[j]) * eps_root[j - 1];
    out[di++] = v;
  }
  return out;
}

}  // namespace

Vec project_root(const ParabolicDatum& d, const Vec& eps_root) {
  RootSystem rs = generate_roots(d.type, d.n);
  if (!rs.is_root(eps_root)) throw std::invalid_argument("not a root of the ambient algebra");
  return project_unchecked(d, eps_root);
}

std::vector<std::pair<Vec, Vec>> project_all(const ParabolicDatum& d) {
  RootSystem rs = generate_roots(d.type, d.n);
  std::vector<std::pair<Vec, Vec>> out;
  out.reserve(rs.all_roots.size());
  for (const Vec& a : rs.all_roots) out.emplace_back(a, project_unchecked(d, a));
  return out;
}

std::vector<Vec> parabolic_roots(const ParabolicDatum& d) {
  std::vector<Vec> roots;
  int n = d.n;
  // position of each index's part in the total order
  std::vector<int> order(n + 1, -1);
  for (int i = 0; i < int(d.parts.size()); ++i)
    for (int j : d.parts[i]) order[j] = i;
  auto in_i0 = [&](int j) { return d.i0 >= 0 && order[j] == d.i0; };
  auto se = [&](int j) { return eunit(n, j, d.signs[j]); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (in_i0(i) && in_i0(j)) {
        if (i < j) {
          for (Vec v : {eunit(n, i, 1) - eunit(n, j, 1), eunit(n, j, 1) - eunit(n, i, 1),
                        eunit(n, i, 1) + eunit(n, j, 1), -(eunit(n, i, 1) + eunit(n, j, 1))})
            roots.push_back(v);
        }
        continue;
      }
      if (!in_i0(i) && !in_i0(j)) {
        if (order[i] <= order[j]) roots.push_back(se(i) - se(j));
        if (d.type != LieType::GL && i < j) {
          roots.push_back(se(i) + se(j));
        }
        continue;
      }
      if (!in_i0(i) && in_i0(j)) {
        roots.push_back(se(i) + eunit(n, j, 1));
        roots.push_back(se(i) - eunit(n, j, 1));
      }
    }
  for (int i = 1; i <= n; ++i) {
    if (d.type == LieType::B) {
      if (in_i0(i)) {
        roots.push_back(eunit(n, i, 1));
        roots.push_back(eunit(n, i, -1));
      } else {
        roots.push_back(se(i));
      }
    }
    if (d.type == LieType::C) {
      if (in_i0(i)) {
        roots.push_back(eunit(n, i, 2));
        roots.push_back(eunit(n, i, -2));
      } else {
        roots.push_back(Rational(2) * se(i));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<ParabolicDatum> enumerate_parabolics(const ParabolicDatum& d, int cap) {
  int k = d.k();
  if (k > cap)
    throw std::invalid_argument("enumeration over " + std::to_string(k) +
                                " parts exceeds the cap " + std::to_string(cap));
  std::vector<int> free_parts;  // indices of non-I_0 parts
  for (int i = 0; i < int(d.parts.size()); ++i)
    if (i != d.i0) free_parts.push_back(i);

  bool signed_type = d.type != LieType::GL;
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<int>>> seen;
  std::vector<ParabolicDatum> out;

  std::vector<int> perm = free_parts;
  std::sort(perm.begin(), perm.end());
  do {
    int flip_count = signed_type ? (1 << k) : 1;
    for (int mask = 0; mask < flip_count; ++mask) {
      ParabolicDatum q = d;
      q.parts.clear();
      for (int a = 0; a < k; ++a) {
        q.parts.push_back(d.parts[perm[a]]);
        int flip = (mask >> a) & 1 ? -1 : 1;
        for (int j : d.parts[perm[a]]) q.signs[j] = flip * d.signs[j];
      }
      if (d.type_two()) {
        q.parts.push_back(d.parts[d.i0]);
        q.i0 = int(q.parts.size()) - 1;
      }
      // D Type I: a singleton maximal part gives the same parabolic for
      // either sign on it; canonicalize that sign to +1.
      if (d.type == LieType::D && !d.type_two() && q.parts.back().size() == 1)
        q.signs[q.parts.back()[0]] = 1;
      if (seen.emplace(q.parts, q.signs).second) out.push_back(std::move(q));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string datum_to_json(const ParabolicDatum& d) {
  nlohmann::json j;
  j["lie_type"] = lie_type_to_string(d.type);
  j["n"] = d.n;
  j["parts"] = d.parts;
  if (d.type_two())
    j["i0"] = d.i0;
  else
    j["i0"] = nullptr;
  nlohmann::json signs = nlohmann::json::object();
  for (int i = 1; i <= d.n; ++i) signs[std::to_string(i)] = d.signs[i];
  j["signs"] = signs;
  return j.dump();
}

std::string troots_to_json(const TRootSystem& ts) {
  nlohmann::json j;
  j["datum"] = nlohmann::json::parse(datum_to_json(ts.datum));
  j["k"] = ts.k;
  nlohmann::json arr = nlohmann::json::array();
  for (const TRoot& r : ts.roots) {
    nlohmann::json e;
    nlohmann::json delta = nlohmann::json::array();
    for (std::size_t i = 0; i < r.delta.size(); ++i) delta.push_back(r.delta[i].str());
    e["delta"] = delta;
    e["dim"] = r.dim;
    e["label"] = r.label;
    arr.push_back(e);
  }
  j["troots"] = arr;
  return j.dump();
}

}  // namespace kostant
