#include "kostant/grid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef KOSTANT_HAVE_OPENMP
#include <omp.h>
#endif

namespace kostant {

namespace {

// ordered set partitions of {1..n}: surjections onto {0..k-1}, k = 1..n
std::vector<std::vector<std::vector<int>>> ordered_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> assign(n, 0);
    while (true) {
      std::vector<std::vector<int>> parts(k);
      for (int i = 0; i < n; ++i) parts[assign[i]].push_back(i + 1);
      bool surjective = true;
      for (const auto& p : parts)
        if (p.empty()) surjective = false;
      if (surjective) out.push_back(parts);
      int pos = n - 1;
      while (pos >= 0 && assign[pos] == k - 1) assign[pos--] = 0;
      if (pos < 0) break;
      ++assign[pos];
    }
  }
  return out;
}

// sign maps modulo the per-part global flip: smallest index of each listed
// part is pinned to +1
void sign_classes(const std::vector<std::vector<int>>& parts, std::size_t at, int n,
                  std::vector<int>& signs, std::vector<std::vector<int>>& out) {
  if (at == parts.size()) {
    out.push_back(signs);
    return;
  }
  const std::vector<int>& p = parts[at];
  int free_count = int(p.size()) - 1;
  for (int mask = 0; mask < (1 << free_count); ++mask) {
    for (int b = 0; b < free_count; ++b) signs[p[b + 1]] = (mask & (1 << b)) ? -1 : 1;
    signs[p[0]] = 1;
    sign_classes(parts, at + 1, n, signs, out);
  }
}

}  // namespace

std::vector<ParabolicDatum> enumerate_data(LieType type, int n) {
  std::vector<ParabolicDatum> out;
  std::set<std::string> seen;
  auto emit = [&](ParabolicDatum d) {
    std::string key = datum_to_json(d);
    if (seen.insert(key).second) out.push_back(std::move(d));
  };
  for (const auto& parts : ordered_partitions(n)) {
    std::size_t max_size = 0;
    for (const auto& p : parts) max_size = std::max(max_size, p.size());
    if (type == LieType::GL) {
      emit(make_datum(type, n, parts));
      continue;
    }
    // Type I: signs on every part
    {
      std::vector<std::vector<int>> signsets;
      std::vector<int> signs(n + 1, 1);
      sign_classes(parts, 0, n, signs, signsets);
      for (const auto& s : signsets) emit(make_datum(type, n, parts, -1, s));
    }
    // Type II: each maximal part in turn as I_0, signs on the others
    for (int p = 0; p < int(parts.size()); ++p) {
      if (parts[p].size() != max_size) continue;
      if (type == LieType::D && parts[p].size() < 2) continue;
      std::vector<std::vector<int>> others;
      for (int q = 0; q < int(parts.size()); ++q)
        if (q != p) others.push_back(parts[q]);
      std::vector<std::vector<int>> signsets;
      std::vector<int> signs(n + 1, 1);
      sign_classes(others, 0, n, signs, signsets);
      for (const auto& s : signsets) emit(make_datum(type, n, parts, p, s));
    }
  }
  return out;
}

std::vector<ParabolicDatum> standard_grid() {
  std::vector<ParabolicDatum> out;
  auto add = [&](LieType t, int n) {
    std::vector<ParabolicDatum> d = enumerate_data(t, n);
    out.insert(out.end(), d.begin(), d.end());
  };
  for (int n = 1; n <= 4; ++n) add(LieType::GL, n);
  for (int n = 1; n <= 3; ++n) add(LieType::B, n);
  for (int n = 1; n <= 3; ++n) add(LieType::C, n);
  add(LieType::D, 4);
  return out;
}

std::vector<ParabolicDatum> sweep_representatives(const std::vector<ParabolicDatum>& data) {
  // part order permutes the delta coordinates bijectively and compatibly
  // with both sides of the theorem, so an unordered key suffices
  std::vector<ParabolicDatum> out;
  std::set<std::string> seen;
  for (const ParabolicDatum& d : data) {
    std::vector<std::string> keys;
    for (int i = 0; i < int(d.parts.size()); ++i) {
      std::string k = i == d.i0 ? "I0:" : "p:";
      for (int j : d.parts[i]) k += std::to_string(d.signs[j] * j) + ",";
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    std::string key = lie_type_to_string(d.type) + "/" + std::to_string(d.n);
    for (const std::string& k : keys) key += "|" + k;
    if (seen.insert(key).second) out.push_back(d);
  }
  return out;
}

DatumCheck check_datum(const ParabolicDatum& d) {
  DatumCheck res;
  TRootSystem ts = t_root_system(d);
  std::map<Vec, int> projected;
  int zero_count = 0;
  for (const auto& [alpha, proj] : project_all(d)) {
    if (proj.is_zero())
      ++zero_count;
    else
      ++projected[proj];
  }
  res.projection_match = projected.size() == ts.roots.size();
  int total = 0;
  for (const TRoot& r : ts.roots) {
    auto it = projected.find(r.delta);
    if (it == projected.end() || it->second != r.dim) res.projection_match = false;
    total += r.dim;
  }
  std::size_t ambient = generate_roots(d.type, d.n).all_roots.size();
  res.dimension_match =
      zero_count == int(reductive_part(d).roots.size()) &&
      std::size_t(zero_count + total) == ambient;
  return res;
}

void SweepStats::merge(const SweepStats& o) {
  datums += o.datums;
  subsets += o.subsets;
  order_ok += o.order_ok;
  cone_feasible += o.cone_feasible;
  cap_hits += o.cap_hits;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  tlevel_violations.insert(tlevel_violations.end(), o.tlevel_violations.begin(),
                           o.tlevel_violations.end());
  capped.insert(capped.end(), o.capped.begin(), o.capped.end());
}

namespace {

std::string subset_string(const ParabolicDatum& d, const std::vector<Vec>& s) {
  std::ostringstream os;
  os << datum_to_json(d) << " S={";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i].str();
  os << "}";
  return os.str();
}

class DatumSweeper {
 public:
  explicit DatumSweeper(const ParabolicDatum& datum)
      : d(datum), ts(t_root_system(datum)), rs(classical_structure(datum)) {
    k = d.k();
    max_degree = 4 * k + 4;
    with_signs = d.type != LieType::GL;
    std::map<Vec, Character> by_delta;
    for (const auto& [alpha, proj] : project_all(d))
      if (!proj.is_zero()) by_delta[proj][alpha] += 1;
    for (const TRoot& r : ts.roots) {
      rsh.push_back(r.delta);
      piece.push_back(by_delta.at(r.delta));
    }
    int m = int(rsh.size());
    neg_index.assign(m, -1);
    double_index.assign(m, -1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (rsh[j] == -rsh[i]) neg_index[i] = j;
        if (rsh[j] == Rational(2) * rsh[i]) double_index[i] = j;
      }
  }

  SweepStats run() {
    stats.datums = 1;
    // saturated subsets factor over the {nu, 2nu} lines: each element of a
    // line forces the whole line, so a line is all-in or all-out; unpaired
    // elements are free
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> free_idx;
    int m = int(rsh.size());
    std::vector<bool> in_pair(m, false);
    for (int i = 0; i < m; ++i)
      if (double_index[i] >= 0) {
        pairs.push_back({i, double_index[i]});
        in_pair[i] = in_pair[double_index[i]] = true;
      }
    for (int i = 0; i < m; ++i)
      if (!in_pair[i]) free_idx.push_back(i);

    std::vector<int> sel;
    std::function<void(std::size_t)> rec_free = [&](std::size_t f) {
      if (f == free_idx.size()) {
        process(sel);
        return;
      }
      rec_free(f + 1);
      sel.push_back(free_idx[f]);
      rec_free(f + 1);
      sel.pop_back();
    };
    std::function<void(std::size_t)> rec_pair = [&](std::size_t p) {
      if (p == pairs.size()) {
        rec_free(0);
        return;
      }
      rec_pair(p + 1);
      sel.push_back(pairs[p].first);
      sel.push_back(pairs[p].second);
      rec_pair(p + 1);
      sel.pop_back();
      sel.pop_back();
    };
    rec_pair(0);
    return stats;
  }

 private:
  Vec vertex_value(int v) const {
    Vec val(Basis::Delta, k);
    val[v % k] = Rational(v < k ? 1 : -1);
    return val;
  }

  // phi read off the order positions: descending (antisymmetric) values
  bool order_certifies(const OrderResult& ord, const std::vector<Vec>& s) const {
    std::vector<Rational> phi(k);
    int n = int(ord.order.size());
    for (int pos = 0; pos < n; ++pos) {
      int v = ord.order[pos];
      Rational value(n - 1 - 2 * pos);
      phi[v % k] = v < k ? value : -value;
    }
    for (const Vec& nu : s) {
      Rational val;
      for (int i = 0; i < k; ++i) val += phi[i] * nu[i];
      if (val.sign() <= 0) return false;
    }
    return true;
  }

  std::int64_t composition_multiplicity(const std::vector<std::pair<int, int>>& comp) {
    auto it = comp_cache.find(comp);
    if (it != comp_cache.end()) return it->second;
    Character prod;
    bool first = true;
    for (const auto& [idx, pow] : comp) {
      const Character& sym = sym_power(idx, pow);
      if (first) {
        prod = sym;
        first = false;
        continue;
      }
      Character out;
      for (const auto& [wa, ma] : prod)
        for (const auto& [wb, mb] : sym) out[wa + wb] += ma * mb;
      prod = std::move(out);
    }
    std::int64_t mult = trivial_multiplicity(prod, rs);
    comp_cache.emplace(comp, mult);
    return mult;
  }

  const Character& sym_power(int idx, int pow) {
    auto key = std::make_pair(idx, pow);
    auto it = sym_cache.find(key);
    if (it == sym_cache.end())
      it = sym_cache.emplace(key, sym_power_character(piece[idx], pow)).first;
    return it->second;
  }

  // cycle edges sum to zero after scaling support-one witnesses
  std::vector<std::pair<int, int>> cycle_composition(const CycleCertificate& cyc,
                                                     const std::vector<int>& sel) const {
    std::map<int, int> counts;
    for (std::size_t e = 0; e + 1 < cyc.vertices.size(); ++e) {
      Vec diff = vertex_value(cyc.vertices[e]) - vertex_value(cyc.vertices[e + 1]);
      const Vec& w = cyc.witnesses[e];
      int scale = 0;
      if (w == diff) scale = 1;
      if (Rational(2) * w == diff) scale = 2;
      if (scale == 0) throw std::logic_error("cycle witness does not match its edge");
      int idx = -1;
      for (int i : sel)
        if (rsh[i] == w) idx = i;
      if (idx < 0) throw std::logic_error("cycle witness outside the subset");
      counts[idx] += scale;
    }
    return {counts.begin(), counts.end()};
  }

  // first degree <= D with a positive trivial multiplicity; also reports
  // whether any zero-weight composition was seen at all
  int first_invariant_degree(const std::vector<int>& sel, const CycleCertificate& cyc,
                             bool& found_composition) {
    found_composition = false;
    // antipodal pairs decompose as module times dual: degree 2
    for (int i : sel) {
      int j = neg_index[i];
      if (j <= i) continue;
      if (std::find(sel.begin(), sel.end(), j) == sel.end()) continue;
      found_composition = true;
      if (composition_multiplicity({{i, 1}, {j, 1}}) > 0) return 2;
    }
    // the minimal cycle itself sums to zero
    std::vector<std::pair<int, int>> comp = cycle_composition(cyc, sel);
    int deg = 0;
    for (const auto& [idx, pow] : comp) deg += pow;
    if (deg <= max_degree) {
      found_composition = true;
      if (composition_multiplicity(comp) > 0) return deg;
    }
    // full ascending search over zero-weight compositions
    std::vector<Vec> gens;
    for (int i : sel) gens.push_back(rsh[i]);
    for (int degree = 2; degree <= max_degree; ++degree) {
      int found_deg = 0;
      search_degree(sel, gens, degree, found_composition, found_deg);
      if (found_deg) return found_deg;
    }
    return 0;
  }

  void search_degree(const std::vector<int>& sel, const std::vector<Vec>& gens,
                     int degree, bool& found_composition, int& found_deg) {
    std::size_t n = gens.size();
    std::vector<std::vector<Rational>> smin(n), smax(n);
    for (std::size_t i = n; i-- > 0;) {
      smin[i].assign(k, Rational());
      smax[i].assign(k, Rational());
      for (int c = 0; c < k; ++c) {
        smin[i][c] = gens[i][c];
        smax[i][c] = gens[i][c];
        if (i + 1 < n) {
          smin[i][c] = std::min(smin[i][c], smin[i + 1][c]);
          smax[i][c] = std::max(smax[i][c], smax[i + 1][c]);
        }
      }
    }
    std::vector<int> counts(n, 0);
    std::function<bool(std::size_t, int, Vec)> rec = [&](std::size_t i, int left,
                                                         Vec sum) -> bool {
      if (left == 0) {
        if (!sum.is_zero()) return false;
        std::vector<std::pair<int, int>> comp;
        for (std::size_t j = 0; j < i; ++j)
          if (counts[j] > 0) comp.push_back({sel[j], counts[j]});
        if (comp.empty()) return false;
        found_composition = true;
        if (composition_multiplicity(comp) > 0) {
          found_deg = degree;
          return true;
        }
        return false;
      }
      if (i == n) return false;
      for (int c = 0; c < k; ++c) {
        Rational lo = Rational(left) * smin[i][c], hi = Rational(left) * smax[i][c];
        if (-sum[c] < lo || -sum[c] > hi) return false;
      }
      Vec cur = sum;
      for (int take = 0; take <= left; ++take) {
        counts[i] = take;
        if (rec(i + 1, left - take, cur)) return true;
        if (take < left) cur = cur + gens[i];
      }
      counts[i] = 0;
      return false;
    };
    rec(0, degree, Vec(Basis::Delta, k));
  }

  void process(const std::vector<int>& sel) {
    ++stats.subsets;
    if (sel.empty()) {
      ++stats.order_ok;
      return;
    }
    std::vector<Vec> s;
    for (int i : sel) s.push_back(rsh[i]);
    OrderResult ord;
    try {
      ord = extend_to_order(build_relation(with_signs, k, s));
    } catch (const std::exception& e) {
      stats.violations.push_back(subset_string(d, s) + " relation error: " + e.what());
      return;
    }
    try {
      if (ord.acyclic) {
        ++stats.order_ok;
        // a positive functional kills every composition: invariants vanish
        if (!order_certifies(ord, s)) {
          ConeResult cone = zero_in_positive_span(s);
          if (cone.feasible) {
            ++stats.cone_feasible;
            stats.violations.push_back(subset_string(d, s) +
                                       " order extends but 0 lies in the cone");
            stats.tlevel_violations.push_back(subset_string(d, s) +
                                              " cone feasible with an order present");
          }
        }
      } else {
        bool found_comp = false;
        int deg = first_invariant_degree(sel, ord.cycle, found_comp);
        if (found_comp) {
          // the composition itself certifies 0 in the cone
          ++stats.cone_feasible;
        } else {
          ConeResult cone = zero_in_positive_span(s);
          if (cone.feasible) {
            ++stats.cone_feasible;
            stats.tlevel_violations.push_back(
                subset_string(d, s) + " cone feasible but no composition up to D");
          }
        }
        if (deg == 0)
          stats.violations.push_back(subset_string(d, s) +
                                     " cycle present but invariants vanish up to D");
      }
    } catch (const std::runtime_error& e) {
      ++stats.cap_hits;
      stats.capped.push_back(subset_string(d, s) + " cap: " + e.what());
    }
  }

  ParabolicDatum d;
  TRootSystem ts;
  ReductiveStructure rs;
  std::vector<Vec> rsh;
  std::vector<Character> piece;
  std::vector<int> neg_index, double_index;
  int k = 0, max_degree = 0;
  bool with_signs = false;
  std::map<std::pair<int, int>, Character> sym_cache;
  std::map<std::vector<std::pair<int, int>>, std::int64_t> comp_cache;
  SweepStats stats;
};

}  // namespace

SweepStats sweep_datum(const ParabolicDatum& d) { return DatumSweeper(d).run(); }

SweepStats sweep_serial(const std::vector<ParabolicDatum>& data) {
  SweepStats total;
  for (const ParabolicDatum& d : data) total.merge(sweep_datum(d));
  return total;
}

SweepStats sweep_parallel(const std::vector<ParabolicDatum>& data) {
  std::vector<SweepStats> per(data.size());
#ifdef KOSTANT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < data.size(); ++i) per[i] = sweep_datum(data[i]);
#else
  for (std::size_t i = 0; i < data.size(); ++i) per[i] = sweep_datum(data[i]);
#endif
  SweepStats total;
  for (const SweepStats& s : per) total.merge(s);
  return total;
}

}  // namespace kostant
