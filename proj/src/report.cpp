#include "kostant/report.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "kostant/grid.hpp"

namespace kostant {

namespace {

using nlohmann::json;

// "2d1-d2" from a delta vector; "0" for the zero vector.
std::string troot_name(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i].str();
    if (coeff == "1")
      coeff = out.empty() ? "" : "+";
    else if (coeff == "-1")
      coeff = "-";
    else if (!out.empty() && v[i].sign() > 0)
      coeff = "+" + coeff;
    out += coeff + "d" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i].str());
  return a;
}

json troot_json(const Vec& v) {
  return json{{"name", troot_name(v)}, {"delta", vec_json(v)}};
}

json troot_list_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const Vec& v : vs) a.push_back(troot_name(v));
  return a;
}

json cone_json(const ConeResult& cone) {
  json j;
  j["feasible"] = cone.feasible;
  if (cone.feasible) {
    json cert = json::array();
    for (const auto& [nu, coeff] : cone.certificate)
      cert.push_back(json{{"troot", troot_name(nu)}, {"coeff", coeff.str()}});
    j["certificate"] = cert;
  } else {
    j["phi"] = vec_json(cone.phi);
  }
  return j;
}

json cycle_json(const CycleCertificate& cycle,
                const std::function<std::string(int)>& name) {
  json verts = json::array();
  for (int v : cycle.vertices) verts.push_back(name(v));
  json wits = json::array();
  for (const Vec& w : cycle.witnesses) wits.push_back(troot_name(w));
  return json{{"vertices", verts}, {"witnesses", wits}};
}

json degrees_json(const DecompositionReport& inv) {
  json a = json::array();
  for (const auto& [k, dim] : inv.degrees)
    a.push_back(json{{"k", k}, {"dim", dim}});
  return a;
}

Report finish(json doc, const std::string& verdict, int exit_code) {
  doc["verdict"] = verdict;
  Report r;
  r.verdict = verdict;
  r.exit_code = exit_code;
  r.json = doc.dump(2) + "\n";
  return r;
}

// Shared shape for the G2 and affine-node reference reports.
Report exceptional_report(json construction, const CounterexampleReport& rep,
                          int max_degree, int cycle_k) {
  json doc;
  doc["construction"] = std::move(construction);
  doc["instance"] = json{{"s", json::array()}, {"max_degree", max_degree}};
  for (const Vec& nu : rep.s) doc["instance"]["s"].push_back(troot_json(nu));
  doc["saturation"] =
      json{{"closure", troot_list_json(rep.saturation)}, {"saturated", rep.saturated}};
  doc["cone"] = cone_json(rep.cone);
  json order;
  order["exists"] = rep.order_exists;
  if (rep.has_cycle) {
    SignedDigraph g;
    g.k = cycle_k;
    order["cycle"] = cycle_json(rep.cycle, [&](int v) { return g.vertex_name(v); });
  }
  doc["order"] = order;
  doc["invariants"] = json{{"degrees", degrees_json(rep.invariants)}, {"capped", false}};

  if (rep.order_exists) return finish(std::move(doc), "PARABOLIC_EXISTS", 0);
  if (rep.has_cycle) return finish(std::move(doc), "NO_PARABOLIC_CYCLE", 2);
  return finish(std::move(doc), "NO_PARABOLIC_CONE_CERTIFICATE", 2);
}

Report g2_saturated_report(int max_degree) {
  G2Case inst = g2_case(2);
  auto dvec = [](std::int64_t x) {
    Vec v(Basis::Delta, 1);
    v[0] = Rational(x);
    return v;
  };
  CounterexampleReport rep;
  rep.s = {dvec(1), dvec(2), dvec(3)};  // the positive half-line of Rsh

  std::vector<Vec> rsh;
  for (const ExcTRoot& r : inst.troots) rsh.push_back(r.delta);
  rep.saturation = saturate(rsh, rep.s);
  rep.saturated = rep.saturation == rep.s;

  rep.cone = zero_in_positive_span(rep.s);
  OrderResult ord = extend_to_order(build_relation(true, 1, rep.s));
  rep.order_exists = ord.acyclic;
  rep.has_cycle = !ord.acyclic;
  if (rep.has_cycle) rep.cycle = ord.cycle;

  std::vector<Character> chars;
  for (const Vec& nu : rep.s) chars.push_back(inst.piece(nu));
  rep.invariants = invariants_up_to_degree(rep.s, chars, inst.structure, max_degree);

  return exceptional_report(json{{"g_type", "G2"}, {"s_roots", "+-alpha2"}}, rep,
                            max_degree, 1);
}

Report affine_node_report(LieType t, int max_degree) {
  AffineNodeInstance inst = affine_node_instance(t);
  CounterexampleReport rep = paper_counterexample(t, max_degree);
  json q = json::array();
  for (const Rational& qi : inst.q) q.push_back(qi.str());
  const char* c_name = t == LieType::F4   ? "C3"
                       : t == LieType::E6 ? "A5"
                       : t == LieType::E7 ? "D6"
                                          : "E7";
  json construction{{"g_type", lie_type_to_string(inst.g_type)},
                    {"c_type", c_name},
                    {"c_rank", inst.c.rank},
                    {"dim_u", inst.dim_u},
                    {"q", q}};
  return exceptional_report(std::move(construction), rep, max_degree, inst.c.rank);
}

[[noreturn]] void parse_fail(const std::string& what, const std::string& text,
                             std::size_t pos) {
  throw std::invalid_argument(what + " at column " + std::to_string(pos + 1) + " of \"" +
                              text + "\"");
}

}  // namespace

Report check_classical(const ParabolicDatum& d, const std::vector<Vec>& s,
                       int max_degree) {
  TRootSystem ts = t_root_system(d);
  std::vector<Vec> rsh;
  for (const TRoot& r : ts.roots) rsh.push_back(r.delta);
  for (const Vec& nu : s)
    if (std::find(rsh.begin(), rsh.end(), nu) == rsh.end())
      throw std::invalid_argument("not a t-root of this datum: " + troot_name(nu));

  json doc;
  doc["instance"] = json{{"datum", json::parse(datum_to_json(d))},
                         {"s", json::array()},
                         {"max_degree", max_degree}};
  for (const Vec& nu : s) doc["instance"]["s"].push_back(troot_json(nu));

  std::vector<Vec> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vec> closure = saturate(rsh, s);
  doc["saturation"] =
      json{{"closure", troot_list_json(closure)}, {"saturated", closure == sorted}};

  doc["cone"] = cone_json(zero_in_positive_span(s));

  json inv;
  try {
    inv = json{{"degrees", degrees_json(invariants_up_to_degree(d, s, max_degree))},
               {"capped", false}};
  } catch (const std::runtime_error& e) {
    inv = json{{"degrees", json::array()}, {"capped", true}, {"note", e.what()}};
  }
  doc["invariants"] = inv;

  SignedDigraph g = build_relation(d.type != LieType::GL, ts.k, s);
  try {
    ParabolicSearchResult pr = find_parabolic_containing(d, s);
    json order;
    order["exists"] = pr.found;
    if (pr.found) {
      json names = json::array();
      for (int v : pr.order) names.push_back(g.vertex_name(v));
      order["order"] = names;
      doc["order"] = order;
      doc["parabolic"] = json{{"datum", json::parse(datum_to_json(pr.parabolic))},
                              {"root_count", pr.roots.size()}};
      return finish(std::move(doc), "PARABOLIC_EXISTS", 0);
    }
    order["cycle"] = cycle_json(pr.cycle, [&](int v) { return g.vertex_name(v); });
    doc["order"] = order;
    return finish(std::move(doc), "NO_PARABOLIC_CYCLE", 2);
  } catch (const std::runtime_error& e) {
    // enumeration cap in the parabolic search: the order question is open
    doc["order"] = json{{"capped", true}, {"note", e.what()}};
    return finish(std::move(doc),
                  "INCONCLUSIVE_AT_DEGREE_" + std::to_string(max_degree), 3);
  }
}

std::vector<std::string> reference_example_ids() {
  return {"B", "C", "D-nonsat", "G2-sat", "G2-nonsat", "F4", "E6", "E7", "E8"};
}

Report reference_example(const std::string& id) {
  auto dvec = [](int k, std::vector<std::int64_t> coords) {
    Vec v(Basis::Delta, k);
    for (int i = 0; i < k; ++i) v[i] = Rational(coords[i]);
    return v;
  };
  if (id == "B") {
    auto d = make_datum(LieType::B, 2, {{1, 2}});
    return check_classical(d, {dvec(1, {-1}), dvec(1, {2})}, 12);
  }
  if (id == "C") {
    auto d = make_datum(LieType::C, 2, {{1}, {2}}, 1);
    return check_classical(d, {dvec(1, {-1}), dvec(1, {2})}, 12);
  }
  if (id == "D-nonsat") {
    auto d = make_datum(LieType::D, 4, {{1, 2}, {3, 4}}, 1);
    return check_classical(d, {dvec(1, {1}), dvec(1, {-2})}, 6);
  }
  if (id == "G2-sat") return g2_saturated_report(12);
  if (id == "G2-nonsat")
    return exceptional_report(json{{"g_type", "G2"}, {"s_roots", "+-alpha2"}},
                              g2_nonsaturated_example(12), 12, 1);
  if (id == "F4") return affine_node_report(LieType::F4, 8);
  if (id == "E6") return affine_node_report(LieType::E6, 8);
  if (id == "E7") return affine_node_report(LieType::E7, 8);
  if (id == "E8") return affine_node_report(LieType::E8, 8);
  throw std::invalid_argument("unknown reference example: " + id);
}

std::vector<std::vector<int>> parse_parts(const std::string& text) {
  std::vector<std::vector<int>> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[') parse_fail("expected '['", text, i);
    ++i;
    std::vector<int> part;
    while (true) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) parse_fail("expected an index", text, i);
      part.push_back(std::stoi(text.substr(start, i - start)));
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != ']') parse_fail("expected ']'", text, i);
    ++i;
    parts.push_back(std::move(part));
    if (i < text.size()) {
      if (text[i] != ';') parse_fail("expected ';'", text, i);
      ++i;
      if (i == text.size()) parse_fail("trailing ';'", text, i - 1);
    }
  }
  if (parts.empty()) parse_fail("empty partition", text, 0);
  return parts;
}

std::vector<int> parse_signs(const std::string& text, int n) {
  if (int(text.size()) != n)
    throw std::invalid_argument("signs \"" + text + "\": expected " + std::to_string(n) +
                                " characters, got " + std::to_string(text.size()));
  std::vector<int> signs(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (text[i] == '+')
      signs[i + 1] = 1;
    else if (text[i] == '-')
      signs[i + 1] = -1;
    else
      parse_fail("expected '+' or '-'", text, i);
  }
  return signs;
}

std::vector<Vec> parse_troots(const std::string& text, int k) {
  std::vector<Vec> out;
  std::size_t i = 0;
  auto term = [&] {
    Vec v(Basis::Delta, k);
    bool any = false;
    while (i < text.size() && text[i] != ',') {
      std::int64_t sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        if (text[i] == '-') sign = -1;
        ++i;
      } else if (any) {
        parse_fail("expected '+' or '-' between summands", text, i);
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      std::int64_t coeff = i > start ? std::stoll(text.substr(start, i - start)) : 1;
      if (i >= text.size() || text[i] != 'd') parse_fail("expected 'd'", text, i);
      ++i;
      start = i;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
      if (i == start) parse_fail("expected a coordinate index", text, i);
      int idx = std::stoi(text.substr(start, i - start));
      if (idx < 1 || idx > k)
        parse_fail("coordinate index out of range 1.." + std::to_string(k), text, start);
      v[idx - 1] = v[idx - 1] + Rational(sign * coeff);
      any = true;
    }
    if (!any) parse_fail("empty t-root term", text, i);
    return v;
  };
  while (true) {
    out.push_back(term());
    if (i == text.size()) break;
    ++i;  // the comma
    if (i == text.size()) parse_fail("trailing ','", text, i - 1);
  }
  return out;
}

}  // namespace kostant
