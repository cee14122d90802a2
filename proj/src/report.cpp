// Copyright 2026 The toric-cartier Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toric/report.hpp"

#include <json.hpp>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

using nlohmann::json;

namespace {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::Parse, "bad integer string");
    return x;
  }
  fail(ErrorCode::Parse, "expected an integer");
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntVector vector_from(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"degree", vector_json(v.degree)},
                   {"a", v.a == kAllForms ? json(nullptr) : json(v.a)},
                   {"kind", v.kind},
                   {"detail", v.detail}});
  }
  return out;
}

std::vector<Violation> violations_from(const json& j) {
  std::vector<Violation> out;
  for (const auto& v : j) {
    out.push_back({vector_from(v.at("degree")),
                   v.at("a").is_null() ? kAllForms : v.at("a").get<std::size_t>(),
                   v.at("kind").get<std::string>(), v.at("detail").get<std::string>()});
  }
  return out;
}

template <typename F>
auto parse_guarded(std::string_view text, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("report JSON: ") + e.what());
  }
}

std::string field_name(std::uint32_t p) {
  return p == 0 ? std::string("Q") : "F_" + std::to_string(p);
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

void violations_text(std::ostringstream& os, const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    os << "  violation " << v.kind << " degree " << to_string(v.degree);
    if (v.a != kAllForms) os << " a=" << v.a;
    os << ": " << v.detail << '\n';
  }
}

json lattice_json(const SaturatedLattice& l) {
  json rows = json::array();
  for (const auto& r : l.basis().row_vectors()) rows.push_back(vector_json(r));
  return rows;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

// ------------------------------------------------------------- cohomology

std::string to_csv(const CohomologyTable& table, std::size_t a) {
  std::ostringstream os;
  const std::size_t n = table.ambient_rank;
  for (std::size_t i = 0; i < n; ++i) os << 'm' << (i + 1) << ',';
  for (std::size_t k = 0; k <= n; ++k) {
    if (a != kAllForms && k != a) continue;
    os << 'h' << k << (a != kAllForms || k == n ? "\n" : ",");
  }
  for (const auto& row : table.rows) {
    for (const auto& x : row.degree) os << x.get_str() << ',';
    for (std::size_t k = 0; k <= n; ++k) {
      if (a != kAllForms && k != a) continue;
      os << row.dims[k] << (a != kAllForms || k == n ? "\n" : ",");
    }
  }
  return os.str();
}

std::string to_json(const CohomologyTable& table, std::size_t a) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json h = json::array();
    for (std::size_t k = 0; k < row.dims.size(); ++k)
      if (a == kAllForms || k == a) h.push_back(row.dims[k]);
    rows.push_back({{"degree", vector_json(row.degree)}, {"h", h}});
  }
  json j = {{"ambient_rank", table.ambient_rank},
            {"characteristic", table.characteristic},
            {"bound", table.bound},
            {"hash", table.summary_hash()},
            {"totals", table.totals()},
            {"rows", rows}};
  if (a != kAllForms) j["a"] = a;
  return j.dump(2);
}

CohomologyTable cohomology_table_from_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    CohomologyTable t;
    t.ambient_rank = j.at("ambient_rank").get<std::size_t>();
    t.characteristic = j.at("characteristic").get<std::uint32_t>();
    t.bound = j.at("bound").get<long>();
    for (const auto& row : j.at("rows"))
      t.rows.push_back({vector_from(row.at("degree")), row.at("h").get<std::vector<std::size_t>>()});
    return t;
  });
}

std::string to_text(const CohomologyTable& table, std::size_t a) {
  std::ostringstream os;
  os << "cohomology over " << field_name(table.characteristic) << ", bound " << table.bound
     << ", " << table.rows.size() << " degrees\n";
  for (const auto& row : table.rows) {
    os << "  " << to_string(row.degree) << "  ";
    for (std::size_t k = 0; k < row.dims.size(); ++k) {
      if (a != kAllForms && k != a) continue;
      os << " h" << k << '=' << row.dims[k];
    }
    os << '\n';
  }
  os << "totals";
  auto totals = table.totals();
  for (std::size_t k = 0; k < totals.size(); ++k)
    if (a == kAllForms || k == a) os << " h" << k << '=' << totals[k];
  os << "\nhash " << table.summary_hash() << '\n';
  return os.str();
}

// --------------------------------------------------------------- poincare

std::string to_json(const PoincareReport& r) {
  json j = {{"check", "poincare"},
            {"bound", r.bound},
            {"checked_degrees", r.checked_degrees},
            {"passed", r.passed()},
            {"table_hash", r.table_hash},
            {"violations", violations_json(r.violations)}};
  return j.dump(2);
}

PoincareReport poincare_report_from_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    PoincareReport r;
    r.bound = j.at("bound").get<long>();
    r.checked_degrees = j.at("checked_degrees").get<std::size_t>();
    r.table_hash = j.at("table_hash").get<std::string>();
    r.violations = violations_from(j.at("violations"));
    return r;
  });
}

std::string to_text(const PoincareReport& r) {
  std::ostringstream os;
  os << "poincare bound=" << r.bound << " degrees=" << r.checked_degrees << '\n';
  violations_text(os, r.violations);
  os << "table hash " << r.table_hash << '\n';
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// ---------------------------------------------------------------- cartier

std::string to_json(const CartierReport& r, std::size_t a) {
  json forms = json::array();
  for (const auto& s : r.forms) {
    if (a != kAllForms && s.a != a) continue;
    forms.push_back({{"a", s.a},
                     {"checked_degrees", s.checked_degrees},
                     {"chain_map", s.chain_map},
                     {"split", s.split},
                     {"isomorphism", s.isomorphism},
                     {"source_dim", s.source_dim},
                     {"cohomology_dim", s.cohomology_dim}});
  }
  json j = {{"check", "cartier"},
            {"cone", r.cone_id},
            {"ambient_rank", r.ambient_rank},
            {"p", r.p},
            {"bound", r.bound},
            {"passed", r.passed()},
            {"generator_check", r.generator_check},
            {"concentration_degrees", r.concentration_degrees},
            {"forms", forms},
            {"violations", violations_json(r.violations)}};
  return j.dump(2);
}

CartierReport cartier_report_from_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    CartierReport r;
    r.cone_id = j.at("cone").get<std::string>();
    r.ambient_rank = j.at("ambient_rank").get<std::size_t>();
    r.p = j.at("p").get<std::uint32_t>();
    r.bound = j.at("bound").get<long>();
    r.generator_check = j.at("generator_check").get<bool>();
    r.concentration_degrees = j.at("concentration_degrees").get<std::size_t>();
    for (const auto& s : j.at("forms")) {
      r.forms.push_back({s.at("a").get<std::size_t>(), s.at("checked_degrees").get<std::size_t>(),
                         s.at("chain_map").get<bool>(), s.at("split").get<bool>(),
                         s.at("isomorphism").get<bool>(), s.at("source_dim").get<std::size_t>(),
                         s.at("cohomology_dim").get<std::size_t>()});
    }
    r.violations = violations_from(j.at("violations"));
    return r;
  });
}

std::string to_text(const CartierReport& r, std::size_t a) {
  std::ostringstream os;
  os << "cartier p=" << r.p << " bound=" << r.bound;
  if (!r.cone_id.empty()) os << " cone=" << r.cone_id;
  os << '\n';
  for (const auto& s : r.forms) {
    if (a != kAllForms && s.a != a) continue;
    os << "  a=" << s.a << " degrees=" << s.checked_degrees
       << " chain_map=" << pass_fail(s.chain_map) << " split=" << pass_fail(s.split)
       << " isomorphism=" << pass_fail(s.isomorphism) << " dim " << s.source_dim << " -> "
       << s.cohomology_dim << '\n';
  }
  os << "  concentration: " << r.concentration_degrees << " degrees off pM\n";
  os << "  generator: " << pass_fail(r.generator_check) << '\n';
  violations_text(os, r.violations);
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// ------------------------------------------------------------------ cones

std::string dual_to_text(const Cone& cone) {
  std::ostringstream os;
  for (const auto& u : cone.dual_rays()) os << to_string(u) << '\n';
  return os.str();
}

std::string dual_to_json(const Cone& cone) {
  json rays = json::array();
  for (const auto& u : cone.dual_rays()) rays.push_back(vector_json(u));
  json j = {{"ambient_rank", cone.ambient_rank()},
            {"dual_rays", rays},
            {"has_vertex", has_vertex(dual_cone(cone))}};
  return j.dump(2);
}

std::string facets_to_text(const Cone& cone) {
  std::ostringstream os;
  for (const auto& f : cone.dual_facets()) {
    os << "facet " << f.id << " normal " << to_string(f.normal) << " span";
    for (const auto& r : f.span_lattice.basis().row_vectors()) os << ' ' << to_string(r);
    os << '\n';
  }
  return os.str();
}

std::string facets_to_json(const Cone& cone) {
  json facets = json::array();
  for (const auto& f : cone.dual_facets())
    facets.push_back(
        {{"id", f.id}, {"normal", vector_json(f.normal)}, {"span_lattice", lattice_json(f.span_lattice)}});
  return json{{"ambient_rank", cone.ambient_rank()}, {"facets", facets}}.dump(2);
}

std::string subspace_to_text(const IntVector& degree, const Subspace& v) {
  std::ostringstream os;
  os << "V_m for m=" << to_string(degree) << " over " << field_name(v.field().characteristic())
     << ": dim " << v.dim() << '\n';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    os << "  (";
    auto row = v.basis().row(i);
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << rational_str(row[c]);
    os << ")\n";
  }
  return os.str();
}

std::string subspace_to_json(const IntVector& degree, const Subspace& v) {
  json basis = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    json row = json::array();
    for (const auto& x : v.basis().row(i)) row.push_back(rational_str(x));
    basis.push_back(row);
  }
  json j = {{"degree", vector_json(degree)},
            {"characteristic", v.field().characteristic()},
            {"dim", v.dim()},
            {"basis", basis}};
  return j.dump(2);
}

// ----------------------------------------------------------------- oracle

std::string to_text(const OracleComparison& cmp) {
  std::ostringstream os;
  os << "oracle over " << field_name(cmp.characteristic) << ", bound " << cmp.bound << '\n';
  os << "  full complex:";
  for (auto x : cmp.oracle) os << ' ' << x;
  os << "\n  degreewise:  ";
  for (auto x : cmp.degreewise) os << ' ' << x;
  os << "\nresult: " << (cmp.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string to_json(const OracleComparison& cmp) {
  json j = {{"check", "oracle"},
            {"ambient_rank", cmp.ambient_rank},
            {"characteristic", cmp.characteristic},
            {"bound", cmp.bound},
            {"oracle", cmp.oracle},
            {"degreewise", cmp.degreewise},
            {"passed", cmp.passed()}};
  return j.dump(2);
}

}  // namespace toric
