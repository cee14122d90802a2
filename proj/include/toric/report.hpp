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

#pragma once

// Text, JSON and CSV renderings of cones and verification results.

#include <cstddef>
#include <string>
#include <string_view>

#include "toric/cartier.hpp"
#include "toric/cone.hpp"
#include "toric/derham.hpp"

namespace toric {

// Header m1..mn,h0..hn (or only h<a> when a is given), one row per degree.
std::string to_csv(const CohomologyTable& table, std::size_t a = kAllForms);

std::string to_json(const CohomologyTable& table, std::size_t a = kAllForms);
std::string to_json(const PoincareReport& report);
std::string to_json(const CartierReport& report, std::size_t a = kAllForms);

// Inverses of to_json for the unfiltered renderings. Throw Parse.
CohomologyTable cohomology_table_from_json(std::string_view text);
PoincareReport poincare_report_from_json(std::string_view text);
CartierReport cartier_report_from_json(std::string_view text);

std::string to_text(const CohomologyTable& table, std::size_t a = kAllForms);
std::string to_text(const PoincareReport& report);
std::string to_text(const CartierReport& report, std::size_t a = kAllForms);

std::string dual_to_text(const Cone& cone);
std::string dual_to_json(const Cone& cone);
std::string facets_to_text(const Cone& cone);
std::string facets_to_json(const Cone& cone);
std::string subspace_to_text(const IntVector& degree, const Subspace& v);
std::string subspace_to_json(const IntVector& degree, const Subspace& v);

struct OracleComparison {
  std::size_t ambient_rank = 0;
  std::uint32_t characteristic = 0;
  long bound = 0;
  std::vector<std::size_t> oracle;
  std::vector<std::size_t> degreewise;

  bool passed() const { return oracle == degreewise; }
};

std::string to_text(const OracleComparison& cmp);
std::string to_json(const OracleComparison& cmp);

}  // namespace toric
