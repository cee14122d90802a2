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

// toric: command-line front end over the C API.
//
//   toric <command> [--p P] [--bound B] [--a A|all] [--format text|json|csv]
//         [--space N|M] [--degree m1,...,mn] <cone.json>
//
// Exit status: 0 pass, 1 verification failure, 2 input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/toric.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int input_error(const std::string& msg) {
  std::cerr << "toric: " << msg << '\n';
  return kExitInput;
}

int exit_code(toric_status status) {
  switch (status) {
    case TORIC_OK: return kExitPass;
    case TORIC_VERIFICATION_FAILED: return kExitFail;
    case TORIC_ERR_INTERNAL: return kExitFail;
    default: return kExitInput;
  }
}

struct ConeHandle {
  toric_cone* ptr = nullptr;
  ~ConeHandle() { toric_cone_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zariski-de Rham complexes and the Cartier isomorphism on affine toric varieties"};
  const std::set<std::string> commands = {"dual",     "facets",   "vm",    "cohomology",
                                          "poincare", "cartier", "oracle"};
  std::string command, cone_path, format = "text", space, forms = "all";
  std::uint32_t p = 0;
  long bound = 3;
  std::vector<std::int64_t> degree;

  app.add_option("command", command, "dual | facets | vm | cohomology | poincare | cartier | oracle")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("cone", cone_path, "cone description (JSON)")->required();
  app.add_option("--p", p, "characteristic: 0 or a prime");
  app.add_option("--bound", bound, "coordinate box bound B")->check(CLI::NonNegativeNumber);
  app.add_option("--a", forms, "form degree or 'all'");
  app.add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--space", space, "N (rays generate sigma) or M (rays generate the dual)")
      ->check(CLI::IsMember({"N", "M"}));
  app.add_option("--degree", degree, "degree m for vm, comma separated")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  int a = TORIC_ALL_FORMS;
  if (forms != "all") {
    try {
      std::size_t used = 0;
      a = std::stoi(forms, &used);
      if (used != forms.size() || a < 0) throw std::invalid_argument(forms);
    } catch (const std::exception&) {
      return input_error("--a must be a non-negative integer or 'all'");
    }
  }
  toric_format fmt = format == "json"  ? TORIC_FORMAT_JSON
                     : format == "csv" ? TORIC_FORMAT_CSV
                                       : TORIC_FORMAT_TEXT;
  toric_space sp = space == "N"   ? TORIC_SPACE_N
                   : space == "M" ? TORIC_SPACE_M
                                  : TORIC_SPACE_FROM_SPEC;

  std::ifstream in(cone_path);
  if (!in) return input_error("cannot read " + cone_path);
  std::stringstream buf;
  buf << in.rdbuf();

  ConeHandle cone;
  toric_status status = toric_cone_from_json(buf.str().c_str(), sp, &cone.ptr);
  if (status != TORIC_OK) return input_error(toric_last_error());

  char* out = nullptr;
  if (command == "dual") {
    status = toric_dual(cone.ptr, fmt, &out);
  } else if (command == "facets") {
    status = toric_facets(cone.ptr, fmt, &out);
  } else if (command == "vm") {
    if (degree.empty()) return input_error("vm needs --degree");
    status = toric_vm(cone.ptr, degree.data(), degree.size(), p, fmt, &out);
  } else if (command == "cohomology") {
    status = toric_cohomology(cone.ptr, p, bound, a, fmt, 0, &out);
  } else if (command == "poincare") {
    if (p != 0) return input_error("poincare runs in characteristic 0; drop --p");
    status = toric_poincare(cone.ptr, bound, fmt, 0, &out);
  } else if (command == "cartier") {
    if (p == 0) return input_error("cartier needs --p <prime>");
    status = toric_cartier(cone.ptr, p, bound, a, fmt, 0, &out);
  } else if (command == "oracle") {
    status = toric_oracle(cone.ptr, p, bound, fmt, 0, &out);
  }

  if (out) {
    std::fputs(out, stdout);
    if (fmt == TORIC_FORMAT_JSON) std::fputc('\n', stdout);
    toric_string_free(out);
  }
  if (status != TORIC_OK && status != TORIC_VERIFICATION_FAILED)
    std::cerr << "toric: " << toric_status_name(status) << ": " << toric_last_error() << '\n';
  return exit_code(status);
}
