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

#include "toric/toric.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "toric/cartier.hpp"
#include "toric/cone_spec.hpp"
#include "toric/danilov.hpp"
#include "toric/derham.hpp"
#include "toric/error.hpp"
#include "toric/report.hpp"

struct toric_cone {
  toric::Cone cone;
  std::string name;
};

namespace {

thread_local std::string last_error;

toric_status status_of(toric::ErrorCode code) {
  using toric::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TORIC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return TORIC_ERR_DIMENSION;
    case ErrorCode::NotPrime: return TORIC_ERR_NOT_PRIME;
    case ErrorCode::NotPointed: return TORIC_ERR_NOT_POINTED;
    case ErrorCode::NotInCone: return TORIC_ERR_NOT_IN_CONE;
    case ErrorCode::NoVertex: return TORIC_ERR_NO_VERTEX;
    case ErrorCode::Parse: return TORIC_ERR_PARSE;
    case ErrorCode::Internal: return TORIC_ERR_INTERNAL;
  }
  return TORIC_ERR_INTERNAL;
}

template <typename F>
toric_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const toric::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TORIC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TORIC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) toric::fail(toric::ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

toric_status emit(const std::string& s, bool passed, char** out) {
  *out = copy_out(s);
  return passed ? TORIC_OK : TORIC_VERIFICATION_FAILED;
}

toric::IntVector degree_from(const int64_t* degree, size_t len) {
  toric::IntVector m;
  for (size_t i = 0; i < len; ++i) m.emplace_back(static_cast<long>(degree[i]));
  return m;
}

std::size_t form_index(int a, const toric::Cone& cone) {
  if (a == TORIC_ALL_FORMS) return toric::kAllForms;
  if (a < 0 || static_cast<std::size_t>(a) > cone.ambient_rank())
    toric::fail(toric::ErrorCode::InvalidArgument, "form degree out of range");
  return static_cast<std::size_t>(a);
}

void check_format(toric_format format, bool csv_allowed) {
  if (format == TORIC_FORMAT_TEXT || format == TORIC_FORMAT_JSON) return;
  if (format == TORIC_FORMAT_CSV && csv_allowed) return;
  toric::fail(toric::ErrorCode::InvalidArgument, "output format not supported by this command");
}

}  // namespace

extern "C" {

const char* toric_version(void) { return "1.0.0"; }

const char* toric_status_name(toric_status status) {
  switch (status) {
    case TORIC_OK: return "ok";
    case TORIC_VERIFICATION_FAILED: return "verification failed";
    case TORIC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TORIC_ERR_PARSE: return "parse error";
    case TORIC_ERR_NOT_PRIME: return "not prime";
    case TORIC_ERR_NOT_POINTED: return "not pointed";
    case TORIC_ERR_NOT_IN_CONE: return "not in cone";
    case TORIC_ERR_NO_VERTEX: return "no vertex";
    case TORIC_ERR_DIMENSION: return "dimension mismatch";
    case TORIC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* toric_last_error(void) { return last_error.c_str(); }

void toric_string_free(char* s) { std::free(s); }

toric_status toric_cone_from_json(const char* json, toric_space space, toric_cone** out) {
  return guarded([&] {
    require(json && out, "null argument");
    toric::ConeSpec spec = toric::parse_cone_spec(json);
    if (space == TORIC_SPACE_N) spec.space = toric::Space::N;
    if (space == TORIC_SPACE_M) spec.space = toric::Space::M;
    *out = new toric_cone{toric::build_cone(spec), spec.name};
    return TORIC_OK;
  });
}

toric_status toric_cone_from_rays(size_t rank, const int64_t* rays, size_t ray_count,
                                  toric_space space, toric_cone** out) {
  return guarded([&] {
    require(out && (rays || ray_count == 0), "null argument");
    require(space == TORIC_SPACE_N || space == TORIC_SPACE_M, "space must be N or M");
    std::vector<toric::IntVector> gens;
    for (size_t r = 0; r < ray_count; ++r) gens.push_back(degree_from(rays + r * rank, rank));
    toric::Cone cone = space == TORIC_SPACE_M ? toric::Cone::from_dual_rays(rank, gens)
                                              : toric::Cone::from_rays(rank, gens);
    *out = new toric_cone{std::move(cone), {}};
    return TORIC_OK;
  });
}

void toric_cone_free(toric_cone* cone) { delete cone; }

size_t toric_cone_rank(const toric_cone* cone) { return cone ? cone->cone.ambient_rank() : 0; }

int toric_cone_is_pointed(const toric_cone* cone) { return cone && cone->cone.is_pointed(); }

int toric_cone_dual_has_vertex(const toric_cone* cone) {
  return cone && toric::has_vertex(toric::dual_cone(cone->cone));
}

toric_status toric_degree_cohomology(const toric_cone* cone, const int64_t* degree, size_t len,
                                     uint32_t p, size_t* dims, size_t dims_len) {
  return guarded([&] {
    require(cone && degree && dims, "null argument");
    require(dims_len > cone->cone.ambient_rank(), "dims buffer too small");
    auto m = degree_from(degree, len);
    auto h = toric::cohomology(
        toric::degree_complex(cone->cone, m, toric::Field::of_characteristic(p)));
    for (size_t a = 0; a < h.size(); ++a) dims[a] = h[a];
    return TORIC_OK;
  });
}

toric_status toric_dual(const toric_cone* cone, toric_format format, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, false);
    return emit(format == TORIC_FORMAT_JSON ? toric::dual_to_json(cone->cone)
                                            : toric::dual_to_text(cone->cone),
                true, out);
  });
}

toric_status toric_facets(const toric_cone* cone, toric_format format, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, false);
    return emit(format == TORIC_FORMAT_JSON ? toric::facets_to_json(cone->cone)
                                            : toric::facets_to_text(cone->cone),
                true, out);
  });
}

toric_status toric_vm(const toric_cone* cone, const int64_t* degree, size_t len, uint32_t p,
                      toric_format format, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && degree && out, "null argument");
    check_format(format, false);
    if (len != cone->cone.ambient_rank())
      toric::fail(toric::ErrorCode::DimensionMismatch, "degree has the wrong length");
    auto m = degree_from(degree, len);
    auto v = toric::v_m(cone->cone, m, toric::Field::of_characteristic(p));
    return emit(format == TORIC_FORMAT_JSON ? toric::subspace_to_json(m, v)
                                            : toric::subspace_to_text(m, v),
                true, out);
  });
}

toric_status toric_cohomology(const toric_cone* cone, uint32_t p, long bound, int a,
                              toric_format format, unsigned threads, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, true);
    std::size_t form = form_index(a, cone->cone);
    auto table = toric::cohomology_table(cone->cone, bound, toric::Field::of_characteristic(p),
                                         threads);
    switch (format) {
      case TORIC_FORMAT_JSON: return emit(toric::to_json(table, form), true, out);
      case TORIC_FORMAT_CSV: return emit(toric::to_csv(table, form), true, out);
      default: return emit(toric::to_text(table, form), true, out);
    }
  });
}

toric_status toric_poincare(const toric_cone* cone, long bound, toric_format format,
                            unsigned threads, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, false);
    auto report = toric::poincare_check(cone->cone, bound, threads);
    return emit(format == TORIC_FORMAT_JSON ? toric::to_json(report) : toric::to_text(report),
                report.passed(), out);
  });
}

toric_status toric_cartier(const toric_cone* cone, uint32_t p, long bound, int a,
                           toric_format format, unsigned threads, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, false);
    std::size_t form = form_index(a, cone->cone);
    toric::Field::prime(p);
    auto report = toric::cartier_report(cone->cone, bound, p, cone->name, threads);
    return emit(format == TORIC_FORMAT_JSON ? toric::to_json(report, form)
                                            : toric::to_text(report, form),
                report.passed(), out);
  });
}

toric_status toric_oracle(const toric_cone* cone, uint32_t p, long bound, toric_format format,
                          unsigned threads, char** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(cone && out, "null argument");
    check_format(format, false);
    toric::Field field = toric::Field::of_characteristic(p);
    toric::OracleComparison cmp;
    cmp.ambient_rank = cone->cone.ambient_rank();
    cmp.characteristic = p;
    cmp.bound = bound;
    cmp.oracle = toric::oracle_full_complex(cone->cone, bound, field);
    cmp.degreewise = toric::cohomology_table(cone->cone, bound, field, threads).totals();
    return emit(format == TORIC_FORMAT_JSON ? toric::to_json(cmp) : toric::to_text(cmp),
                cmp.passed(), out);
  });
}

}  // extern "C"
