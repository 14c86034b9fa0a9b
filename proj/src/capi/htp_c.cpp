#include "htp/htp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "htp/canonical.hpp"
#include "htp/constructive.hpp"
#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "htp/solver.hpp"
#include "htp/verify.hpp"

struct htp_coloring {
  htp::EdgeColoring value;
};

struct htp_partition {
  htp::TreePartition value;
};

struct htp_report {
  htp::VerificationReport value;
};

namespace {

thread_local std::string last_error;

htp_status fail(htp_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

htp_status status_of(htp::ErrorCode code) {
  switch (code) {
    case htp::ErrorCode::InvalidArgument: return HTP_INVALID_ARGUMENT;
    case htp::ErrorCode::InvalidColoring: return HTP_INVALID_COLORING;
    case htp::ErrorCode::Parse: return HTP_PARSE_ERROR;
    case htp::ErrorCode::Io: return HTP_IO_ERROR;
    case htp::ErrorCode::GuardExceeded: return HTP_GUARD_EXCEEDED;
    case htp::ErrorCode::Defect: return HTP_DEFECT;
  }
  return HTP_INTERNAL;
}

// Runs body, mapping exceptions to status codes.
template <typename Body>
htp_status guarded(Body&& body) {
  try {
    body();
    return HTP_OK;
  } catch (const htp::DefectError& e) {
    return fail(HTP_DEFECT, std::string(e.what()) + "\ninstance:\n" + e.instance());
  } catch (const htp::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HTP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HTP_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

#define HTP_REQUIRE(cond) \
  if (!(cond)) return fail(HTP_INVALID_ARGUMENT, "argument check failed: " #cond)

}  // namespace

extern "C" {

const char* htp_version(void) { return "1.0.0"; }
const char* htp_last_error(void) { return last_error.c_str(); }
void htp_string_free(char* s) { std::free(s); }

const char* htp_status_name(htp_status status) {
  switch (status) {
    case HTP_OK: return "ok";
    case HTP_INVALID_ARGUMENT: return "invalid argument";
    case HTP_INVALID_COLORING: return "invalid coloring";
    case HTP_PARSE_ERROR: return "parse error";
    case HTP_IO_ERROR: return "i/o error";
    case HTP_GUARD_EXCEEDED: return "guard exceeded";
    case HTP_DEFECT: return "defect";
    case HTP_INTERNAL: return "internal error";
  }
  return "unknown";
}

htp_status htp_coloring_parse(const char* text, htp_coloring** out) {
  HTP_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] { *out = new htp_coloring{htp::parse_coloring(text)}; });
}

htp_status htp_coloring_load(const char* path, htp_coloring** out) {
  HTP_REQUIRE(path != nullptr && out != nullptr);
  return guarded([&] { *out = new htp_coloring{htp::load_coloring(path)}; });
}

htp_status htp_coloring_save(const htp_coloring* c, const char* path) {
  HTP_REQUIRE(c != nullptr && path != nullptr);
  return guarded([&] { htp::save_coloring(c->value, path); });
}

htp_status htp_coloring_to_string(const htp_coloring* c, char** out) {
  HTP_REQUIRE(c != nullptr && out != nullptr);
  return guarded([&] { *out = dup(htp::format_coloring(c->value)); });
}

void htp_coloring_free(htp_coloring* c) { delete c; }

int htp_coloring_vertex_count(const htp_coloring* c) { return c ? c->value.vertex_count() : 0; }
int htp_coloring_color_count(const htp_coloring* c) { return c ? c->value.color_count() : 0; }
int64_t htp_coloring_edge_count(const htp_coloring* c) {
  return c ? static_cast<int64_t>(c->value.edge_count()) : 0;
}

int htp_coloring_color_of(const htp_coloring* c, int u, int v) {
  if (c == nullptr || u < 0 || v < 0 || u >= c->value.vertex_count() || v >= c->value.vertex_count()) return 0;
  return c->value.color(u, v);
}

htp_status htp_coloring_validate(const htp_coloring* c) {
  HTP_REQUIRE(c != nullptr);
  return guarded([&] { htp::require_valid(c->value); });
}

htp_status htp_coloring_merge(const htp_coloring* c, int from, int to, htp_coloring** out) {
  HTP_REQUIRE(c != nullptr && out != nullptr);
  return guarded([&] { *out = new htp_coloring{htp::merge_colors(c->value, from, to)}; });
}

htp_status htp_formula(int64_t n, int64_t r, htp_formula_result* out) {
  HTP_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto f = htp::partition_number(n, r);
    out->t = f.t.value_or(-1);
    out->value = f.value;
  });
}

htp_status htp_canonical(int n, int r, int fill_color, htp_coloring** coloring_out, htp_partition** partition_out) {
  HTP_REQUIRE(coloring_out != nullptr);
  return guarded([&] {
    htp::CanonicalOptions options;
    if (fill_color > 0) options.fill_when_exhausted = fill_color;
    auto canon = htp::generate_canonical(n, r, options);
    htp::TreePartition p;
    if (partition_out != nullptr) p = htp::extremal_partition(canon.coloring, canon.layout);
    *coloring_out = new htp_coloring{std::move(canon.coloring)};
    if (partition_out != nullptr) *partition_out = new htp_partition{std::move(p)};
  });
}

htp_status htp_solve(const htp_coloring* c, int max_vertices, int* count_out, htp_partition** partition_out) {
  HTP_REQUIRE(c != nullptr && count_out != nullptr);
  return guarded([&] {
    htp::SolveOptions options;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    auto result = htp::solve(c->value, options);
    *count_out = result.count;
    if (partition_out != nullptr) *partition_out = new htp_partition{std::move(result.partition)};
  });
}

htp_status htp_construct(const htp_coloring* c, int* count_out, int* bound_out, htp_partition** partition_out) {
  HTP_REQUIRE(c != nullptr && count_out != nullptr);
  return guarded([&] {
    auto result = htp::partition_complete(c->value);
    *count_out = result.partition.count();
    if (bound_out != nullptr) *bound_out = result.bound;
    if (partition_out != nullptr) *partition_out = new htp_partition{std::move(result.partition)};
  });
}

htp_status htp_partition_parse(const htp_coloring* c, const char* text, htp_partition** out) {
  HTP_REQUIRE(c != nullptr && text != nullptr && out != nullptr);
  return guarded([&] { *out = new htp_partition{htp::parse_partition(c->value, text)}; });
}

htp_status htp_partition_to_string(const htp_partition* p, char** out) {
  HTP_REQUIRE(p != nullptr && out != nullptr);
  return guarded([&] { *out = dup(htp::format_partition(p->value)); });
}

int htp_partition_tree_count(const htp_partition* p) { return p ? p->value.count() : 0; }

htp_status htp_partition_check(const htp_coloring* c, const htp_partition* p) {
  HTP_REQUIRE(c != nullptr && p != nullptr);
  const auto check = htp::is_partition_valid(c->value, p->value);
  if (!check) return fail(HTP_INVALID_ARGUMENT, "not a heterochromatic tree partition: " + check.violation);
  return HTP_OK;
}

void htp_partition_free(htp_partition* p) { delete p; }

htp_verify_params htp_verify_defaults(void) {
  const htp::CampaignOptions o;
  return {o.max_n, o.samples, o.seed, o.threads};
}

htp_status htp_verify(const char* campaign, const htp_verify_params* params, htp_report** out) {
  HTP_REQUIRE(campaign != nullptr && out != nullptr);
  return guarded([&] {
    htp::CampaignOptions o;
    if (params != nullptr) {
      o.max_n = params->max_n;
      o.samples = params->samples;
      o.seed = params->seed;
      o.threads = params->threads;
    }
    *out = new htp_report{htp::run_campaign(campaign, o)};
  });
}

int htp_report_passed(const htp_report* r) { return r != nullptr && r->value.passed() ? 1 : 0; }
int64_t htp_report_instances(const htp_report* r) { return r ? r->value.instances : 0; }
int htp_report_failure_count(const htp_report* r) {
  return r ? static_cast<int>(r->value.failures.size()) : 0;
}

htp_status htp_report_failure_coloring(const htp_report* r, int i, char** out) {
  HTP_REQUIRE(r != nullptr && out != nullptr);
  HTP_REQUIRE(i >= 0 && static_cast<std::size_t>(i) < r->value.failures.size());
  return guarded([&] { *out = dup(r->value.failures[static_cast<std::size_t>(i)].coloring); });
}

htp_status htp_report_text(const htp_report* r, char** out) {
  HTP_REQUIRE(r != nullptr && out != nullptr);
  return guarded([&] { *out = dup(htp::report_to_text(r->value)); });
}

htp_status htp_report_json(const htp_report* r, char** out) {
  HTP_REQUIRE(r != nullptr && out != nullptr);
  return guarded([&] { *out = dup(htp::report_to_json(r->value)); });
}

htp_status htp_report_summary(const htp_report* r, char** out) {
  HTP_REQUIRE(r != nullptr && out != nullptr);
  return guarded([&] { *out = dup(htp::report_summary(r->value)); });
}

void htp_report_free(htp_report* r) { delete r; }

}  // extern "C"
