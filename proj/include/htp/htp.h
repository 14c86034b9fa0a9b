#ifndef HTP_HTP_H
#define HTP_HTP_H

/* C interface to the heterochromatic tree partition library.
 *
 * Every call returns an htp_status. On failure the message is available from
 * htp_last_error() on the calling thread until the next failing call there.
 * Strings handed out by the library are released with htp_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HTP_API __declspec(dllexport)
#else
#define HTP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum htp_status {
  HTP_OK = 0,
  HTP_INVALID_ARGUMENT = 1,
  HTP_INVALID_COLORING = 2,
  HTP_PARSE_ERROR = 3,
  HTP_IO_ERROR = 4,
  HTP_GUARD_EXCEEDED = 5,
  HTP_DEFECT = 6,
  HTP_INTERNAL = 7
} htp_status;

typedef struct htp_coloring htp_coloring;
typedef struct htp_partition htp_partition;
typedef struct htp_report htp_report;

HTP_API const char* htp_version(void);
HTP_API const char* htp_last_error(void);
HTP_API const char* htp_status_name(htp_status status);
HTP_API void htp_string_free(char* s);

/* Colorings. Vertices are 0-based, colors 1-based. */
HTP_API htp_status htp_coloring_parse(const char* text, htp_coloring** out);
HTP_API htp_status htp_coloring_load(const char* path, htp_coloring** out);
HTP_API htp_status htp_coloring_save(const htp_coloring* c, const char* path);
HTP_API htp_status htp_coloring_to_string(const htp_coloring* c, char** out);
HTP_API void htp_coloring_free(htp_coloring* c);
HTP_API int htp_coloring_vertex_count(const htp_coloring* c);
HTP_API int htp_coloring_color_count(const htp_coloring* c);
HTP_API int64_t htp_coloring_edge_count(const htp_coloring* c);
/* 0 when the pair is not an edge. */
HTP_API int htp_coloring_color_of(const htp_coloring* c, int u, int v);
/* HTP_OK if valid, else HTP_INVALID_COLORING with every violation in the
 * last error message. */
HTP_API htp_status htp_coloring_validate(const htp_coloring* c);
HTP_API htp_status htp_coloring_merge(const htp_coloring* c, int from, int to, htp_coloring** out);

typedef struct htp_formula_result {
  int64_t t; /* -1 when r < 2 */
  int64_t value;
} htp_formula_result;

HTP_API htp_status htp_formula(int64_t n, int64_t r, htp_formula_result* out);

/* fill_color <= 0 keeps the default. partition_out may be NULL. */
HTP_API htp_status htp_canonical(int n, int r, int fill_color, htp_coloring** coloring_out,
                                 htp_partition** partition_out);

/* max_vertices <= 0 keeps the default guard. */
HTP_API htp_status htp_solve(const htp_coloring* c, int max_vertices, int* count_out, htp_partition** partition_out);
/* bound_out may be NULL. On HTP_DEFECT the offending instance is appended to
 * the last error message. */
HTP_API htp_status htp_construct(const htp_coloring* c, int* count_out, int* bound_out, htp_partition** partition_out);

HTP_API htp_status htp_partition_parse(const htp_coloring* c, const char* text, htp_partition** out);
HTP_API htp_status htp_partition_to_string(const htp_partition* p, char** out);
HTP_API int htp_partition_tree_count(const htp_partition* p);
/* HTP_OK if p is a heterochromatic tree partition of c. */
HTP_API htp_status htp_partition_check(const htp_coloring* c, const htp_partition* p);
HTP_API void htp_partition_free(htp_partition* p);

typedef struct htp_verify_params {
  int max_n;
  int samples;
  uint64_t seed;
  int threads; /* 0 = hardware concurrency */
} htp_verify_params;

/* Default parameters of the library. */
HTP_API htp_verify_params htp_verify_defaults(void);
/* campaign: theorem1, monotonicity, cutedge or constructive. A report is
 * produced (HTP_OK) whether or not the campaign passed. */
HTP_API htp_status htp_verify(const char* campaign, const htp_verify_params* params, htp_report** out);
HTP_API int htp_report_passed(const htp_report* r);
HTP_API int64_t htp_report_instances(const htp_report* r);
HTP_API int htp_report_failure_count(const htp_report* r);
/* Contents of the coloring behind failure i. */
HTP_API htp_status htp_report_failure_coloring(const htp_report* r, int i, char** out);
HTP_API htp_status htp_report_text(const htp_report* r, char** out);
HTP_API htp_status htp_report_json(const htp_report* r, char** out);
HTP_API htp_status htp_report_summary(const htp_report* r, char** out);
HTP_API void htp_report_free(htp_report* r);

#ifdef __cplusplus
}
#endif

#endif
