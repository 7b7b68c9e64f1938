#ifndef IFSHULL_IFSHULL_H
#define IFSHULL_IFSHULL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IFSH_EXPORT __declspec(dllexport)
#else
#define IFSH_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ifsh_system ifsh_system;
typedef struct ifsh_hull ifsh_hull;
typedef struct ifsh_maximizer ifsh_maximizer;

typedef enum {
  IFSH_OK = 0,
  IFSH_ERR_PARSE = 1,
  IFSH_ERR_VALIDATION = 2,
  IFSH_ERR_DOMAIN = 3,
  IFSH_ERR_RESOURCE = 4,
  IFSH_ERR_UNSUPPORTED = 5,
  IFSH_ERR_DEGENERATE = 6,
  IFSH_ERR_INTERNAL = 7,
  IFSH_ERR_IO = 8,
  IFSH_ERR_INVALID_ARGUMENT = 9,
} ifsh_status;

typedef enum {
  IFSH_METHOD_AUTO = 0,
  IFSH_METHOD_GENERAL = 1,
  IFSH_METHOD_ARMADILLO = 2,
  IFSH_METHOD_EQUIANGULAR = 3,
  IFSH_METHOD_HEURISTIC = 4,
} ifsh_method;

typedef struct {
  ifsh_method method;
  int has_target;
  double target_re;
  double target_im;
  double tol;         /* negative: 1e-9 times the bounding radius */
  size_t max_nodes;   /* 0: library default */
  size_t max_points;  /* 0: library default */
  int extra_plate_iterate;
} ifsh_hull_options;

/* Optional `set` values of a parsed file; has_* is 0 when absent. */
typedef struct {
  int has_tol;
  double tol;
  int has_cap;
  size_t cap;
  int has_level;
  size_t level;
  int has_seed;
  size_t seed;
} ifsh_settings;

/* Message of the last failed call on this thread ("" after success). */
IFSH_EXPORT const char* ifsh_last_error(void);
IFSH_EXPORT const char* ifsh_status_name(ifsh_status status);

IFSH_EXPORT void ifsh_hull_options_init(ifsh_hull_options* opt);

IFSH_EXPORT ifsh_status ifsh_system_parse(const char* text, ifsh_system** out);
IFSH_EXPORT ifsh_status ifsh_system_load(const char* path, ifsh_system** out);
/* Angles are 2*pi*num[k]/den[k]. */
IFSH_EXPORT ifsh_status ifsh_system_from_maps(size_t n, const double* p_re, const double* p_im,
                                              const double* lambda, const int64_t* num,
                                              const int64_t* den, ifsh_system** out);
IFSH_EXPORT void ifsh_system_free(ifsh_system* sys);

IFSH_EXPORT size_t ifsh_system_size(const ifsh_system* sys);
IFSH_EXPORT ifsh_status ifsh_system_settings(const ifsh_system* sys, ifsh_settings* out);
IFSH_EXPORT ifsh_status ifsh_system_value_set_cardinality(const ifsh_system* sys, int64_t* out);
IFSH_EXPORT ifsh_status ifsh_system_emit(const ifsh_system* sys, char** out);
IFSH_EXPORT ifsh_status ifsh_system_info_json(const ifsh_system* sys, char** out);

/* opt may be NULL for defaults. */
IFSH_EXPORT ifsh_status ifsh_system_hull(const ifsh_system* sys, const ifsh_hull_options* opt,
                                         ifsh_hull** out);
IFSH_EXPORT void ifsh_hull_free(ifsh_hull* hull);
IFSH_EXPORT size_t ifsh_hull_vertex_count(const ifsh_hull* hull);
IFSH_EXPORT ifsh_status ifsh_hull_vertex(const ifsh_hull* hull, size_t i, double* re, double* im);
IFSH_EXPORT int ifsh_hull_verified(const ifsh_hull* hull);
IFSH_EXPORT const char* ifsh_hull_method(const ifsh_hull* hull);
IFSH_EXPORT ifsh_status ifsh_hull_to_json(const ifsh_hull* hull, int long_form, char** out);
IFSH_EXPORT ifsh_status ifsh_hull_to_csv(const ifsh_hull* hull, int long_form, char** out);
/* level < 0 selects the default render level; seed is a 1-based map index. */
IFSH_EXPORT ifsh_status ifsh_hull_render_svg(const ifsh_hull* hull, int level, size_t seed,
                                             size_t max_points, char** out);

IFSH_EXPORT ifsh_status ifsh_system_maximize(const ifsh_system* sys, double target_re,
                                             double target_im, size_t max_nodes,
                                             ifsh_maximizer** out);
IFSH_EXPORT void ifsh_maximizer_free(ifsh_maximizer* mx);
IFSH_EXPORT size_t ifsh_maximizer_count(const ifsh_maximizer* mx);
IFSH_EXPORT ifsh_status ifsh_maximizer_point(const ifsh_maximizer* mx, size_t i, double* re,
                                             double* im, double* value);
IFSH_EXPORT ifsh_status ifsh_maximizer_to_json(const ifsh_maximizer* mx, int long_form, char** out);

/* *verified = 1 when H(points) lies within tol of Conv(points). */
IFSH_EXPORT ifsh_status ifsh_verify_extrema(const ifsh_system* sys, size_t count, const double* re,
                                            const double* im, double tol, int* verified);

IFSH_EXPORT void ifsh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
