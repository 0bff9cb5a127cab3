#ifndef HALLRECONF_H
#define HALLRECONF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes; 0 to 4 agree with the command-line exit codes.
 */
typedef enum HrStatus {
  HR_STATUS_OK = 0,
  HR_STATUS_INPUT_ERROR = 1,
  HR_STATUS_COUNTEREXAMPLE = 2,
  HR_STATUS_CAPACITY = 3,
  HR_STATUS_INTERNAL = 4,
  HR_STATUS_NULL_POINTER = 5,
  HR_STATUS_PANIC = 6,
} HrStatus;

/*
 A simplicial complex.
 */
typedef struct HrComplex HrComplex;

/*
 A partition of a vertex set into classes.
 */
typedef struct HrPartition HrPartition;

/*
 A reconfiguration graph.
 */
typedef struct HrRg HrRg;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread. Valid until the next
 call into the library from the same thread; never NULL.
 */
const char *hr_last_error(void);

/*
 Library version as a static string.
 */
const char *hr_version(void);

/*
 Parses `{"ground_set": [...], "maximal_faces": [[...], ...]}`.

 # Safety
 `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum HrStatus hr_complex_from_json(const char *json, struct HrComplex **out);

/*
 # Safety
 `c` must come from [`hr_complex_from_json`] and not be freed yet, or be NULL.
 */
void hr_complex_free(struct HrComplex *c);

/*
 Homological connectedness; `-1` stands for infinity.

 # Safety
 `c` must be a live handle and `out` writable.
 */
enum HrStatus hr_complex_eta(const struct HrComplex *c, int64_t *out);

/*
 Reduced rational Betti number in dimension `p >= -1`.

 # Safety
 `c` must be a live handle and `out` writable.
 */
enum HrStatus hr_complex_reduced_betti(const struct HrComplex *c, int64_t p, uint64_t *out);

/*
 Parses `{"classes": [[...], ...]}`.

 # Safety
 `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum HrStatus hr_partition_from_json(const char *json, struct HrPartition **out);

/*
 # Safety
 `v` must come from [`hr_partition_from_json`] and not be freed yet, or be NULL.
 */
void hr_partition_free(struct HrPartition *v);

/*
 `RG(C, V; k)`: partial colorful simplices meeting exactly `k` classes.

 # Safety
 `c` and `v` must be live handles and `out` writable.
 */
enum HrStatus hr_rg_colorful(const struct HrComplex *c,
                             const struct HrPartition *v,
                             size_t k,
                             struct HrRg **out);

/*
 # Safety
 `g` must be a live handle.
 */
size_t hr_rg_vertex_count(const struct HrRg *g);

/*
 # Safety
 `g` must be a live handle.
 */
size_t hr_rg_edge_count(const struct HrRg *g);

/*
 # Safety
 `g` must be a live handle.
 */
size_t hr_rg_component_count(const struct HrRg *g);

/*
 # Safety
 `g` must come from [`hr_rg_colorful`] and not be freed yet, or be NULL.
 */
void hr_rg_free(struct HrRg *g);

/*
 Runs the command line with `argv[0..argc]` (no program name) and stores
 the report, or the error document, in `*out`. Returns the exit code.
 Release the report with [`hr_string_free`].

 # Safety
 `argv` must hold `argc` NUL-terminated strings and `out` be writable.
 */
enum HrStatus hr_run(size_t argc, const char *const *argv, char **out);

/*
 Frees a string returned by [`hr_run`].

 # Safety
 `s` must come from this library and not be freed yet, or be NULL.
 */
void hr_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HALLRECONF_H */
