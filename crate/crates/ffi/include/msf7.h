#ifndef MSF7_H
#define MSF7_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// `classify` result for a nondegenerate form outside the table.
#define MSF7_ORBIT_UNKNOWN 0

// `classify` result for a degenerate form.
#define MSF7_ORBIT_NON_MULTISYMPLECTIC -1

#define MSF7_VERDICT_ADMITS 0

#define MSF7_VERDICT_NO 1

#define MSF7_VERDICT_UNKNOWN 2

typedef enum Msf7Status {
  MSF7_STATUS_OK = 0,
  MSF7_STATUS_NULL_POINTER = 1,
  MSF7_STATUS_INVALID_UTF8 = 2,
  MSF7_STATUS_PARSE = 3,
  MSF7_STATUS_INVALID_ARGUMENT = 4,
  MSF7_STATUS_HYPOTHESIS = 5,
  MSF7_STATUS_INTERNAL = 6,
} Msf7Status;

// Opaque handle to a 3-form.
typedef struct Msf7KForm Msf7KForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Valid until the
// next call into the library on this thread.
const char *msf7_last_error_message(void);

// Static version string.
const char *msf7_version(void);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void msf7_string_free(char *s);

// # Safety
// `form` must be null or a handle returned by this library, freed once.
void msf7_kform_free(struct Msf7KForm *form);

// Parses KForm JSON into a new handle.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum Msf7Status msf7_kform_from_json(const char *json, struct Msf7KForm **out);

// # Safety
// `form` must be a live handle; `out` must be writable.
enum Msf7Status msf7_kform_to_json(const struct Msf7KForm *form, char **out);

// The canonical representative of an orbit; `prime` selects the primed
// variant where one exists.
//
// # Safety
// `out` must be writable.
enum Msf7Status msf7_canonical(uint8_t orbit, bool prime, struct Msf7KForm **out);

// Writes the orbit id `1..=8`, [`MSF7_ORBIT_UNKNOWN`] or
// [`MSF7_ORBIT_NON_MULTISYMPLECTIC`].
//
// # Safety
// `form` must be a live handle; `out_orbit` must be writable.
enum Msf7Status msf7_classify(const struct Msf7KForm *form, int32_t *out_orbit);

// # Safety
// `form` must be a live handle; `out` must be writable.
enum Msf7Status msf7_is_multisymplectic(const struct Msf7KForm *form, bool *out);

// The invariant vector as JSON.
//
// # Safety
// `form` must be a live handle; `out` must be writable.
enum Msf7Status msf7_invariants_json(const struct Msf7KForm *form, char **out);

// Runs the topology check on a model given as JSON. Writes one of the
// `MSF7_VERDICT_*` codes and, if `out_json` is non-null, the verdict JSON.
//
// # Safety
// `model_json` must be a nul-terminated string; `out_verdict` must be
// writable; `out_json` must be null or writable.
enum Msf7Status msf7_topo_check(const char *model_json,
                                uint8_t type_id,
                                uint32_t bound,
                                int32_t *out_verdict,
                                char **out_json);

// Runs every catalog, identity, compact-dimension and embedding check.
//
// # Safety
// `out_all_passed` must be writable; `out_json` must be null or writable.
enum Msf7Status msf7_verify_paper(uint32_t draws, bool *out_all_passed, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MSF7_H */
