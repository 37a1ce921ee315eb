/* C-compatible session interface to the clawtile engine.
 *
 * A session owns one simulation. All calls return 0 on success and a
 * negative code on failure; clawtile_last_error() then describes the failure
 * for the calling thread. State crosses the boundary by copy only.
 */
#ifndef CLAWTILE_CAPI_H
#define CLAWTILE_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clawtile_session clawtile_session;

enum {
  CLAWTILE_OK = 0,
  CLAWTILE_E_CONFIG = -1,
  CLAWTILE_E_ARGUMENT = -2,
  CLAWTILE_E_NUMERIC = -3,
  CLAWTILE_E_BUSY = -4,
  CLAWTILE_E_CLOSED = -5,
  CLAWTILE_E_INTERNAL = -6
};

typedef struct clawtile_step_report {
  uint64_t steps;
  uint64_t reverts;
  double time;
  double cfl_max;
} clawtile_step_report;

/* Creates a session from configuration text (the [section] key = value
 * format). On failure *out is set to NULL. */
int clawtile_session_create(const char* config_text, clawtile_session** out);

/* Destroys the session; NULL is accepted. */
void clawtile_session_destroy(clawtile_session* s);

/* Advances to t_target (>= current time). report may be NULL. */
int clawtile_session_evolve(clawtile_session* s, double t_target, clawtile_step_report* report);

/* Number of doubles in the interior state (num_states * cells). */
int clawtile_session_state_size(clawtile_session* s, size_t* n);

/* Copies the interior state (per state, x fastest) and the current time. */
int clawtile_session_copy_state(clawtile_session* s, double* values, size_t n, double* time);

/* Replaces the interior state. */
int clawtile_session_set_state(clawtile_session* s, const double* values, size_t n);

/* Grid shape: ndim, cells[3], num_states. */
int clawtile_session_shape(clawtile_session* s, int* ndim, int cells[3], int* num_states);

/* Domain bounds per axis; inactive axes report [0, 1]. */
int clawtile_session_bounds(clawtile_session* s, double lower[3], double upper[3]);

/* Releases the engine while keeping the handle; later calls fail with
 * CLAWTILE_E_CLOSED. */
int clawtile_session_close(clawtile_session* s);

/* Message for the last failure on this thread ("" if none). */
const char* clawtile_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CLAWTILE_CAPI_H */
