/* chemoflow C API.
 *
 * Pseudo-spectral simulator for the 2D stochastic Keller-Segel-Navier-Stokes
 * system with fractional dissipation, plus its verification harness. The
 * engine lives behind opaque handles; every call returns CHFL_OK or an error
 * code, with a thread-local message available from chfl_last_error().
 *
 * Typical use:
 *
 *   chfl_config* cfg = NULL;
 *   if (chfl_config_load("run.cfg", &cfg) != CHFL_OK) { ... }
 *   chfl_config_set(cfg, "solver.t_end", "2.0");
 *   int rc = chfl_run(cfg);           // diagnostics CSV + snapshots on disk
 *   chfl_config_free(cfg);
 *
 * All randomness is seeded from the configuration; identical configurations
 * produce byte-identical outputs.
 */

#ifndef CHEMOFLOW_H
#define CHEMOFLOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CHFL_OK 0
#define CHFL_ERR_INVALID 1  /* bad argument or precondition violation */
#define CHFL_ERR_CONFIG 2   /* malformed or out-of-range configuration */
#define CHFL_ERR_IO 3       /* file system failure */
#define CHFL_ERR_DIVERGED 4 /* non-finite state during time stepping */
#define CHFL_ERR_VERIFY 5   /* one or more invariant checks failed */

typedef struct chfl_config chfl_config;
typedef struct chfl_sim chfl_sim;

const char* chfl_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* chfl_last_error(void);

/* --- configuration ----------------------------------------------------- */

int chfl_config_defaults(chfl_config** out);
int chfl_config_load(const char* path, chfl_config** out);
int chfl_config_set(chfl_config* cfg, const char* key, const char* value);
/* Writes the value of `key` into buf (NUL-terminated, truncating). */
int chfl_config_get(const chfl_config* cfg, const char* key, char* buf, size_t bufsize);
void chfl_config_free(chfl_config* cfg);

/* --- one-shot drivers (outputs under output.directory) ------------------ */

/* Simulation run: canonical config echo, diagnostics CSV, snapshots. */
int chfl_run(const chfl_config* cfg);

/* Two-solution coupling experiment on one Brownian path; coupling CSV. */
int chfl_couple(const chfl_config* cfg);

/* Per-block Littlewood-Paley norms of one field as CSV. `snapshot_path`
 * NULL means the configured initial state; `field` is one of
 * n | c | u1 | u2 | vorticity; p is the block L^p exponent. */
int chfl_spectrum(const chfl_config* cfg, const char* snapshot_path, const char* field, double p);

/* Refinement study along axis dt | eps | k_band | resolution. */
int chfl_refine(const chfl_config* cfg, const char* axis, const double* levels, int n_levels);

/* Invariant suite; prints one PASS/FAIL line per check to stdout. Returns
 * CHFL_OK when everything passes, CHFL_ERR_VERIFY otherwise; *n_failed
 * (optional) receives the failure count. quick != 0 shrinks sample sizes. */
int chfl_verify(int quick, int* n_failed);

/* --- stepping-level access ---------------------------------------------- */

int chfl_sim_create(const chfl_config* cfg, chfl_sim** out);
int chfl_sim_advance(chfl_sim* sim, long n_steps);
int chfl_sim_time(const chfl_sim* sim, double* t);
/* Diagnostic by CSV column name (e.g. "mass_n", "linf_c", "l2_u"). */
int chfl_sim_diagnostic(const chfl_sim* sim, const char* name, double* value);
int chfl_sim_write_snapshot(const chfl_sim* sim, const char* path);
void chfl_sim_free(chfl_sim* sim);

#ifdef __cplusplus
}
#endif

#endif /* CHEMOFLOW_H */
