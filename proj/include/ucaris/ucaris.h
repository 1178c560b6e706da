/* C API for the UCA/RIS line-of-sight MIMO simulator.
 *
 * All functions return ucaris_status; on failure a thread-local message is
 * available from ucaris_last_error(). Objects returned through out-pointers
 * are owned by the caller and released with the matching _free function.
 */
#ifndef UCARIS_H
#define UCARIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ucaris_status {
    UCARIS_OK = 0,
    UCARIS_ERR_VALIDATION = 1, /* bad config / bad arguments */
    UCARIS_ERR_RUNTIME = 2     /* I/O or numerical failure */
} ucaris_status;

typedef enum ucaris_format {
    UCARIS_FORMAT_CSV = 0,
    UCARIS_FORMAT_JSON = 1
} ucaris_format;

typedef enum ucaris_surface_mode {
    UCARIS_SURFACE_SEGMENT = 0,
    UCARIS_SURFACE_TOTAL = 1,
    UCARIS_SURFACE_DIRECT_LINK = 2
} ucaris_surface_mode;

typedef enum ucaris_detector {
    UCARIS_DETECTOR_PROPOSED = 0,
    UCARIS_DETECTOR_TRADITIONAL_ML = 1
} ucaris_detector;

typedef struct ucaris_scenario ucaris_scenario;
typedef struct ucaris_records ucaris_records;

/* Message describing the most recent failure on this thread. */
const char* ucaris_last_error(void);

ucaris_status ucaris_scenario_load_file(const char* path, ucaris_scenario** out);
ucaris_status ucaris_scenario_load_json(const char* text, ucaris_scenario** out);
ucaris_status ucaris_scenario_set_seed(ucaris_scenario* sc, uint64_t seed);
ucaris_status ucaris_scenario_set_trials(ucaris_scenario* sc, uint64_t trials);
void ucaris_scenario_free(ucaris_scenario* sc);

ucaris_status ucaris_run_error_surface(const ucaris_scenario* sc, int grid_points,
                                       ucaris_surface_mode mode, int workers,
                                       ucaris_records** out);
ucaris_status ucaris_run_angle_range(const ucaris_scenario* sc, double rho,
                                     double resolution, ucaris_records** out);
ucaris_status ucaris_run_ber_sweep(const ucaris_scenario* sc, const double* snr_db,
                                   size_t n_snr, ucaris_detector detector, int workers,
                                   ucaris_records** out);
ucaris_status ucaris_run_capacity_sweep(const ucaris_scenario* sc, const int* n_list,
                                        size_t n_count, const double* snr_db,
                                        size_t n_snr, int workers, ucaris_records** out);
ucaris_status ucaris_run_complexity_table(const int* n_list, size_t n_count,
                                          const int* v_list, size_t v_count,
                                          ucaris_records** out);
ucaris_status ucaris_run_circulant_check(const ucaris_scenario* sc, const int* n_list,
                                         size_t n_count, int poses, int workers,
                                         ucaris_records** out);

size_t ucaris_records_count(const ucaris_records* recs);
/* path "-" writes to stdout. */
ucaris_status ucaris_records_emit(const ucaris_records* recs, ucaris_format format,
                                  const char* path);
void ucaris_records_free(ucaris_records* recs);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UCARIS_H */
