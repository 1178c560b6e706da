#include "ucaris/ucaris.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "ucaris/harness.hpp"

struct ucaris_scenario {
    ucaris::Scenario sc;
};

struct ucaris_records {
    ucaris::RecordSet rs;
};

namespace {

thread_local std::string g_last_error;

ucaris_status fail(ucaris_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
ucaris_status guarded(Fn&& fn) {
    try {
        fn();
        return UCARIS_OK;
    } catch (const std::invalid_argument& e) {
        return fail(UCARIS_ERR_VALIDATION, e.what());
    } catch (const std::domain_error& e) {
        return fail(UCARIS_ERR_VALIDATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(UCARIS_ERR_RUNTIME, "out of memory");
    } catch (const std::exception& e) {
        return fail(UCARIS_ERR_RUNTIME, e.what());
    }
}

ucaris_status require(bool ok, const char* what) {
    return ok ? UCARIS_OK : fail(UCARIS_ERR_VALIDATION, what);
}

std::vector<double> to_vec(const double* p, size_t n) { return {p, p + n}; }
std::vector<int> to_vec(const int* p, size_t n) { return {p, p + n}; }

}  // namespace

extern "C" {

const char* ucaris_last_error(void) { return g_last_error.c_str(); }

ucaris_status ucaris_scenario_load_file(const char* path, ucaris_scenario** out) {
    if (require(path && out, "null argument") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    return guarded([&] { *out = new ucaris_scenario{ucaris::load_scenario_file(path)}; });
}

ucaris_status ucaris_scenario_load_json(const char* text, ucaris_scenario** out) {
    if (require(text && out, "null argument") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    return guarded([&] { *out = new ucaris_scenario{ucaris::load_scenario_json(text)}; });
}

ucaris_status ucaris_scenario_set_seed(ucaris_scenario* sc, uint64_t seed) {
    if (require(sc != nullptr, "null scenario") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    sc->sc.seed = seed;
    return UCARIS_OK;
}

ucaris_status ucaris_scenario_set_trials(ucaris_scenario* sc, uint64_t trials) {
    if (require(sc != nullptr && trials > 0, "trials must be positive") != UCARIS_OK)
        return UCARIS_ERR_VALIDATION;
    sc->sc.trials = trials;
    return UCARIS_OK;
}

void ucaris_scenario_free(ucaris_scenario* sc) { delete sc; }

ucaris_status ucaris_run_error_surface(const ucaris_scenario* sc, int grid_points,
                                       ucaris_surface_mode mode, int workers,
                                       ucaris_records** out) {
    if (require(sc && out, "null argument") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        auto rs = ucaris::run_error_surface(sc->sc, grid_points,
                                            static_cast<ucaris::SurfaceMode>(mode), workers);
        *out = new ucaris_records{std::move(rs)};
    });
}

ucaris_status ucaris_run_angle_range(const ucaris_scenario* sc, double rho, double resolution,
                                     ucaris_records** out) {
    if (require(sc && out, "null argument") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        *out = new ucaris_records{ucaris::run_angle_range(sc->sc, rho, resolution)};
    });
}

ucaris_status ucaris_run_ber_sweep(const ucaris_scenario* sc, const double* snr_db, size_t n_snr,
                                   ucaris_detector detector, int workers, ucaris_records** out) {
    if (require(sc && out && snr_db && n_snr > 0, "null or empty argument") != UCARIS_OK)
        return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        auto rs = ucaris::run_ber_sweep(sc->sc, to_vec(snr_db, n_snr),
                                        static_cast<ucaris::Detector>(detector), workers);
        *out = new ucaris_records{std::move(rs)};
    });
}

ucaris_status ucaris_run_capacity_sweep(const ucaris_scenario* sc, const int* n_list,
                                        size_t n_count, const double* snr_db, size_t n_snr,
                                        int workers, ucaris_records** out) {
    if (require(sc && out && n_list && n_count > 0 && snr_db && n_snr > 0,
                "null or empty argument") != UCARIS_OK)
        return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        auto rs = ucaris::run_capacity_sweep(sc->sc, to_vec(n_list, n_count),
                                             to_vec(snr_db, n_snr), workers);
        *out = new ucaris_records{std::move(rs)};
    });
}

ucaris_status ucaris_run_complexity_table(const int* n_list, size_t n_count, const int* v_list,
                                          size_t v_count, ucaris_records** out) {
    if (require(out && n_list && n_count > 0 && v_list && v_count > 0,
                "null or empty argument") != UCARIS_OK)
        return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        *out = new ucaris_records{
            ucaris::run_complexity_table(to_vec(n_list, n_count), to_vec(v_list, v_count))};
    });
}

ucaris_status ucaris_run_circulant_check(const ucaris_scenario* sc, const int* n_list,
                                         size_t n_count, int poses, int workers,
                                         ucaris_records** out) {
    if (require(sc && out && n_list && n_count > 0, "null or empty argument") != UCARIS_OK)
        return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        auto rs = ucaris::run_circulant_check(sc->sc, to_vec(n_list, n_count), poses, workers);
        *out = new ucaris_records{std::move(rs)};
    });
}

size_t ucaris_records_count(const ucaris_records* recs) {
    return recs ? recs->rs.records.size() : 0;
}

ucaris_status ucaris_records_emit(const ucaris_records* recs, ucaris_format format,
                                  const char* path) {
    if (require(recs && path, "null argument") != UCARIS_OK) return UCARIS_ERR_VALIDATION;
    return guarded([&] {
        ucaris::emit(recs->rs,
                     format == UCARIS_FORMAT_CSV ? ucaris::EmitFormat::Csv
                                                 : ucaris::EmitFormat::Json,
                     path);
    });
}

void ucaris_records_free(ucaris_records* recs) { delete recs; }

}  // extern "C"
