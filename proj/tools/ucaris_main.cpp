// ucaris - UCA/RIS line-of-sight MIMO link simulator.
//
// Subcommands map one-to-one onto the shared-library runs:
//   error-surface    per-hop or end-to-end circulant-approximation error grids
//   angle-range      largest rotation angles meeting an error budget
//   ber              Monte Carlo symbol error rate sweeps
//   capacity         per-subchannel capacity sweeps
//   complexity       operation-count tables for the transceiver schemes
//   circulant-check  cyclic-shift witness of the compensated channel product
//
// Every subcommand takes --config/--seed/--out/--format; results are CSV or
// JSON records with full provenance (seed, scenario hash, variant metadata).

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucaris/ucaris.h"

namespace {

struct CommonOpts {
    std::string config;
    std::string out = "-";
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t trials = 0;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
    auto* cfg = cmd->add_option("--config", opts.config, "Scenario config file (JSON)");
    if (needs_config) cfg->required();
    cmd->add_option("--out", opts.out, "Output path ('-' = stdout)");
    cmd->add_option("--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opts.seed, "Override the scenario RNG seed")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_option("--trials", opts.trials, "Override the scenario trial count");
    cmd->add_option("--workers", opts.workers, "Concurrent sweep workers")
        ->check(CLI::PositiveNumber);
}

int die(ucaris_status status) {
    std::fprintf(stderr, "error: %s\n", ucaris_last_error());
    return static_cast<int>(status);
}

int emit_and_free(ucaris_records* recs, const CommonOpts& opts) {
    const ucaris_format fmt =
        opts.format == "json" ? UCARIS_FORMAT_JSON : UCARIS_FORMAT_CSV;
    const ucaris_status status = ucaris_records_emit(recs, fmt, opts.out.c_str());
    if (status != UCARIS_OK) {
        ucaris_records_free(recs);
        return die(status);
    }
    if (opts.out != "-")
        std::fprintf(stderr, "wrote %zu records to %s\n", ucaris_records_count(recs),
                     opts.out.c_str());
    ucaris_records_free(recs);
    return 0;
}

ucaris_scenario* load_scenario(const CommonOpts& opts, int& exit_code) {
    ucaris_scenario* sc = nullptr;
    ucaris_status status = ucaris_scenario_load_file(opts.config.c_str(), &sc);
    if (status != UCARIS_OK) {
        exit_code = die(status);
        return nullptr;
    }
    if (opts.seed_set) ucaris_scenario_set_seed(sc, opts.seed);
    if (opts.trials > 0) ucaris_scenario_set_trials(sc, opts.trials);
    exit_code = 0;
    return sc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UCA/RIS line-of-sight MIMO link simulator"};
    app.require_subcommand(1);

    CommonOpts surf_opts;
    int grid = 25;
    std::string mode = "segment";
    auto* surf = app.add_subcommand("error-surface",
                                    "Circulant-approximation error over a rotation grid");
    add_common(surf, surf_opts, true);
    surf->add_option("--grid", grid, "Grid points per axis on [0, pi/3]")
        ->check(CLI::PositiveNumber);
    surf->add_option("--mode", mode, "segment, total, or direct-link")
        ->check(CLI::IsMember({"segment", "total", "direct-link"}));

    CommonOpts range_opts;
    double rho = 1e-4;
    double resolution = 1e-3;
    auto* range = app.add_subcommand("angle-range",
                                     "Largest rotation angles within an error budget");
    add_common(range, range_opts, true);
    range->add_option("--rho", rho, "Error budget");
    range->add_option("--resolution", resolution, "Angular resolution (radians)");

    CommonOpts ber_opts;
    std::vector<double> snr_db = {0, 5, 10, 15, 20};
    std::string detector = "proposed";
    auto* ber = app.add_subcommand("ber", "Monte Carlo symbol error rate sweep");
    add_common(ber, ber_opts, true);
    ber->add_option("--snr-db", snr_db, "SNR points in dB")->delimiter(',');
    ber->add_option("--detector", detector, "proposed or traditional-ml")
        ->check(CLI::IsMember({"proposed", "traditional-ml"}));

    CommonOpts cap_opts;
    std::vector<int> n_list = {4, 8, 16};
    std::vector<double> cap_snr_db = {0, 5, 10, 15, 20};
    auto* cap = app.add_subcommand("capacity", "Capacity sweep over N and SNR");
    add_common(cap, cap_opts, true);
    cap->add_option("--n-list", n_list, "Element counts to sweep")->delimiter(',');
    cap->add_option("--snr-db", cap_snr_db, "SNR points in dB")->delimiter(',');

    CommonOpts cplx_opts;
    std::vector<int> cplx_n = {4, 8, 16, 20};
    std::vector<int> cplx_v = {2, 4};
    auto* cplx = app.add_subcommand("complexity", "Operation-count tables");
    add_common(cplx, cplx_opts, false);
    cplx->add_option("--n-list", cplx_n, "Element counts")->delimiter(',');
    cplx->add_option("--v-list", cplx_v, "Alphabet sizes")->delimiter(',');

    CommonOpts circ_opts;
    std::vector<int> circ_n = {4, 8, 16};
    int poses = 20;
    auto* circ = app.add_subcommand("circulant-check",
                                    "Cyclic-shift witness of the compensated channel");
    add_common(circ, circ_opts, true);
    circ->add_option("--n-list", circ_n, "Element counts")->delimiter(',');
    circ->add_option("--poses", poses, "Random poses per N")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // bad usage is a validation error
    }

    int exit_code = 0;
    ucaris_records* recs = nullptr;
    ucaris_status status = UCARIS_OK;

    if (surf->parsed()) {
        ucaris_scenario* sc = load_scenario(surf_opts, exit_code);
        if (!sc) return exit_code;
        const ucaris_surface_mode m = mode == "segment" ? UCARIS_SURFACE_SEGMENT
                                      : mode == "total" ? UCARIS_SURFACE_TOTAL
                                                        : UCARIS_SURFACE_DIRECT_LINK;
        status = ucaris_run_error_surface(sc, grid, m, surf_opts.workers, &recs);
        ucaris_scenario_free(sc);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, surf_opts);
    }
    if (range->parsed()) {
        ucaris_scenario* sc = load_scenario(range_opts, exit_code);
        if (!sc) return exit_code;
        status = ucaris_run_angle_range(sc, rho, resolution, &recs);
        ucaris_scenario_free(sc);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, range_opts);
    }
    if (ber->parsed()) {
        ucaris_scenario* sc = load_scenario(ber_opts, exit_code);
        if (!sc) return exit_code;
        const ucaris_detector det = detector == "proposed" ? UCARIS_DETECTOR_PROPOSED
                                                           : UCARIS_DETECTOR_TRADITIONAL_ML;
        status = ucaris_run_ber_sweep(sc, snr_db.data(), snr_db.size(), det, ber_opts.workers,
                                      &recs);
        ucaris_scenario_free(sc);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, ber_opts);
    }
    if (cap->parsed()) {
        ucaris_scenario* sc = load_scenario(cap_opts, exit_code);
        if (!sc) return exit_code;
        status = ucaris_run_capacity_sweep(sc, n_list.data(), n_list.size(), cap_snr_db.data(),
                                           cap_snr_db.size(), cap_opts.workers, &recs);
        ucaris_scenario_free(sc);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, cap_opts);
    }
    if (cplx->parsed()) {
        status = ucaris_run_complexity_table(cplx_n.data(), cplx_n.size(), cplx_v.data(),
                                             cplx_v.size(), &recs);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, cplx_opts);
    }
    if (circ->parsed()) {
        ucaris_scenario* sc = load_scenario(circ_opts, exit_code);
        if (!sc) return exit_code;
        status = ucaris_run_circulant_check(sc, circ_n.data(), circ_n.size(), poses,
                                            circ_opts.workers, &recs);
        ucaris_scenario_free(sc);
        if (status != UCARIS_OK) return die(status);
        return emit_and_free(recs, circ_opts);
    }
    return 0;
}
