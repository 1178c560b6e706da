#include "ucaris/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ucaris {

namespace {

void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
    const int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (nthreads == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < count; i += nthreads) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> grid_axis(int grid_points) {
    if (grid_points < 1) throw std::invalid_argument("error_surface: grid must be >= 1");
    std::vector<double> axis(grid_points);
    for (int i = 0; i < grid_points; ++i)
        axis[i] = grid_points == 1 ? 0.0 : kPi / 3 * i / (grid_points - 1);
    return axis;
}

SimRecord base_record(const char* metric) {
    SimRecord rec;
    rec.add("metric", std::string(metric));
    return rec;
}

void add_provenance(SimRecord& rec, const Scenario& sc) {
    rec.add("n", std::int64_t{sc.n_elements});
    rec.add("seed", std::int64_t(sc.seed));
    rec.add("scenario_hash", sc.hash);
}

}  // namespace

std::vector<SegmentChannel> build_chain(const Scenario& sc, int n_elements) {
    const auto segs = n_elements > 0 ? sc.segments_with_n(n_elements) : sc.segments;
    std::vector<SegmentChannel> chain;
    chain.reserve(segs.size());
    for (const auto& seg : segs) chain.push_back(build_segment(seg, sc.wavelength, sc.beta));
    return chain;
}

std::vector<CVec> compensation_phase_designs(const std::vector<SegmentChannel>& chain) {
    std::vector<CVec> phases;
    for (size_t i = 1; i < chain.size(); ++i)
        phases.push_back(ris_phase_design(chain[i].u_right, chain[i - 1].u_left));
    return phases;
}

ComplexMatrix hat_product(const std::vector<SegmentChannel>& chain) {
    if (chain.empty()) throw std::invalid_argument("hat_product: empty chain");
    ComplexMatrix acc = chain.front().h_hat;
    for (size_t i = 1; i < chain.size(); ++i) acc = matmul(chain[i].h_hat, acc);
    return acc;
}

std::string variants_string() {
    return "ber_formula=erfc_sqrt_snr;noise_variance=unit_coefficients;"
           "capacity_log_base=2;snr=avg_subchannel_rx_power_over_var_rx";
}

RecordSet run_error_surface(const Scenario& sc, int grid_points, SurfaceMode mode, int workers) {
    sc.validate();
    const std::vector<double> axis = grid_axis(grid_points);
    const size_t total = axis.size() * axis.size();
    const bool is_total = mode == SurfaceMode::Total;

    RecordSet rs;
    rs.columns = {"metric", "mode",           "rot_x", "rot_y", "value",
                  "n",      "seed",           "scenario_hash"};
    rs.records.resize(total);

    const char* mode_name = mode == SurfaceMode::Segment ? "segment"
                            : is_total                   ? "total"
                                                         : "direct_link";
    parallel_for(total, workers, [&](size_t idx) {
        const double x = axis[idx / axis.size()];
        const double y = axis[idx % axis.size()];
        double value = 0;
        if (mode == SurfaceMode::Segment) {
            SegmentGeometry seg = sc.segments[0];
            seg.rot_x = x;
            seg.rot_y = y;
            value = epsilon_segment(seg, sc.wavelength, sc.beta);
        } else if (mode == SurfaceMode::DirectLink) {
            SegmentGeometry seg = sc.segments[0];
            seg.center_distance = 20.0;
            seg.theta = seg.phi = 0.0;
            seg.side = Side::TransmitSide;
            seg.rot_x = x;
            seg.rot_y = y;
            value = epsilon_segment(seg, sc.wavelength, sc.beta);
        } else {
            // Grid point = total rotation across the chain, split mirrored:
            // the first segment takes -x/K, every later segment +x/K.
            const double k = static_cast<double>(sc.segments.size());
            std::vector<SegmentChannel> chain;
            for (size_t s = 0; s < sc.segments.size(); ++s) {
                SegmentGeometry seg = sc.segments[s];
                const double sign = s == 0 ? -1.0 : 1.0;
                seg.rot_x = sign * x / k;
                seg.rot_y = sign * y / k;
                chain.push_back(build_segment(seg, sc.wavelength, sc.beta));
            }
            value = epsilon_total(chain);
        }
        SimRecord rec = base_record(is_total ? "epsilon_total" : "epsilon");
        rec.add("mode", std::string(mode_name));
        rec.add("rot_x", x);
        rec.add("rot_y", y);
        rec.add("value", value);
        add_provenance(rec, sc);
        rs.records[idx] = std::move(rec);
    });
    return rs;
}

RecordSet run_angle_range(const Scenario& sc, double rho, double resolution) {
    sc.validate();
    const AngleRange range =
        find_angle_range(rho, sc.segments[0], resolution, sc.wavelength, sc.beta);
    RecordSet rs;
    rs.columns = {"metric", "rho",          "resolution",        "max_rot_x",
                  "max_rot_y", "achieved_error", "used_grid_fallback", "n",
                  "seed",   "scenario_hash"};
    SimRecord rec = base_record("angle_range");
    rec.add("rho", rho);
    rec.add("resolution", resolution);
    rec.add("max_rot_x", range.max_rot_x);
    rec.add("max_rot_y", range.max_rot_y);
    rec.add("achieved_error", range.achieved_error);
    rec.add("used_grid_fallback", range.used_grid_fallback);
    add_provenance(rec, sc);
    rs.records.push_back(std::move(rec));
    return rs;
}

RecordSet run_ber_sweep(const Scenario& sc, const std::vector<double>& snr_db,
                        Detector detector, int workers) {
    sc.validate();
    const Constellation omega = Constellation::by_name(sc.constellation);
    const std::vector<SegmentChannel> chain = build_chain(sc);
    const std::vector<CVec> phases = compensation_phase_designs(chain);
    const ComplexMatrix chat = hat_product(chain);
    const DiagonalGains gains = diagonal_gains(chat);
    const CVec& u1 = chain.front().u_right;
    const CVec& u6 = chain.back().u_left;
    const int n = sc.n_elements;

    if (detector == Detector::TraditionalML &&
        std::pow(static_cast<double>(omega.size()), n) > 1e7)
        throw std::invalid_argument(
            "ber sweep: V^N exceeds the exhaustive-ML guard; use the proposed detector");

    // Exhaustive baseline sees the same receive vector through the effective
    // compensated channel U6 * Chat * W.
    const ComplexMatrix g_eff = scale_rows(u6, matmul(chat, idft_matrix(n)));

    double pbar = 0;
    for (const auto& lam : gains.values) pbar += std::norm(lam);
    pbar /= n;

    RecordSet rs;
    rs.columns = {"metric", "detector", "snr_db",        "value",   "ci_halfwidth", "trials",
                  "errors", "n",        "seed",          "scenario_hash", "variants"};
    rs.records.resize(snr_db.size());

    // Points run sequentially; trials run concurrently. Per-(point, trial)
    // substreams make the error counts independent of the worker count.
    for (size_t p = 0; p < snr_db.size(); ++p) {
        const double snr_lin = std::pow(10.0, snr_db[p] / 10.0);
        NoiseSpec noise;
        noise.var_rx = pbar / snr_lin;
        noise.var_ris1 = noise.var_ris2 = noise.var_rx;

        const std::int64_t trials = static_cast<std::int64_t>(sc.trials);
        std::atomic<std::int64_t> errors{0};
        parallel_for(static_cast<size_t>(trials), workers, [&](size_t t) {
            const std::uint64_t trial_seed = derive_seed(sc.seed, p, static_cast<std::uint64_t>(t));
            RngStream sym_rng(derive_seed(trial_seed, 11, 1));
            CVec s(n);
            for (int i = 0; i < n; ++i) s[i] = omega.symbols[sym_rng.uniform_int(omega.size())];
            const CVec x = precode(s, u1);
            const CVec y = propagate(x, chain, phases, noise, derive_seed(trial_seed, 11, 2));
            CVec decided;
            if (detector == Detector::Proposed) {
                decided = detect_symbolwise(receive_transform(y, u6), gains, omega);
            } else {
                decided = detect_exhaustive(y, g_eff, omega);
            }
            std::int64_t local = 0;
            for (int i = 0; i < n; ++i)
                if (decided[i] != s[i]) ++local;
            if (local) errors.fetch_add(local, std::memory_order_relaxed);
        });
        const double total = static_cast<double>(trials) * n;
        const std::int64_t error_count = errors.load();
        const double rate = error_count / total;
        const double half = 1.96 * std::sqrt(std::max(rate * (1 - rate), 0.0) / total);

        SimRecord rec = base_record("ber");
        rec.add("detector",
                std::string(detector == Detector::Proposed ? "proposed" : "traditional_ml"));
        rec.add("snr_db", snr_db[p]);
        rec.add("value", rate);
        rec.add("ci_halfwidth", half);
        rec.add("trials", trials);
        rec.add("errors", error_count);
        add_provenance(rec, sc);
        rec.add("variants", variants_string());
        rs.records[p] = std::move(rec);
    }
    return rs;
}

RecordSet run_capacity_sweep(const Scenario& sc, const std::vector<int>& n_list,
                             const std::vector<double>& snr_db, int workers) {
    sc.validate();
    RecordSet rs;
    rs.columns = {"metric", "n_elements", "snr_db", "value", "bandwidth_hz",
                  "n",      "seed",       "scenario_hash", "variants"};
    const size_t total = n_list.size() * snr_db.size();
    rs.records.resize(total);

    parallel_for(total, workers, [&](size_t idx) {
        const int n = n_list[idx / snr_db.size()];
        const double db = snr_db[idx % snr_db.size()];
        const std::vector<SegmentChannel> chain = build_chain(sc, n);
        const DiagonalGains gains = diagonal_gains(hat_product(chain));
        double pbar = 0;
        for (const auto& lam : gains.values) pbar += std::norm(lam);
        pbar /= n;
        NoiseSpec noise;
        noise.var_rx = pbar / std::pow(10.0, db / 10.0);
        noise.var_ris1 = noise.var_ris2 = noise.var_rx;

        LinkBudget budget;
        budget.gains = gains;
        budget.bandwidth = sc.bandwidth;
        budget.symbol_powers.assign(n, 1.0);
        budget.noise_vars.resize(n);
        for (int l = 1; l <= n; ++l)
            budget.noise_vars[l - 1] =
                subchannel_noise_variance(l, chain, noise, NoiseVarianceForm::Corrected);

        SimRecord rec = base_record("capacity_bps");
        rec.add("n_elements", std::int64_t{n});
        rec.add("snr_db", db);
        rec.add("value", capacity(budget));
        rec.add("bandwidth_hz", sc.bandwidth);
        add_provenance(rec, sc);
        rec.add("variants", variants_string());
        rs.records[idx] = std::move(rec);
    });
    return rs;
}

RecordSet run_complexity_table(const std::vector<int>& n_list, const std::vector<int>& v_list) {
    static constexpr Scheme kSchemes[] = {
        Scheme::ProposedPrecoder,   Scheme::NoPrecoder,    Scheme::FullyDigitalPrecoder,
        Scheme::FastSymbolwiseML,   Scheme::TraditionalML, Scheme::MLWithFullyDigital,
        Scheme::RisPhaseCompensation};
    RecordSet rs;
    rs.columns = {"metric", "scheme", "n_elements", "alphabet_size", "value"};
    for (int n : n_list)
        for (int v : v_list)
            for (Scheme scheme : kSchemes) {
                const OpCount counts = op_counts(scheme, n, v);
                const std::pair<const char*, double> rows[] = {
                    {"complex_additions", counts.complex_additions},
                    {"complex_multiplications", counts.complex_multiplications},
                    {"phase_subtractions", counts.phase_subtractions}};
                for (const auto& [metric, value] : rows) {
                    SimRecord rec;
                    rec.add("metric", std::string(metric));
                    rec.add("scheme", std::string(scheme_name(scheme)));
                    rec.add("n_elements", std::int64_t{n});
                    rec.add("alphabet_size", std::int64_t{v});
                    rec.add("value", value);
                    rs.records.push_back(std::move(rec));
                }
            }
    return rs;
}

RecordSet run_circulant_check(const Scenario& sc, const std::vector<int>& n_list, int poses,
                              int workers) {
    sc.validate();
    if (poses < 1) throw std::invalid_argument("circulant_check: poses must be >= 1");
    RecordSet rs;
    rs.columns = {"metric", "n_elements", "pose", "value", "a_t", "a_r", "seed", "scenario_hash"};
    const size_t total = n_list.size() * static_cast<size_t>(poses);
    rs.records.resize(total);

    parallel_for(total, workers, [&](size_t idx) {
        const int n = n_list[idx / poses];
        const int pose = static_cast<int>(idx % poses);
        RngStream rng(derive_seed(sc.seed, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(pose)));
        std::vector<SegmentChannel> chain;
        for (SegmentGeometry seg : sc.segments_with_n(n)) {
            seg.theta = rng.uniform() * kTwoPi;
            seg.phi = rng.uniform() * kPi / 2 * 0.9;
            seg.rot_x = (2 * rng.uniform() - 1) * kPi / 9;
            seg.rot_y = (2 * rng.uniform() - 1) * kPi / 9;
            chain.push_back(build_segment(seg, sc.wavelength, sc.beta));
        }
        const CirculantWitness witness = circulant_witness(hat_product(chain));

        SimRecord rec = base_record("circulant_witness");
        rec.add("n_elements", std::int64_t{n});
        rec.add("pose", std::int64_t{pose});
        rec.add("value", witness.max_shift_deviation);
        rec.add("a_t", shift_constant(chain.front().geometry));
        rec.add("a_r", shift_constant(chain.back().geometry));
        rec.add("seed", std::int64_t(sc.seed));
        rec.add("scenario_hash", sc.hash);
        rs.records[idx] = std::move(rec);
    });
    return rs;
}

}  // namespace ucaris
