#pragma once

#include "ucaris/angle_search.hpp"
#include "ucaris/analysis.hpp"
#include "ucaris/records.hpp"
#include "ucaris/scenario.hpp"

namespace ucaris {

enum class SurfaceMode { Segment, Total, DirectLink };
enum class Detector { Proposed, TraditionalML };

/// Error surface over a grid_points x grid_points grid on [0, pi/3]^2.
/// Segment: epsilon of the first segment with its rotations overridden by the
/// grid point. Total: grid point = total rotation between the chain ends,
/// mirrored across the K segments (first segment -x/K, the rest +x/K).
/// DirectLink: epsilon of a single 20 m hop at the grid rotations.
RecordSet run_error_surface(const Scenario& sc, int grid_points, SurfaceMode mode,
                            int workers);

RecordSet run_angle_range(const Scenario& sc, double rho, double resolution = 1e-3);

/// Monte Carlo symbol error rate per SNR point. SNR (dB) is the average
/// received signal power per subchannel over var_rx, with var_ris1 = var_ris2
/// = var_rx; noise variances are derived from the SNR point, not the scenario.
RecordSet run_ber_sweep(const Scenario& sc, const std::vector<double>& snr_db,
                        Detector detector, int workers);

RecordSet run_capacity_sweep(const Scenario& sc, const std::vector<int>& n_list,
                             const std::vector<double>& snr_db, int workers);

RecordSet run_complexity_table(const std::vector<int>& n_list, const std::vector<int>& v_list);

/// Circulant witness of the hat-matrix chain product over random poses
/// (included angles uniform, rotations uniform within pi/9).
RecordSet run_circulant_check(const Scenario& sc, const std::vector<int>& n_list,
                              int poses, int workers);

/// Shared helpers used by the sweep runners and the test suites.
std::vector<SegmentChannel> build_chain(const Scenario& sc, int n_elements = 0);
std::vector<CVec> compensation_phase_designs(const std::vector<SegmentChannel>& chain);
ComplexMatrix hat_product(const std::vector<SegmentChannel>& chain);

/// Analysis-variant metadata attached to every analysis-bearing record.
std::string variants_string();

}  // namespace ucaris
