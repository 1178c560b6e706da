#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucaris/geometry.hpp"
#include "ucaris/transceiver.hpp"

namespace ucaris {

/// Full simulation scenario as loaded from a config file. Angle fields accept
/// degrees via "angle_unit": "degrees"; everything is stored in radians.
struct Scenario {
    double wavelength = 0;     // meters
    double beta = 0;
    int n_elements = 0;
    double bandwidth = 0;      // Hz
    std::string constellation; // "bpsk" or "qpsk"
    NoiseSpec noise;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<SegmentGeometry> segments;
    std::string hash;          // FNV-1a of the config bytes, hex

    void validate() const;

    /// Segments rebuilt with a different element count (for sweeps over N).
    std::vector<SegmentGeometry> segments_with_n(int n) const;
};

Scenario load_scenario_file(const std::string& path);
Scenario load_scenario_json(const std::string& text);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace ucaris
