#include "ucaris/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ucaris {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using nlohmann::json;

double angle_in(const json& j, const char* key, double scale, double fallback,
                bool required = false) {
    if (!j.contains(key)) {
        if (required) throw std::invalid_argument(std::string("scenario: missing field ") + key);
        return fallback;
    }
    return j.at(key).get<double>() * scale;
}

double number_in(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("scenario: missing field ") + key);
    return j.at(key).get<double>();
}

}  // namespace

void Scenario::validate() const {
    if (!(wavelength > 0)) throw std::invalid_argument("scenario: wavelength must be positive");
    if (!(beta > 0)) throw std::invalid_argument("scenario: beta must be positive");
    if (n_elements < 1) throw std::invalid_argument("scenario: n_elements must be >= 1");
    if (!(bandwidth >= 0)) throw std::invalid_argument("scenario: bandwidth must be >= 0");
    if (segments.empty()) throw std::invalid_argument("scenario: at least one segment required");
    if (trials < 1) throw std::invalid_argument("scenario: trials must be >= 1");
    noise.validate();
    Constellation::by_name(constellation).validate();
    for (const auto& seg : segments) {
        seg.validate();
        if (seg.source.num_elements != n_elements || seg.sink.num_elements != n_elements)
            throw std::invalid_argument("scenario: all UCAs must carry n_elements elements");
    }
}

std::vector<SegmentGeometry> Scenario::segments_with_n(int n) const {
    std::vector<SegmentGeometry> out = segments;
    for (auto& seg : out) {
        seg.source.num_elements = n;
        seg.sink.num_elements = n;
    }
    return out;
}

Scenario load_scenario_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: invalid JSON: ") + e.what());
    }

    Scenario sc;
    sc.hash = fnv1a_hex(text);
    try {
        const std::string unit = j.value("angle_unit", "radians");
        double scale = 1.0;
        if (unit == "degrees")
            scale = kPi / 180.0;
        else if (unit != "radians")
            throw std::invalid_argument("scenario: angle_unit must be \"radians\" or \"degrees\"");

        sc.wavelength = number_in(j, "wavelength_m");
        sc.beta = number_in(j, "beta");
        sc.n_elements = j.at("n_elements").get<int>();
        sc.bandwidth = j.value("bandwidth_hz", 0.0);
        sc.constellation = j.value("constellation", "bpsk");
        sc.seed = j.value("seed", std::uint64_t{1});
        sc.trials = j.value("trials", std::uint64_t{10000});
        if (j.contains("noise")) {
            const json& nj = j.at("noise");
            sc.noise.var_ris1 = nj.value("var_ris1", 0.0);
            sc.noise.var_ris2 = nj.value("var_ris2", 0.0);
            sc.noise.var_rx = nj.value("var_rx", 0.0);
        }
        if (!j.contains("segments") || !j.at("segments").is_array())
            throw std::invalid_argument("scenario: missing segments array");
        for (const json& sj : j.at("segments")) {
            SegmentGeometry seg;
            const std::string side = sj.value("side", "receive");
            if (side == "transmit")
                seg.side = Side::TransmitSide;
            else if (side == "receive")
                seg.side = Side::ReceiveSide;
            else
                throw std::invalid_argument("scenario: segment side must be \"transmit\" or \"receive\"");
            seg.source.radius = number_in(sj, "source_radius_m");
            seg.sink.radius = number_in(sj, "sink_radius_m");
            seg.source.num_elements = sc.n_elements;
            seg.sink.num_elements = sc.n_elements;
            seg.center_distance = number_in(sj, "center_distance_m");
            seg.theta = angle_in(sj, "theta", scale, 0.0);
            seg.phi = angle_in(sj, "phi", scale, 0.0);
            seg.rot_x = angle_in(sj, "rot_x", scale, 0.0);
            seg.rot_y = angle_in(sj, "rot_y", scale, 0.0);
            seg.source.alpha = angle_in(sj, "alpha_source", scale, 0.0);
            seg.sink.alpha = angle_in(sj, "alpha_sink", scale, 0.0);
            sc.segments.push_back(seg);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario: malformed config: ") + e.what());
    }
    sc.validate();
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("scenario: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario_json(buf.str());
}

}  // namespace ucaris
