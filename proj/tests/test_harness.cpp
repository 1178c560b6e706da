#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ucaris/harness.hpp"

using namespace ucaris;
using nlohmann::json;

namespace {

std::string scenario_path(const char* name) {
    return std::string(UCARIS_SCENARIO_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const char* name) {
    return std::string("harness_test_") + name;
}

// Minimal JSON-schema checker covering the subset the shipped schema uses:
// type, required, properties, additionalProperties, items, enum.
bool validates(const json& schema, const json& value, std::string& why);

bool check_type(const std::string& type, const json& value) {
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
}

bool validates(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type") && !check_type(schema.at("type"), value)) {
        why = "expected type " + schema.at("type").get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& candidate : schema.at("enum"))
            if (candidate == value) found = true;
        if (!found) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& item : value)
            if (!validates(schema.at("items"), item, why)) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        const bool closed =
            schema.contains("additionalProperties") && !schema.at("additionalProperties").get<bool>();
        for (const auto& [key, field] : value.items()) {
            if (props.contains(key)) {
                if (!validates(props.at(key), field, why)) {
                    why = "at key " + key + ": " + why;
                    return false;
                }
            } else if (closed) {
                why = "unexpected key " + key;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("scenario loading: defaults, units, and validation") {
    const Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    CHECK(sc.n_elements == 4);
    CHECK(sc.segments.size() == 3);
    CHECK(sc.segments[0].side == Side::TransmitSide);
    CHECK(sc.segments[1].center_distance == 4.5);
    CHECK(sc.hash.size() == 16);

    // degrees convert at the boundary
    const char* degrees = R"({
      "wavelength_m": 0.003, "beta": 12.566, "n_elements": 4, "angle_unit": "degrees",
      "segments": [{"side": "transmit", "source_radius_m": 0.12, "sink_radius_m": 0.12,
                    "center_distance_m": 4.2, "rot_x": 15.0, "rot_y": -15.0}]})";
    const Scenario deg = load_scenario_json(degrees);
    CHECK(deg.segments[0].rot_x == doctest::Approx(kPi / 12).epsilon(1e-14));
    CHECK(deg.segments[0].rot_y == doctest::Approx(-kPi / 12).epsilon(1e-14));

    CHECK_THROWS_AS(load_scenario_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(load_scenario_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/missing.json"), std::invalid_argument);

    // rotation outside the sector bound is rejected
    const char* bad_rot = R"({
      "wavelength_m": 0.003, "beta": 12.566, "n_elements": 4,
      "segments": [{"side": "transmit", "source_radius_m": 0.12, "sink_radius_m": 0.12,
                    "center_distance_m": 4.2, "rot_x": 1.5}]})";
    CHECK_THROWS_AS(load_scenario_json(bad_rot), std::invalid_argument);
}

TEST_CASE("error surface: grid anchors and mode semantics") {
    const Scenario sc = load_scenario_file(scenario_path("fig5_split.json"));

    const RecordSet single = run_error_surface(sc, 1, SurfaceMode::Total, 1);
    REQUIRE(single.records.size() == 1);
    CHECK(single.records[0].number("value") == 0.0);
    CHECK(single.records[0].number("rot_x") == 0.0);

    const RecordSet grid = run_error_surface(sc, 3, SurfaceMode::Total, 1);
    REQUIRE(grid.records.size() == 9);
    // spot-check one off-grid point against a direct evaluation
    const SimRecord& corner = grid.records.back();
    CHECK(corner.number("rot_x") == doctest::Approx(kPi / 3));
    std::vector<SegmentChannel> chain;
    for (size_t s = 0; s < sc.segments.size(); ++s) {
        SegmentGeometry seg = sc.segments[s];
        const double sign = s == 0 ? -1.0 : 1.0;
        seg.rot_x = seg.rot_y = sign * (kPi / 3) / 3;
        chain.push_back(build_segment(seg, sc.wavelength, sc.beta));
    }
    CHECK(corner.number("value") == doctest::Approx(epsilon_total(chain)).epsilon(1e-14));

    // direct-link mode reproduces the single-hop error at 20 m
    const RecordSet direct = run_error_surface(sc, 2, SurfaceMode::DirectLink, 1);
    SegmentGeometry seg = sc.segments[0];
    seg.center_distance = 20.0;
    seg.theta = seg.phi = 0.0;
    seg.rot_x = seg.rot_y = kPi / 3;
    CHECK(direct.records.back().number("value") ==
          doctest::Approx(epsilon_segment(seg, sc.wavelength, sc.beta)).epsilon(1e-14));
}

TEST_CASE("angle-range run wraps the search") {
    const Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    const RecordSet rs = run_angle_range(sc, 1e-4);
    REQUIRE(rs.records.size() == 1);
    const AngleRange direct =
        find_angle_range(1e-4, sc.segments[0], 1e-3, sc.wavelength, sc.beta);
    CHECK(rs.records[0].number("max_rot_x") == direct.max_rot_x);
    CHECK(rs.records[0].number("achieved_error") == direct.achieved_error);

    const RecordSet huge = run_angle_range(sc, 1e3);
    CHECK(huge.records[0].number("max_rot_x") == kPi / 3);

    // looser budgets admit larger angles
    const RecordSet loose = run_angle_range(sc, 1e-3);
    CHECK(loose.records[0].number("max_rot_x") >= rs.records[0].number("max_rot_x"));
}

TEST_CASE("ber sweep: detector parity under shared seeds and the noiseless limit") {
    Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    sc.trials = 400;
    const std::vector<double> snr = {6.0, 14.0};

    const RecordSet fast = run_ber_sweep(sc, snr, Detector::Proposed, 1);
    const RecordSet ml = run_ber_sweep(sc, snr, Detector::TraditionalML, 1);
    REQUIRE(fast.records.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(fast.records[i].number("errors") == ml.records[i].number("errors"));
        CHECK(fast.records[i].number("value") == ml.records[i].number("value"));
    }

    Scenario aligned = load_scenario_file(scenario_path("table_iv_aligned.json"));
    aligned.trials = 300;
    const RecordSet clean = run_ber_sweep(aligned, {200.0}, Detector::Proposed, 1);
    CHECK(clean.records[0].number("value") == 0.0);

    // worker count never changes results
    sc.trials = 200;
    const RecordSet w1 = run_ber_sweep(sc, {0.0, 8.0, 16.0}, Detector::Proposed, 1);
    const RecordSet w3 = run_ber_sweep(sc, {0.0, 8.0, 16.0}, Detector::Proposed, 3);
    for (size_t i = 0; i < w1.records.size(); ++i)
        CHECK(w1.records[i].number("errors") == w3.records[i].number("errors"));
}

TEST_CASE("capacity sweep: bandwidth scaling and N trend") {
    Scenario sc = load_scenario_file(scenario_path("table_iv_aligned.json"));
    const RecordSet rs = run_capacity_sweep(sc, {4, 8, 16}, {10.0}, 1);
    REQUIRE(rs.records.size() == 3);
    const double c4 = rs.records[0].number("value");
    const double c8 = rs.records[1].number("value");
    const double c16 = rs.records[2].number("value");
    CHECK(c8 >= c4);
    CHECK(c16 >= c8);
    CHECK(c16 - c8 < c8 - c4);

    sc.bandwidth = 0.0;
    const RecordSet zero = run_capacity_sweep(sc, {4}, {0.0, 10.0}, 1);
    for (const auto& rec : zero.records) CHECK(rec.number("value") == 0.0);
}

TEST_CASE("emit: header-only CSV, quoting, and round-trip") {
    RecordSet rs;
    rs.columns = {"metric", "value", "note"};

    const std::string path = temp_path("empty.csv");
    emit(rs, EmitFormat::Csv, path);
    CHECK(slurp(path) == "metric,value,note\n");

    SimRecord rec;
    rec.add("metric", std::string("demo"));
    rec.add("value", 0.125);
    rec.add("note", std::string("a,\"quoted\" cell"));
    rs.records.push_back(rec);
    emit(rs, EmitFormat::Csv, path);
    CHECK(slurp(path) == "metric,value,note\ndemo,0.125,\"a,\"\"quoted\"\" cell\"\n");

    const std::string jpath = temp_path("empty.json");
    emit(RecordSet{{"metric"}, {}}, EmitFormat::Json, jpath);
    CHECK(json::parse(slurp(jpath)) == json::array());

    emit(rs, EmitFormat::Json, jpath);
    const json parsed = json::parse(slurp(jpath));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["metric"] == "demo");
    CHECK(parsed[0]["value"] == 0.125);
    CHECK(parsed[0]["note"] == "a,\"quoted\" cell");

    CHECK_THROWS_AS(emit(rs, EmitFormat::Csv, "/nonexistent-dir/x.csv"), std::runtime_error);
    std::remove(path.c_str());
    std::remove(jpath.c_str());
}

TEST_CASE("emitted JSON validates against the shipped record schema") {
    const json schema = json::parse(slurp(std::string(UCARIS_SCHEMA_PATH)));
    Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    sc.trials = 50;

    std::vector<RecordSet> runs;
    runs.push_back(run_error_surface(sc, 2, SurfaceMode::Segment, 1));
    runs.push_back(run_angle_range(sc, 1e-3));
    runs.push_back(run_ber_sweep(sc, {5.0}, Detector::Proposed, 1));
    runs.push_back(run_capacity_sweep(sc, {4}, {5.0}, 1));
    runs.push_back(run_complexity_table({4, 20}, {2, 4}));
    runs.push_back(run_circulant_check(sc, {4}, 3, 1));

    const std::string path = temp_path("schema.json");
    for (const auto& rs : runs) {
        emit(rs, EmitFormat::Json, path);
        std::string why;
        const bool ok = validates(schema, json::parse(slurp(path)), why);
        INFO(why);
        CHECK(ok);
    }
    std::remove(path.c_str());
}

TEST_CASE("reproducibility: identical scenario and seed give identical bytes") {
    Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    sc.trials = 150;

    const std::string p1 = temp_path("repro1.csv");
    const std::string p2 = temp_path("repro2.csv");
    emit(run_ber_sweep(sc, {4.0, 12.0}, Detector::Proposed, 1), EmitFormat::Csv, p1);
    emit(run_ber_sweep(sc, {4.0, 12.0}, Detector::Proposed, 2), EmitFormat::Csv, p2);
    CHECK(slurp(p1) == slurp(p2));

    emit(run_error_surface(sc, 4, SurfaceMode::Total, 1), EmitFormat::Csv, p1);
    emit(run_error_surface(sc, 4, SurfaceMode::Total, 3), EmitFormat::Csv, p2);
    CHECK(slurp(p1) == slurp(p2));

    // a different seed changes the Monte Carlo records
    Scenario other = sc;
    other.seed = sc.seed + 1;
    emit(run_ber_sweep(other, {4.0, 12.0}, Detector::Proposed, 1), EmitFormat::Csv, p2);
    CHECK(slurp(p1) != slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("circulant-check records carry the shift constants") {
    const Scenario sc = load_scenario_file(scenario_path("table_iv.json"));
    const RecordSet rs = run_circulant_check(sc, {4, 8}, 4, 1);
    REQUIRE(rs.records.size() == 8);
    for (const auto& rec : rs.records) {
        CHECK(rec.number("value") < 1e-10);
        CHECK(rec.number("a_t") > 0.0);
        CHECK(rec.number("a_r") > 0.0);
    }
}
