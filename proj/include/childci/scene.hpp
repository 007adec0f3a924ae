#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace childci {

struct Circle {
    double x = 0;
    double y = 0;
    double r = 0;

    bool contains(double px, double py) const;

    bool operator==(const Circle&) const = default;
};

// Test 1: six burrows, one mole active at a time.
struct MoleTestConfig {
    std::vector<Circle> moles;      // exactly 6
    std::vector<int> activation;    // burrow index active for taps 1..required_taps
    int required_taps = 4;
};

// Test 2: the carrot is dragged onto the rabbit.
struct DragTestConfig {
    Circle carrot;
    Circle rabbit;
};

// Tests 3-4: pinch the rabbit until its radius lands between the two circles.
struct PinchTestConfig {
    double inner_radius = 0;
    double outer_radius = 0;
    double rabbit_initial_radius = 0;
};

struct SpiralTestConfig {
    std::string template_set_ref;  // e.g. "templates/default-v1.json"
};

struct DrawingTestConfig {
    std::string region_mask_ref;  // e.g. "masks/tree-512-v1.pgm"
    double brush_radius = 4;      // px at mask resolution
};

// Per-battery-version target geometry, time limits and completion rules.
struct SceneConfig {
    std::string name;
    std::string version;
    std::array<double, 6> t_max{30, 30, 30, 30, 30, 120};  // seconds, index = test_id-1

    MoleTestConfig tap;
    DragTestConfig drag;
    PinchTestConfig zoom_in;
    PinchTestConfig zoom_out;
    SpiralTestConfig spiral;
    DrawingTestConfig drawing;

    double t_max_for(int test_id) const;  // RangeError outside 1..6
    const PinchTestConfig& pinch_for(int test_id) const;

    void validate() const;  // SchemaError / RangeError on invariant violations

    static SceneConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    static SceneConfig load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

// The battery shipped with the tool: 1280x800 screen geometry, default refs.
SceneConfig default_scene();

}  // namespace childci
