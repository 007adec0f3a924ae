#include "childci/scene.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "childci/errors.hpp"

namespace childci {

using nlohmann::json;

bool Circle::contains(double px, double py) const {
    const double dx = px - x;
    const double dy = py - y;
    return dx * dx + dy * dy <= r * r;
}

double SceneConfig::t_max_for(int test_id) const {
    if (test_id < 1 || test_id > 6) {
        throw RangeError("test_id " + std::to_string(test_id) + " outside 1..6");
    }
    return t_max[static_cast<std::size_t>(test_id - 1)];
}

const PinchTestConfig& SceneConfig::pinch_for(int test_id) const {
    if (test_id == 3) return zoom_in;
    if (test_id == 4) return zoom_out;
    throw ConfigMismatch("test " + std::to_string(test_id) + " is not a pinch test");
}

void SceneConfig::validate() const {
    for (int id = 1; id <= 6; ++id) {
        if (!(t_max_for(id) > 0)) {
            throw RangeError("t_max for test " + std::to_string(id) + " must be > 0");
        }
    }
    if (tap.moles.size() != 6) {
        throw SchemaError("test 1 needs exactly 6 mole positions, got " +
                          std::to_string(tap.moles.size()));
    }
    if (tap.required_taps < 1) throw RangeError("required_taps must be >= 1");
    if (static_cast<int>(tap.activation.size()) != tap.required_taps) {
        throw SchemaError("mole activation sequence must list one burrow per required tap");
    }
    for (int idx : tap.activation) {
        if (idx < 0 || idx >= static_cast<int>(tap.moles.size())) {
            throw RangeError("mole activation index " + std::to_string(idx) + " out of range");
        }
    }
    for (const auto* p : {&zoom_in, &zoom_out}) {
        if (!(p->inner_radius < p->outer_radius)) {
            throw RangeError("circle_inner_radius must be < circle_outer_radius");
        }
        if (!(p->rabbit_initial_radius > 0)) {
            throw RangeError("rabbit_initial_radius must be > 0");
        }
    }
    if (!(drawing.brush_radius >= 1)) throw RangeError("brush_radius must be >= 1");
}

namespace {

json circle_to_json(const Circle& c) { return json{{"x", c.x}, {"y", c.y}, {"r", c.r}}; }

Circle circle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("r")) {
        throw SchemaError("circle needs x, y, r");
    }
    return Circle{j.at("x").get<double>(), j.at("y").get<double>(), j.at("r").get<double>()};
}

}  // namespace

json SceneConfig::to_json() const {
    json moles = json::array();
    for (const auto& m : tap.moles) moles.push_back(circle_to_json(m));
    return json{
        {"schema", "childci-q/scene/1"},
        {"name", name},
        {"version", version},
        {"t_max", t_max},
        {"test1", {{"mole_positions", moles},
                   {"activation", tap.activation},
                   {"required_taps", tap.required_taps}}},
        {"test2", {{"carrot_region", circle_to_json(drag.carrot)},
                   {"rabbit_region", circle_to_json(drag.rabbit)}}},
        {"test3", {{"circle_inner_radius", zoom_in.inner_radius},
                   {"circle_outer_radius", zoom_in.outer_radius},
                   {"rabbit_initial_radius", zoom_in.rabbit_initial_radius}}},
        {"test4", {{"circle_inner_radius", zoom_out.inner_radius},
                   {"circle_outer_radius", zoom_out.outer_radius},
                   {"rabbit_initial_radius", zoom_out.rabbit_initial_radius}}},
        {"test5", {{"template_set_ref", spiral.template_set_ref}}},
        {"test6", {{"region_mask_ref", drawing.region_mask_ref},
                   {"brush_radius", drawing.brush_radius}}},
    };
}

SceneConfig SceneConfig::from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("scene config must be an object");
    if (j.value("schema", "") != "childci-q/scene/1") {
        throw SchemaError("scene config schema must be \"childci-q/scene/1\"");
    }
    SceneConfig s;
    s.name = j.value("name", "");
    s.version = j.value("version", "");
    if (j.contains("t_max")) {
        const auto& tm = j.at("t_max");
        if (!tm.is_array() || tm.size() != 6) throw SchemaError("t_max must list 6 values");
        for (std::size_t i = 0; i < 6; ++i) s.t_max[i] = tm[i].get<double>();
    }
    const json& t1 = j.at("test1");
    for (const auto& m : t1.at("mole_positions")) s.tap.moles.push_back(circle_from_json(m));
    s.tap.activation = t1.at("activation").get<std::vector<int>>();
    s.tap.required_taps = t1.value("required_taps", 4);
    const json& t2 = j.at("test2");
    s.drag.carrot = circle_from_json(t2.at("carrot_region"));
    s.drag.rabbit = circle_from_json(t2.at("rabbit_region"));
    for (auto [key, cfg] : {std::pair{"test3", &s.zoom_in}, std::pair{"test4", &s.zoom_out}}) {
        const json& t = j.at(key);
        cfg->inner_radius = t.at("circle_inner_radius").get<double>();
        cfg->outer_radius = t.at("circle_outer_radius").get<double>();
        cfg->rabbit_initial_radius = t.at("rabbit_initial_radius").get<double>();
    }
    s.spiral.template_set_ref = j.at("test5").value("template_set_ref", "");
    const json& t6 = j.at("test6");
    s.drawing.region_mask_ref = t6.value("region_mask_ref", "");
    s.drawing.brush_radius = t6.value("brush_radius", 4.0);
    s.validate();
    return s;
}

SceneConfig SceneConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scene config: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("scene config " + path.string() + ": " + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw SchemaError("scene config " + path.string() + ": " + e.what());
    }
}

void SceneConfig::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write scene config: " + path.string());
    out << to_json().dump(2) << '\n';
}

SceneConfig default_scene() {
    SceneConfig s;
    s.name = "default";
    s.version = "v1";
    s.t_max = {30, 30, 30, 30, 30, 120};
    // Burrows on a 1280x800 screen, two rows of three.
    s.tap.moles = {
        Circle{280, 260, 80}, Circle{640, 260, 80}, Circle{1000, 260, 80},
        Circle{280, 560, 80}, Circle{640, 560, 80}, Circle{1000, 560, 80},
    };
    s.tap.activation = {0, 4, 2, 3};
    s.tap.required_taps = 4;
    s.drag.carrot = Circle{220, 400, 60};
    s.drag.rabbit = Circle{1060, 400, 90};
    s.zoom_in = PinchTestConfig{150, 250, 60};
    s.zoom_out = PinchTestConfig{150, 250, 380};
    s.spiral.template_set_ref = "templates/default-v1.json";
    s.drawing.region_mask_ref = "masks/tree-512-v1.pgm";
    s.drawing.brush_radius = 4;
    return s;
}

}  // namespace childci
