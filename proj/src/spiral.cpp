#include "childci/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "childci/errors.hpp"

namespace childci {

using nlohmann::json;

void SpiralTemplate::validate() const {
    if (points.size() < 16) throw SchemaError("spiral template needs at least 16 points");
    if (!(canvas_w > 0) || !(canvas_h > 0)) throw RangeError("template canvas must be positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point& p = points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw SchemaError("template point must be finite");
        }
        if (p.x < 0 || p.x > canvas_w || p.y < 0 || p.y > canvas_h) {
            throw RangeError("template point outside canvas");
        }
        if (i > 0 && p == points[i - 1]) {
            throw SchemaError("template has consecutive duplicate points");
        }
    }
}

void TemplateSet::validate() const {
    for (std::size_t i = 0; i < templates.size(); ++i) {
        if (templates[i].id != static_cast<TemplateId>(i)) {
            throw SchemaError("template set must carry each of the 4 ids exactly once, in order");
        }
        templates[i].validate();
    }
}

json TemplateSet::to_json() const {
    json arr = json::array();
    for (const auto& t : templates) {
        json pts = json::array();
        for (const auto& p : t.points) pts.push_back(json::array({p.x, p.y}));
        arr.push_back(json{{"id", to_string(t.id)},
                           {"canvas", json::array({t.canvas_w, t.canvas_h})},
                           {"points", std::move(pts)}});
    }
    return json{{"schema", "childci-q/templates/1"}, {"version", version}, {"templates", arr}};
}

TemplateSet TemplateSet::from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != "childci-q/templates/1") {
        throw SchemaError("template set schema must be \"childci-q/templates/1\"");
    }
    TemplateSet set;
    set.version = j.value("version", "");
    const json& arr = j.at("templates");
    if (!arr.is_array() || arr.size() != 4) {
        throw SchemaError("template set must contain exactly 4 templates");
    }
    auto id_from = [](const std::string& s) {
        for (int i = 0; i < 4; ++i) {
            if (s == to_string(static_cast<TemplateId>(i))) return static_cast<TemplateId>(i);
        }
        throw SchemaError("unknown template id \"" + s + "\"");
    };
    std::array<bool, 4> seen{};
    for (const auto& t : arr) {
        SpiralTemplate tpl;
        tpl.id = id_from(t.at("id").get<std::string>());
        const json& canvas = t.at("canvas");
        tpl.canvas_w = canvas.at(0).get<double>();
        tpl.canvas_h = canvas.at(1).get<double>();
        for (const auto& p : t.at("points")) {
            tpl.points.push_back(Point{p.at(0).get<double>(), p.at(1).get<double>()});
        }
        const auto idx = static_cast<std::size_t>(tpl.id);
        if (seen[idx]) throw SchemaError("duplicate template id in set");
        seen[idx] = true;
        set.templates[idx] = std::move(tpl);
    }
    set.validate();
    return set;
}

TemplateSet TemplateSet::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open template set: " + path.string());
    json j;
    try {
        in >> j;
        return from_json(j);
    } catch (const json::exception& e) {
        throw SchemaError("template set " + path.string() + ": " + e.what());
    }
}

void TemplateSet::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write template set: " + path.string());
    out << to_json().dump(2) << '\n';
}

namespace {

// Stretches points per-axis onto [0,w]x[0,h] and snaps the extreme samples to
// the exact bounds. The resulting set is a fixed point of normalize_trace's
// bbox mapping (scale exactly 1, offsets exactly 0), which is what makes
// "trace == template -> d == 0" hold bitwise.
std::vector<Point> stretch_to_canvas(std::vector<Point> pts, double w, double h) {
    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const auto& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double sx = w / (max_x - min_x);
    const double sy = h / (max_y - min_y);
    for (auto& p : pts) {
        // Samples attaining the bbox extremes land exactly on 0 / w so the
        // stretched set spans the canvas bitwise.
        p.x = p.x == max_x ? w : std::clamp((p.x - min_x) * sx, 0.0, w);
        p.y = p.y == max_y ? h : std::clamp((p.y - min_y) * sy, 0.0, h);
    }
    return pts;
}

std::vector<Point> archimedean_spiral(double phase, int samples) {
    // r = a + b*theta over 3 turns; `phase` shifts between the black line
    // (0) and the white gap between turns (half the inter-turn spacing).
    const double turns = 3.0;
    const double theta_max = turns * 2.0 * std::numbers::pi;
    const double b = 1.0;
    const double a = phase;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double theta = theta_max * i / (samples - 1);
        const double r = a + b * theta;
        pts.push_back(Point{r * std::cos(theta), r * std::sin(theta)});
    }
    return pts;
}

}  // namespace

TemplateSet default_template_set() {
    constexpr int kSamples = 128;
    constexpr double kCanvas = 100.0;
    TemplateSet set;
    set.version = "default-v1";
    const std::vector<Point> black =
        stretch_to_canvas(archimedean_spiral(0.0, kSamples), kCanvas, kCanvas);
    const std::vector<Point> white =
        stretch_to_canvas(archimedean_spiral(std::numbers::pi, kSamples), kCanvas, kCanvas);
    auto reversed = [](std::vector<Point> pts) {
        std::reverse(pts.begin(), pts.end());
        return pts;
    };
    set.templates[0] = SpiralTemplate{TemplateId::inner_out_black, kCanvas, kCanvas, black};
    set.templates[1] = SpiralTemplate{TemplateId::inner_out_white, kCanvas, kCanvas, white};
    set.templates[2] = SpiralTemplate{TemplateId::outer_in_black, kCanvas, kCanvas, reversed(black)};
    set.templates[3] = SpiralTemplate{TemplateId::outer_in_white, kCanvas, kCanvas, reversed(white)};
    set.validate();
    return set;
}

std::vector<Point> normalize_trace(const std::vector<StylusStroke>& strokes, double canvas_w,
                                   double canvas_h) {
    std::vector<const StylusStroke*> ordered;
    for (const auto& s : strokes) {
        if (!s.samples.empty()) ordered.push_back(&s);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const StylusStroke* a,
                                                        const StylusStroke* b) {
        return a->samples.front().t < b->samples.front().t;
    });

    std::vector<Point> pts;
    for (const StylusStroke* s : ordered) {
        for (const auto& sample : s->samples) {
            const Point p{sample.x, sample.y};
            if (pts.empty() || !(p == pts.back())) pts.push_back(p);
        }
    }
    if (pts.empty()) throw EmptySequence("trace has no samples");

    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const auto& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double w = max_x - min_x;
    const double h = max_y - min_y;
    if (w == 0 && h == 0) throw DegenerateTrace("trace collapses to a single point");

    // Aspect-preserving scale; a width- or height-only trace scales by the
    // dimension it actually has.
    double scale;
    if (w == 0) {
        scale = canvas_h / h;
    } else if (h == 0) {
        scale = canvas_w / w;
    } else {
        scale = std::min(canvas_w / w, canvas_h / h);
    }
    const double off_x = (canvas_w - w * scale) / 2.0;
    const double off_y = (canvas_h - h * scale) / 2.0;
    for (auto& p : pts) {
        p.x = (p.x - min_x) * scale + off_x;
        p.y = (p.y - min_y) * scale + off_y;
    }
    return pts;
}

QScore q_spiral(const TestRecord& record, const TemplateSet& templates) {
    if (record.test_id != 5) {
        throw ConfigMismatch("q_spiral applies to test 5, got test " +
                             std::to_string(record.test_id));
    }
    QScore score;
    score.test_id = 5;
    score.components["t_real"] = record.t_real;

    std::size_t total_samples = 0;
    for (const auto& s : record.strokes) total_samples += s.samples.size();
    if (total_samples == 0) {
        score.q = 0.0;
        score.completed = false;
        return score;
    }

    double best_q = -1;
    for (const auto& tpl : templates.templates) {
        std::vector<Point> trace;
        try {
            trace = normalize_trace(record.strokes, tpl.canvas_w, tpl.canvas_h);
        } catch (const DegenerateTrace&) {
            score.q = 0.0;
            score.completed = false;
            return score;
        }
        const DtwResult r = dtw(trace, tpl.points);
        const double q = std::exp(-r.d / static_cast<double>(r.k)) * 100.0;
        if (q > best_q) {
            best_q = q;
            score.template_id = tpl.id;
            score.components["d"] = r.d;
            score.components["k"] = static_cast<double>(r.k);
        }
    }
    score.q = best_q;
    score.completed = true;
    return score;
}

}  // namespace childci
