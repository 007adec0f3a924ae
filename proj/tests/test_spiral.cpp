#include <array>
#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "childci/errors.hpp"
#include "childci/rng.hpp"
#include "childci/spiral.hpp"
#include "doctest.h"

using namespace childci;

namespace {

// Turns a point list into a single monotone-time stroke.
TestRecord trace_record(const std::vector<Point>& pts) {
    TestRecord rec;
    rec.test_id = 5;
    rec.t_real = 20;
    StylusStroke stroke;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        stroke.samples.push_back({static_cast<std::int64_t>(i) * 10, pts[i].x, pts[i].y, std::nullopt});
    }
    rec.strokes.push_back(std::move(stroke));
    return rec;
}

}  // namespace

TEST_CASE("the default template set is valid and spans its canvas") {
    const TemplateSet set = default_template_set();
    set.validate();
    for (const auto& tpl : set.templates) {
        double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
        for (const auto& p : tpl.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        CHECK(min_x == 0.0);
        CHECK(max_x == tpl.canvas_w);
        CHECK(min_y == 0.0);
        CHECK(max_y == tpl.canvas_h);
    }
}

TEST_CASE("template set round-trips through json") {
    const TemplateSet set = default_template_set();
    const TemplateSet back = TemplateSet::from_json(set.to_json());
    CHECK(back.version == set.version);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(back.templates[i].id == set.templates[i].id);
        CHECK(back.templates[i].points == set.templates[i].points);
    }
}

TEST_CASE("normalization is the identity on the templates themselves") {
    const TemplateSet set = default_template_set();
    for (const auto& tpl : set.templates) {
        const TestRecord rec = trace_record(tpl.points);
        CHECK(normalize_trace(rec.strokes, tpl.canvas_w, tpl.canvas_h) == tpl.points);
    }
}

TEST_CASE("tracing a template exactly scores 100") {
    const TemplateSet set = default_template_set();
    for (const auto& tpl : set.templates) {
        const QScore score = q_spiral(trace_record(tpl.points), set);
        CHECK(score.q == 100.0);
        CHECK(score.completed);
        REQUIRE(score.template_id.has_value());
        CHECK(*score.template_id == tpl.id);
        CHECK(score.components.at("d") == 0.0);
        CHECK(score.components.at("k") == static_cast<double>(tpl.points.size()));
    }
}

TEST_CASE("mean q decreases strictly as jitter grows") {
    const TemplateSet set = default_template_set();
    const SpiralTemplate& tpl = set.templates[0];
    const std::array<double, 4> sigmas{0.5, 1.0, 2.0, 4.0};

    std::array<double, 4> mean_q{};
    for (std::size_t si = 0; si < sigmas.size(); ++si) {
        double sum = 0;
        const int seeds = 25;
        for (int seed = 0; seed < seeds; ++seed) {
            Rng rng(derive_seed(900 + seed, si));
            std::vector<Point> pts = tpl.points;
            for (auto& p : pts) {
                p.x += rng.normal(0, sigmas[si]);
                p.y += rng.normal(0, sigmas[si]);
            }
            const QScore score = q_spiral(trace_record(pts), set);
            CHECK(score.q > 0.0);
            CHECK(score.q < 100.0);
            sum += score.q;
        }
        mean_q[si] = sum / seeds;
    }
    CHECK(mean_q[0] > mean_q[1]);
    CHECK(mean_q[1] > mean_q[2]);
    CHECK(mean_q[2] > mean_q[3]);
}

TEST_CASE("empty and degenerate traces score zero") {
    const TemplateSet set = default_template_set();

    TestRecord empty;
    empty.test_id = 5;
    const QScore none = q_spiral(empty, set);
    CHECK(none.q == 0.0);
    CHECK_FALSE(none.completed);

    TestRecord dot;
    dot.test_id = 5;
    dot.strokes = {{{{0, 50, 50, std::nullopt}, {10, 50, 50, std::nullopt}}}};
    const QScore collapsed = q_spiral(dot, set);
    CHECK(collapsed.q == 0.0);
    CHECK_FALSE(collapsed.completed);
}

TEST_CASE("q_spiral rejects other tests") {
    TestRecord rec;
    rec.test_id = 3;
    CHECK_THROWS_AS(q_spiral(rec, default_template_set()), ConfigMismatch);
}

TEST_CASE("strokes are concatenated in temporal order") {
    const TemplateSet set = default_template_set();
    const SpiralTemplate& tpl = set.templates[0];

    // Split the template into two strokes and present them out of order.
    const std::size_t half = tpl.points.size() / 2;
    StylusStroke first, second;
    for (std::size_t i = 0; i < half; ++i) {
        first.samples.push_back({static_cast<std::int64_t>(i), tpl.points[i].x, tpl.points[i].y,
                                 std::nullopt});
    }
    for (std::size_t i = half; i < tpl.points.size(); ++i) {
        second.samples.push_back({static_cast<std::int64_t>(1000 + i), tpl.points[i].x,
                                  tpl.points[i].y, std::nullopt});
    }
    TestRecord rec;
    rec.test_id = 5;
    rec.t_real = 20;
    rec.strokes = {second, first};  // storage order must not matter
    const QScore score = q_spiral(rec, set);
    CHECK(score.q == 100.0);
}
