#include <cmath>

#include "childci/completion.hpp"
#include "childci/errors.hpp"
#include "childci/scene.hpp"
#include "childci/touch_score.hpp"
#include "doctest.h"
#include "touch_cases.hpp"

using namespace childci;

TEST_CASE("p_time spans the full budget linearly") {
    CHECK(p_time(0, 30) == 100.0);
    CHECK(p_time(30, 30) == 0.0);
    CHECK(p_time(15, 30) == 50.0);
    CHECK(p_time(90, 120) == 25.0);
    CHECK_THROWS_AS(p_time(-1, 30), RangeError);
    CHECK_THROWS_AS(p_time(31, 30), RangeError);
    CHECK_THROWS_AS(p_time(5, 0), RangeError);
}

TEST_CASE("test-1 tap points: 25 per hit, -5 per stray, clamped") {
    CHECK(p_taps_test1(4, 0) == 100.0);
    CHECK(p_taps_test1(4, 3) == 85.0);
    CHECK(p_taps_test1(4, 25) == 0.0);
    CHECK(p_taps_test1(0, 0) == 0.0);
    CHECK(p_taps_test1(2, 1) == 45.0);
}

TEST_CASE("tests 2-4 tap points: 100 over the tap count") {
    CHECK(p_taps_simple(0) == 0.0);
    CHECK(p_taps_simple(1) == 100.0);
    CHECK(p_taps_simple(4) == 25.0);
    CHECK(p_taps_simple(3) == doctest::Approx(100.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("q is reported at 0.1 precision") {
    CHECK(round_q(72.4999) == 72.5);
    CHECK(round_q(72.44) == 72.4);
    CHECK(round_q(0.05) == 0.1);
    CHECK(round_q(100.0) == 100.0);
}

TEST_CASE("hand-derived touch cases") {
    const SceneConfig scene = default_scene();
    const auto cases = touch_cases::all();
    REQUIRE(cases.size() >= 20);

    for (const auto& c : cases) {
        CAPTURE(c.name);
        const QScore score = q_touch(c.record, scene);
        CHECK(score.test_id == c.record.test_id);
        CHECK(score.completed == c.completed);
        CHECK(std::abs(score.q - c.q) <= 1e-9);
        CHECK(std::abs(score.components.at("p_time") - c.p_time) <= 1e-9);
        CHECK(std::abs(score.components.at("p_taps") - c.p_taps) <= 1e-9);
        if (!c.completed) CHECK(score.q == 0.0);
        CHECK(score.q >= 0.0);
        CHECK(score.q <= 100.0);
    }
}

TEST_CASE("q_touch rejects non-touch tests") {
    TestRecord rec;
    rec.test_id = 5;
    CHECK_THROWS_AS(q_touch(rec, default_scene()), ConfigMismatch);
    rec.test_id = 6;
    CHECK_THROWS_AS(derive_completion(rec, default_scene()), ConfigMismatch);
}

TEST_CASE("a record slower than the budget is unscorable") {
    TestRecord rec;
    rec.test_id = 2;
    rec.t_real = 30.5;  // over the 30 s budget
    rec.completed = true;
    CHECK_THROWS_AS(q_touch(rec, default_scene()), RangeError);
}

TEST_CASE("uncompleted records still expose their components") {
    const SceneConfig scene = default_scene();
    for (const auto& c : touch_cases::all()) {
        if (c.completed) continue;
        const QScore score = q_touch(c.record, scene);
        CHECK(score.q == 0.0);
        CHECK(score.components.count("p_time") == 1);
        CHECK(score.components.count("p_taps") == 1);
        CHECK(score.components.at("t_max") == 30.0);
    }
}
