#pragma once

// Hand-derived touch scoring cases shared by the unit tests and the
// acceptance gate. Every expectation below was computed on paper from the
// definitions: p_time = (t_max - t_real) / t_max * 100 with t_max = 30,
// p_taps as per test, q = round((p_time + p_taps) / 2, 0.1) when completed
// and 0 otherwise. Geometry is the default battery: moles of radius 80 at
// (280|640|1000, 260|560) activated in order 0,4,2,3; carrot (220,400,60);
// rabbit (1060,400,90); pinch target radius in [150,250] from 60 (test 3)
// or 380 (test 4).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "childci/types.hpp"

namespace touch_cases {

struct Case {
    std::string name;
    childci::TestRecord record;
    bool completed;  // expected completion (derived or flagged)
    double p_time;
    double p_taps;
    double q;
};

namespace detail {

using childci::TestRecord;
using childci::TouchEvent;
using childci::TouchPhase;

// A quick tap: down at t, up 60 ms later.
inline void tap(TestRecord& rec, std::int64_t t, double x, double y, int pointer = 1) {
    rec.events.push_back({t, pointer, TouchPhase::down, x, y, std::nullopt});
    rec.events.push_back({t + 60, pointer, TouchPhase::up, x, y, std::nullopt});
}

inline void down(TestRecord& rec, std::int64_t t, int pointer, double x, double y) {
    rec.events.push_back({t, pointer, TouchPhase::down, x, y, std::nullopt});
}

inline void move(TestRecord& rec, std::int64_t t, int pointer, double x, double y) {
    rec.events.push_back({t, pointer, TouchPhase::move, x, y, std::nullopt});
}

inline void up(TestRecord& rec, std::int64_t t, int pointer, double x, double y) {
    rec.events.push_back({t, pointer, TouchPhase::up, x, y, std::nullopt});
}

inline TestRecord base(int test_id, double t_real,
                       std::optional<bool> completed = std::nullopt) {
    TestRecord rec;
    rec.test_id = test_id;
    rec.t_start = 0;
    rec.t_real = t_real;
    rec.completed = completed;
    return rec;
}

// The four correct mole positions in activation order.
inline const std::vector<std::pair<double, double>>& mole_course() {
    static const std::vector<std::pair<double, double>> course{
        {280, 260}, {640, 560}, {1000, 260}, {280, 560}};
    return course;
}

inline double p_time_at(double t_real) { return (30.0 - t_real) / 30.0 * 100.0; }

// One complete two-finger pinch: both downs, one move per finger, both ups.
// Separation goes from |b0 - a0| to |b1 - a1| (all on the y = 400 line).
inline void pinch(TestRecord& rec, std::int64_t t, double a0, double a1, double b0, double b1) {
    down(rec, t, 1, a0, 400);
    down(rec, t + 50, 2, b0, 400);
    move(rec, t + 400, 1, a1, 400);
    move(rec, t + 450, 2, b1, 400);
    up(rec, t + 900, 1, a1, 400);
    up(rec, t + 950, 2, b1, 400);
}

}  // namespace detail

inline std::vector<Case> all() {
    using namespace detail;
    std::vector<Case> cases;

    // --- Test 1: whack-a-mole -------------------------------------------
    {
        TestRecord rec = base(1, 0);
        std::int64_t t = 1000;
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        cases.push_back({"t1 four clean taps, instant", std::move(rec), true, 100.0, 100.0, 100.0});
    }
    {
        TestRecord rec = base(1, 15);
        std::int64_t t = 1000;
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        cases.push_back({"t1 four clean taps, half the time", std::move(rec), true, 50.0, 100.0, 75.0});
    }
    {
        // Strays interleaved before the final hit: in 4, out 3.
        TestRecord rec = base(1, 12);
        std::int64_t t = 1000;
        std::size_t hit = 0;
        for (const auto& [x, y] : mole_course()) {
            tap(rec, t += 500, x, y);
            if (++hit < 4) tap(rec, t += 500, 50, 50);
        }
        cases.push_back({"t1 three strays", std::move(rec), true, p_time_at(12), 85.0, 72.5});
    }
    {
        // 25 strays first: 100 - 125 clamps to 0, yet the test completes.
        TestRecord rec = base(1, 29);
        std::int64_t t = 1000;
        for (int i = 0; i < 25; ++i) tap(rec, t += 200, 50, 50);
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        cases.push_back({"t1 tap penalty clamps at 0", std::move(rec), true, p_time_at(29), 0.0, 1.7});
    }
    {
        // Only three hits: completion derives to false, q = 0 regardless.
        TestRecord rec = base(1, 10);
        std::int64_t t = 1000;
        std::size_t hit = 0;
        for (const auto& [x, y] : mole_course()) {
            if (++hit == 4) break;
            tap(rec, t += 500, x, y);
        }
        cases.push_back({"t1 gave up after three", std::move(rec), false, p_time_at(10), 75.0, 0.0});
    }
    {
        // The app's explicit flag wins over gesture derivation.
        TestRecord rec = base(1, 8, false);
        std::int64_t t = 1000;
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        cases.push_back({"t1 explicit flag beats events", std::move(rec), false, p_time_at(8), 100.0, 0.0});
    }
    {
        // A tap on an inactive burrow is a stray like any other.
        TestRecord rec = base(1, 6);
        std::int64_t t = 1000;
        tap(rec, t += 500, 640, 260);
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        cases.push_back({"t1 wrong burrow counts out", std::move(rec), true, p_time_at(6), 95.0, 87.5});
    }
    {
        // Once the fourth mole is hit the test is over; later taps are noise.
        TestRecord rec = base(1, 15);
        std::int64_t t = 1000;
        for (const auto& [x, y] : mole_course()) tap(rec, t += 500, x, y);
        for (int i = 0; i < 5; ++i) tap(rec, t += 200, 50, 50);
        cases.push_back({"t1 taps after completion ignored", std::move(rec), true, 50.0, 100.0, 75.0});
    }

    // --- Test 2: drag the carrot ----------------------------------------
    {
        TestRecord rec = base(2, 0, true);
        tap(rec, 1000, 220, 400);
        cases.push_back({"t2 one tap, instant, flagged done", std::move(rec), true, 100.0, 100.0, 100.0});
    }
    {
        TestRecord rec = base(2, 6);
        down(rec, 500, 1, 220, 400);
        move(rec, 2000, 1, 640, 400);
        move(rec, 3500, 1, 1060, 400);
        up(rec, 4000, 1, 1060, 400);
        cases.push_back({"t2 clean drag onto the rabbit", std::move(rec), true, p_time_at(6), 100.0, 90.0});
    }
    {
        // Dropped 210 px short: the discs stay 60 px apart, not touching.
        TestRecord rec = base(2, 5);
        down(rec, 500, 1, 240, 410);
        move(rec, 2000, 1, 870, 410);
        up(rec, 2500, 1, 870, 410);
        cases.push_back({"t2 dropped short", std::move(rec), false, p_time_at(5), 100.0, 0.0});
    }
    {
        // Two fumbles before the grab: three downs, p_taps = 100/3.
        TestRecord rec = base(2, 12);
        tap(rec, 1000, 600, 200);
        tap(rec, 1500, 600, 600);
        down(rec, 3000, 1, 220, 400);
        move(rec, 4000, 1, 1060, 400);
        up(rec, 4100, 1, 1060, 400);
        cases.push_back({"t2 two fumbles then done", std::move(rec), true, p_time_at(12), 100.0 / 3.0, 46.7});
    }
    {
        // No touch data at all but the app says completed: tap term is 0.
        TestRecord rec = base(2, 0, true);
        cases.push_back({"t2 no events, flagged done", std::move(rec), true, 100.0, 0.0, 50.0});
    }
    {
        TestRecord rec = base(2, 30);
        down(rec, 500, 1, 220, 400);
        move(rec, 15000, 1, 1060, 400);
        up(rec, 29500, 1, 1060, 400);
        cases.push_back({"t2 done at the buzzer", std::move(rec), true, 0.0, 100.0, 50.0});
    }

    // --- Test 3: zoom in (rabbit grows from 60 into [150, 250]) ---------
    {
        // Ten one-finger pokes never pinch; the rabbit stays small.
        TestRecord rec = base(3, 30);
        std::int64_t t = 1000;
        for (int i = 0; i < 10; ++i) tap(rec, t += 400, 640, 400);
        cases.push_back({"t3 ten pokes, never pinched", std::move(rec), false, 0.0, 10.0, 0.0});
    }
    {
        // One pinch 100 -> 300 px: radius 60 * 3 = 180, inside the band.
        TestRecord rec = base(3, 3);
        pinch(rec, 1000, 500, 450, 600, 750);
        cases.push_back({"t3 one clean pinch", std::move(rec), true, p_time_at(3), 100.0, 95.0});
    }
    {
        // A timid pinch (x1.2) then a decisive one (x2.9): 60 * 1.2 * 2.9.
        TestRecord rec = base(3, 9);
        pinch(rec, 1000, 500, 495, 600, 615);
        pinch(rec, 5000, 500, 455, 600, 745);
        cases.push_back({"t3 second pinch lands it", std::move(rec), true, p_time_at(9), 50.0, 60.0});
    }
    {
        // Overzealous: x4.5 blows past the outer ring.
        TestRecord rec = base(3, 4);
        pinch(rec, 1000, 500, 425, 600, 875);
        cases.push_back({"t3 zoomed past the target", std::move(rec), false, p_time_at(4), 100.0, 0.0});
    }
    {
        // Exactly onto the inner ring: 60 * 2.5 = 150, bounds inclusive.
        TestRecord rec = base(3, 0);
        pinch(rec, 900, 500, 425, 600, 675);
        cases.push_back({"t3 lands exactly on the inner ring", std::move(rec), true, 100.0, 100.0, 100.0});
    }

    // --- Test 4: zoom out (rabbit shrinks from 380 into [150, 250]) -----
    {
        // One pinch 300 -> 150 px: radius 380 * 0.5 = 190.
        TestRecord rec = base(4, 6);
        pinch(rec, 1000, 490, 565, 790, 715);
        cases.push_back({"t4 one clean shrink", std::move(rec), true, p_time_at(6), 100.0, 90.0});
    }
    {
        TestRecord rec = base(4, 30);
        cases.push_back({"t4 never touched", std::move(rec), false, 0.0, 0.0, 0.0});
    }
    {
        // Five separate pokes, flagged complete by the app.
        TestRecord rec = base(4, 21, true);
        std::int64_t t = 1000;
        for (int i = 0; i < 5; ++i) tap(rec, t += 400, 640, 400);
        cases.push_back({"t4 five pokes, flagged done", std::move(rec), true, p_time_at(21), 20.0, 25.0});
    }
    {
        // Two downs 150 ms apart on different fingers pair into one tap.
        TestRecord rec = base(4, 30, true);
        down(rec, 1000, 1, 500, 400);
        down(rec, 1150, 2, 600, 400);
        up(rec, 1400, 1, 500, 400);
        up(rec, 1450, 2, 600, 400);
        cases.push_back({"t4 pair window is inclusive", std::move(rec), true, 0.0, 100.0, 50.0});
    }
    {
        // Same finger twice inside the window: taps, not a pinch pair.
        TestRecord rec = base(4, 15, true);
        tap(rec, 1000, 640, 400);
        tap(rec, 1120, 640, 400);
        cases.push_back({"t4 same finger never pairs", std::move(rec), true, 50.0, 50.0, 50.0});
    }

    return cases;
}

}  // namespace touch_cases
