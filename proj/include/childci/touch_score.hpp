#pragma once

#include "childci/scene.hpp"
#include "childci/types.hpp"

namespace childci {

// (t_max - t_real) / t_max * 100. Throws RangeError if t_real > t_max or t_max <= 0.
double p_time(double t_real, double t_max);

// Test 1 tap component: in_taps*25 - out_taps*5, clamped to [0,100].
double p_taps_test1(int in_taps, int out_taps);

// Tests 2-4 tap component: 0 when no taps, else 100/n_taps.
double p_taps_simple(int n_taps);

// Q for Tests 1-4: mean of the two components when the test is completed,
// 0 otherwise. q is reported at 0.1 precision; components at full precision.
QScore q_touch(const TestRecord& record, const SceneConfig& scene);

// Rounding applied to the reported q (one decimal).
double round_q(double q);

}  // namespace childci
