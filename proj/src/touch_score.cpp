#include "childci/touch_score.hpp"

#include <algorithm>
#include <cmath>

#include "childci/completion.hpp"
#include "childci/errors.hpp"

namespace childci {

double p_time(double t_real, double t_max) {
    if (!(t_max > 0)) throw RangeError("t_max must be > 0");
    if (t_real < 0 || t_real > t_max) {
        throw RangeError("t_real must be within [0, t_max]");
    }
    return (t_max - t_real) / t_max * 100.0;
}

double p_taps_test1(int in_taps, int out_taps) {
    const double raw = in_taps * 25.0 - out_taps * 5.0;
    return std::clamp(raw, 0.0, 100.0);
}

double p_taps_simple(int n_taps) {
    if (n_taps == 0) return 0.0;
    return 100.0 / n_taps;
}

double round_q(double q) { return std::round(q * 10.0) / 10.0; }

QScore q_touch(const TestRecord& record, const SceneConfig& scene) {
    if (record.test_id < 1 || record.test_id > 4) {
        throw ConfigMismatch("q_touch applies to tests 1..4, got test " +
                             std::to_string(record.test_id));
    }
    const double t_max = scene.t_max_for(record.test_id);
    const bool completed = derive_completion(record, scene);

    QScore score;
    score.test_id = record.test_id;
    score.completed = completed;
    score.components["t_max"] = t_max;
    score.components["t_real"] = record.t_real;

    double taps_component = 0;
    if (record.test_id == 1) {
        const TapOutcome taps = evaluate_taps(record, scene.tap);
        score.components["in_taps"] = taps.in_taps;
        score.components["out_taps"] = taps.out_taps;
        taps_component = p_taps_test1(taps.in_taps, taps.out_taps);
    } else {
        const int n = count_taps(record, /*pair_pinch_downs=*/record.test_id >= 3);
        score.components["n_taps"] = n;
        taps_component = p_taps_simple(n);
    }
    score.components["p_taps"] = taps_component;

    const double time_component = p_time(record.t_real, t_max);
    score.components["p_time"] = time_component;
    // Eq. 1: the mean of both components if completed, 0 otherwise.
    score.q = completed ? round_q((time_component + taps_component) / 2.0) : 0.0;
    return score;
}

}  // namespace childci
