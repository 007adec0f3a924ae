#include "childci/drawing_score.hpp"

#include <algorithm>

#include "childci/errors.hpp"

namespace childci {

void PenaltyCaps::validate() const {
    double prev = 0;
    for (const double cap : caps) {
        if (!(cap > prev)) throw RangeError("penalty caps must be positive and strictly increasing");
        prev = cap;
    }
}

std::array<double, 5> region_fractions(const CoverageRaster& coverage, const RegionMask& mask) {
    if (coverage.width != mask.width || coverage.height != mask.height) {
        throw DimensionMismatch("coverage and mask dims disagree");
    }
    std::array<std::int64_t, 5> painted{};
    const std::size_t n = coverage.painted.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!coverage.painted[i]) continue;
        const std::uint8_t label = mask.labels[i];
        if (label >= 1) ++painted[label - 1];  // r0..r4 -> 0..4
    }
    const auto area = mask.area();
    std::array<double, 5> fractions{};
    for (int r = 0; r < 5; ++r) {
        fractions[r] = area[r + 1] > 0 ? static_cast<double>(painted[r]) / area[r + 1] : 0.0;
    }
    return fractions;
}

double q_drawing_value(const std::array<double, 5>& fractions, const PenaltyCaps& caps) {
    double penalty_sum = 0;
    for (int i = 1; i <= 4; ++i) penalty_sum += fractions[i] * caps.caps[i - 1];
    return std::max(0.0, fractions[0] * 100.0 - penalty_sum);
}

QScore q_drawing(const TestRecord& record, ScreenDims screen, const RegionMask& mask,
                 const PenaltyCaps& caps, double brush_radius) {
    if (record.test_id != 6) {
        throw ConfigMismatch("q_drawing applies to test 6, got test " +
                             std::to_string(record.test_id));
    }
    caps.validate();
    mask.validate();

    QScore score;
    score.test_id = 6;
    score.completed = std::any_of(record.strokes.begin(), record.strokes.end(),
                                  [](const StylusStroke& s) { return !s.samples.empty(); });

    const auto coverage =
        rasterize_parallel(record.strokes, screen, mask.width, mask.height, brush_radius);
    const auto fractions = region_fractions(coverage, mask);

    score.components["frac_r0"] = fractions[0];
    for (int i = 1; i <= 4; ++i) {
        score.components["frac_r" + std::to_string(i)] = fractions[i];
        score.components["penalty_r" + std::to_string(i)] = fractions[i] * caps.caps[i - 1];
    }
    score.components["t_real"] = record.t_real;
    score.q = q_drawing_value(fractions, caps);
    return score;
}

}  // namespace childci
