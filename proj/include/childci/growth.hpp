#pragma once

#include <map>
#include <string>
#include <vector>

#include "childci/types.hpp"

namespace childci {

// Linear interpolation between closest ranks: sort ascending, rank
// r = p/100 * (n-1), result = v[lo] + (r-lo) * (v[lo+1] - v[lo]).
// Throws EmptyInput when values is empty, RangeError when p is outside [0,100].
double percentile(std::vector<double> values, double p);

// One scored test from one session, as consumed by the aggregations below.
struct ScoreRow {
    SessionMeta meta;
    QScore score;
};

struct ChartOptions {
    std::vector<double> percentiles{10, 50, 90};
    int min_n = 5;            // groups with fewer samples get no curve points
    bool dedupe = false;      // keep only the latest acquisition per child per group
};

struct ChartPoint {
    int group_level = 0;
    double q = 0;
};

struct GrowthChart {
    int test_id = 0;
    std::vector<double> percentiles;            // ascending
    std::vector<std::vector<ChartPoint>> curves;  // curves[i] belongs to percentiles[i]
    std::map<int, int> sample_counts;           // every group seen, suppressed ones included
    int min_n = 5;
};

// Groups rows for one test by educational level and computes the requested
// percentiles per group. Permutation-invariant; sorting happens internally.
GrowthChart build_chart(const std::vector<ScoreRow>& rows, int test_id,
                        const ChartOptions& opts = {});

enum class Band { below_low, mid, above_high, unclassified };

std::string to_string(Band band);

struct TrajectoryPoint {
    int acquisition_id = 0;
    int group_level = 0;
    double q = 0;
    Band band = Band::unclassified;
};

struct Trajectory {
    std::string child_id;
    int test_id = 0;
    std::vector<TrajectoryPoint> points;  // ascending by acquisition_id
};

// Picks the child's rows for the chart's test and classifies each against the
// chart's lowest/highest percentile curves (strict inequality; boundary ->
// mid). Groups without curve points yield unclassified. Throws UnknownChild
// when the child has no scored session for the test, MonotonicityError when
// acquisition ids repeat or the group level drops between acquisitions.
Trajectory place_trajectory(const std::string& child_id, const std::vector<ScoreRow>& rows,
                            const GrowthChart& chart);

}  // namespace childci
