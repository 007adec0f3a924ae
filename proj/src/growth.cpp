#include "childci/growth.hpp"

#include <algorithm>

#include "childci/errors.hpp"

namespace childci {

double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw EmptyInput("percentile of empty list");
    if (!(p >= 0.0 && p <= 100.0)) throw RangeError("percentile p must be in [0,100]");
    std::sort(values.begin(), values.end());
    const double r = p / 100.0 * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(r);
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + (r - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
}

std::string to_string(Band band) {
    switch (band) {
        case Band::below_low: return "below_low";
        case Band::mid: return "mid";
        case Band::above_high: return "above_high";
        case Band::unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

std::vector<double> normalized_percentiles(const std::vector<double>& requested) {
    if (requested.empty()) throw EmptyInput("percentile list is empty");
    for (const double p : requested) {
        if (!(p >= 0.0 && p <= 100.0)) throw RangeError("percentile p must be in [0,100]");
    }
    std::vector<double> ps = requested;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

struct GroupEntry {
    std::string child_id;
    int acquisition_id = 0;
    double q = 0;
};

// Latest acquisition wins; q breaks exact ties so the result does not depend
// on input order.
bool newer(const GroupEntry& a, const GroupEntry& b) {
    if (a.acquisition_id != b.acquisition_id) return a.acquisition_id > b.acquisition_id;
    return a.q > b.q;
}

}  // namespace

GrowthChart build_chart(const std::vector<ScoreRow>& rows, int test_id, const ChartOptions& opts) {
    GrowthChart chart;
    chart.test_id = test_id;
    chart.percentiles = normalized_percentiles(opts.percentiles);
    chart.curves.assign(chart.percentiles.size(), {});
    chart.min_n = std::max(1, opts.min_n);

    std::map<int, std::vector<GroupEntry>> by_group;
    for (const auto& row : rows) {
        if (row.score.test_id != test_id) continue;
        by_group[row.meta.group.level].push_back(
            {row.meta.child_id, row.meta.acquisition_id, row.score.q});
    }
    if (by_group.empty()) {
        throw EmptyInput("no scores for test " + std::to_string(test_id));
    }

    for (const auto& [level, entries] : by_group) {
        std::vector<double> qs;
        if (opts.dedupe) {
            std::map<std::string, GroupEntry> latest;
            for (const auto& e : entries) {
                auto [it, inserted] = latest.try_emplace(e.child_id, e);
                if (!inserted && newer(e, it->second)) it->second = e;
            }
            for (const auto& [child, e] : latest) qs.push_back(e.q);
        } else {
            for (const auto& e : entries) qs.push_back(e.q);
        }
        chart.sample_counts[level] = static_cast<int>(qs.size());
        if (static_cast<int>(qs.size()) < chart.min_n) continue;
        for (std::size_t i = 0; i < chart.percentiles.size(); ++i) {
            chart.curves[i].push_back({level, percentile(qs, chart.percentiles[i])});
        }
    }
    return chart;
}

namespace {

// Curve value for a group, if that group was not suppressed.
const ChartPoint* curve_at(const std::vector<ChartPoint>& curve, int level) {
    for (const auto& pt : curve) {
        if (pt.group_level == level) return &pt;
    }
    return nullptr;
}

}  // namespace

Trajectory place_trajectory(const std::string& child_id, const std::vector<ScoreRow>& rows,
                            const GrowthChart& chart) {
    Trajectory traj;
    traj.child_id = child_id;
    traj.test_id = chart.test_id;
    for (const auto& row : rows) {
        if (row.meta.child_id != child_id || row.score.test_id != chart.test_id) continue;
        traj.points.push_back(
            {row.meta.acquisition_id, row.meta.group.level, row.score.q, Band::unclassified});
    }
    if (traj.points.empty()) {
        throw UnknownChild("no scored sessions for child " + child_id + " on test " +
                           std::to_string(chart.test_id));
    }

    std::sort(traj.points.begin(), traj.points.end(),
              [](const TrajectoryPoint& a, const TrajectoryPoint& b) {
                  return a.acquisition_id < b.acquisition_id;
              });
    for (std::size_t i = 1; i < traj.points.size(); ++i) {
        if (traj.points[i].acquisition_id == traj.points[i - 1].acquisition_id) {
            throw MonotonicityError("duplicate acquisition_id " +
                                    std::to_string(traj.points[i].acquisition_id) + " for child " +
                                    child_id);
        }
        if (traj.points[i].group_level < traj.points[i - 1].group_level) {
            throw MonotonicityError("group level drops between acquisitions for child " + child_id);
        }
    }

    for (auto& pt : traj.points) {
        if (chart.curves.empty()) continue;
        const ChartPoint* low = curve_at(chart.curves.front(), pt.group_level);
        const ChartPoint* high = curve_at(chart.curves.back(), pt.group_level);
        if (!low || !high) continue;  // suppressed group: stays unclassified
        if (pt.q < low->q) {
            pt.band = Band::below_low;
        } else if (pt.q > high->q) {
            pt.band = Band::above_high;
        } else {
            pt.band = Band::mid;
        }
    }
    return traj;
}

}  // namespace childci
