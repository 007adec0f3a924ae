#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "childci/growth.hpp"
#include "childci/pipeline.hpp"

namespace childci {

inline constexpr const char* kScoreSchema = "childci-q/score/1";
inline constexpr const char* kChartSchema = "childci-q/chart/1";
inline constexpr const char* kTrajectorySchema = "childci-q/trajectory/1";

// Per-session score document: meta plus six scores, null where unscorable.
nlohmann::json score_doc(const SessionMeta& meta, const SessionScores& scores);

// Summary CSV, one row per (session, test). Unscorable tests keep their row
// with empty q/completed fields.
std::string score_csv_header();
void append_score_csv(std::string& out, const SessionMeta& meta, const SessionScores& scores);

// Reads a summary CSV back; rows with empty q are dropped. Throws SchemaError
// with the offending line number.
std::vector<ScoreRow> parse_score_csv(const std::string& text);

nlohmann::json chart_doc(const GrowthChart& chart);
std::string chart_csv(const GrowthChart& chart);  // group,percentile,q,n

nlohmann::json trajectory_doc(const Trajectory& traj);

}  // namespace childci
