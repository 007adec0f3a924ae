#include "childci/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "childci/errors.hpp"

namespace childci {

using nlohmann::json;

namespace {

std::string fmt_q(double q) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", q);
    return buf;
}

std::string fmt_percentile(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

json meta_to_json(const SessionMeta& m) {
    return json{{"child_id", m.child_id},
                {"acquisition_id", m.acquisition_id},
                {"acquisition_date", m.acquisition_date},
                {"group", m.group.level},
                {"gender", to_string(m.gender)},
                {"handedness", to_string(m.handedness)},
                {"emotional_state", to_string(m.emotional_state)},
                {"development", to_string(m.development)}};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

json score_doc(const SessionMeta& meta, const SessionScores& scores) {
    json out{{"schema", kScoreSchema}, {"meta", meta_to_json(meta)}};
    json arr = json::array();
    for (const auto& s : scores) {
        if (!s) {
            arr.push_back(nullptr);
            continue;
        }
        json one{{"test_id", s->test_id},
                 {"q", s->q},
                 {"completed", s->completed},
                 {"components", json(s->components)}};
        if (s->template_id) one["template_id"] = to_string(*s->template_id);
        arr.push_back(std::move(one));
    }
    out["scores"] = std::move(arr);
    return out;
}

std::string score_csv_header() {
    return "child_id,acquisition_id,acquisition_date,group,gender,handedness,"
           "emotional_state,development,test_id,q,completed";
}

void append_score_csv(std::string& out, const SessionMeta& meta, const SessionScores& scores) {
    std::string prefix = meta.child_id;
    prefix += ',';
    prefix += std::to_string(meta.acquisition_id);
    prefix += ',';
    prefix += meta.acquisition_date;
    prefix += ',';
    prefix += std::to_string(meta.group.level);
    prefix += ',';
    prefix += to_string(meta.gender);
    prefix += ',';
    prefix += to_string(meta.handedness);
    prefix += ',';
    prefix += to_string(meta.emotional_state);
    prefix += ',';
    prefix += to_string(meta.development);
    for (int test_id = 1; test_id <= 6; ++test_id) {
        const auto& s = scores[static_cast<std::size_t>(test_id - 1)];
        out += prefix;
        out += ',';
        out += std::to_string(test_id);
        out += ',';
        if (s) {
            out += fmt_q(s->q);
            out += ',';
            out += s->completed ? "true" : "false";
        } else {
            out += ',';
        }
        out += '\n';
    }
}

std::vector<ScoreRow> parse_score_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<ScoreRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != score_csv_header()) throw SchemaError("score csv: unexpected header");
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 11) {
            throw SchemaError("score csv line " + std::to_string(line_no) +
                              ": expected 11 fields, got " + std::to_string(fields.size()));
        }
        if (fields[9].empty()) continue;  // unscorable
        try {
            ScoreRow row;
            row.meta.child_id = fields[0];
            row.meta.acquisition_id = std::stoi(fields[1]);
            row.meta.acquisition_date = fields[2];
            row.meta.group = AgeGroup::from_level(std::stoi(fields[3]));
            row.meta.gender = gender_from_string(fields[4]);
            row.meta.handedness = handedness_from_string(fields[5]);
            row.meta.emotional_state = emotional_state_from_string(fields[6]);
            row.meta.development = development_from_string(fields[7]);
            row.score.test_id = std::stoi(fields[8]);
            if (row.score.test_id < 1 || row.score.test_id > 6) {
                throw RangeError("test_id out of range");
            }
            row.score.q = std::stod(fields[9]);
            if (fields[10] == "true") {
                row.score.completed = true;
            } else if (fields[10] == "false") {
                row.score.completed = false;
            } else {
                throw SchemaError("completed must be true or false");
            }
            rows.push_back(std::move(row));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw SchemaError("score csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

json chart_doc(const GrowthChart& chart) {
    json curves = json::array();
    for (std::size_t i = 0; i < chart.percentiles.size(); ++i) {
        json points = json::array();
        for (const auto& pt : chart.curves[i]) {
            points.push_back(json{{"group", pt.group_level}, {"q", pt.q}});
        }
        curves.push_back(json{{"percentile", chart.percentiles[i]}, {"points", std::move(points)}});
    }
    json counts = json::array();
    for (const auto& [level, n] : chart.sample_counts) {
        counts.push_back(json{{"group", level}, {"n", n}});
    }
    return json{{"schema", kChartSchema},
                {"test_id", chart.test_id},
                {"min_n", chart.min_n},
                {"percentiles", chart.percentiles},
                {"curves", std::move(curves)},
                {"sample_counts", std::move(counts)}};
}

std::string chart_csv(const GrowthChart& chart) {
    std::string out = "group,percentile,q,n\n";
    if (chart.curves.empty()) return out;
    for (std::size_t j = 0; j < chart.curves.front().size(); ++j) {
        const int level = chart.curves.front()[j].group_level;
        const auto it = chart.sample_counts.find(level);
        const int n = it == chart.sample_counts.end() ? 0 : it->second;
        for (std::size_t i = 0; i < chart.percentiles.size(); ++i) {
            out += std::to_string(level);
            out += ',';
            out += fmt_percentile(chart.percentiles[i]);
            out += ',';
            out += fmt_q(chart.curves[i][j].q);
            out += ',';
            out += std::to_string(n);
            out += '\n';
        }
    }
    return out;
}

json trajectory_doc(const Trajectory& traj) {
    json points = json::array();
    for (const auto& pt : traj.points) {
        points.push_back(json{{"acquisition_id", pt.acquisition_id},
                              {"group", pt.group_level},
                              {"q", pt.q},
                              {"band", to_string(pt.band)}});
    }
    return json{{"schema", kTrajectorySchema},
                {"child_id", traj.child_id},
                {"test_id", traj.test_id},
                {"points", std::move(points)}};
}

}  // namespace childci
