#include "childci/session_json.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "childci/errors.hpp"

namespace childci {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(std::string(ctx) + ": missing required field \"" + key + "\"");
    }
    return *it;
}

double require_number(const json& j, const char* key, const char* ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_number()) throw SchemaError(std::string(ctx) + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

std::int64_t require_int(const json& j, const char* key, const char* ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_number_integer()) {
        throw SchemaError(std::string(ctx) + ": \"" + key + "\" must be an integer");
    }
    return v.get<std::int64_t>();
}

std::string require_string(const json& j, const char* key, const char* ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_string()) throw SchemaError(std::string(ctx) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

bool valid_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

TouchPhase phase_from_string(const std::string& s, const char* ctx) {
    if (s == "down") return TouchPhase::down;
    if (s == "move") return TouchPhase::move;
    if (s == "up") return TouchPhase::up;
    throw SchemaError(std::string(ctx) + ": unknown touch phase \"" + s + "\"");
}

void require_finite(double v, const char* what, const char* ctx) {
    if (!std::isfinite(v)) {
        throw SchemaError(std::string(ctx) + ": " + what + " must be finite");
    }
}

TouchEvent parse_event(const json& j, const char* ctx) {
    if (!j.is_object()) throw SchemaError(std::string(ctx) + ": event must be an object");
    TouchEvent e;
    e.t = require_int(j, "t", ctx);
    if (e.t < 0) throw RangeError(std::string(ctx) + ": event time must be >= 0");
    e.pointer_id = static_cast<int>(require_int(j, "pointer_id", ctx));
    e.phase = phase_from_string(require_string(j, "phase", ctx), ctx);
    e.x = require_number(j, "x", ctx);
    e.y = require_number(j, "y", ctx);
    require_finite(e.x, "x", ctx);
    require_finite(e.y, "y", ctx);
    if (j.contains("pressure") && !j.at("pressure").is_null()) {
        const double p = j.at("pressure").get<double>();
        if (!(p >= 0) || !std::isfinite(p)) {
            throw RangeError(std::string(ctx) + ": pressure must be >= 0");
        }
        e.pressure = p;
    }
    return e;
}

StylusStroke parse_stroke(const json& j, const char* ctx) {
    if (!j.is_object()) throw SchemaError(std::string(ctx) + ": stroke must be an object");
    const json& samples = require(j, "samples", ctx);
    if (!samples.is_array()) throw SchemaError(std::string(ctx) + ": samples must be an array");
    StylusStroke stroke;
    for (const auto& s : samples) {
        if (!s.is_array() || s.size() < 3 || s.size() > 4) {
            throw SchemaError(std::string(ctx) + ": sample must be [t, x, y] or [t, x, y, pressure]");
        }
        if (!s[0].is_number_integer()) {
            throw SchemaError(std::string(ctx) + ": sample time must be an integer (ms)");
        }
        StylusSample sample;
        sample.t = s[0].get<std::int64_t>();
        if (sample.t < 0) throw RangeError(std::string(ctx) + ": sample time must be >= 0");
        sample.x = s[1].get<double>();
        sample.y = s[2].get<double>();
        require_finite(sample.x, "x", ctx);
        require_finite(sample.y, "y", ctx);
        if (s.size() == 4 && !s[3].is_null()) {
            const double p = s[3].get<double>();
            if (!(p >= 0) || !std::isfinite(p)) {
                throw RangeError(std::string(ctx) + ": pressure must be >= 0");
            }
            sample.pressure = p;
        }
        stroke.samples.push_back(sample);
    }
    if (stroke.samples.size() < 2) {
        throw SchemaError(std::string(ctx) + ": stroke needs at least 2 samples");
    }
    for (std::size_t i = 1; i < stroke.samples.size(); ++i) {
        if (stroke.samples[i].t < stroke.samples[i - 1].t) {
            throw MonotonicityError(std::string(ctx) + ": stroke timestamps decrease");
        }
    }
    return stroke;
}

// Each pointer's stream must phase-check as (down move* up)* with at most one
// trailing open sequence (the capture may cut off at t_max with a finger down).
void check_pointer_sequences(const std::vector<TouchEvent>& events, const char* ctx) {
    std::map<int, std::int64_t> last_t;
    std::map<int, bool> is_down;
    for (const auto& e : events) {
        auto [it, fresh] = last_t.try_emplace(e.pointer_id, e.t);
        if (!fresh) {
            if (e.t < it->second) {
                throw MonotonicityError(std::string(ctx) + ": pointer " +
                                        std::to_string(e.pointer_id) + " time regresses");
            }
            it->second = e.t;
        }
        bool& down = is_down[e.pointer_id];
        switch (e.phase) {
            case TouchPhase::down:
                if (down) {
                    throw SchemaError(std::string(ctx) + ": pointer " +
                                      std::to_string(e.pointer_id) + " down while already down");
                }
                down = true;
                break;
            case TouchPhase::move:
            case TouchPhase::up:
                if (!down) {
                    throw SchemaError(std::string(ctx) + ": pointer " +
                                      std::to_string(e.pointer_id) + " " + to_string(e.phase) +
                                      " before down");
                }
                if (e.phase == TouchPhase::up) down = false;
                break;
        }
    }
}

TestRecord parse_record(const json& j) {
    if (!j.is_object()) throw SchemaError("test record must be an object");
    TestRecord rec;
    {
        const std::int64_t id = require_int(j, "test_id", "test record");
        if (id < 1 || id > 6) {
            throw RangeError("test_id " + std::to_string(id) + " outside 1..6");
        }
        rec.test_id = static_cast<int>(id);
    }
    const std::string ctx_s = "test " + std::to_string(rec.test_id);
    const char* ctx = ctx_s.c_str();
    rec.t_start = require_int(j, "t_start", ctx);
    rec.t_real = require_number(j, "t_real", ctx);
    if (rec.t_real < 0 || !std::isfinite(rec.t_real)) {
        throw RangeError(ctx_s + ": negative or non-finite duration");
    }
    if (j.contains("completed") && !j.at("completed").is_null()) {
        if (!j.at("completed").is_boolean()) {
            throw SchemaError(ctx_s + ": completed must be a boolean");
        }
        rec.completed = j.at("completed").get<bool>();
    }
    if (j.contains("events")) {
        for (const auto& e : j.at("events")) rec.events.push_back(parse_event(e, ctx));
    }
    if (j.contains("strokes")) {
        for (const auto& s : j.at("strokes")) rec.strokes.push_back(parse_stroke(s, ctx));
    }
    if (rec.test_id <= 4 && !rec.strokes.empty()) {
        throw SchemaError(ctx_s + ": touch test carries stylus strokes");
    }
    if (rec.test_id >= 5 && !rec.events.empty()) {
        throw SchemaError(ctx_s + ": stylus test carries touch events");
    }
    // Ties broken by pointer_id, stable for identical (t, pointer_id).
    std::stable_sort(rec.events.begin(), rec.events.end(),
                     [](const TouchEvent& a, const TouchEvent& b) {
                         if (a.t != b.t) return a.t < b.t;
                         return a.pointer_id < b.pointer_id;
                     });
    check_pointer_sequences(rec.events, ctx);
    return rec;
}

SessionMeta parse_meta(const json& j) {
    if (!j.is_object()) throw SchemaError("meta must be an object");
    SessionMeta m;
    m.child_id = require_string(j, "child_id", "meta");
    if (m.child_id.empty()) throw SchemaError("meta: child_id must be non-empty");
    const std::int64_t acq = require_int(j, "acquisition_id", "meta");
    if (acq < 1) throw RangeError("meta: acquisition_id must be >= 1");
    m.acquisition_id = static_cast<int>(acq);
    m.acquisition_date = require_string(j, "acquisition_date", "meta");
    if (!valid_iso_date(m.acquisition_date)) {
        throw SchemaError("meta: acquisition_date must be YYYY-MM-DD");
    }
    m.group = AgeGroup::from_level(static_cast<int>(require_int(j, "group", "meta")));
    m.gender = gender_from_string(j.value("gender", "unknown"));
    m.handedness = handedness_from_string(j.value("handedness", "unknown"));
    m.emotional_state = emotional_state_from_string(j.value("emotional_state", "unknown"));
    m.development = development_from_string(j.value("development", "unknown"));
    if (j.contains("screen")) {
        const json& sc = j.at("screen");
        m.screen.width = require_number(sc, "width", "meta.screen");
        m.screen.height = require_number(sc, "height", "meta.screen");
        if (!(m.screen.width > 0) || !(m.screen.height > 0)) {
            throw RangeError("meta.screen dimensions must be > 0");
        }
    }
    return m;
}

}  // namespace

SessionLog parse_session(const json& doc) {
    if (!doc.is_object()) throw SchemaError("session document must be an object");
    if (doc.value("schema", "") != kSessionSchema) {
        throw SchemaError(std::string("session schema must be \"") + kSessionSchema + "\"");
    }
    SessionLog log;
    log.meta = parse_meta(require(doc, "meta", "session"));
    const json& tests = require(doc, "tests", "session");
    if (!tests.is_array()) throw SchemaError("session: tests must be an array");
    for (const auto& t : tests) log.tests.push_back(parse_record(t));
    if (log.tests.size() != 6) {
        throw SchemaError("session must contain exactly 6 test records, got " +
                          std::to_string(log.tests.size()));
    }
    std::sort(log.tests.begin(), log.tests.end(),
              [](const TestRecord& a, const TestRecord& b) { return a.test_id < b.test_id; });
    for (int id = 1; id <= 6; ++id) {
        if (log.tests[static_cast<std::size_t>(id - 1)].test_id != id) {
            throw SchemaError("session must contain each test_id 1..6 exactly once");
        }
    }
    return log;
}

SessionLog parse_session_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_session(doc);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed session document: ") + e.what());
    }
}

SessionLog load_session(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open session file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session_text(buf.str());
}

namespace {

json event_to_json(const TouchEvent& e) {
    json j{{"t", e.t},
           {"pointer_id", e.pointer_id},
           {"phase", to_string(e.phase)},
           {"x", e.x},
           {"y", e.y}};
    if (e.pressure) j["pressure"] = *e.pressure;
    return j;
}

json stroke_to_json(const StylusStroke& s) {
    json samples = json::array();
    for (const auto& p : s.samples) {
        json row = json::array({p.t, p.x, p.y});
        if (p.pressure) row.push_back(*p.pressure);
        samples.push_back(std::move(row));
    }
    return json{{"samples", std::move(samples)}};
}

json record_to_json(const TestRecord& r) {
    json j{{"test_id", r.test_id}, {"t_start", r.t_start}, {"t_real", r.t_real}};
    if (r.completed) j["completed"] = *r.completed;
    json events = json::array();
    for (const auto& e : r.events) events.push_back(event_to_json(e));
    json strokes = json::array();
    for (const auto& s : r.strokes) strokes.push_back(stroke_to_json(s));
    j["events"] = std::move(events);
    j["strokes"] = std::move(strokes);
    return j;
}

}  // namespace

json session_to_json(const SessionLog& log) {
    const SessionMeta& m = log.meta;
    json meta{{"child_id", m.child_id},
              {"acquisition_id", m.acquisition_id},
              {"acquisition_date", m.acquisition_date},
              {"group", m.group.level},
              {"gender", to_string(m.gender)},
              {"handedness", to_string(m.handedness)},
              {"emotional_state", to_string(m.emotional_state)},
              {"development", to_string(m.development)}};
    if (m.screen.width > 0 && m.screen.height > 0) {
        meta["screen"] = json{{"width", m.screen.width}, {"height", m.screen.height}};
    }
    json tests = json::array();
    for (const auto& r : log.tests) tests.push_back(record_to_json(r));
    return json{{"schema", kSessionSchema}, {"meta", std::move(meta)}, {"tests", std::move(tests)}};
}

std::string serialize_session(const SessionLog& log) { return session_to_json(log).dump(2) + "\n"; }

void save_session(const SessionLog& log, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write session file: " + path.string());
    out << serialize_session(log);
}

}  // namespace childci
