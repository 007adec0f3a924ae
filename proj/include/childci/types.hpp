#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace childci {

// Spanish-system educational level with its age range in months.
// Level 2 is 18-24 months; level k (k >= 3) spans (k-1)..k years.
struct AgeGroup {
    int level = 2;
    int months_min = 18;
    int months_max = 24;

    static AgeGroup from_level(int level);  // throws RangeError outside 2..8

    bool operator==(const AgeGroup&) const = default;
};

enum class Gender { male, female, unknown };
enum class Handedness { right, left, both, unknown };
enum class EmotionalState { happy, normal, sad, unknown };
enum class Development { td, ntd, unknown };

struct ScreenDims {
    double width = 0;
    double height = 0;

    bool operator==(const ScreenDims&) const = default;
};

struct SessionMeta {
    std::string child_id;
    int acquisition_id = 1;
    std::string acquisition_date;  // ISO yyyy-mm-dd
    AgeGroup group;
    Gender gender = Gender::unknown;
    Handedness handedness = Handedness::unknown;
    EmotionalState emotional_state = EmotionalState::unknown;
    Development development = Development::unknown;
    ScreenDims screen;

    bool operator==(const SessionMeta&) const = default;
};

enum class TouchPhase { down, move, up };

struct TouchEvent {
    std::int64_t t = 0;  // ms since test start
    int pointer_id = 0;
    TouchPhase phase = TouchPhase::down;
    double x = 0;  // device px
    double y = 0;
    std::optional<double> pressure;

    bool operator==(const TouchEvent&) const = default;
};

struct StylusSample {
    std::int64_t t = 0;  // ms since test start
    double x = 0;
    double y = 0;
    std::optional<double> pressure;

    bool operator==(const StylusSample&) const = default;
};

struct StylusStroke {
    std::vector<StylusSample> samples;  // >= 2, t non-decreasing

    bool operator==(const StylusStroke&) const = default;
};

struct TestRecord {
    int test_id = 1;            // 1..6
    std::int64_t t_start = 0;   // ms, epoch-relative
    double t_real = 0;          // seconds actually taken
    std::vector<TouchEvent> events;     // tests 1-4
    std::vector<StylusStroke> strokes;  // tests 5-6
    std::optional<bool> completed;      // recorded by the app; absent -> derived

    bool operator==(const TestRecord&) const = default;
};

struct SessionLog {
    SessionMeta meta;
    std::vector<TestRecord> tests;  // exactly 6, ordered by test_id

    const TestRecord* find_test(int test_id) const;

    bool operator==(const SessionLog&) const = default;
};

enum class TemplateId { inner_out_black, inner_out_white, outer_in_black, outer_in_white };

const char* to_string(TemplateId id);

// Per-test quality result. q is a percentage in [0,100]; components carry the
// named intermediates (p_time, p_taps, d, k, region fractions, ...) at full precision.
struct QScore {
    int test_id = 0;
    double q = 0;
    bool completed = false;
    std::map<std::string, double> components;
    std::optional<TemplateId> template_id;  // test 5: winning template

    bool operator==(const QScore&) const = default;
};

const char* to_string(Gender v);
const char* to_string(Handedness v);
const char* to_string(EmotionalState v);
const char* to_string(Development v);
const char* to_string(TouchPhase v);

// Closed-set parsing; unrecognized values map to the `unknown` variant.
Gender gender_from_string(const std::string& s);
Handedness handedness_from_string(const std::string& s);
EmotionalState emotional_state_from_string(const std::string& s);
Development development_from_string(const std::string& s);

}  // namespace childci
