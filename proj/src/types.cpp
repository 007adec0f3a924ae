#include "childci/types.hpp"

#include "childci/errors.hpp"

namespace childci {

AgeGroup AgeGroup::from_level(int level) {
    if (level < 2 || level > 8) {
        throw RangeError("educational level " + std::to_string(level) + " outside 2..8");
    }
    AgeGroup g;
    g.level = level;
    if (level == 2) {
        g.months_min = 18;
        g.months_max = 24;
    } else {
        g.months_min = 12 * (level - 1);
        g.months_max = 12 * level;
    }
    return g;
}

const TestRecord* SessionLog::find_test(int test_id) const {
    for (const auto& rec : tests) {
        if (rec.test_id == test_id) return &rec;
    }
    return nullptr;
}

const char* to_string(TemplateId id) {
    switch (id) {
        case TemplateId::inner_out_black: return "inner_out_black";
        case TemplateId::inner_out_white: return "inner_out_white";
        case TemplateId::outer_in_black: return "outer_in_black";
        case TemplateId::outer_in_white: return "outer_in_white";
    }
    return "?";
}

const char* to_string(Gender v) {
    switch (v) {
        case Gender::male: return "male";
        case Gender::female: return "female";
        case Gender::unknown: break;
    }
    return "unknown";
}

const char* to_string(Handedness v) {
    switch (v) {
        case Handedness::right: return "right";
        case Handedness::left: return "left";
        case Handedness::both: return "both";
        case Handedness::unknown: break;
    }
    return "unknown";
}

const char* to_string(EmotionalState v) {
    switch (v) {
        case EmotionalState::happy: return "happy";
        case EmotionalState::normal: return "normal";
        case EmotionalState::sad: return "sad";
        case EmotionalState::unknown: break;
    }
    return "unknown";
}

const char* to_string(Development v) {
    switch (v) {
        case Development::td: return "TD";
        case Development::ntd: return "NTD";
        case Development::unknown: break;
    }
    return "unknown";
}

const char* to_string(TouchPhase v) {
    switch (v) {
        case TouchPhase::down: return "down";
        case TouchPhase::move: return "move";
        case TouchPhase::up: return "up";
    }
    return "?";
}

// Metadata enums are lenient: anything unrecognized maps to the unknown variant,
// so logs from newer app versions still parse.
Gender gender_from_string(const std::string& s) {
    if (s == "male") return Gender::male;
    if (s == "female") return Gender::female;
    return Gender::unknown;
}

Handedness handedness_from_string(const std::string& s) {
    if (s == "right") return Handedness::right;
    if (s == "left") return Handedness::left;
    if (s == "both") return Handedness::both;
    return Handedness::unknown;
}

EmotionalState emotional_state_from_string(const std::string& s) {
    if (s == "happy") return EmotionalState::happy;
    if (s == "normal") return EmotionalState::normal;
    if (s == "sad") return EmotionalState::sad;
    return EmotionalState::unknown;
}

Development development_from_string(const std::string& s) {
    if (s == "TD") return Development::td;
    if (s == "NTD") return Development::ntd;
    return Development::unknown;
}

}  // namespace childci
