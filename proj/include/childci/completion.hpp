#pragma once

#include <optional>

#include "childci/scene.hpp"
#include "childci/types.hpp"

namespace childci {

// One pass over a Test 1 event stream against the mole activation sequence.
// A tap is a `down` event; it hits iff inside the currently active mole.
// Counting stops once the required number of hits has landed.
struct TapOutcome {
    int in_taps = 0;
    int out_taps = 0;
    std::optional<std::int64_t> completing_t;  // ms of the hit that finished the test
};

TapOutcome evaluate_taps(const TestRecord& record, const MoleTestConfig& cfg);

// Test 2: replays grabs (down inside the carrot) dragging the carrot with a
// preserved grab offset. Returns the carrot's final center.
struct DragOutcome {
    double carrot_x = 0;
    double carrot_y = 0;
    bool grabbed = false;
};

DragOutcome evaluate_drag(const TestRecord& record, const DragTestConfig& cfg);

// Tests 3-4: rabbit radius reconstructed from two-pointer pinch geometry.
// Each pinch scales the radius by (final inter-finger distance / initial one);
// single-finger activity leaves it untouched.
double final_pinch_radius(const TestRecord& record, double initial_radius);

// Total finger taps for Tests 2-4. For the pinch tests, two downs from
// distinct pointers within pair_window_ms collapse into one pinch-tap.
int count_taps(const TestRecord& record, bool pair_pinch_downs);

inline constexpr std::int64_t kPinchPairWindowMs = 150;

// Test-specific success predicate for Tests 1-4. A recorded completed flag
// overrides derivation. Throws ConfigMismatch when scene and test_id disagree.
bool derive_completion(const TestRecord& record, const SceneConfig& scene);

}  // namespace childci
