#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "childci/assets.hpp"
#include "childci/types.hpp"

namespace childci {

// Knobs the generator draws behaviour from. All parameters move monotonically
// with skill: better children complete more, act faster, stray less.
struct SkillProfile {
    double skill = 0.5;                       // [0,1]
    std::array<double, 6> completion_prob{};  // per test; tests 5-6 gate drawing at all
    double latency_scale = 1.0;               // seconds per elementary action
    double extra_tap_rate = 0.0;              // Poisson mean of off-target taps
    double spiral_noise_sigma = 0.0;          // canvas units added to the template
    double fill_coverage = 0.0;               // fraction of the tree strokes drawn
    double overspill = 0.0;                   // stray-scribble intensity outside R0

    void validate() const;  // RangeError on out-of-range fields
    static SkillProfile from_skill(double skill);
};

// Identity of one generated acquisition. Child-stable attributes (gender,
// handedness, ...) derive from child_id, so repeated acquisitions agree.
struct SessionSpec {
    std::string child_id;  // "synth-" prefix is enforced
    int acquisition_id = 1;
    int group_level = 2;
    std::uint64_t seed = 0;
};

// Deterministic for fixed (profile, assets, spec); emits six records that
// satisfy every parser invariant. Completion is left to gesture derivation:
// completed tests contain gestures that actually finish, failed ones do not.
SessionLog generate_session(const SkillProfile& profile, const Assets& assets,
                            const SessionSpec& spec);

// Convenience shape: identity derived from the seed alone.
SessionLog generate_session(const SkillProfile& profile, const Assets& assets, std::uint64_t seed);

}  // namespace childci
