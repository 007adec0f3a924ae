#pragma once

#include <array>
#include <optional>
#include <vector>

#include "childci/assets.hpp"
#include "childci/types.hpp"

namespace childci {

// Index = test_id - 1; nullopt marks a record the scorer rejected
// (inconsistent with the scene, out-of-range timing, ...).
using SessionScores = std::array<std::optional<QScore>, 6>;

// Scores all six tests of one parsed session. Per-test scoring failures
// become nulls; anything else propagates.
SessionScores score_session(const SessionLog& session, const Assets& assets);

// Batch scoring. The OpenMP variant partitions sessions across threads and is
// bit-identical to the serial reference, which is kept for testing.
std::vector<SessionScores> score_sessions_serial(const std::vector<SessionLog>& sessions,
                                                 const Assets& assets);
std::vector<SessionScores> score_sessions(const std::vector<SessionLog>& sessions,
                                          const Assets& assets);

}  // namespace childci
