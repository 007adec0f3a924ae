#include "childci/pipeline.hpp"

#include "childci/drawing_score.hpp"
#include "childci/errors.hpp"
#include "childci/spiral.hpp"
#include "childci/touch_score.hpp"

namespace childci {

SessionScores score_session(const SessionLog& session, const Assets& assets) {
    SessionScores scores;
    for (int test_id = 1; test_id <= 6; ++test_id) {
        const TestRecord* rec = session.find_test(test_id);
        if (!rec) continue;
        try {
            if (rec->t_real > assets.scene.t_max_for(test_id)) {
                throw RangeError("t_real exceeds the test budget");
            }
            QScore q;
            if (test_id <= 4) {
                q = q_touch(*rec, assets.scene);
            } else if (test_id == 5) {
                q = q_spiral(*rec, assets.templates);
            } else {
                const ScreenDims screen =
                    session.meta.screen.width > 0 ? session.meta.screen : assets.screen;
                q = q_drawing(*rec, screen, assets.mask, {}, assets.scene.drawing.brush_radius);
            }
            scores[static_cast<std::size_t>(test_id - 1)] = std::move(q);
        } catch (const Error&) {
            // Unscorable record; reported as null downstream.
        }
    }
    return scores;
}

std::vector<SessionScores> score_sessions_serial(const std::vector<SessionLog>& sessions,
                                                 const Assets& assets) {
    std::vector<SessionScores> out(sessions.size());
    for (std::size_t i = 0; i < sessions.size(); ++i) {
        out[i] = score_session(sessions[i], assets);
    }
    return out;
}

std::vector<SessionScores> score_sessions(const std::vector<SessionLog>& sessions,
                                          const Assets& assets) {
    std::vector<SessionScores> out(sessions.size());
    const auto n = static_cast<std::int64_t>(sessions.size());
    // Sessions are independent; each slot is written by exactly one thread.
    #pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            score_session(sessions[static_cast<std::size_t>(i)], assets);
    }
    return out;
}

}  // namespace childci
