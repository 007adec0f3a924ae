#include "childci/completion.hpp"

#include <cmath>
#include <map>

#include "childci/errors.hpp"

namespace childci {

TapOutcome evaluate_taps(const TestRecord& record, const MoleTestConfig& cfg) {
    TapOutcome out;
    const int required = cfg.required_taps;
    for (const auto& e : record.events) {
        if (e.phase != TouchPhase::down) continue;
        if (out.in_taps >= required) break;  // test already over
        const Circle& active = cfg.moles[static_cast<std::size_t>(cfg.activation[
            static_cast<std::size_t>(out.in_taps)])];
        if (active.contains(e.x, e.y)) {
            ++out.in_taps;
            if (out.in_taps == required) out.completing_t = e.t;
        } else {
            ++out.out_taps;
        }
    }
    return out;
}

DragOutcome evaluate_drag(const TestRecord& record, const DragTestConfig& cfg) {
    DragOutcome out;
    out.carrot_x = cfg.carrot.x;
    out.carrot_y = cfg.carrot.y;
    int grabbing_pointer = -1;
    double off_x = 0, off_y = 0;
    for (const auto& e : record.events) {
        switch (e.phase) {
            case TouchPhase::down:
                if (grabbing_pointer < 0 &&
                    Circle{out.carrot_x, out.carrot_y, cfg.carrot.r}.contains(e.x, e.y)) {
                    grabbing_pointer = e.pointer_id;
                    off_x = out.carrot_x - e.x;
                    off_y = out.carrot_y - e.y;
                    out.grabbed = true;
                }
                break;
            case TouchPhase::move:
            case TouchPhase::up:
                if (e.pointer_id == grabbing_pointer) {
                    out.carrot_x = e.x + off_x;
                    out.carrot_y = e.y + off_y;
                    if (e.phase == TouchPhase::up) grabbing_pointer = -1;
                }
                break;
        }
    }
    return out;
}

double final_pinch_radius(const TestRecord& record, double initial_radius) {
    double radius = initial_radius;
    std::map<int, std::pair<double, double>> active;  // pointer -> position
    int fa = -1, fb = -1;                             // the two pinching pointers
    double d0 = 0, d_cur = 0;

    auto dist = [&](int a, int b) {
        const auto& pa = active.at(a);
        const auto& pb = active.at(b);
        return std::hypot(pa.first - pb.first, pa.second - pb.second);
    };
    auto end_pinch = [&] {
        if (fa >= 0 && fb >= 0 && d0 > 0) radius *= d_cur / d0;
        fa = fb = -1;
    };

    for (const auto& e : record.events) {
        switch (e.phase) {
            case TouchPhase::down:
                active[e.pointer_id] = {e.x, e.y};
                if (fa < 0) {
                    fa = e.pointer_id;
                } else if (fb < 0 && e.pointer_id != fa) {
                    fb = e.pointer_id;
                    d0 = d_cur = dist(fa, fb);
                }
                break;
            case TouchPhase::move:
                active[e.pointer_id] = {e.x, e.y};
                if (fa >= 0 && fb >= 0 &&
                    (e.pointer_id == fa || e.pointer_id == fb)) {
                    d_cur = dist(fa, fb);
                }
                break;
            case TouchPhase::up:
                if (e.pointer_id == fa || e.pointer_id == fb) {
                    if (fb >= 0) {
                        end_pinch();
                    } else {
                        fa = -1;
                    }
                }
                active.erase(e.pointer_id);
                break;
        }
    }
    // A pinch still open at record end (capture truncated) applies its last ratio.
    end_pinch();
    return radius;
}

int count_taps(const TestRecord& record, bool pair_pinch_downs) {
    std::vector<const TouchEvent*> downs;
    for (const auto& e : record.events) {
        if (e.phase == TouchPhase::down) downs.push_back(&e);
    }
    if (!pair_pinch_downs) return static_cast<int>(downs.size());
    int taps = 0;
    for (std::size_t i = 0; i < downs.size(); ++i) {
        ++taps;
        if (i + 1 < downs.size() && downs[i + 1]->pointer_id != downs[i]->pointer_id &&
            downs[i + 1]->t - downs[i]->t <= kPinchPairWindowMs) {
            ++i;  // the pair is one pinch-tap
        }
    }
    return taps;
}

bool derive_completion(const TestRecord& record, const SceneConfig& scene) {
    if (record.test_id < 1 || record.test_id > 4) {
        throw ConfigMismatch("derive_completion applies to tests 1..4, got test " +
                             std::to_string(record.test_id));
    }
    if (record.completed) return *record.completed;
    switch (record.test_id) {
        case 1:
            return evaluate_taps(record, scene.tap).in_taps >= scene.tap.required_taps;
        case 2: {
            const DragOutcome d = evaluate_drag(record, scene.drag);
            if (!d.grabbed) return false;
            const double dx = d.carrot_x - scene.drag.rabbit.x;
            const double dy = d.carrot_y - scene.drag.rabbit.y;
            const double reach = scene.drag.carrot.r + scene.drag.rabbit.r;
            return dx * dx + dy * dy <= reach * reach;
        }
        case 3:
        case 4: {
            const PinchTestConfig& cfg = scene.pinch_for(record.test_id);
            const double r = final_pinch_radius(record, cfg.rabbit_initial_radius);
            return cfg.inner_radius <= r && r <= cfg.outer_radius;
        }
    }
    return false;
}

}  // namespace childci
