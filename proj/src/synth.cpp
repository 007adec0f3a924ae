#include "childci/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "childci/errors.hpp"
#include "childci/rng.hpp"

namespace childci {

void SkillProfile::validate() const {
    if (!(skill >= 0 && skill <= 1)) throw RangeError("skill must be in [0,1]");
    for (const double p : completion_prob) {
        if (!(p >= 0 && p <= 1)) throw RangeError("completion_prob must be in [0,1]");
    }
    if (!(latency_scale > 0)) throw RangeError("latency_scale must be positive");
    if (!(extra_tap_rate >= 0)) throw RangeError("extra_tap_rate must be >= 0");
    if (!(spiral_noise_sigma >= 0)) throw RangeError("spiral_noise_sigma must be >= 0");
    if (!(fill_coverage >= 0 && fill_coverage <= 1)) throw RangeError("fill_coverage must be in [0,1]");
    if (!(overspill >= 0 && overspill <= 1)) throw RangeError("overspill must be in [0,1]");
}

SkillProfile SkillProfile::from_skill(double skill) {
    if (!(skill >= 0 && skill <= 1)) throw RangeError("skill must be in [0,1]");
    SkillProfile p;
    p.skill = skill;
    const double touch = std::min(1.0, 0.08 + 1.05 * skill);
    p.completion_prob = {touch, touch, touch, touch, 1.0, 1.0};
    p.latency_scale = 0.3 + 1.2 * (1.0 - skill);
    p.extra_tap_rate = 3.5 * (1.0 - skill);
    // Geometric in skill: sigma spans 6.0 .. 0.02 canvas units.
    p.spiral_noise_sigma = 6.0 * std::pow(0.02 / 6.0, skill);
    p.fill_coverage = 0.15 + 0.85 * skill;
    p.overspill = 0.5 * (1.0 - skill);
    return p;
}

namespace {

std::int64_t ms(double seconds) { return std::llround(seconds * 1000.0); }

double round3(double x) { return std::llround(x * 1000.0) / 1000.0; }

// Think-then-act pause between elementary actions.
double action_gap_s(Rng& rng, const SkillProfile& prof) {
    return prof.latency_scale * (0.45 + 0.25 * std::abs(rng.normal()));
}

// Gaussian aim error, radially clamped so intended hits stay hits.
std::pair<double, double> aim(Rng& rng, double cx, double cy, double sigma, double max_r) {
    double ox = rng.normal(0, sigma);
    double oy = rng.normal(0, sigma);
    const double d = std::hypot(ox, oy);
    if (d > max_r) {
        ox *= max_r / d;
        oy *= max_r / d;
    }
    return {cx + ox, cy + oy};
}

void push_tap(std::vector<TouchEvent>& events, Rng& rng, std::int64_t& t, int pointer, double x,
              double y) {
    events.push_back({t, pointer, TouchPhase::down, x, y, std::nullopt});
    t += rng.uniform_int(60, 110);
    events.push_back({t, pointer, TouchPhase::up, x, y, std::nullopt});
}

TestRecord gen_tap_test(Rng& rng, const SkillProfile& prof, const SceneConfig& scene,
                        ScreenDims screen) {
    TestRecord rec;
    rec.test_id = 1;
    const double t_max = scene.t_max_for(1);
    const std::int64_t budget = ms(t_max) - 500;
    const auto& cfg = scene.tap;
    const int required = cfg.required_taps;

    const bool complete = rng.bernoulli(prof.completion_prob[0]);
    const int hits = complete ? required : rng.uniform_int(0, std::max(0, required - 1));
    const int strays = rng.poisson(prof.extra_tap_rate);

    // Interleave; when the run completes, the closing hit stays last so every
    // stray still lands inside the scored window.
    std::vector<int> kind(static_cast<std::size_t>(complete ? hits - 1 : hits), 0);
    kind.insert(kind.end(), static_cast<std::size_t>(strays), 1);
    for (int i = static_cast<int>(kind.size()) - 1; i > 0; --i) {
        std::swap(kind[static_cast<std::size_t>(i)],
                  kind[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    }
    if (complete) kind.push_back(0);

    const double aim_sigma = 6.0 + 18.0 * (1.0 - prof.skill);
    std::int64_t t = ms(action_gap_s(rng, prof));
    int hit_idx = 0;
    std::int64_t completing_t = -1;
    for (const int k : kind) {
        if (t >= budget) break;
        double x = 0;
        double y = 0;
        if (k == 0) {
            const auto& mole = cfg.moles[static_cast<std::size_t>(cfg.activation[hit_idx])];
            std::tie(x, y) = aim(rng, mole.x, mole.y, aim_sigma, mole.r * 0.75);
            ++hit_idx;
        } else {
            // Bottom strip, clear of every burrow.
            x = rng.uniform(60.0, screen.width - 60.0);
            y = rng.uniform(screen.height - 110.0, screen.height - 20.0);
        }
        const std::int64_t t_down = t;
        push_tap(rec.events, rng, t, 0, x, y);
        if (k == 0 && hit_idx == required) completing_t = t_down;
        t += ms(action_gap_s(rng, prof));
    }
    rec.t_real = completing_t >= 0 ? static_cast<double>(completing_t) / 1000.0 : t_max;
    return rec;
}

TestRecord gen_drag_test(Rng& rng, const SkillProfile& prof, const SceneConfig& scene,
                         ScreenDims screen) {
    (void)screen;
    TestRecord rec;
    rec.test_id = 2;
    const double t_max = scene.t_max_for(2);
    const std::int64_t budget = ms(t_max) - 500;
    const auto& cfg = scene.drag;

    const bool complete = rng.bernoulli(prof.completion_prob[1]);
    std::int64_t t = ms(action_gap_s(rng, prof));

    // Missed grabs: taps near but outside the carrot.
    const int misses = rng.poisson(prof.extra_tap_rate * 0.4);
    for (int i = 0; i < misses && t < budget / 2; ++i) {
        const double angle = rng.uniform(0.0, 2.0 * M_PI);
        const double dist = cfg.carrot.r * rng.uniform(1.3, 2.2);
        push_tap(rec.events, rng, t, 0, cfg.carrot.x + std::cos(angle) * dist,
                 cfg.carrot.y + std::sin(angle) * dist);
        t += ms(action_gap_s(rng, prof));
    }

    // The drag itself; the grab offset is preserved, so steering the finger to
    // rabbit-center + offset parks the carrot dead on the rabbit.
    const auto [gx, gy] = aim(rng, cfg.carrot.x, cfg.carrot.y, cfg.carrot.r * 0.25,
                              cfg.carrot.r * 0.6);
    const double off_x = gx - cfg.carrot.x;
    const double off_y = gy - cfg.carrot.y;
    double end_x = cfg.rabbit.x + off_x;
    double end_y = cfg.rabbit.y + off_y;
    if (!complete) {
        const double f = rng.uniform(0.15, 0.55);
        end_x = gx + (cfg.rabbit.x - cfg.carrot.x) * f;
        end_y = gy + (cfg.rabbit.y - cfg.carrot.y) * f;
    }

    rec.events.push_back({t, 0, TouchPhase::down, gx, gy, std::nullopt});
    const int steps = rng.uniform_int(10, 16);
    const std::int64_t dur = ms(prof.latency_scale * (1.1 + 0.5 * std::abs(rng.normal())));
    const double wobble = 3.0 + 9.0 * (1.0 - prof.skill);
    for (int i = 1; i <= steps; ++i) {
        const double f = static_cast<double>(i) / steps;
        double x = gx + (end_x - gx) * f;
        double y = gy + (end_y - gy) * f;
        if (i < steps) {  // keep the endpoint exact
            x += rng.normal(0, wobble);
            y += rng.normal(0, wobble);
        }
        rec.events.push_back({t + std::max<std::int64_t>(1, dur * i / steps), 0, TouchPhase::move,
                              x, y, std::nullopt});
    }
    std::int64_t t_up = t + dur + rng.uniform_int(30, 80);
    rec.events.push_back({t_up, 0, TouchPhase::up, end_x, end_y, std::nullopt});

    rec.t_real = complete ? static_cast<double>(t_up) / 1000.0 : t_max;
    return rec;
}

TestRecord gen_pinch_test(int test_id, Rng& rng, const SkillProfile& prof,
                          const SceneConfig& scene, ScreenDims screen) {
    TestRecord rec;
    rec.test_id = test_id;
    const double t_max = scene.t_max_for(test_id);
    const std::int64_t budget = ms(t_max) - 500;
    const auto& cfg = scene.pinch_for(test_id);

    const bool complete = rng.bernoulli(prof.completion_prob[static_cast<std::size_t>(test_id - 1)]);
    std::int64_t t = ms(action_gap_s(rng, prof));

    // Fumbled single-finger touches; they count as taps but leave the rabbit alone.
    const int fumbles = rng.poisson(prof.extra_tap_rate * 0.4);
    const double cx = screen.width / 2;
    const double cy = screen.height / 2;
    for (int i = 0; i < fumbles && t < budget / 2; ++i) {
        const double angle = rng.uniform(0.0, 2.0 * M_PI);
        const double dist = rng.uniform(150.0, 300.0);
        push_tap(rec.events, rng, t, 0, cx + std::cos(angle) * dist, cy + std::sin(angle) * dist);
        t += ms(action_gap_s(rng, prof));
    }

    const double lo = cfg.inner_radius;
    const double hi = cfg.outer_radius;
    const double margin = 0.12 * (hi - lo);
    double target = 0;
    if (complete) {
        target = rng.uniform(lo + margin, hi - margin);
    } else if (cfg.rabbit_initial_radius < lo) {  // zoom in, stopped short
        target = rng.uniform(cfg.rabbit_initial_radius * 1.05, lo - margin);
    } else {  // zoom out, not far enough
        target = rng.uniform(hi + margin, cfg.rabbit_initial_radius * 0.95);
    }
    const double factor = target / cfg.rabbit_initial_radius;

    const double d0 = rng.uniform(160.0, 240.0);
    rec.events.push_back({t, 1, TouchPhase::down, cx - d0 / 2, cy, std::nullopt});
    t += rng.uniform_int(20, 90);  // inside the pinch pairing window
    rec.events.push_back({t, 2, TouchPhase::down, cx + d0 / 2, cy, std::nullopt});

    const int steps = rng.uniform_int(8, 14);
    const std::int64_t dur = ms(prof.latency_scale * (1.0 + 0.4 * std::abs(rng.normal())));
    const std::int64_t t0 = t;
    for (int i = 1; i <= steps; ++i) {
        const double sep = d0 * (1.0 + (factor - 1.0) * (static_cast<double>(i) / steps));
        const std::int64_t ti = t0 + std::max<std::int64_t>(1, dur * i / steps);
        rec.events.push_back({ti, 1, TouchPhase::move, cx - sep / 2, cy, std::nullopt});
        rec.events.push_back({ti + 5, 2, TouchPhase::move, cx + sep / 2, cy, std::nullopt});
        t = ti + 5;
    }
    const double sep_end = d0 * factor;
    t += rng.uniform_int(20, 60);
    rec.events.push_back({t, 1, TouchPhase::up, cx - sep_end / 2, cy, std::nullopt});
    t += rng.uniform_int(5, 30);
    rec.events.push_back({t, 2, TouchPhase::up, cx + sep_end / 2, cy, std::nullopt});

    rec.t_real = complete ? static_cast<double>(t) / 1000.0 : t_max;
    return rec;
}

TestRecord gen_spiral_test(Rng& rng, const SkillProfile& prof, const Assets& assets) {
    TestRecord rec;
    rec.test_id = 5;
    const double t_max = assets.scene.t_max_for(5);
    if (!rng.bernoulli(prof.completion_prob[4])) {
        rec.t_real = t_max;  // never put pen to glass
        return rec;
    }

    const auto& tmpl = assets.templates.templates[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    const double scale = 0.7 * std::min(assets.screen.width, assets.screen.height) /
                         std::max(tmpl.canvas_w, tmpl.canvas_h);
    const double ox = (assets.screen.width - tmpl.canvas_w * scale) / 2;
    const double oy = (assets.screen.height - tmpl.canvas_h * scale) / 2;

    const std::int64_t start = ms(action_gap_s(rng, prof));
    const std::int64_t dur = ms(prof.latency_scale * (2.5 + 0.8 * std::abs(rng.normal())));
    const auto n = tmpl.points.size();
    StylusStroke stroke;
    stroke.samples.reserve(n);
    std::int64_t prev_t = start - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = tmpl.points[i].x + rng.normal(0, prof.spiral_noise_sigma);
        const double y = tmpl.points[i].y + rng.normal(0, prof.spiral_noise_sigma);
        std::int64_t ti = start + dur * static_cast<std::int64_t>(i) / static_cast<std::int64_t>(n - 1);
        ti = std::max(ti, prev_t + 1);
        prev_t = ti;
        stroke.samples.push_back({ti, ox + x * scale, oy + y * scale, round3(rng.uniform(0.35, 0.75))});
    }
    rec.strokes.push_back(std::move(stroke));
    rec.t_real = std::min(static_cast<double>(prev_t) / 1000.0, t_max);
    return rec;
}

TestRecord gen_drawing_test(Rng& rng, const SkillProfile& prof, const Assets& assets) {
    TestRecord rec;
    rec.test_id = 6;
    const double t_max = assets.scene.t_max_for(6);
    if (!rng.bernoulli(prof.completion_prob[5])) {
        rec.t_real = t_max;
        return rec;
    }

    const auto& mask = assets.mask;
    const double brush = assets.scene.drawing.brush_radius;
    const int step = std::max(1, static_cast<int>(std::lround(brush)));
    const double sx = assets.screen.width / mask.width;
    const double sy = assets.screen.height / mask.height;

    // Boustrophedon fill plan: one stroke per R0 run on every step-th row,
    // endpoints pulled in by the brush radius so paint stays on the figure.
    struct Run {
        double y, x0, x1;
    };
    std::vector<Run> runs;
    for (int y = step / 2; y < mask.height; y += step) {
        int x = 0;
        while (x < mask.width) {
            if (mask.at(x, y) != Region::r0) {
                ++x;
                continue;
            }
            const int xa = x;
            while (x < mask.width && mask.at(x, y) == Region::r0) ++x;
            const int xb = x - 1;
            double x0 = xa + brush;
            double x1 = xb + 1 - brush;
            if (x1 < x0) x0 = x1 = (xa + xb + 1) / 2.0;
            runs.push_back({y + 0.5, x0, x1});
        }
    }

    const auto n_used = static_cast<std::size_t>(std::clamp<long long>(
        std::llround(prof.fill_coverage * static_cast<double>(runs.size())), 0,
        static_cast<long long>(runs.size())));

    const std::int64_t budget = ms(t_max) - 2000;
    const double wobble = 1.2 * (1.0 - prof.skill);
    std::int64_t t = ms(action_gap_s(rng, prof));
    for (std::size_t i = 0; i < n_used && t < budget; ++i) {
        const Run& run = runs[i];
        const double y = (run.y + rng.normal(0, wobble)) * sy;
        const double xa = (i % 2 == 0 ? run.x0 : run.x1) * sx;
        const double xb = (i % 2 == 0 ? run.x1 : run.x0) * sx;
        const std::int64_t dur =
            std::max<std::int64_t>(1, ms(prof.latency_scale * (0.18 + 0.1 * rng.uniform())));
        StylusStroke stroke;
        stroke.samples.push_back({t, xa, y, round3(rng.uniform(0.35, 0.75))});
        stroke.samples.push_back({t + dur, xb, y, round3(rng.uniform(0.35, 0.75))});
        rec.strokes.push_back(std::move(stroke));
        t += dur + std::max<std::int64_t>(1, ms(prof.latency_scale * 0.12 * (0.6 + rng.uniform())));
    }

    // Stray scribbles in the outer bands.
    const int scribbles = rng.poisson(prof.overspill * 18.0);
    for (int i = 0; i < scribbles && t < budget; ++i) {
        double px = mask.width / 2.0;
        double py = 2.0;
        for (int tries = 0; tries < 60; ++tries) {
            const int x = rng.uniform_int(0, mask.width - 1);
            const int y = rng.uniform_int(0, mask.height - 1);
            const Region r = mask.at(x, y);
            if (r >= Region::r1 && r <= Region::r4) {
                px = x + 0.5;
                py = y + 0.5;
                break;
            }
        }
        StylusStroke stroke;
        const std::int64_t dur =
            std::max<std::int64_t>(6, ms(prof.latency_scale * (0.3 + 0.2 * rng.uniform())));
        for (int s = 0; s < 6; ++s) {
            stroke.samples.push_back(
                {t + dur * s / 5, px * sx, py * sy, round3(rng.uniform(0.35, 0.75))});
            const double angle = rng.uniform(0.0, 2.0 * M_PI);
            const double hop = rng.uniform(2.0, 5.0);
            px = std::clamp(px + std::cos(angle) * hop, 0.0, mask.width - 1.0);
            py = std::clamp(py + std::sin(angle) * hop, 0.0, mask.height - 1.0);
        }
        rec.strokes.push_back(std::move(stroke));
        t += dur + std::max<std::int64_t>(1, ms(prof.latency_scale * 0.1));
    }

    rec.t_real = rec.strokes.empty() ? t_max : std::min(static_cast<double>(t) / 1000.0, t_max);
    return rec;
}

std::string synth_date(int acquisition_id) {
    using namespace std::chrono;
    const sys_days base = sys_days{year{2025} / 1 / 15};
    const year_month_day ymd{base + days{90 * (acquisition_id - 1)}};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

}  // namespace

SessionLog generate_session(const SkillProfile& profile, const Assets& assets,
                            const SessionSpec& spec) {
    profile.validate();
    assets.scene.validate();
    assets.templates.validate();
    assets.mask.validate();
    if (spec.child_id.rfind("synth-", 0) != 0) {
        throw SchemaError("synthetic child_id must start with 'synth-'");
    }

    SessionLog log;
    log.meta.child_id = spec.child_id;
    log.meta.acquisition_id = spec.acquisition_id;
    log.meta.acquisition_date = synth_date(spec.acquisition_id);
    log.meta.group = AgeGroup::from_level(spec.group_level);
    log.meta.screen = assets.screen;

    // Child-stable attributes come from the id, not the session seed, so the
    // same child looks the same across acquisitions.
    Rng attrs(derive_seed(hash64(spec.child_id), 0));
    log.meta.gender = attrs.uniform() < 0.5 ? Gender::male : Gender::female;
    const double hand = attrs.uniform();
    log.meta.handedness = hand < 0.80   ? Handedness::right
                          : hand < 0.95 ? Handedness::left
                                        : Handedness::both;
    const double mood = attrs.uniform();
    log.meta.emotional_state = mood < 0.40   ? EmotionalState::happy
                               : mood < 0.90 ? EmotionalState::normal
                                             : EmotionalState::sad;
    log.meta.development = attrs.uniform() < 0.85 ? Development::td : Development::ntd;

    const std::int64_t epoch = 1735689600000LL +
                               86400000LL * 90 * (spec.acquisition_id - 1) +
                               static_cast<std::int64_t>(derive_seed(spec.seed, 100) % 43200000ULL);
    for (int test_id = 1; test_id <= 6; ++test_id) {
        Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(test_id)));
        TestRecord rec;
        switch (test_id) {
            case 1: rec = gen_tap_test(rng, profile, assets.scene, assets.screen); break;
            case 2: rec = gen_drag_test(rng, profile, assets.scene, assets.screen); break;
            case 3:
            case 4: rec = gen_pinch_test(test_id, rng, profile, assets.scene, assets.screen); break;
            case 5: rec = gen_spiral_test(rng, profile, assets); break;
            default: rec = gen_drawing_test(rng, profile, assets); break;
        }
        rec.t_start = epoch + (test_id - 1) * 180000LL;
        log.tests.push_back(std::move(rec));
    }
    return log;
}

SessionLog generate_session(const SkillProfile& profile, const Assets& assets,
                            std::uint64_t seed) {
    SessionSpec spec;
    char buf[32];
    std::snprintf(buf, sizeof buf, "synth-c%016llx", static_cast<unsigned long long>(seed));
    spec.child_id = buf;
    spec.acquisition_id = 1;
    Rng rng(derive_seed(seed, 7));
    spec.group_level = rng.uniform_int(2, 8);
    spec.seed = seed;
    return generate_session(profile, assets, spec);
}

}  // namespace childci
