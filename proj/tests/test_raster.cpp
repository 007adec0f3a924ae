#include <cstdint>
#include <vector>

#include "childci/errors.hpp"
#include "childci/raster.hpp"
#include "childci/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace childci;

namespace {

// Strokes scattered over (and slightly beyond) a 1280x800 screen.
std::vector<StylusStroke> random_strokes(Rng& rng) {
    std::vector<StylusStroke> strokes;
    const int n_strokes = rng.uniform_int(1, 4);
    for (int s = 0; s < n_strokes; ++s) {
        StylusStroke stroke;
        const int n_samples = rng.uniform_int(2, 6);
        std::int64_t t = 0;
        for (int i = 0; i < n_samples; ++i) {
            stroke.samples.push_back(
                {t += rng.uniform_int(5, 40), rng.uniform(-100, 1400), rng.uniform(-100, 900),
                 std::nullopt});
        }
        strokes.push_back(std::move(stroke));
    }
    return strokes;
}

}  // namespace

TEST_CASE("parallel rasterization is bit-identical to the serial reference") {
    const ScreenDims screen{1280, 800};
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const auto strokes = random_strokes(rng);
        const double brush = 1 + rng.uniform_int(0, 5);
        const CoverageRaster serial = rasterize(strokes, screen, 64, 64, brush);
        const CoverageRaster parallel = rasterize_parallel(strokes, screen, 64, 64, brush);
        CAPTURE(trial);
        CHECK(serial.painted == parallel.painted);
    }
}

TEST_CASE("rasterization agrees with the every-pixel-every-segment oracle") {
    const ScreenDims screen{1280, 800};
    Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        const auto strokes = random_strokes(rng);
        const double brush = 1 + rng.uniform_int(0, 5);
        const CoverageRaster got = rasterize(strokes, screen, 64, 64, brush);
        const CoverageRaster want = oracle::raster_ref(strokes, screen, 64, 64, brush);
        CAPTURE(trial);
        CHECK(got.painted == want.painted);
    }
}

TEST_CASE("a zero-length segment stamps a disc") {
    // Identity scale: screen dims equal mask dims.
    const ScreenDims screen{64, 64};
    StylusStroke dot;
    dot.samples = {{0, 32, 32, std::nullopt}, {10, 32, 32, std::nullopt}};
    const CoverageRaster got = rasterize({dot}, screen, 64, 64, 5);

    CHECK(got.painted == oracle::raster_ref({dot}, screen, 64, 64, 5).painted);
    // A radius-5 disc covers between pi*4^2 and pi*6^2 pixel centers.
    CHECK(got.painted_count() > 50);
    CHECK(got.painted_count() < 114);
    // The sample point itself is painted, a far corner is not.
    CHECK(got.at(31, 31));
    CHECK_FALSE(got.at(0, 0));
}

TEST_CASE("degenerate inputs paint nothing") {
    const ScreenDims screen{1280, 800};
    CHECK(rasterize({}, screen, 64, 64, 4).painted_count() == 0);

    // Entirely off-screen to the left.
    StylusStroke off;
    off.samples = {{0, -300, 400, std::nullopt}, {10, -200, 400, std::nullopt}};
    CHECK(rasterize({off}, screen, 64, 64, 4).painted_count() == 0);

    // A single-sample stroke has no segments.
    StylusStroke lonely;
    lonely.samples = {{0, 640, 400, std::nullopt}};
    CHECK(rasterize({lonely}, screen, 64, 64, 4).painted_count() == 0);
}

TEST_CASE("rasterize validates its arguments") {
    const ScreenDims screen{1280, 800};
    CHECK_THROWS_AS(rasterize({}, screen, 0, 64, 4), RangeError);
    CHECK_THROWS_AS(rasterize({}, screen, 64, -1, 4), RangeError);
    CHECK_THROWS_AS(rasterize({}, screen, 64, 64, 0.5), RangeError);
}

TEST_CASE("screen coordinates scale onto the mask grid") {
    // A full-width horizontal line at mid-height lands on mask row 32.
    const ScreenDims screen{1280, 800};
    StylusStroke line;
    line.samples = {{0, 0, 400, std::nullopt}, {10, 1280, 400, std::nullopt}};
    const CoverageRaster got = rasterize({line}, screen, 64, 64, 1);
    CHECK(got.at(0, 32));
    CHECK(got.at(32, 32));
    CHECK(got.at(63, 32));
    CHECK_FALSE(got.at(32, 20));
    CHECK(got.painted == oracle::raster_ref({line}, screen, 64, 64, 1).painted);
}
