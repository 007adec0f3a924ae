#include "childci/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "childci/errors.hpp"

namespace childci {

namespace {

struct Segment {
    double x0, y0, x1, y1;
    int row_min, row_max;  // inflated bbox rows, clamped to the raster
    int col_min, col_max;
};

double dist_sq_to_segment(double px, double py, const Segment& s) {
    const double dx = s.x1 - s.x0;
    const double dy = s.y1 - s.y0;
    const double len_sq = dx * dx + dy * dy;
    double t = 0;
    if (len_sq > 0) {
        t = std::clamp(((px - s.x0) * dx + (py - s.y0) * dy) / len_sq, 0.0, 1.0);
    }
    const double cx = s.x0 + t * dx - px;
    const double cy = s.y0 + t * dy - py;
    return cx * cx + cy * cy;
}

std::vector<Segment> build_segments(const std::vector<StylusStroke>& strokes, ScreenDims screen,
                                    int mask_w, int mask_h, double brush_radius) {
    if (mask_w <= 0 || mask_h <= 0) throw RangeError("mask dims must be positive");
    if (!(brush_radius >= 1)) throw RangeError("brush_radius must be >= 1");
    const double sx = screen.width > 0 ? mask_w / screen.width : 1.0;
    const double sy = screen.height > 0 ? mask_h / screen.height : 1.0;

    std::vector<Segment> segs;
    for (const auto& stroke : strokes) {
        for (std::size_t i = 0; i + 1 < stroke.samples.size(); ++i) {
            Segment s{stroke.samples[i].x * sx,     stroke.samples[i].y * sy,
                      stroke.samples[i + 1].x * sx, stroke.samples[i + 1].y * sy,
                      0,                            0,
                      0,                            0};
            const double lo_x = std::min(s.x0, s.x1) - brush_radius;
            const double hi_x = std::max(s.x0, s.x1) + brush_radius;
            const double lo_y = std::min(s.y0, s.y1) - brush_radius;
            const double hi_y = std::max(s.y0, s.y1) + brush_radius;
            s.col_min = std::max(0, static_cast<int>(std::floor(lo_x - 0.5)));
            s.col_max = std::min(mask_w - 1, static_cast<int>(std::ceil(hi_x)));
            s.row_min = std::max(0, static_cast<int>(std::floor(lo_y - 0.5)));
            s.row_max = std::min(mask_h - 1, static_cast<int>(std::ceil(hi_y)));
            if (s.col_min <= s.col_max && s.row_min <= s.row_max) segs.push_back(s);
        }
    }
    return segs;
}

inline void stamp_row(const Segment& s, int y, double r_sq, std::uint8_t* row) {
    const double py = y + 0.5;
    for (int x = s.col_min; x <= s.col_max; ++x) {
        if (dist_sq_to_segment(x + 0.5, py, s) <= r_sq) row[x] = 1;
    }
}

}  // namespace

std::int64_t CoverageRaster::painted_count() const {
    return std::accumulate(painted.begin(), painted.end(), std::int64_t{0});
}

CoverageRaster rasterize(const std::vector<StylusStroke>& strokes, ScreenDims screen, int mask_w,
                         int mask_h, double brush_radius) {
    const auto segs = build_segments(strokes, screen, mask_w, mask_h, brush_radius);
    CoverageRaster out{mask_w, mask_h,
                       std::vector<std::uint8_t>(
                           static_cast<std::size_t>(mask_w) * static_cast<std::size_t>(mask_h), 0)};
    const double r_sq = brush_radius * brush_radius;
    for (const auto& s : segs) {
        for (int y = s.row_min; y <= s.row_max; ++y) {
            stamp_row(s, y, r_sq, out.painted.data() + static_cast<std::size_t>(y) * mask_w);
        }
    }
    return out;
}

CoverageRaster rasterize_parallel(const std::vector<StylusStroke>& strokes, ScreenDims screen,
                                  int mask_w, int mask_h, double brush_radius) {
    const auto segs = build_segments(strokes, screen, mask_w, mask_h, brush_radius);
    CoverageRaster out{mask_w, mask_h,
                       std::vector<std::uint8_t>(
                           static_cast<std::size_t>(mask_w) * static_cast<std::size_t>(mask_h), 0)};
    const double r_sq = brush_radius * brush_radius;
    // Row-partitioned: every row is written by exactly one thread, and the
    // painted-pixel predicate is shared with the serial path, so the result
    // is bit-identical.
    #pragma omp parallel for schedule(static)
    for (int y = 0; y < mask_h; ++y) {
        std::uint8_t* row = out.painted.data() + static_cast<std::size_t>(y) * mask_w;
        for (const auto& s : segs) {
            if (y < s.row_min || y > s.row_max) continue;
            stamp_row(s, y, r_sq, row);
        }
    }
    return out;
}

}  // namespace childci
