#pragma once

// Brute-force references used only by the tests. Each one recomputes its
// result from the definition, without reusing the library's algorithmic
// shortcuts (dynamic programming, BFS, bbox clipping, ...).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "childci/dtw.hpp"
#include "childci/raster.hpp"
#include "childci/region_mask.hpp"
#include "childci/types.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// DTW by exhaustive enumeration.
//
// Every monotone warping-path prefix is walked explicitly; best[i][j] keeps
// the minimum running sum over all prefixes ending at (i,j). Sums accumulate
// in forward path order, the same left fold the DP performs, and fl-rounding
// is monotone, so agreement in d is exact rather than approximate. k follows
// the documented diagonal-first backtrace over the enumerated minima.

struct DtwRef {
    double d = 0;
    std::size_t k = 0;
};

inline DtwRef dtw_enum(const std::vector<childci::Point>& a,
                       const std::vector<childci::Point>& b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    std::vector<double> cost(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cost[i * n + j] = std::hypot(a[i].x - b[j].x, a[i].y - b[j].y);
        }
    }

    std::vector<double> best(m * n, std::numeric_limits<double>::infinity());
    struct Frame {
        std::size_t i, j;
        double sum;
    };
    std::vector<Frame> stack{{0, 0, cost[0]}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        double& slot = best[f.i * n + f.j];
        if (f.sum < slot) slot = f.sum;
        // No pruning: every path prefix is visited, keeping this a true
        // enumeration instead of dynamic programming in disguise.
        if (f.i + 1 < m) stack.push_back({f.i + 1, f.j, f.sum + cost[(f.i + 1) * n + f.j]});
        if (f.j + 1 < n) stack.push_back({f.i, f.j + 1, f.sum + cost[f.i * n + f.j + 1]});
        if (f.i + 1 < m && f.j + 1 < n) {
            stack.push_back({f.i + 1, f.j + 1, f.sum + cost[(f.i + 1) * n + f.j + 1]});
        }
    }

    std::size_t i = m - 1;
    std::size_t j = n - 1;
    std::size_t k = 1;
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = best[(i - 1) * n + (j - 1)];
            const double up = best[(i - 1) * n + j];
            const double left = best[i * n + (j - 1)];
            if (diag <= up && diag <= left) {
                --i;
                --j;
            } else if (up <= left) {
                --i;
            } else {
                --j;
            }
        }
        ++k;
    }
    return {best[(m - 1) * n + (n - 1)], k};
}

// ---------------------------------------------------------------------------
// Percentile with closest-rank interpolation, carried out in long double.

inline double percentile_ref(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    const long double r =
        static_cast<long double>(p) / 100.0L * static_cast<long double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(r);
    if (lo + 1 >= values.size()) return values.back();
    const long double frac = r - static_cast<long double>(lo);
    return static_cast<double>(values[lo] +
                               frac * (static_cast<long double>(values[lo + 1]) - values[lo]));
}

// ---------------------------------------------------------------------------
// Rasterization by testing every pixel against every segment; no bounding
// boxes, no row clipping.

inline double seg_dist_sq(double px, double py, double x0, double y0, double x1, double y1) {
    const double dx = x1 - x0;
    const double dy = y1 - y0;
    const double len_sq = dx * dx + dy * dy;
    double t = 0;
    if (len_sq > 0) {
        t = std::clamp(((px - x0) * dx + (py - y0) * dy) / len_sq, 0.0, 1.0);
    }
    const double cx = x0 + t * dx - px;
    const double cy = y0 + t * dy - py;
    return cx * cx + cy * cy;
}

inline childci::CoverageRaster raster_ref(const std::vector<childci::StylusStroke>& strokes,
                                          childci::ScreenDims screen, int w, int h,
                                          double brush_radius) {
    const double sx = screen.width > 0 ? w / screen.width : 1.0;
    const double sy = screen.height > 0 ? h / screen.height : 1.0;
    const double r_sq = brush_radius * brush_radius;
    childci::CoverageRaster out{
        w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0)};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bool hit = false;
            for (const auto& stroke : strokes) {
                for (std::size_t i = 0; !hit && i + 1 < stroke.samples.size(); ++i) {
                    hit = seg_dist_sq(x + 0.5, y + 0.5, stroke.samples[i].x * sx,
                                      stroke.samples[i].y * sy, stroke.samples[i + 1].x * sx,
                                      stroke.samples[i + 1].y * sy) <= r_sq;
                }
                if (hit) break;
            }
            out.painted[static_cast<std::size_t>(y) * w + x] = hit ? 1 : 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Region bands by brute-force chessboard distance: every pixel against every
// R0 pixel.

inline std::vector<std::uint8_t> bands_ref(const childci::CoverageRaster& r0,
                                           const std::array<int, 4>& widths) {
    std::vector<std::pair<int, int>> sources;
    for (int y = 0; y < r0.height; ++y) {
        for (int x = 0; x < r0.width; ++x) {
            if (r0.at(x, y)) sources.emplace_back(x, y);
        }
    }
    std::array<int, 4> cum{};
    cum[0] = widths[0];
    for (int i = 1; i < 4; ++i) cum[i] = cum[i - 1] + widths[i];

    std::vector<std::uint8_t> labels(
        static_cast<std::size_t>(r0.width) * static_cast<std::size_t>(r0.height),
        static_cast<std::uint8_t>(childci::Region::outside));
    for (int y = 0; y < r0.height; ++y) {
        for (int x = 0; x < r0.width; ++x) {
            auto& slot = labels[static_cast<std::size_t>(y) * r0.width + x];
            if (r0.at(x, y)) {
                slot = static_cast<std::uint8_t>(childci::Region::r0);
                continue;
            }
            int d = std::numeric_limits<int>::max();
            for (const auto& [sx, sy] : sources) {
                d = std::min(d, std::max(std::abs(x - sx), std::abs(y - sy)));
            }
            for (int band = 0; band < 4; ++band) {
                if (d <= cum[band]) {
                    slot = static_cast<std::uint8_t>(static_cast<int>(childci::Region::r1) + band);
                    break;
                }
            }
        }
    }
    return labels;
}

// ---------------------------------------------------------------------------
// Drawing quality by direct pixel counting.

inline double q_drawing_ref(const childci::CoverageRaster& coverage,
                            const childci::RegionMask& mask, const std::array<double, 4>& caps) {
    std::array<std::int64_t, 6> total{};
    std::array<std::int64_t, 6> painted{};
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            const auto region = static_cast<int>(mask.at(x, y));
            ++total[region];
            if (coverage.at(x, y)) ++painted[region];
        }
    }
    const auto frac = [&](int region) {
        return static_cast<double>(painted[region]) / static_cast<double>(total[region]);
    };
    double q = frac(static_cast<int>(childci::Region::r0)) * 100.0;
    for (int band = 0; band < 4; ++band) {
        q -= frac(static_cast<int>(childci::Region::r1) + band) * caps[band];
    }
    return std::max(0.0, q);
}

}  // namespace oracle
