#pragma once

#include <cstdint>
#include <vector>

#include "childci/types.hpp"

namespace childci {

struct CoverageRaster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> painted;  // row-major, 0 or 1

    bool at(int x, int y) const {
        return painted[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                       static_cast<std::size_t>(x)] != 0;
    }
    std::int64_t painted_count() const;
};

// Renders strokes as line segments stamped with a disc of brush_radius,
// coordinates scaled from screen dims to mask dims. A pixel is painted iff
// the distance from its center (x+0.5, y+0.5) to any segment is <= the radius.
// Serial reference implementation.
CoverageRaster rasterize(const std::vector<StylusStroke>& strokes, ScreenDims screen, int mask_w,
                         int mask_h, double brush_radius);

// OpenMP variant, row-partitioned; bit-identical to the serial reference.
CoverageRaster rasterize_parallel(const std::vector<StylusStroke>& strokes, ScreenDims screen,
                                  int mask_w, int mask_h, double brush_radius);

}  // namespace childci
