#pragma once

#include <array>

#include "childci/raster.hpp"
#include "childci/region_mask.hpp"
#include "childci/types.hpp"

namespace childci {

// Maximum penalty (percent) each outer band can contribute, R1..R4.
struct PenaltyCaps {
    std::array<double, 4> caps{10.0, 20.0, 30.0, 40.0};

    void validate() const;  // positive and strictly increasing
};

// fraction[i] = painted pixels labeled Ri / area[Ri], for R0..R4.
// Throws DimensionMismatch when coverage and mask dims disagree.
std::array<double, 5> region_fractions(const CoverageRaster& coverage, const RegionMask& mask);

// q = max(0, fraction[R0]*100 - sum_i fraction[Ri]*cap_i) for fractions
// indexed R0..R4.
double q_drawing_value(const std::array<double, 5>& fractions, const PenaltyCaps& caps);

// Test 6: q_drawing_value over the rasterized strokes. Strokes are rendered
// at mask resolution with the given brush. Components expose every region
// fraction and penalty.
QScore q_drawing(const TestRecord& record, ScreenDims screen, const RegionMask& mask,
                 const PenaltyCaps& caps = {}, double brush_radius = 4);

}  // namespace childci
