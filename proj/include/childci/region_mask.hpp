#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "childci/raster.hpp"

namespace childci {

enum class Region : std::uint8_t { outside = 0, r0, r1, r2, r3, r4 };

// Pixel values used in the PGM encoding of a mask.
inline constexpr std::uint8_t kRegionPixel[6] = {0, 10, 11, 12, 13, 14};

// Region labelling of a raster: the target figure R0 plus four surrounding
// bands R1..R4 of increasing distance. Everything else is outside and does
// not contribute to scoring.
struct RegionMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> labels;  // row-major, values = Region

    Region at(int x, int y) const {
        return static_cast<Region>(labels[static_cast<std::size_t>(y) *
                                              static_cast<std::size_t>(width) +
                                          static_cast<std::size_t>(x)]);
    }
    std::array<std::int64_t, 6> area() const;  // pixel count per region

    // Throws MaskInvariantError if dims/labels disagree, a label is out of
    // range, or any of R0..R4 is empty.
    void validate() const;
};

// Binary PGM (P5, maxval 255) with pixel values 0 (outside) and 10..14 for
// R0..R4. Any other value is a MaskInvariantError.
RegionMask load_mask_pgm(const std::filesystem::path& path);
void save_mask_pgm(const RegionMask& mask, const std::filesystem::path& path);

// Grows four bands around the given R0 raster by chessboard distance:
// R1 = pixels within widths[0] of R0, R2 = the next widths[1] shells, and so
// on. Pixels beyond the last band stay outside. Throws MaskInvariantError if
// R0 or any band ends up empty (e.g. R0 touches every border so there is no
// room left to grow).
RegionMask build_bands(const CoverageRaster& r0, const std::array<int, 4>& widths);

// The tree figure shipped with the tool: a three-lobed crown over a trunk,
// with bands grown by build_bands. size is the square mask edge.
RegionMask default_tree_mask(int size = 512);

}  // namespace childci
