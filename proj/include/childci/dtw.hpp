#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace childci {

struct Point {
    double x = 0;
    double y = 0;

    bool operator==(const Point&) const = default;
};

// d = accumulated Euclidean cost along the optimal warping path,
// k = number of matrix cells on that path.
struct DtwResult {
    double d = 0;
    std::size_t k = 0;
};

// Classic full-matrix dynamic time warping over 2D point sequences.
// Steps {right, down, diagonal}, unweighted local costs, no window.
// On accumulated-cost ties the backtrace prefers the diagonal step, so an
// exact match of length n reports k = n. Throws EmptySequence.
DtwResult dtw(std::span<const Point> a, std::span<const Point> b);

}  // namespace childci
