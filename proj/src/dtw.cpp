#include "childci/dtw.hpp"

#include <cmath>

#include "childci/errors.hpp"

namespace childci {

namespace {

inline double point_dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

DtwResult dtw(std::span<const Point> a, std::span<const Point> b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    if (m == 0 || n == 0) throw EmptySequence("dtw requires non-empty sequences");

    std::vector<double> acc(m * n);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return acc[i * n + j]; };

    at(0, 0) = point_dist(a[0], b[0]);
    for (std::size_t j = 1; j < n; ++j) at(0, j) = at(0, j - 1) + point_dist(a[0], b[j]);
    for (std::size_t i = 1; i < m; ++i) at(i, 0) = at(i - 1, 0) + point_dist(a[i], b[0]);
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            const double best =
                std::min(at(i - 1, j - 1), std::min(at(i - 1, j), at(i, j - 1)));
            at(i, j) = best + point_dist(a[i], b[j]);
        }
    }

    // Backtrace the optimal path to count its cells, diagonal preferred on ties.
    std::size_t i = m - 1;
    std::size_t j = n - 1;
    std::size_t k = 1;
    while (i > 0 || j > 0) {
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else {
            const double diag = at(i - 1, j - 1);
            const double up = at(i - 1, j);
            const double left = at(i, j - 1);
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
    return DtwResult{at(m - 1, n - 1), k};
}

}  // namespace childci
