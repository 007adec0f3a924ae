#include "childci/region_mask.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

#include "childci/errors.hpp"

namespace childci {

namespace {

constexpr std::uint8_t kBadPixel = 0xFF;

std::array<std::uint8_t, 256> pixel_to_region_table() {
    std::array<std::uint8_t, 256> table{};
    table.fill(kBadPixel);
    for (int r = 0; r < 6; ++r) table[kRegionPixel[r]] = static_cast<std::uint8_t>(r);
    return table;
}

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_token(const std::string& buf, std::size_t& pos) {
    while (pos < buf.size()) {
        const char c = buf[pos];
        if (c == '#') {
            while (pos < buf.size() && buf[pos] != '\n') ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < buf.size() && !std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
    if (start == pos) throw MaskInvariantError("truncated PGM header");
    return buf.substr(start, pos - start);
}

int header_int(const std::string& buf, std::size_t& pos, const char* what) {
    const std::string tok = next_token(buf, pos);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw MaskInvariantError(std::string("bad PGM ") + what + ": " + tok);
    }
}

}  // namespace

std::array<std::int64_t, 6> RegionMask::area() const {
    std::array<std::int64_t, 6> counts{};
    for (const std::uint8_t label : labels) {
        if (label < 6) ++counts[label];
    }
    return counts;
}

void RegionMask::validate() const {
    if (width <= 0 || height <= 0) throw MaskInvariantError("mask dims must be positive");
    if (labels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw MaskInvariantError("mask label count does not match dims");
    }
    for (const std::uint8_t label : labels) {
        if (label >= 6) throw MaskInvariantError("unknown region label");
    }
    const auto counts = area();
    for (int r = 1; r < 6; ++r) {
        if (counts[r] == 0) {
            std::ostringstream msg;
            msg << "region R" << (r - 1) << " is empty";
            throw MaskInvariantError(msg.str());
        }
    }
}

RegionMask load_mask_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MaskInvariantError("cannot open mask: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string buf = ss.str();

    std::size_t pos = 0;
    if (next_token(buf, pos) != "P5") throw MaskInvariantError("mask is not a P5 PGM");
    const int w = header_int(buf, pos, "width");
    const int h = header_int(buf, pos, "height");
    const int maxval = header_int(buf, pos, "maxval");
    if (w <= 0 || h <= 0) throw MaskInvariantError("mask dims must be positive");
    if (maxval != 255) throw MaskInvariantError("mask maxval must be 255");
    ++pos;  // single whitespace byte separates header from pixels

    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (buf.size() - pos < n) throw MaskInvariantError("truncated PGM pixel data");

    static const auto table = pixel_to_region_table();
    RegionMask mask{w, h, std::vector<std::uint8_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t region = table[static_cast<std::uint8_t>(buf[pos + i])];
        if (region == kBadPixel) throw MaskInvariantError("unexpected pixel value in mask");
        mask.labels[i] = region;
    }
    mask.validate();
    return mask;
}

void save_mask_pgm(const RegionMask& mask, const std::filesystem::path& path) {
    mask.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw MaskInvariantError("cannot write mask: " + path.string());
    out << "P5\n" << mask.width << " " << mask.height << "\n255\n";
    std::string pixels(mask.labels.size(), '\0');
    for (std::size_t i = 0; i < mask.labels.size(); ++i) {
        pixels[i] = static_cast<char>(kRegionPixel[mask.labels[i]]);
    }
    out.write(pixels.data(), static_cast<std::streamsize>(pixels.size()));
    if (!out) throw MaskInvariantError("short write: " + path.string());
}

RegionMask build_bands(const CoverageRaster& r0, const std::array<int, 4>& widths) {
    if (r0.width <= 0 || r0.height <= 0) throw RangeError("raster dims must be positive");
    for (const int w : widths) {
        if (w < 1) throw RangeError("band widths must be >= 1");
    }
    const int w = r0.width;
    const int h = r0.height;
    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    const int reach = widths[0] + widths[1] + widths[2] + widths[3];

    // Multi-source BFS over the 8-neighborhood = chessboard distance to R0.
    std::vector<int> dist(n, -1);
    std::queue<std::pair<int, int>> frontier;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (r0.at(x, y)) {
                dist[static_cast<std::size_t>(y) * w + x] = 0;
                frontier.emplace(x, y);
            }
        }
    }
    if (frontier.empty()) throw MaskInvariantError("region R0 is empty");

    while (!frontier.empty()) {
        const auto [x, y] = frontier.front();
        frontier.pop();
        const int d = dist[static_cast<std::size_t>(y) * w + x];
        if (d == reach) continue;  // anything farther is outside
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = x + dx;
                const int ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                int& nd = dist[static_cast<std::size_t>(ny) * w + nx];
                if (nd < 0) {
                    nd = d + 1;
                    frontier.emplace(nx, ny);
                }
            }
        }
    }

    std::array<int, 4> cutoff{};
    int acc = 0;
    for (int i = 0; i < 4; ++i) cutoff[i] = acc += widths[i];

    RegionMask mask{w, h, std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(Region::outside))};
    for (std::size_t i = 0; i < n; ++i) {
        const int d = dist[i];
        if (d < 0 || d > reach) continue;
        if (d == 0) {
            mask.labels[i] = static_cast<std::uint8_t>(Region::r0);
        } else if (d <= cutoff[0]) {
            mask.labels[i] = static_cast<std::uint8_t>(Region::r1);
        } else if (d <= cutoff[1]) {
            mask.labels[i] = static_cast<std::uint8_t>(Region::r2);
        } else if (d <= cutoff[2]) {
            mask.labels[i] = static_cast<std::uint8_t>(Region::r3);
        } else {
            mask.labels[i] = static_cast<std::uint8_t>(Region::r4);
        }
    }
    mask.validate();
    return mask;
}

RegionMask default_tree_mask(int size) {
    if (size < 32) throw RangeError("tree mask size must be >= 32");
    const double s = size;
    // Crown lobes and trunk in normalized units.
    const struct {
        double x, y, r;
    } lobes[] = {{0.50, 0.34, 0.20}, {0.36, 0.46, 0.16}, {0.64, 0.46, 0.16}};
    const double trunk_x0 = 0.465, trunk_x1 = 0.535, trunk_y0 = 0.46, trunk_y1 = 0.78;

    CoverageRaster r0{size, size,
                      std::vector<std::uint8_t>(static_cast<std::size_t>(size) * size, 0)};
    for (int y = 0; y < size; ++y) {
        const double py = (y + 0.5) / s;
        for (int x = 0; x < size; ++x) {
            const double px = (x + 0.5) / s;
            bool inside = px >= trunk_x0 && px <= trunk_x1 && py >= trunk_y0 && py <= trunk_y1;
            for (const auto& lobe : lobes) {
                if (inside) break;
                const double dx = px - lobe.x;
                const double dy = py - lobe.y;
                inside = dx * dx + dy * dy <= lobe.r * lobe.r;
            }
            if (inside) r0.painted[static_cast<std::size_t>(y) * size + x] = 1;
        }
    }
    const int band = std::max(1, size / 32);
    return build_bands(r0, {band, band, band, band});
}

}  // namespace childci
