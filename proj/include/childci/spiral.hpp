#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "childci/dtw.hpp"
#include "childci/types.hpp"

namespace childci {

// Adult-performed reference spiral in template canvas units. The four ids
// cover inner->outer / outer->inner execution on the black or the white line.
struct SpiralTemplate {
    TemplateId id = TemplateId::inner_out_black;
    double canvas_w = 100;
    double canvas_h = 100;
    std::vector<Point> points;  // >= 16, consecutive points distinct

    void validate() const;
};

struct TemplateSet {
    std::string version;
    std::array<SpiralTemplate, 4> templates;  // one per TemplateId, in enum order

    void validate() const;
    static TemplateSet from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    static TemplateSet load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

// Synthetic default set: 3-turn Archimedean spirals, 128 samples, stretched to
// span the 100x100 canvas exactly so bbox normalization is the identity on them.
TemplateSet default_template_set();

// Concatenates strokes in temporal order, drops consecutive duplicates, and
// maps the result affinely from its own bounding box into the canvas
// (aspect preserved, centered). Throws DegenerateTrace when every sample
// coincides, EmptySequence when there are no samples at all.
std::vector<Point> normalize_trace(const std::vector<StylusStroke>& strokes, double canvas_w,
                                   double canvas_h);

// Test 5: DTW against each of the four templates, Q_i = exp(-d_i/k_i) * 100,
// q = best template. An empty or degenerate trace scores 0.
QScore q_spiral(const TestRecord& record, const TemplateSet& templates);

}  // namespace childci
