#pragma once

#include <filesystem>

#include "childci/region_mask.hpp"
#include "childci/scene.hpp"
#include "childci/spiral.hpp"
#include "childci/types.hpp"

namespace childci {

// A scene plus the reference artifacts it points at, resolved and validated.
struct Assets {
    SceneConfig scene;
    TemplateSet templates;
    RegionMask mask;
    ScreenDims screen{1280, 800};
};

// Built-in battery: default scene, analytic spiral templates, generated tree mask.
Assets default_assets();

// Loads the scene and resolves its template/mask refs relative to the scene
// file's directory; explicit paths override the refs.
Assets load_assets(const std::filesystem::path& scene_path,
                   const std::filesystem::path& templates_override = {},
                   const std::filesystem::path& mask_override = {});

}  // namespace childci
