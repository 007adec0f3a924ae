#include "childci/assets.hpp"

namespace childci {

Assets default_assets() {
    Assets a;
    a.scene = default_scene();
    a.templates = default_template_set();
    a.mask = default_tree_mask();
    return a;
}

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& ref) {
    const std::filesystem::path p(ref);
    return p.is_absolute() ? p : base / p;
}

}  // namespace

Assets load_assets(const std::filesystem::path& scene_path,
                   const std::filesystem::path& templates_override,
                   const std::filesystem::path& mask_override) {
    Assets a;
    a.scene = SceneConfig::load(scene_path);
    const std::filesystem::path base = scene_path.parent_path();
    a.templates = TemplateSet::load(templates_override.empty()
                                        ? resolve(base, a.scene.spiral.template_set_ref)
                                        : templates_override);
    a.mask = load_mask_pgm(mask_override.empty() ? resolve(base, a.scene.drawing.region_mask_ref)
                                                 : mask_override);
    return a;
}

}  // namespace childci
