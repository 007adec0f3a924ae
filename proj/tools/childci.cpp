// childci - scoring and growth-chart CLI for child-tablet interaction sessions.
//
// Exit codes: 0 success, 2 input error, 3 internal error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "childci/assets.hpp"
#include "childci/errors.hpp"
#include "childci/growth.hpp"
#include "childci/pipeline.hpp"
#include "childci/region_mask.hpp"
#include "childci/report.hpp"
#include "childci/rng.hpp"
#include "childci/session_json.hpp"
#include "childci/svg.hpp"
#include "childci/synth.hpp"

namespace fs = std::filesystem;
using namespace childci;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Write-to-temp + rename, so readers never observe a partial file.
void write_file_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write: " + tmp.string());
    }
    fs::rename(tmp, path);
}

// Files as given; directories expanded to their *.json entries (manifests
// excluded), sorted for determinism.
std::vector<fs::path> collect_inputs(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::directory_iterator(p)) {
                if (!entry.is_regular_file()) continue;
                const fs::path& f = entry.path();
                if (f.extension() != ".json" || f.filename() == "manifest.json") continue;
                files.push_back(f);
            }
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
    return files;
}

struct AssetOpts {
    std::string scene, templates, mask;
};

void add_asset_opts(CLI::App* cmd, AssetOpts& o) {
    cmd->add_option("--scene", o.scene, "Scene config (default: built-in battery)");
    cmd->add_option("--templates", o.templates, "Spiral template set (overrides the scene ref)");
    cmd->add_option("--mask", o.mask, "Region mask PGM (overrides the scene ref)");
}

Assets resolve_assets(const AssetOpts& o) {
    std::string scene = o.scene;
    if (scene.empty()) {
        if (const char* env = std::getenv("CHILDCI_CONFIG_DIR")) {
            const fs::path candidate = fs::path(env) / "scenes" / "default-v1.json";
            if (fs::exists(candidate)) scene = candidate.string();
        }
    }
    if (scene.empty()) {
        Assets a = default_assets();
        if (!o.templates.empty()) a.templates = TemplateSet::load(o.templates);
        if (!o.mask.empty()) a.mask = load_mask_pgm(o.mask);
        return a;
    }
    return load_assets(scene, o.templates, o.mask);
}

struct ChartFlags {
    std::vector<double> percentiles{10, 50, 90};
    int min_n = 5;
    bool dedupe = false;
};

void add_chart_flags(CLI::App* cmd, ChartFlags& f) {
    cmd->add_option("--percentiles", f.percentiles, "Percentile curves to compute")
        ->delimiter(',');
    cmd->add_option("--min-n", f.min_n, "Minimum samples per group for curve emission");
    cmd->add_flag("--dedupe", f.dedupe, "Keep only the latest acquisition per child per group");
}

ChartOptions to_options(const ChartFlags& f) {
    ChartOptions opts;
    opts.percentiles = f.percentiles;
    opts.min_n = f.min_n;
    opts.dedupe = f.dedupe;
    return opts;
}

std::string session_stem(const SessionMeta& meta) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "-a%02d", meta.acquisition_id);
    return meta.child_id + buf;
}

int cmd_score(const std::vector<std::string>& inputs, const AssetOpts& assets_opt,
              const std::string& out_dir) {
    const Assets assets = resolve_assets(assets_opt);  // fail fast, before any scoring
    const auto files = collect_inputs(inputs);
    if (files.empty()) {
        std::cerr << "no sessions found\n";
        return 2;
    }

    std::vector<SessionLog> sessions;
    bool any_bad = false;
    for (const auto& f : files) {
        try {
            sessions.push_back(load_session(f));
        } catch (const Error& e) {
            std::cerr << f.string() << ": " << e.what() << "\n";
            any_bad = true;
        }
    }
    std::sort(sessions.begin(), sessions.end(), [](const SessionLog& a, const SessionLog& b) {
        if (a.meta.child_id != b.meta.child_id) return a.meta.child_id < b.meta.child_id;
        return a.meta.acquisition_id < b.meta.acquisition_id;
    });

    if (!sessions.empty()) {
        const auto scored = score_sessions(sessions, assets);
        std::string csv = score_csv_header() + "\n";
        const fs::path out(out_dir);
        for (std::size_t i = 0; i < sessions.size(); ++i) {
            const auto& meta = sessions[i].meta;
            write_file_atomic(out / "scores" / (session_stem(meta) + ".score.json"),
                              score_doc(meta, scored[i]).dump(2) + "\n");
            append_score_csv(csv, meta, scored[i]);
        }
        write_file_atomic(out / "scores.csv", csv);
        std::cout << "scored " << sessions.size() << " session(s) -> " << (out / "scores.csv").string()
                  << "\n";
    }
    return any_bad ? 2 : 0;
}

int cmd_chart(const std::string& scores_csv, int test_id, const ChartFlags& flags,
              const std::string& out_dir) {
    const auto rows = parse_score_csv(read_file(scores_csv));
    const GrowthChart chart = build_chart(rows, test_id, to_options(flags));
    const fs::path out(out_dir);
    const std::string stem = "chart-test" + std::to_string(test_id);
    write_file_atomic(out / (stem + ".json"), chart_doc(chart).dump(2) + "\n");
    write_file_atomic(out / (stem + ".csv"), chart_csv(chart));
    write_file_atomic(out / (stem + ".svg"), chart_svg(chart));
    std::cout << "chart for test " << test_id << " -> " << (out / stem).string() << ".{json,csv,svg}\n";
    return 0;
}

int cmd_track(const std::string& scores_csv, const std::string& child_id, int test_id,
              const ChartFlags& flags, const std::string& out_dir) {
    const auto rows = parse_score_csv(read_file(scores_csv));
    const GrowthChart chart = build_chart(rows, test_id, to_options(flags));
    const Trajectory traj = place_trajectory(child_id, rows, chart);
    const fs::path out(out_dir);
    const std::string stem = "track-" + child_id + "-test" + std::to_string(test_id);
    write_file_atomic(out / (stem + ".json"), trajectory_doc(traj).dump(2) + "\n");
    write_file_atomic(out / (stem + ".svg"), chart_svg(chart, &traj));
    std::cout << "trajectory for " << child_id << " -> " << (out / stem).string() << ".{json,svg}\n";
    return 0;
}

int cmd_generate(int count, const std::vector<double>& skills, int acquisitions,
                 std::uint64_t seed, const AssetOpts& assets_opt, const std::string& out_dir) {
    const Assets assets = resolve_assets(assets_opt);
    const fs::path out(out_dir);
    fs::create_directories(out);

    std::vector<std::string> names;
    for (std::size_t si = 0; si < skills.size(); ++si) {
        for (int child = 0; child < count; ++child) {
            char id[32];
            std::snprintf(id, sizeof id, "synth-s%03d-c%04d",
                          static_cast<int>(std::llround(skills[si] * 100)), child);
            const int base_level = 2 + child % 7;
            for (int acq = 1; acq <= acquisitions; ++acq) {
                // Children drift upward a little between acquisitions.
                const double skill =
                    std::clamp(skills[si] + 0.04 * (acq - 1), 0.0, 1.0);
                SessionSpec spec;
                spec.child_id = id;
                spec.acquisition_id = acq;
                spec.group_level = std::min(8, base_level + (acq - 1) / 2);
                spec.seed = derive_seed(
                    seed, (static_cast<std::uint64_t>(si) * 10000 + static_cast<std::uint64_t>(child)) *
                                  100 +
                              static_cast<std::uint64_t>(acq));
                const SessionLog log =
                    generate_session(SkillProfile::from_skill(skill), assets, spec);
                const std::string name = session_stem(log.meta) + ".json";
                write_file_atomic(out / name, serialize_session(log));
                names.push_back(name);
            }
        }
    }
    std::sort(names.begin(), names.end());

    nlohmann::json manifest{{"schema", "childci-q/manifest/1"},
                            {"seed", seed},
                            {"count", count},
                            {"acquisitions", acquisitions},
                            {"skills", skills},
                            {"files", names}};
    write_file_atomic(out / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "generated " << names.size() << " session(s) -> " << out.string() << "\n";
    return 0;
}

int cmd_validate(const std::vector<std::string>& inputs) {
    const auto files = collect_inputs(inputs);
    if (files.empty()) {
        std::cerr << "no sessions found\n";
        return 2;
    }
    bool any_bad = false;
    for (const auto& f : files) {
        try {
            load_session(f);
            std::cout << "OK   " << f.string() << "\n";
        } catch (const Error& e) {
            std::cout << "FAIL " << f.string() << ": " << e.what() << "\n";
            any_bad = true;
        }
    }
    return any_bad ? 2 : 0;
}

int cmd_assets(const std::string& out_dir, int mask_size) {
    SceneConfig scene = default_scene();
    const std::string mask_name = "tree-" + std::to_string(mask_size) + "-v1.pgm";
    // Refs are resolved relative to the scene file, which sits in scenes/.
    scene.spiral.template_set_ref = "../templates/default-v1.json";
    scene.drawing.region_mask_ref = "../masks/" + mask_name;
    const TemplateSet templates = default_template_set();
    const RegionMask mask = default_tree_mask(mask_size);

    const fs::path out(out_dir);
    write_file_atomic(out / "scenes" / "default-v1.json", scene.to_json().dump(2) + "\n");
    write_file_atomic(out / "templates" / "default-v1.json", templates.to_json().dump(2) + "\n");
    fs::create_directories(out / "masks");
    const fs::path mask_tmp = out / "masks" / (mask_name + ".tmp");
    save_mask_pgm(mask, mask_tmp);
    fs::rename(mask_tmp, out / "masks" / mask_name);
    std::cout << "assets -> " << out.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Q-metric scoring for child-tablet interaction sessions"};
    app.require_subcommand(1);

    // score
    std::vector<std::string> score_in;
    AssetOpts score_assets;
    std::string score_out = ".";
    auto* score = app.add_subcommand("score", "Score session logs and write per-test Q values");
    score->add_option("--in", score_in, "Session files or directories")->required();
    add_asset_opts(score, score_assets);
    score->add_option("--out", score_out, "Output directory");

    // chart
    std::string chart_csv_path, chart_out = ".";
    int chart_test = 6;
    ChartFlags chart_flags;
    auto* chart = app.add_subcommand("chart", "Build a percentile growth chart from a score CSV");
    chart->add_option("--scores", chart_csv_path, "scores.csv from the score command")->required();
    chart->add_option("--test", chart_test, "Test id (1..6)");
    add_chart_flags(chart, chart_flags);
    chart->add_option("--out", chart_out, "Output directory");

    // track
    std::string track_csv_path, track_child, track_out = ".";
    int track_test = 6;
    ChartFlags track_flags;
    auto* track = app.add_subcommand("track", "Place one child's trajectory on the growth chart");
    track->add_option("--scores", track_csv_path, "scores.csv from the score command")->required();
    track->add_option("--child", track_child, "Child id")->required();
    track->add_option("--test", track_test, "Test id (1..6)");
    add_chart_flags(track, track_flags);
    track->add_option("--out", track_out, "Output directory");

    // generate
    int gen_count = 10, gen_acquisitions = 1;
    std::vector<double> gen_skills{0.5};
    std::uint64_t gen_seed = 1;
    AssetOpts gen_assets;
    std::string gen_out = ".";
    auto* gen = app.add_subcommand("generate", "Generate seeded synthetic sessions");
    gen->add_option("--count", gen_count, "Children per skill level");
    gen->add_option("--skills", gen_skills, "Skill levels in [0,1]")->delimiter(',');
    gen->add_option("--acquisitions", gen_acquisitions, "Acquisitions per child");
    gen->add_option("--seed", gen_seed, "Master seed");
    add_asset_opts(gen, gen_assets);
    gen->add_option("--out", gen_out, "Output directory");

    // validate
    std::vector<std::string> val_in;
    auto* validate = app.add_subcommand("validate", "Parse sessions and report problems");
    validate->add_option("--in", val_in, "Session files or directories")->required();

    // assets
    std::string assets_out = "data";
    int assets_mask_size = 512;
    auto* assets_cmd = app.add_subcommand("assets", "Write the built-in battery to disk");
    assets_cmd->add_option("--out", assets_out, "Output directory");
    assets_cmd->add_option("--mask-size", assets_mask_size, "Region mask edge length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (score->parsed()) return cmd_score(score_in, score_assets, score_out);
        if (chart->parsed()) return cmd_chart(chart_csv_path, chart_test, chart_flags, chart_out);
        if (track->parsed())
            return cmd_track(track_csv_path, track_child, track_test, track_flags, track_out);
        if (gen->parsed())
            return cmd_generate(gen_count, gen_skills, gen_acquisitions, gen_seed, gen_assets,
                                gen_out);
        if (validate->parsed()) return cmd_validate(val_in);
        if (assets_cmd->parsed()) return cmd_assets(assets_out, assets_mask_size);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
