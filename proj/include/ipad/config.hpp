#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ipad/dataset_io.hpp"
#include "ipad/finetune.hpp"

namespace ipad {

// Which implementation backs each model port.
struct PortsConfig {
    std::string inpainter = "diffusion"; // diffusion | oracle | identity
    std::string codec = "mock.offset_decoder"; // mock.identity | mock.offset_decoder
    std::string denoiser = "mock.bias";
    std::string text_encoder = "mock.hash";
    std::string patch_extractor = "mock.pooled";
    std::string perceptual = "mock.pyramid"; // mock.identity | mock.identity_luma | mock.pyramid
    std::filesystem::path channel_weights; // JSON; all-ones when empty or missing
    std::filesystem::path weights_dir;
};

// Pixel metrics over one category's pooled pixels, or the mean of per-image
// values (images without both pixel classes are skipped).
enum class PixelPooling { category, image };

struct EvaluationConfig {
    PixelPooling pixel_pooling = PixelPooling::category;
    double pro_fpr_cap = 0.3;
};

struct RunConfig {
    std::filesystem::path dataset_root;
    DatasetLayout layout = DatasetLayout::mvtec;
    std::filesystem::path index_cache; // empty: <output_dir>/index.json
    std::vector<std::string> categories; // empty: every category found
    int k = 1;
    std::uint64_t seed = 0;
    PortsConfig ports;

    double lambda = 0.4;
    std::map<std::string, double> lambda_per_category;
    double alpha = 0.1;
    double sigma = 4.0;
    std::vector<int> scales{1, 2, 4, 8};
    int n_steps = 50;
    double fusion_epsilon = 1e-8;
    int image_size = kImageSize;
    std::vector<int> rotations{0, 90, 180, 270};
    // Categories whose foreground is the whole image.
    std::vector<std::string> texture_categories{"carpet", "grid", "leather", "tile", "wood"};
    int closing_radius = 2;

    FinetuneConfig finetune;
    EvaluationConfig evaluation; // read by evaluate only; not part of the hash
    std::filesystem::path prompts;
    std::filesystem::path output_dir = "runs/default";
    int workers = 1;
    bool inpaint_cache = false; // per-mask results, 8 bytes per value
    bool resume = true;         // skip items whose outputs are complete
    SyntheticParams synthetic;

    bool zero_shot() const { return k == 0; }
    // Zero-shot runs have no prototype bank.
    double effective_alpha() const { return zero_shot() ? 0.0 : alpha; }
    double lambda_for(const std::string& category) const;
    bool is_texture(const std::string& category) const;
};

// Parses YAML; relative paths resolve against `base_dir`.
RunConfig parse_config(const std::string& yaml_text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

// IPAD_DATASET_ROOT, IPAD_OUTPUT_DIR, IPAD_PROMPTS, IPAD_WEIGHTS_DIR,
// IPAD_INDEX_CACHE replace the matching path when set.
void apply_env_overrides(RunConfig& cfg);

// Throws ConfigError naming the first offending field.
void validate(const RunConfig& cfg);

// Canonical JSON of every setting that can change results; paths, worker
// count and caching are left out.
std::string canonical_json(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);

} // namespace ipad
