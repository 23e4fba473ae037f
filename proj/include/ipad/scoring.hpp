#pragma once

#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "ipad/mask_engine.hpp"
#include "ipad/model_ports.hpp"

namespace ipad {

enum class ScoreKind : std::uint8_t { per_scale = 0, multiscale = 1, prototype = 2, final_map = 3 };

struct ScoreMap {
    Tensor values; // 1 x H x W, finite and >= 0
    ScoreKind kind = ScoreKind::final_map;
    bool smoothed = false;
};

// Sum over layers of the bilinearly upsampled weighted squared feature
// difference.
Tensor perceptual_distance_map(const Image& x, const Image& x_hat, const PerceptualExtractor& perc);
// Same, reusing precomputed features of x.
Tensor perceptual_distance_map(const std::vector<Tensor>& x_features, const Image& x_hat,
                               const PerceptualExtractor& perc);

// Each pixel takes the distance map of the inpainting whose mask covers it.
// The masks must form one complete, disjoint grid.
ScoreMap scale_score_map(std::span<const Tensor> distances, std::span<const MaskProposal> masks);
ScoreMap scale_score_map(const Image& x, std::span<const Image> inpainted, std::span<const MaskProposal> masks,
                         const PerceptualExtractor& perc);

// Elementwise K / sum_k 1/(S_k + eps) - eps.
ScoreMap harmonic_fuse(std::span<const ScoreMap> maps, double epsilon = 1e-8);

ScoreMap prototype_score(const MaskProposal& mask, const Tensor& distance);

// (1 - alpha) * ms + alpha * pg
ScoreMap fuse_final(const ScoreMap& multiscale, const ScoreMap& prototype, double alpha);

// Gaussian blur (std sigma, radius ceil(4 sigma), reflect padding) followed
// by the max over pixels.
std::pair<ScoreMap, double> smooth_and_image_score(const ScoreMap& map, double sigma);

// Normalized 1-D kernel used by the smoothing step.
std::vector<double> gaussian_kernel(double sigma);

// Little-endian float32 payload behind a small header (dims, kind, smoothed).
void save_score_map(const std::filesystem::path& path, const ScoreMap& map);
ScoreMap load_score_map(const std::filesystem::path& path);

// 8-bit visualization scaled by `max_value` (the map max when <= 0).
void write_score_png(const std::filesystem::path& path, const ScoreMap& map, double max_value = 0.0);

} // namespace ipad
