#pragma once

#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include "ipad/model_ports.hpp"
#include "ipad/tensor.hpp"

namespace ipad {

enum class MaskOrigin { training_rect, grid, prototype };

struct MaskProposal {
    Mask mask;
    MaskOrigin origin = MaskOrigin::grid;
    // Grid provenance: scale k and cell (row, col); zero otherwise.
    int scale = 0;
    int row = 0;
    int col = 0;

    double coverage() const { return mask.coverage(); }
};

enum class ForegroundMethod { otsu_morph, all_ones, file };

struct ForegroundMask {
    Mask mask;
    ForegroundMethod method = ForegroundMethod::all_ones;
    bool degenerate = false; // otsu fell back to all-ones
};

struct ForegroundParams {
    std::filesystem::path file;  // used by ForegroundMethod::file
    int closing_radius = 2;
};

// True when IoU(rect, fg) > gamma.
bool accepts_training_mask(const Mask& rect, const Mask& fg, double gamma);

// Rejection-samples axis-aligned rectangles (sides log-uniform in
// [dim/16, dim], position uniform) until IoU with the foreground exceeds
// gamma. Throws SamplingExhaustedError after max_tries rejections.
MaskProposal sample_training_mask(const ForegroundMask& fg, double gamma, std::mt19937_64& rng, int max_tries = 1000);

// Uniform pick from the gamma choices.
double sample_gamma(std::span<const double> choices, std::mt19937_64& rng);

// k x k grid cells for every k in scales, scales in the given order,
// cells row-major.
std::vector<MaskProposal> multiscale_masks(int height, int width, std::span<const int> scales);

// Block reduction to latent resolution; a latent cell is set when any pixel
// of its block is set.
Mask downsample_mask(const Mask& m, int latent_height, int latent_width);

ForegroundMask foreground_mask(const Image& image, ForegroundMethod method, const ForegroundParams& params = {});

} // namespace ipad
