#pragma once

#include <optional>
#include <vector>

#include "ipad/tensor.hpp"

namespace ipad {

enum class BetaInterpolation { linear, scaled_linear };

// Diffusion noise schedule over timesteps 1..T. Accessors take 1-based
// timesteps; alpha_bar(0) is 1 (clean signal).
class NoiseSchedule {
public:
    static NoiseSchedule from_betas(std::vector<double> betas);

    int steps() const { return static_cast<int>(betas_.size()); }
    double beta(int t) const;
    double alpha(int t) const;
    double alpha_bar(int t) const;

    const std::vector<double>& betas() const { return betas_; }
    const std::vector<double>& alphas() const { return alphas_; }
    const std::vector<double>& alpha_bars() const { return alpha_bars_; }

private:
    NoiseSchedule() = default;

    std::vector<double> betas_;
    std::vector<double> alphas_;
    std::vector<double> alpha_bars_;
};

NoiseSchedule build_schedule(int steps, double beta_start, double beta_end, BetaInterpolation interpolation);

// The pretrained inpainting checkpoint's training schedule.
NoiseSchedule default_schedule();

// A schedule restricted to `n_steps` timesteps spaced uniformly over [1, T].
// `schedule` is the respaced chain: its alpha_bar(i) equals the parent's
// alpha_bar(timesteps[i-1]), so the single-step reverse formula stays exact
// when jumping between sampled timesteps.
struct SampledSchedule {
    std::vector<int> timesteps; // parent timestep for each sampled step, ascending
    NoiseSchedule schedule;
};

SampledSchedule subsample(const NoiseSchedule& parent, int n_steps);

struct LatentArray {
    Tensor data;
    int timestep = 0; // 0 means clean
};

LatentArray forward_diffuse(const LatentArray& z0, int t, const Tensor& eps, const NoiseSchedule& s);

// One reverse step t -> t-1. `eta` may be nullopt for the deterministic
// (zero extra noise) variant.
LatentArray reverse_step(const LatentArray& z_t, const Tensor& eps_hat, int t, const std::optional<Tensor>& eta,
                         const NoiseSchedule& s);

int start_step(double lambda, int n_steps);

} // namespace ipad
