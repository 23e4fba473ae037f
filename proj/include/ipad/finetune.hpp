#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ipad/mask_engine.hpp"
#include "ipad/model_ports.hpp"
#include "ipad/prompt_bank.hpp"
#include "ipad/schedule.hpp"

namespace ipad {

struct AugmentPolicy {
    double brightness = 0.1; // additive shift drawn from [-b, b]
    double contrast = 0.1;   // gain drawn from [1-c, 1+c] around mid-gray
    double scale_min = 0.9;
    double scale_max = 1.1;
    bool rotate = true; // quarter turns (half turns only for non-square images)

    static AugmentPolicy identity() { return {0.0, 0.0, 1.0, 1.0, false}; }
};

struct AugmentParams {
    double brightness = 0.0;
    double contrast = 1.0;
    double scale = 1.0;
    int quarter_turns = 0;
};

AugmentParams draw_augmentation(const AugmentPolicy& policy, int height, int width, std::mt19937_64& rng);
Image apply_augmentation(const Image& image, const AugmentParams& params);
// Geometric part only, nearest-neighbour.
Mask apply_augmentation(const Mask& mask, const AugmentParams& params);
Image augment(const Image& image, std::mt19937_64& rng, const AugmentPolicy& policy);

struct FinetuneConfig {
    int epochs_denoiser = 4000;
    int epochs_decoder = 200;
    double lr = 1e-4;
    double beta_lpips = 0.1;
    int batch_size = 8;
    std::vector<double> gamma_choices{0.0, 0.2, 0.5};
    std::uint64_t seed = 0;
    int max_mask_tries = 1000;
    AugmentPolicy augment{};
};

void validate(const FinetuneConfig& cfg);

// Mean squared error over all elements.
double denoiser_loss(const Tensor& eps, const Tensor& eps_hat);

// MSE plus beta times the weighted perceptual feature distance (spatial mean
// per layer, summed over layers).
double decoder_loss(const Image& x, const Image& x_hat, const PerceptualExtractor& perc, double beta);
// d(decoder_loss)/d(x_hat).
Image decoder_loss_gradient(const Image& x, const Image& x_hat, const PerceptualExtractor& perc, double beta);

class Adam {
public:
    Adam(std::size_t n_params, double lr, double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8);
    void step(std::span<double> params, std::span<const double> grad);

private:
    double lr_, beta1_, beta2_, epsilon_;
    std::vector<double> m_, v_;
    long steps_ = 0;
};

struct SupportSample {
    Image image;
    std::string category;
    ForegroundMethod foreground = ForegroundMethod::otsu_morph;
    std::filesystem::path foreground_file; // for ForegroundMethod::file
    int closing_radius = 2;
};

// One denoiser training example: the stacked input, its timestep, prompt
// embedding and the noise the network should predict.
struct DenoiserExample {
    Tensor input;
    int timestep = 0;
    Tensor condition;
    Tensor noise;
    double gamma = 0.0;
    double mask_iou = 0.0;
};

DenoiserExample make_denoiser_example(const SupportSample& sample, const LatentCodec& codec, const TextEncoder& text,
                                      const PromptLibrary& prompts, const NoiseSchedule& schedule,
                                      const FinetuneConfig& cfg, std::mt19937_64& rng);

// One optimizer step on a batch; returns the batch loss before the update.
double denoiser_train_step(TrainableDenoiser& denoiser, Adam& opt, std::span<const DenoiserExample> batch);
double decoder_train_step(TrainableCodec& codec, const PerceptualExtractor& perc, double beta, Adam& opt,
                          std::span<const Image> batch);

struct TrainResult {
    std::vector<double> parameters;
    std::vector<double> loss_trace; // per-epoch mean batch loss
};

// Called after each epoch with (epoch, parameters).
using EpochCallback = std::function<void(int, std::span<const double>)>;

TrainResult finetune_denoiser(std::span<const SupportSample> support, const LatentCodec& codec,
                              TrainableDenoiser& denoiser, const TextEncoder& text, const PromptLibrary& prompts,
                              const NoiseSchedule& schedule, const FinetuneConfig& cfg,
                              const EpochCallback& on_epoch = {});

TrainResult finetune_decoder(std::span<const SupportSample> support, TrainableCodec& codec,
                             const PerceptualExtractor& perc, const FinetuneConfig& cfg,
                             const EpochCallback& on_epoch = {});

struct Checkpoint {
    std::string kind; // "denoiser" or "decoder"
    std::string port;
    int epoch = 0;
    std::string config_hash;
    std::vector<double> parameters;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);
void write_loss_csv(const std::filesystem::path& path, std::span<const double> trace);

} // namespace ipad
