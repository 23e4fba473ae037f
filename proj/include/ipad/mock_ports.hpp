#pragma once

// Deterministic stand-ins for the pretrained networks. Used by the test
// suite, the synthetic end-to-end run and the CLI's `ports.kind: mock`.

#include <memory>
#include <optional>
#include <vector>

#include "ipad/model_ports.hpp"
#include "ipad/schedule.hpp"

namespace ipad {

// encode = decode = identity; latent is the RGB image itself.
class IdentityCodec : public LatentCodec {
public:
    Tensor encode(const Image& image) const override { return image; }
    Image decode(const Tensor& latent) const override { return latent; }
    int scale_factor() const override { return 1; }
    int latent_channels() const override { return 3; }
    std::string name() const override { return "mock.identity_codec"; }
};

// Identity encoder, decoder adds a learnable per-channel offset.
class OffsetDecoderCodec : public TrainableCodec {
public:
    explicit OffsetDecoderCodec(std::vector<double> offsets = {0.0, 0.0, 0.0});

    Tensor encode(const Image& image) const override { return image; }
    Image decode(const Tensor& latent) const override;
    int scale_factor() const override { return 1; }
    int latent_channels() const override { return 3; }
    double codec_tolerance() const override;
    std::string name() const override { return "mock.offset_decoder_codec"; }

    std::span<double> parameters() override { return offsets_; }
    std::span<const double> parameters() const override { return offsets_; }
    void accumulate_decoder_gradient(const Tensor& latent, const Image& grad_image,
                                     std::span<double> grad) const override;

private:
    std::vector<double> offsets_;
};

// Always returns the same stored noise tensor.
class StoredNoiseDenoiser : public Denoiser {
public:
    StoredNoiseDenoiser(Tensor noise, int latent_channels);

    Tensor predict_noise(const Tensor& conditioned_input, int timestep, const Tensor& condition) const override;
    int input_channels() const override { return 2 * latent_channels_ + 1; }
    std::string name() const override { return "mock.stored_noise_denoiser"; }

private:
    Tensor noise_;
    int latent_channels_;
};

// Knows the clean latent and returns the noise implied by the current noisy
// latent: (z_t - sqrt(abar_t) z0) / sqrt(1 - abar_t). Every reverse step
// then lands on the forward-process mean, so a trajectory ends exactly at z0.
class CleanLatentDenoiser : public Denoiser {
public:
    CleanLatentDenoiser(Tensor clean_latent, NoiseSchedule schedule);

    Tensor predict_noise(const Tensor& conditioned_input, int timestep, const Tensor& condition) const override;
    int input_channels() const override { return 2 * clean_.channels() + 1; }
    std::string name() const override { return "mock.clean_latent_denoiser"; }

private:
    Tensor clean_;
    NoiseSchedule schedule_;
};

// Predicts a learnable constant per latent channel.
class BiasDenoiser : public TrainableDenoiser {
public:
    explicit BiasDenoiser(int latent_channels, double initial_bias = 0.0);

    Tensor predict_noise(const Tensor& conditioned_input, int timestep, const Tensor& condition) const override;
    int input_channels() const override { return 2 * static_cast<int>(bias_.size()) + 1; }
    std::string name() const override { return "mock.bias_denoiser"; }

    std::span<double> parameters() override { return bias_; }
    std::span<const double> parameters() const override { return bias_; }
    void accumulate_gradient(const Tensor& conditioned_input, int timestep, const Tensor& condition,
                             const Tensor& grad_output, std::span<double> grad) const override;

private:
    std::vector<double> bias_;
};

// Whitespace tokenizer with hash-seeded token vectors; shorter prompts are
// zero-padded to the fixed sequence length.
class HashTextEncoder : public TextEncoder {
public:
    HashTextEncoder(int sequence_length = 8, int width = 16);

    Tensor embed(const std::string& prompt) const override;
    int width() const override { return width_; }
    int sequence_length() const override { return sequence_length_; }
    std::string name() const override { return "mock.hash_text_encoder"; }

private:
    int sequence_length_;
    int width_;
};

// Level 2: RGB averaged over stride2 blocks. Level 3: RGB mean and luma
// standard deviation over stride3 blocks.
class PooledPatchExtractor : public PatchFeatureExtractor {
public:
    PooledPatchExtractor(int stride2 = 8, int stride3 = 16);

    Tensor features_at(int level, const Image& image) const override;
    std::string name() const override { return "mock.pooled_patch_extractor"; }

private:
    int stride2_;
    int stride3_;
};

// Single full-resolution layer: the RGB image itself, or its channel mean
// when `luma` is set.
class IdentityPerceptual : public PerceptualExtractor {
public:
    explicit IdentityPerceptual(bool luma = false, std::optional<std::vector<double>> weights = std::nullopt);

    std::vector<Tensor> layers(const Image& image) const override;
    std::size_t layer_count() const override { return 1; }
    const std::vector<double>& channel_weights(std::size_t layer) const override;
    Image backward(const Image& image, const std::vector<Tensor>& layer_grads) const override;
    std::string name() const override { return luma_ ? "mock.identity_perceptual_luma" : "mock.identity_perceptual"; }

private:
    bool luma_;
    std::vector<double> weights_;
};

// Layer 0: RGB at full resolution. Layer 1: RGB average-pooled by `stride`.
class PyramidPerceptual : public PerceptualExtractor {
public:
    explicit PyramidPerceptual(int stride = 4, std::vector<std::vector<double>> weights = {});

    std::vector<Tensor> layers(const Image& image) const override;
    std::size_t layer_count() const override { return 2; }
    const std::vector<double>& channel_weights(std::size_t layer) const override;
    Image backward(const Image& image, const std::vector<Tensor>& layer_grads) const override;
    std::string name() const override { return "mock.pyramid_perceptual"; }

private:
    int stride_;
    std::vector<std::vector<double>> weights_;
};

// Returns the clean reference inside the mask and the input outside it;
// stands in for a perfectly fine-tuned inpainting model.
class OracleInpainter : public Inpainter {
public:
    explicit OracleInpainter(Image clean_reference);

    Image inpaint(const Image& image, const Mask& mask) const override;
    std::string name() const override { return "oracle"; }
    // Includes a digest of the reference.
    std::string fingerprint() const override;

private:
    Image clean_;
};

std::unique_ptr<Inpainter> oracle_inpainter(const Image& clean_reference);

// Returns the input unchanged.
class IdentityInpainter : public Inpainter {
public:
    Image inpaint(const Image& image, const Mask&) const override { return image; }
    std::string name() const override { return "identity"; }
};

} // namespace ipad
