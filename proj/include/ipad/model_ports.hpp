#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ipad/tensor.hpp"

namespace ipad {

// Images are 3 x H x W tensors with values in [0,1].
using Image = Tensor;

// VAE-style codec between pixel space and the diffusion latent space.
class LatentCodec {
public:
    virtual ~LatentCodec() = default;

    virtual Tensor encode(const Image& image) const = 0;
    virtual Image decode(const Tensor& latent) const = 0;
    virtual int scale_factor() const = 0;
    virtual int latent_channels() const = 0;
    // Max abs pixel error allowed for decode(encode(x)).
    virtual double codec_tolerance() const { return 0.0; }
    virtual bool reentrant() const { return true; }
    virtual std::string name() const = 0;
};

// Noise-prediction network. The input is the channel stack
// [noisy latent; masked-image latent; downsampled mask], so
// input_channels() must equal 2 * latent_channels + 1.
class Denoiser {
public:
    virtual ~Denoiser() = default;

    virtual Tensor predict_noise(const Tensor& conditioned_input, int timestep, const Tensor& condition) const = 0;
    virtual int input_channels() const = 0;
    virtual bool reentrant() const { return true; }
    virtual std::string name() const = 0;
};

// Prompt -> token embedding sequence, shaped 1 x sequence_length x width.
class TextEncoder {
public:
    virtual ~TextEncoder() = default;

    virtual Tensor embed(const std::string& prompt) const = 0;
    virtual int width() const = 0;
    virtual int sequence_length() const = 0;
    virtual std::string name() const = 0;
};

// Backbone used for prototype features; levels 2 and 3 are required.
class PatchFeatureExtractor {
public:
    virtual ~PatchFeatureExtractor() = default;

    virtual Tensor features_at(int level, const Image& image) const = 0;
    virtual std::string name() const = 0;
};

// Multi-layer feature extractor with fixed per-channel weights, used for the
// perceptual loss and the perceptual distance map.
class PerceptualExtractor {
public:
    virtual ~PerceptualExtractor() = default;

    virtual std::vector<Tensor> layers(const Image& image) const = 0;
    virtual std::size_t layer_count() const = 0;
    virtual const std::vector<double>& channel_weights(std::size_t layer) const = 0;

    // Vector-Jacobian product: gradient w.r.t. the image given gradients
    // w.r.t. each layer output. Only needed for decoder fine-tuning.
    virtual Image backward(const Image& image, const std::vector<Tensor>& layer_grads) const;
    virtual std::string name() const = 0;
};

// Anything with learnable parameters exposes them as one flat vector.
class Trainable {
public:
    virtual ~Trainable() = default;

    virtual std::span<double> parameters() = 0;
    virtual std::span<const double> parameters() const = 0;
};

class TrainableDenoiser : public Denoiser, public Trainable {
public:
    // Adds d(loss)/d(params) to `grad` given d(loss)/d(output).
    virtual void accumulate_gradient(const Tensor& conditioned_input, int timestep, const Tensor& condition,
                                     const Tensor& grad_output, std::span<double> grad) const = 0;
};

// Codec whose decoder is trainable; the encoder stays frozen.
class TrainableCodec : public LatentCodec, public Trainable {
public:
    virtual void accumulate_decoder_gradient(const Tensor& latent, const Image& grad_image,
                                             std::span<double> grad) const = 0;
};

// Turns (image, mask) into an image whose masked region is regenerated.
class Inpainter {
public:
    virtual ~Inpainter() = default;

    virtual Image inpaint(const Image& image, const Mask& mask) const = 0;
    virtual std::string name() const = 0;
    // Everything besides (image, mask) that determines the output; used as
    // part of cache keys.
    virtual std::string fingerprint() const { return name(); }
    virtual bool reentrant() const { return true; }
};

struct PortProbe {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PortReport {
    std::vector<PortProbe> probes;

    bool ok() const;
    std::string summary() const;
};

struct PortExpectations {
    int probe_height = 512;
    int probe_width = 512;
    int text_width = 0;           // 0 skips the check
    int text_sequence_length = 0; // 0 skips the check
};

// Shape probes on the three diffusion ports. Failures are reported in the
// returned report, never thrown.
PortReport validate_ports(const LatentCodec& codec, const Denoiser& denoiser, const TextEncoder& text,
                          const PortExpectations& expect = {});

// Per-layer channel weights from a JSON file {"layers": [[w, ...], ...]}.
// A missing file yields all-ones weights and a logged warning.
std::vector<std::vector<double>> load_channel_weights(const std::string& path,
                                                      std::span<const int> channels_per_layer);

} // namespace ipad
