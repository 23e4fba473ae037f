#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipad/mask_engine.hpp"
#include "ipad/model_ports.hpp"
#include "ipad/schedule.hpp"

namespace ipad {

struct InpaintRequest {
    Image image;
    MaskProposal mask;
    Tensor condition;
    double lambda = 0.4;
    int n_steps = 50;
    std::uint64_t seed = 0;
};

struct InpaintResult {
    Image inpainted;
    MaskProposal mask;
    int steps_run = 0;
};

// Seed for one (image, mask) request, independent of processing order.
std::uint64_t request_seed(std::uint64_t base_seed, const Image& image, const Mask& mask);
// Same seed from a precomputed image_digest(image).
std::uint64_t request_seed(std::uint64_t base_seed, const std::string& image_digest, const Mask& mask);
std::string image_digest(const Image& image);

// Masked latent-diffusion inpainting: partially noise the image latent to
// step round(lambda * n_steps) of the subsampled schedule, then denoise with
// [z_t; z_masked; m_latent] as the denoiser input.
InpaintResult inpaint(const InpaintRequest& request, const LatentCodec& codec, const Denoiser& denoiser,
                      const NoiseSchedule& schedule);

// Inpainter bound to a fixed set of ports and sampling settings.
class DiffusionInpainter : public Inpainter {
public:
    DiffusionInpainter(std::shared_ptr<const LatentCodec> codec, std::shared_ptr<const Denoiser> denoiser,
                       NoiseSchedule schedule, Tensor condition, double lambda, int n_steps, std::uint64_t seed);

    InpaintResult run(const Image& image, const MaskProposal& mask) const;
    Image inpaint(const Image& image, const Mask& mask) const override;
    std::string name() const override { return "diffusion"; }
    std::string fingerprint() const override;
    bool reentrant() const override { return codec_->reentrant() && denoiser_->reentrant(); }

private:
    std::shared_ptr<const LatentCodec> codec_;
    std::shared_ptr<const Denoiser> denoiser_;
    NoiseSchedule schedule_;
    Tensor condition_;
    double lambda_;
    int n_steps_;
    std::uint64_t seed_;
    mutable std::mutex serial_;
    // Every mask of one image needs the image digest; remember the last one.
    mutable std::mutex digest_lock_;
    mutable Image last_image_;
    mutable std::string last_digest_;
};

// On-disk store of inpainted images keyed by a content hash. Entries carry a
// payload digest; corrupted entries are reported as misses.
class InpaintCache {
public:
    explicit InpaintCache(std::filesystem::path dir);

    static std::string key(const Inpainter& inpainter, const Image& image, const Mask& mask);
    std::optional<Image> get(const std::string& key) const;
    void put(const std::string& key, const Image& image) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

// Runs one inpainting per mask, spreading work across `workers` threads when
// the inpainter is reentrant. Results are in mask order.
std::vector<Image> inpaint_all(const Inpainter& inpainter, const Image& image, std::span<const MaskProposal> masks,
                               int workers = 1, const InpaintCache* cache = nullptr);

} // namespace ipad
