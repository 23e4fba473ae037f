#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ipad/config.hpp"
#include "ipad/dataset_io.hpp"
#include "ipad/metrics.hpp"
#include "ipad/model_ports.hpp"

namespace ipad {

// Ports built from a RunConfig. The trainable pointers alias codec/denoiser
// when those implementations support fine-tuning.
struct PortSet {
    std::shared_ptr<LatentCodec> codec;
    std::shared_ptr<Denoiser> denoiser;
    std::shared_ptr<TextEncoder> text;
    std::shared_ptr<PatchFeatureExtractor> patch;
    std::shared_ptr<PerceptualExtractor> perceptual;
    TrainableCodec* trainable_codec = nullptr;
    TrainableDenoiser* trainable_denoiser = nullptr;
};

PortSet make_ports(const RunConfig& cfg);

// Output locations under cfg.output_dir.
struct RunLayout {
    std::filesystem::path root;
    std::filesystem::path checkpoints() const { return root / "checkpoints"; }
    std::filesystem::path prototypes() const { return root / "prototypes"; }
    std::filesystem::path cache() const { return root / "cache"; }
    std::filesystem::path scores() const { return root / "scores"; }
    std::filesystem::path index() const { return root / "index.json"; }
};

// Loads the dataset index, reusing (or writing) the JSON cache.
DatasetIndex open_index(const RunConfig& cfg);

struct FinetuneOutputs {
    std::filesystem::path denoiser_checkpoint;
    std::filesystem::path decoder_checkpoint;
    std::filesystem::path denoiser_loss_csv;
    std::filesystem::path decoder_loss_csv;
};

FinetuneOutputs cmd_finetune(const RunConfig& cfg);

// One bank file per category; empty in zero-shot mode.
std::vector<std::filesystem::path> cmd_build_prototypes(const RunConfig& cfg);

struct InferOptions {
    // Process at most this many test items per category (all when unset).
    std::optional<std::size_t> limit_per_category;
};

struct InferSummary {
    std::size_t images = 0;
    std::filesystem::path scores_json;
    std::string config_hash;
};

// Per test item writes <scores>/<category>/<defect>/<stem>.{bin,png,json};
// the JSON sidecar carries the image score and the config hash.
InferSummary cmd_infer(const RunConfig& cfg, const InferOptions& options = {});

// Reads the score maps for every test item, refuses missing maps and mixed
// config hashes, and writes report.json / report.csv next to them.
EvaluationReport cmd_evaluate(const RunConfig& cfg, const std::filesystem::path& score_dir,
                              const InferOptions& options = {});

void cmd_synth_data(const RunConfig& cfg);

PortReport cmd_validate_ports(const RunConfig& cfg);

// Sidecar path for a test item below a score directory.
std::filesystem::path score_stem(const std::filesystem::path& score_dir, const std::string& category,
                                 const TestItem& item);

// Exit code for an exception escaping a command: 2 config, 3 data, 4 port,
// 1 anything else.
int exit_code_for(const std::exception& e);

} // namespace ipad
