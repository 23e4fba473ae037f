#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ipad/model_ports.hpp"

namespace ipad {

// Hierarchical prompts for one category: a coarse whole-object description
// and finer part-level descriptions.
struct PromptSet {
    std::string category;
    std::vector<std::string> coarse;
    std::vector<std::string> fine;

    // coarse followed by fine, duplicates removed (first occurrence kept).
    std::vector<std::string> all() const;
};

std::string coarse_template(const std::string& category);

class PromptLibrary {
public:
    PromptLibrary() = default;

    // YAML: {categories: [{category: c, coarse: [...], fine: [...]}, ...]}
    static PromptLibrary load(const std::filesystem::path& path);
    static PromptLibrary from_records(std::vector<PromptSet> records);

    // Unknown categories fall back to the coarse template alone.
    PromptSet prompts_for_category(const std::string& category) const;
    std::vector<std::string> categories() const;

private:
    std::map<std::string, PromptSet> records_;
};

std::string sample_training_prompt(const PromptSet& prompts, std::mt19937_64& rng);

// Mean of the prompt embeddings, per token position.
Tensor aggregate_prompt_embedding(const PromptSet& prompts, const TextEncoder& text);

} // namespace ipad
