#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipad/mask_engine.hpp"
#include "ipad/model_ports.hpp"

namespace ipad {

// Normal patch-feature vectors for one category, stored row-major
// (count x dim).
class PrototypeBank {
public:
    PrototypeBank(std::string category, int dim, std::vector<double> vectors, std::size_t source_count);

    const std::string& category() const { return category_; }
    int dim() const { return dim_; }
    std::size_t count() const { return dim_ == 0 ? 0 : vectors_.size() / static_cast<std::size_t>(dim_); }
    std::size_t source_count() const { return source_count_; }
    std::span<const double> vector(std::size_t i) const;
    std::span<const double> data() const { return vectors_; }

    void save(const std::filesystem::path& path) const;
    static PrototypeBank load(const std::filesystem::path& path);

    bool operator==(const PrototypeBank&) const = default;

private:
    std::string category_;
    int dim_;
    std::vector<double> vectors_;
    std::size_t source_count_;
};

struct ErrorMap {
    Tensor values; // 1 x H' x W', nonnegative
    std::optional<double> threshold;
};

// Level-2 features concatenated with level-3 features nearest-upsampled to
// the level-2 grid.
Tensor extract_patch_features(const Image& image, const PatchFeatureExtractor& fx);

// Rotations are in degrees and must be multiples of 90.
PrototypeBank build_prototype_bank(const std::string& category, std::span<const Image> support,
                                   const PatchFeatureExtractor& fx, std::span<const int> rotations);

// Squared Euclidean distance from each feature position to its nearest
// prototype.
ErrorMap error_map_from_features(const Tensor& features, const PrototypeBank& bank);
ErrorMap prototype_error_map(const Image& image, const PrototypeBank& bank, const PatchFeatureExtractor& fx);

// Population variance of the values of `data` selected by `keep`, two-pass,
// in array order. Empty selections have variance 0.
template <typename Pred>
double selected_variance(std::span<const double> data, Pred keep);

// Threshold r minimizing Var({e >= r}) + Var({e < r}) over the distinct
// values of e; ties go to the largest r. nullopt when all values are equal.
std::optional<double> variance_split_threshold(std::span<const double> values);
std::optional<double> variance_split_threshold(ErrorMap& map);

// Objective used by variance_split_threshold for a given r.
double variance_split_objective(std::span<const double> values, double r);

// Cells with E >= r set, nearest-upsampled to height x width.
MaskProposal prototype_mask(const ErrorMap& map, double r, int height, int width);

template <typename Pred>
double selected_variance(std::span<const double> data, Pred keep) {
    double sum = 0.0;
    std::size_t n = 0;
    for (double v : data) {
        if (keep(v)) {
            sum += v;
            ++n;
        }
    }
    if (n == 0) return 0.0;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : data) {
        if (keep(v)) ss += (v - mean) * (v - mean);
    }
    return ss / static_cast<double>(n);
}

} // namespace ipad
