#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "ipad/tensor.hpp"

namespace ipad {

// Mann-Whitney AUROC; tied pos/neg pairs count half.
double auroc(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Average precision: sum over descending distinct thresholds of
// (recall step) * precision.
double aupr(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Best F1 over all "score >= threshold" cut points (predict-none scores 0).
double f1_max(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Per-region overlap: mean over 8-connected ground-truth regions of the
// fraction detected, integrated against the false-positive rate on
// [0, fpr_cap] and divided by fpr_cap. Pixels are pooled over all maps.
double pro(std::span<const Tensor> score_maps, std::span<const Mask> gt_masks, double fpr_cap = 0.3);

struct CategoryMetrics {
    std::optional<double> i_auroc, i_aupr, i_f1max;
    std::optional<double> p_auroc, p_f1max, pro;
    std::size_t n_images = 0;
    std::size_t n_pixels = 0;
};

struct EvaluationReport {
    std::map<std::string, CategoryMetrics> categories;
    std::string config_hash;

    // Unweighted mean over the categories where each metric is defined.
    CategoryMetrics mean() const;
    std::string to_json() const;
    // Columns: category, image AUROC/AUPR/F1-max, pixel AUROC/PRO/F1-max.
    std::string to_csv() const;
};

} // namespace ipad
