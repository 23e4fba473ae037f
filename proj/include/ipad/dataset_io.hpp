#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipad/model_ports.hpp"
#include "ipad/tensor.hpp"

namespace ipad {

namespace fs = std::filesystem;

enum class DatasetLayout { mvtec, visa, synthetic };

DatasetLayout parse_layout(const std::string& name);
std::string to_string(DatasetLayout layout);

enum class ItemLabel { normal, anomalous };

struct TestItem {
    fs::path image;
    ItemLabel label = ItemLabel::normal;
    std::optional<fs::path> gt_mask;
    std::string defect; // "good" for normal items
    // Defect-free version of the image (synthetic layout only).
    std::optional<fs::path> reference;

    bool operator==(const TestItem&) const = default;
};

struct DatasetIndex {
    DatasetLayout layout = DatasetLayout::mvtec;
    fs::path root;
    std::vector<std::string> categories;
    std::map<std::string, std::vector<fs::path>> train_normals;
    std::map<std::string, std::vector<TestItem>> test_items;

    std::size_t test_count() const;
    bool operator==(const DatasetIndex&) const = default;
};

struct LoadOptions {
    // Decode every image and mask once while indexing.
    bool validate_images = true;
    // Restrict to these categories (all when empty).
    std::vector<std::string> categories;
};

// mvtec / synthetic: <cat>/train/good, <cat>/test/<defect>,
// <cat>/ground_truth/<defect>/<stem>_mask.png; synthetic additionally has
// <cat>/reference/<defect>/<stem>.png.
// visa: split manifest at split_csv/1cls.csv with columns
// object,split,label,image,mask (paths relative to root).
DatasetIndex load_dataset(const fs::path& root, DatasetLayout layout, const LoadOptions& options = {});

void save_index(const fs::path& path, const DatasetIndex& index);
DatasetIndex load_index(const fs::path& path);

constexpr int kImageSize = 512;

// Bilinear resize of images and nearest resize of masks to size x size.
Image load_image_resized(const fs::path& path, int size = kImageSize);
Mask load_mask_resized(const fs::path& path, int size = kImageSize);

struct SupportSet {
    int k = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::vector<fs::path>> images;

    bool operator==(const SupportSet&) const = default;
};

// Uniform draw of k train normals per category without replacement. Each
// category gets its own stream derived from (seed, category).
SupportSet sample_k_shot(const DatasetIndex& index, int k, std::uint64_t seed);

struct SyntheticParams {
    std::vector<std::string> categories{"synthetic_texture"};
    int size = kImageSize;
    int n_train = 4;
    int n_test_good = 8;
    int n_test_defective = 8; // cycles through scratch, blob, occlusion
    std::uint64_t seed = 7;
};

// Writes a synthetic-layout tree of textured images with injected defects,
// exact ground-truth masks and the clean reference of every test image.
void generate_synthetic(const fs::path& root, const SyntheticParams& params);

} // namespace ipad
