#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ipad {

struct Shape {
    int channels = 0;
    int height = 0;
    int width = 0;

    std::size_t plane() const { return static_cast<std::size_t>(height) * width; }
    std::size_t numel() const { return plane() * channels; }
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

// Dense channel-major (C x H x W) array of doubles. Used for images
// (3 channels, values in [0,1]), latents, feature maps and score maps.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, double fill = 0.0);
    Tensor(int channels, int height, int width, double fill = 0.0)
        : Tensor(Shape{channels, height, width}, fill) {}
    Tensor(Shape shape, std::vector<double> data);

    const Shape& shape() const { return shape_; }
    int channels() const { return shape_.channels; }
    int height() const { return shape_.height; }
    int width() const { return shape_.width; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& at(int c, int y, int x) { return data_[index(c, y, x)]; }
    double at(int c, int y, int x) const { return data_[index(c, y, x)]; }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }
    std::span<double> channel(int c);
    std::span<const double> channel(int c) const;
    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(double s);

    double max() const;
    double min() const;
    double sum() const;
    double mean() const;
    bool all_finite() const;

    bool operator==(const Tensor&) const = default;

private:
    std::size_t index(int c, int y, int x) const {
        return (static_cast<std::size_t>(c) * shape_.height + y) * shape_.width + x;
    }

    Shape shape_{};
    std::vector<double> data_;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(Tensor a, double s);

// Stacks tensors of equal spatial size along the channel axis.
Tensor concat_channels(std::span<const Tensor* const> parts);

// Binary H x W mask, values in {0,1}.
class Mask {
public:
    Mask() = default;
    Mask(int height, int width, std::uint8_t fill = 0);

    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }

    std::uint8_t& at(int y, int x) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    std::uint8_t at(int y, int x) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
    std::uint8_t& operator[](std::size_t i) { return data_[i]; }
    std::uint8_t operator[](std::size_t i) const { return data_[i]; }

    std::span<std::uint8_t> data() { return data_; }
    std::span<const std::uint8_t> data() const { return data_; }

    std::size_t count() const;
    double coverage() const;
    bool any() const { return count() > 0; }

    // 1-channel tensor with values 0.0 / 1.0.
    Tensor to_tensor() const;

    bool operator==(const Mask&) const = default;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<std::uint8_t> data_;
};

double iou(const Mask& a, const Mask& b);

} // namespace ipad
