#pragma once

#include <filesystem>

#include <opencv2/core.hpp>

#include "ipad/model_ports.hpp"
#include "ipad/tensor.hpp"

namespace ipad {

// Planar tensor <-> interleaved OpenCV matrix (CV_64FC<channels>).
cv::Mat to_mat(const Tensor& t);
Tensor from_mat(const cv::Mat& m);

// Single-channel view of channel `c`, sharing memory with the tensor.
cv::Mat channel_view(Tensor& t, int c);
cv::Mat channel_view(const Tensor& t, int c);

cv::Mat to_mat(const Mask& m);
Mask mask_from_mat(const cv::Mat& m);

Image read_image(const std::filesystem::path& path);
Mask read_mask(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const Image& image);
void write_mask(const std::filesystem::path& path, const Mask& mask);

Tensor resize_bilinear(const Tensor& t, int height, int width);
Tensor resize_nearest(const Tensor& t, int height, int width);
Mask resize_nearest(const Mask& m, int height, int width);

// Clockwise rotation by quarter_turns * 90 degrees.
Tensor rotate_quarter(const Tensor& t, int quarter_turns);

Tensor avg_pool(const Tensor& t, int stride);
Tensor grayscale(const Image& image);

// Elementwise product of every channel with the mask.
Tensor apply_mask(const Tensor& t, const Mask& m);
// (1 - m) * t
Tensor apply_inverse_mask(const Tensor& t, const Mask& m);

} // namespace ipad
