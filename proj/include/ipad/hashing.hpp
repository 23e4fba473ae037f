#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ipad/tensor.hpp"

namespace ipad {

// Incremental SHA-256.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(std::span<const std::byte> bytes);
    Sha256& update(std::string_view text);
    Sha256& update(const Tensor& t);
    Sha256& update(const Mask& m);
    Sha256& update(double v);
    Sha256& update(std::uint64_t v);

    std::string hex();
    // First 8 bytes of the digest, for seeding generators.
    std::uint64_t first64();

private:
    void finish(unsigned char* out);
    void* ctx_;
};

std::string sha256_hex(std::string_view text);
std::string sha256_file(const std::string& path);

} // namespace ipad
