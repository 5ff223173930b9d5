#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace argen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : Error {
    using Error::Error;
};

// Dense row-major f32 tensor. The on-disk ARGT container is:
//   magic "ARGT" | u32 version=1 | u32 ndim | ndim x u64 dims | f32 payload
// all little-endian; read(write(x)) is bit-identical.
struct Tensor {
    std::vector<std::uint64_t> dims;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::uint64_t> d);

    std::size_t size() const { return data.size(); }
    float& at(std::size_t i) { return data[i]; }
    float at(std::size_t i) const { return data[i]; }
};

std::uint64_t tensor_element_count(const std::vector<std::uint64_t>& dims);

void write_argt(const std::string& path, const Tensor& t);
Tensor read_argt(const std::string& path);

// In-memory codec, used by tests and by write_argt/read_argt.
std::vector<std::uint8_t> encode_argt(const Tensor& t);
Tensor decode_argt(const std::vector<std::uint8_t>& bytes);

// Atomic file helpers (temp + rename) used for every pipeline artifact.
void write_file_atomic(const std::string& path, const void* bytes, std::size_t n);
void write_text_atomic(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// FNV-1a 64-bit content hash, hex-encoded; used for manifest input hashes.
std::string fnv1a_hex(const void* bytes, std::size_t n);
std::string hash_file(const std::string& path);

}  // namespace argen
