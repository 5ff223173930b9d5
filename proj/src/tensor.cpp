#include "argen/tensor.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace argen {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

}  // namespace

Tensor::Tensor(std::vector<std::uint64_t> d) : dims(std::move(d)) {
    data.assign(static_cast<std::size_t>(tensor_element_count(dims)), 0.0f);
}

std::uint64_t tensor_element_count(const std::vector<std::uint64_t>& dims) {
    std::uint64_t n = 1;
    for (auto d : dims) {
        if (d != 0 && n > UINT64_MAX / d) throw FormatError("ARGT: dimension overflow");
        n *= d;
    }
    return n;
}

std::vector<std::uint8_t> encode_argt(const Tensor& t) {
    if (tensor_element_count(t.dims) != t.data.size())
        throw FormatError("ARGT: dims do not match payload size");
    std::vector<std::uint8_t> out;
    out.reserve(16 + 8 * t.dims.size() + 4 * t.data.size());
    out.push_back('A');
    out.push_back('R');
    out.push_back('G');
    out.push_back('T');
    put_u32(out, 1);  // version
    put_u32(out, static_cast<std::uint32_t>(t.dims.size()));
    for (auto d : t.dims) put_u64(out, d);
    std::size_t off = out.size();
    out.resize(off + 4 * t.data.size());
    // f32 little-endian; memcpy is correct on LE hosts, per-byte otherwise
    for (std::size_t i = 0; i < t.data.size(); ++i) {
        std::uint32_t bits;
        std::memcpy(&bits, &t.data[i], 4);
        for (int b = 0; b < 4; ++b) out[off + 4 * i + b] = static_cast<std::uint8_t>(bits >> (8 * b));
    }
    return out;
}

Tensor decode_argt(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 12) throw FormatError("ARGT: truncated header");
    if (std::memcmp(bytes.data(), "ARGT", 4) != 0) throw FormatError("ARGT: bad magic");
    std::uint32_t version = get_u32(bytes.data() + 4);
    if (version != 1) throw FormatError("ARGT: unsupported version " + std::to_string(version));
    std::uint32_t ndim = get_u32(bytes.data() + 8);
    std::size_t header = 12 + 8ull * ndim;
    if (bytes.size() < header) throw FormatError("ARGT: truncated dims");
    Tensor t;
    t.dims.resize(ndim);
    for (std::uint32_t i = 0; i < ndim; ++i) t.dims[i] = get_u64(bytes.data() + 12 + 8ull * i);
    std::uint64_t n = tensor_element_count(t.dims);
    if (bytes.size() != header + 4 * n) throw FormatError("ARGT: payload size mismatch");
    t.data.resize(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint32_t bits = get_u32(bytes.data() + header + 4 * i);
        std::memcpy(&t.data[i], &bits, 4);
    }
    return t;
}

void write_file_atomic(const std::string& path, const void* bytes, std::size_t n) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open for write: " + tmp);
        f.write(static_cast<const char*>(bytes), static_cast<std::streamsize>(n));
        if (!f) throw Error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void write_text_atomic(const std::string& path, const std::string& text) {
    write_file_atomic(path, text.data(), text.size());
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open: " + path);
    std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return s;
}

void write_argt(const std::string& path, const Tensor& t) {
    auto bytes = encode_argt(t);
    write_file_atomic(path, bytes.data(), bytes.size());
}

Tensor read_argt(const std::string& path) {
    std::string s = read_text(path);
    std::vector<std::uint8_t> bytes(s.begin(), s.end());
    return decode_argt(bytes);
}

std::string fnv1a_hex(const void* bytes, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(bytes);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string hash_file(const std::string& path) {
    std::string s = read_text(path);
    return fnv1a_hex(s.data(), s.size());
}

}  // namespace argen
