#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smclab {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(BytesView b) {
    return std::string(b.begin(), b.end());
}

std::string to_hex(BytesView b);
std::optional<Bytes> from_hex(std::string_view hex);

Bytes be64(std::uint64_t v);
std::uint64_t read_be64(BytesView b);  // b.size() must be 8

/// True if `needle` occurs as a contiguous substring of `haystack`.
bool contains(BytesView haystack, BytesView needle);

/// Sequential builder for the tagged fixed-field message layouts.
class ByteWriter {
public:
    ByteWriter& u8(std::uint8_t v);
    ByteWriter& u64(std::uint64_t v);
    ByteWriter& raw(BytesView v);           // fixed-width field, no prefix
    ByteWriter& var(BytesView v);           // u32 big-endian length, then data
    ByteWriter& var(std::string_view v);
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

/// Cursor over a received payload; every read reports failure instead of throwing.
class ByteReader {
public:
    explicit ByteReader(BytesView data) : data_(data) {}

    std::optional<std::uint8_t> u8();
    std::optional<std::uint64_t> u64();
    std::optional<Bytes> raw(std::size_t n);
    std::optional<Bytes> var();
    bool at_end() const { return pos_ == data_.size(); }

private:
    BytesView data_;
    std::size_t pos_ = 0;
};

}  // namespace smclab
