#include "smclab/bytes.hpp"

#include <algorithm>

namespace smclab {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(BytesView b) {
    std::string out;
    out.reserve(b.size() * 2);
    for (std::uint8_t c : b) {
        out.push_back(kHexDigits[c >> 4]);
        out.push_back(kHexDigits[c & 0x0f]);
    }
    return out;
}

std::optional<Bytes> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

Bytes be64(std::uint64_t v) {
    Bytes out(8);
    for (int i = 7; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

std::uint64_t read_be64(BytesView b) {
    std::uint64_t v = 0;
    for (std::uint8_t c : b) v = v << 8 | c;
    return v;
}

bool contains(BytesView haystack, BytesView needle) {
    if (needle.empty()) return true;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
}

ByteWriter& ByteWriter::u8(std::uint8_t v) {
    buf_.push_back(v);
    return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
    Bytes b = be64(v);
    buf_.insert(buf_.end(), b.begin(), b.end());
    return *this;
}

ByteWriter& ByteWriter::raw(BytesView v) {
    buf_.insert(buf_.end(), v.begin(), v.end());
    return *this;
}

ByteWriter& ByteWriter::var(BytesView v) {
    auto n = static_cast<std::uint32_t>(v.size());
    for (int i = 3; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
    return raw(v);
}

ByteWriter& ByteWriter::var(std::string_view v) {
    return var(BytesView(reinterpret_cast<const std::uint8_t*>(v.data()), v.size()));
}

std::optional<std::uint8_t> ByteReader::u8() {
    if (pos_ + 1 > data_.size()) return std::nullopt;
    return data_[pos_++];
}

std::optional<std::uint64_t> ByteReader::u64() {
    auto b = raw(8);
    if (!b) return std::nullopt;
    return read_be64(*b);
}

std::optional<Bytes> ByteReader::raw(std::size_t n) {
    if (pos_ + n > data_.size()) return std::nullopt;
    Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
              data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
}

std::optional<Bytes> ByteReader::var() {
    if (pos_ + 4 > data_.size()) return std::nullopt;
    std::uint32_t n = 0;
    for (int i = 0; i < 4; ++i) n = n << 8 | data_[pos_++];
    return raw(n);
}

}  // namespace smclab
