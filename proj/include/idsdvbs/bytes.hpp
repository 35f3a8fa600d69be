#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idsdvbs {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

inline ByteView as_bytes(std::string_view s)
{
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string to_hex(ByteView data);

/// Throws DecodeError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

void append(Bytes& out, ByteView data);
void append_u32_be(Bytes& out, std::uint32_t v);
void append_u64_be(Bytes& out, std::uint64_t v);

// Bounds-checked forward reader. Every failure is a DecodeError carrying the
// offset at which the read was attempted.
class ByteReader {
public:
    explicit ByteReader(ByteView data, std::size_t base_offset = 0)
        : data_(data), base_(base_offset)
    {}

    ByteView take(std::size_t n, const char* what);
    std::uint8_t u8(const char* what);
    std::uint32_t u32_be(const char* what);
    std::uint64_t u64_be(const char* what);

    std::size_t position() const noexcept { return base_ + pos_; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }
    bool empty() const noexcept { return remaining() == 0; }

    /// Throws unless every byte has been consumed.
    void expect_end(const char* what) const;

private:
    ByteView data_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace idsdvbs
