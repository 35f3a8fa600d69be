#include "idsdvbs/bytes.hpp"

#include "idsdvbs/errors.hpp"

namespace idsdvbs {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::ParamSearchFailed: return "ParamSearchFailed";
    case ErrorCode::HashToPointFailed: return "HashToPointFailed";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::RefusedTooLarge: return "RefusedTooLarge";
    case ErrorCode::DuplicateSession: return "DuplicateSession";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

std::string to_hex(ByteView data)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

namespace {
int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw DecodeError(hex.size(), "odd-length hex string");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw DecodeError(2 * i, "invalid hex digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

void append(Bytes& out, ByteView data)
{
    out.insert(out.end(), data.begin(), data.end());
}

void append_u32_be(Bytes& out, std::uint32_t v)
{
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

void append_u64_be(Bytes& out, std::uint64_t v)
{
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

ByteView ByteReader::take(std::size_t n, const char* what)
{
    if (n > remaining())
        throw DecodeError(position(), std::string("truncated ") + what);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

std::uint8_t ByteReader::u8(const char* what)
{
    return take(1, what)[0];
}

std::uint32_t ByteReader::u32_be(const char* what)
{
    auto b = take(4, what);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) |
           std::uint32_t{b[3]};
}

std::uint64_t ByteReader::u64_be(const char* what)
{
    auto b = take(8, what);
    std::uint64_t v = 0;
    for (auto byte : b)
        v = (v << 8) | byte;
    return v;
}

void ByteReader::expect_end(const char* what) const
{
    if (!empty())
        throw DecodeError(position(), std::string("trailing bytes after ") + what);
}

}  // namespace idsdvbs
