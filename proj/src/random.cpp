#include "idsdvbs/random.hpp"

#include "idsdvbs/errors.hpp"
#include "idsdvbs/hash.hpp"

#include <openssl/rand.h>

#include <algorithm>

namespace idsdvbs {

BigInt RandomSource::below(const BigInt& n)
{
    if (n < 1)
        throw Error(ErrorCode::DomainError, "below() requires n >= 1");
    if (n == 1)
        return 0;
    const std::size_t bits = bit_length(n - 1);
    const std::size_t nbytes = (bits + 7) / 8;
    const unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
    Bytes buf(nbytes);
    for (;;) {
        fill(buf);
        buf[0] &= static_cast<std::uint8_t>(0xff >> excess);
        BigInt v = os2ip(buf);
        if (v < n)
            return v;
    }
}

Bytes RandomSource::bytes(std::size_t n)
{
    Bytes out(n);
    fill(out);
    return out;
}

SeededRandom::SeededRandom(ByteView seed) : seed_(seed.begin(), seed.end()) {}

SeededRandom::SeededRandom(std::string_view seed) : SeededRandom(as_bytes(seed)) {}

void SeededRandom::fill(std::span<std::uint8_t> out)
{
    std::size_t written = 0;
    while (written < out.size()) {
        if (block_pos_ == block_.size()) {
            Bytes input = seed_;
            append_u64_be(input, counter_++);
            auto digest = sha256(input);
            block_.assign(digest.begin(), digest.end());
            block_pos_ = 0;
        }
        auto n = std::min(out.size() - written, block_.size() - block_pos_);
        std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(block_pos_), n,
                    out.begin() + static_cast<std::ptrdiff_t>(written));
        block_pos_ += n;
        written += n;
    }
}

void SystemRandom::fill(std::span<std::uint8_t> out)
{
    if (!out.empty() && RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        throw std::runtime_error("RAND_bytes failed");
}

}  // namespace idsdvbs
