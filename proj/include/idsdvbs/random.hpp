#pragma once

#include "idsdvbs/bigint.hpp"

#include <cstdint>
#include <span>

namespace idsdvbs {

// Randomness source handed explicitly to every probabilistic operation.
// below() has a default rejection-sampling implementation on top of fill();
// test doubles may override it to script exact values.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual void fill(std::span<std::uint8_t> out) = 0;

    /// Uniform integer in [0, n). Requires n >= 1.
    virtual BigInt below(const BigInt& n);

    Bytes bytes(std::size_t n);
};

// Deterministic stream: block i = SHA-256(seed || i as 8-byte big-endian).
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(ByteView seed);
    explicit SeededRandom(std::string_view seed);

    void fill(std::span<std::uint8_t> out) override;

private:
    Bytes seed_;
    std::uint64_t counter_ = 0;
    Bytes block_;
    std::size_t block_pos_ = 0;
};

// Operating-system entropy via OpenSSL's RAND_bytes.
class SystemRandom final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

}  // namespace idsdvbs
