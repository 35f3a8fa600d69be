#pragma once

#include "idsdvbs/params.hpp"
#include "idsdvbs/scheme.hpp"

#include <deque>

namespace idsdvbs::test {

// Scripted below() results, falling back to a seeded stream when the tape
// runs out. zq_sample_unit adds 1, so a tape value v yields the unit v + 1.
class TapeRandom final : public RandomSource {
public:
    explicit TapeRandom(std::deque<BigInt> tape, std::string_view fallback_seed = "tape")
        : tape_(std::move(tape)), fallback_(fallback_seed)
    {
    }

    BigInt below(const BigInt& n) override
    {
        if (tape_.empty())
            return fallback_.below(n);
        BigInt v = tape_.front();
        tape_.pop_front();
        if (v >= n)
            throw std::logic_error("tape value out of range");
        return v;
    }

    void fill(std::span<std::uint8_t> out) override { fallback_.fill(out); }

    std::size_t remaining() const { return tape_.size(); }

private:
    std::deque<BigInt> tape_;
    SeededRandom fallback_;
};

inline std::pair<SystemParams, MasterSecret> toy_system()
{
    SeededRandom rng("test-0");
    return setup(toy_params(), rng);
}

inline G1Point pt(const CurveParams& c, long x, long y)
{
    return G1Point(c.fp_element(x), c.fp_element(y));
}

}  // namespace idsdvbs::test
