#pragma once

#include <cstdint>
#include <ostream>

namespace idsdvbs {

enum class OpKind {
    G1ScalarMul,
    G1Add,
    G2Exp,
    G2Mul,
    Pairing,
    MapToPoint,
};

// Counts of the operations the cost model prices. Only the public entry
// points of the curve layer are counted; internal helpers (cofactor clearing
// inside hash_to_point, the Miller loop, subgroup checks during decoding) are
// not.
struct OpCounts {
    std::uint64_t g1_scalar_mul = 0;
    std::uint64_t g1_add = 0;
    std::uint64_t g2_exp = 0;
    std::uint64_t g2_mul = 0;
    std::uint64_t pairing = 0;
    std::uint64_t map_to_point = 0;

    OpCounts& operator+=(const OpCounts& o);
    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpCounts& c);

class OpCounter {
public:
    const OpCounts& counts() const noexcept { return counts_; }
    void reset() noexcept { counts_ = {}; }
    void record(OpKind kind) noexcept;
    void merge(const OpCounter& other) noexcept { counts_ += other.counts_; }

private:
    OpCounts counts_;
};

// Installs a counter as the active one for the current thread until
// destruction. Regions nest; the previous counter is restored on exit.
class CountingRegion {
public:
    explicit CountingRegion(OpCounter& counter) noexcept;
    ~CountingRegion();
    CountingRegion(const CountingRegion&) = delete;
    CountingRegion& operator=(const CountingRegion&) = delete;

private:
    OpCounter* previous_;
};

/// Records into the thread's active counter, if any.
void record_op(OpKind kind) noexcept;

}  // namespace idsdvbs
