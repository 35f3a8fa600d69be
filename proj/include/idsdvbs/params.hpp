#pragma once

#include "idsdvbs/curve.hpp"
#include "idsdvbs/kv.hpp"

#include <cstdint>

namespace idsdvbs {

struct ParamSearchOptions {
    /// 0: take the smallest r >= 1. Otherwise start r at the smallest value
    /// giving a p of exactly this many bits, and fail if p outgrows it.
    std::size_t p_bits = 0;
    std::uint64_t max_r_steps = std::uint64_t{1} << 20;
    std::string security_label;
};

/// Derives a prime q of exactly q_bits bits from the seed, then searches
/// p = 12*q*r - 1 over r (see ParamSearchOptions) for a prime p = 3 (mod 4)
/// whose cofactor 12r is not divisible by q. The generator is the
/// try-and-increment image of a seed-derived string. Deterministic in
/// (q_bits, seed, options).
CurveParams generate_params(std::size_t q_bits, ByteView seed, const ParamSearchOptions& options = {});

/// Same search with the group order fixed by the caller.
CurveParams generate_params_for_order(const BigInt& q, ByteView seed, const ParamSearchOptions& options = {});

/// q = 13, p = 311, cofactor 24.
const CurveParams& toy_params();

/// The 160-bit Solinas prime 2^159 + 2^17 + 1.
BigInt solinas_order();

/// Decimal key-value text: p, q, cofactor, Px, Py, security_label.
std::string write_params_text(const CurveParams& params);
CurveParams read_params_text(std::string_view text);

KeyValues params_to_kv(const CurveParams& params);
CurveParams params_from_kv(const KeyValues& kv);

}  // namespace idsdvbs
