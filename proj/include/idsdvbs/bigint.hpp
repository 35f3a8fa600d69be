#pragma once

#include "idsdvbs/bytes.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace idsdvbs {

using BigInt = mpz_class;

std::size_t bit_length(const BigInt& v);

/// Bytes needed to hold any value below `modulus`.
std::size_t byte_width(const BigInt& modulus);

/// Big-endian, left-padded to exactly `width` bytes. Throws DomainError if
/// the value is negative or does not fit.
Bytes i2osp(const BigInt& v, std::size_t width);
BigInt os2ip(ByteView data);

bool is_probable_prime(const BigInt& n);

/// Non-negative residue of v mod m.
BigInt mod(const BigInt& v, const BigInt& m);

/// Parses a decimal integer; throws DecodeError on junk.
BigInt parse_decimal(const std::string& text);

}  // namespace idsdvbs
