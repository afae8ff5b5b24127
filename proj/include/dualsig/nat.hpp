#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dualsig {

// Arbitrary-precision natural number. Values passed through the public API
// are canonical and non-negative; signed intermediates are confined to the
// call sites that need them (exponent bookkeeping, attack residuals).
using Nat = mpz_class;

// Hex wire convention shared by every file format: lowercase, big-endian,
// no leading zeros, "0" for zero.
std::string to_hex(const Nat& x);

// Strict inverse of to_hex. Rejects empty strings, uppercase or non-hex
// characters, and non-canonical leading zeros.
Nat nat_from_hex(const std::string& s);

// floor(log2(x)) + 1 for x > 0; 0 for x = 0.
std::size_t bit_length(const Nat& x);

Nat nat_from_bytes_be(std::span<const std::uint8_t> bytes);

// Hex byte-string decoding for seeds: even length, lowercase or uppercase
// digits. Throws std::invalid_argument on malformed input.
std::vector<std::uint8_t> bytes_from_hex(const std::string& s);
std::string hex_from_bytes(std::span<const std::uint8_t> bytes);

}  // namespace dualsig
