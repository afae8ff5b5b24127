#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualsig/curve.hpp"
#include "dualsig/nat.hpp"

namespace dualsig {

// Wire-normative constants: changing any of these breaks every existing
// signature.
inline constexpr std::uint8_t kTagScalarHash = 0x01;
inline constexpr std::uint8_t kTagMapToPoint = 0x02;
inline constexpr std::size_t kKdfCounterBytes = 4;  // big-endian block counter

// Retry-counter suffix: a single zero byte for i = 0, minimal big-endian
// bytes of i otherwise.
std::vector<std::uint8_t> counter_suffix(std::uint32_t i);

// l pseudorandom bits (MSB-first in the byte vector, final partial byte
// right-aligned by the integer view): the first l bits of
// SHA-256(m || c_0) || SHA-256(m || c_1) || ... with 4-byte block counters.
struct BitString {
    std::vector<std::uint8_t> bytes;  // ceil(bit_len / 8) bytes, MSB-first
    std::size_t bit_len;
};
BitString kdf(std::span<const std::uint8_t> message, std::size_t l);

// The bit string read as a big-endian integer in [0, 2^l).
Nat kdf_nat(std::span<const std::uint8_t> message, std::size_t l);

// h: {0,1}* -> {0,...,n-1} by rejection on bit_length(n)-bit draws.
Nat hash_scalar(std::span<const std::uint8_t> m, const Nat& n);

struct MapToPointStats {
    int iterations = 0;  // number of KDF draws
    Nat k;               // accepted scalar
};

// H: {0,1}* -> <P>: rejection loop for a unit scalar k mod n, then k*P.
// Output has exact order n.
Point map_to_point(std::span<const std::uint8_t> m, const Point& P, const Nat& n,
                   const CurveParams& curve, MapToPointStats* stats = nullptr);

}  // namespace dualsig
