#include "dualsig/hashing.hpp"

#include <stdexcept>

#include "dualsig/numeric.hpp"
#include "dualsig/sha256.hpp"

namespace dualsig {

namespace {
constexpr int kRejectionCap = 1000;  // failure probability < 2^-1000

Nat draw_tagged(std::uint8_t tag, std::span<const std::uint8_t> m, std::uint32_t i,
                std::size_t bits) {
    std::vector<std::uint8_t> input;
    input.reserve(1 + m.size() + 4);
    input.push_back(tag);
    input.insert(input.end(), m.begin(), m.end());
    auto suffix = counter_suffix(i);
    input.insert(input.end(), suffix.begin(), suffix.end());
    return kdf_nat(input, bits);
}
}  // namespace

std::vector<std::uint8_t> counter_suffix(std::uint32_t i) {
    if (i == 0) return {0x00};
    std::vector<std::uint8_t> out;
    for (int shift = 24; shift >= 0; shift -= 8) {
        std::uint8_t byte = static_cast<std::uint8_t>(i >> shift);
        if (byte != 0 || !out.empty()) out.push_back(byte);
    }
    return out;
}

BitString kdf(std::span<const std::uint8_t> message, std::size_t l) {
    if (l == 0) throw std::domain_error("kdf: zero output length");
    std::size_t nbytes = (l + 7) / 8;
    std::vector<std::uint8_t> stream;
    stream.reserve((nbytes + 31) / 32 * 32);
    for (std::uint32_t block = 0; stream.size() < nbytes; ++block) {
        Sha256 h;
        h.update(message);
        std::uint8_t ctr[kKdfCounterBytes] = {
            std::uint8_t(block >> 24), std::uint8_t(block >> 16), std::uint8_t(block >> 8),
            std::uint8_t(block)};
        h.update({ctr, kKdfCounterBytes});
        auto digest = h.finish();
        stream.insert(stream.end(), digest.begin(), digest.end());
    }
    stream.resize(nbytes);
    // keep exactly l bits: clear the low 8*nbytes - l bits of the tail byte
    unsigned drop = static_cast<unsigned>(8 * nbytes - l);
    if (drop > 0) stream.back() &= static_cast<std::uint8_t>(0xff << drop);
    return {std::move(stream), l};
}

Nat kdf_nat(std::span<const std::uint8_t> message, std::size_t l) {
    BitString bs = kdf(message, l);
    Nat x = nat_from_bytes_be(bs.bytes);
    unsigned drop = static_cast<unsigned>(8 * bs.bytes.size() - l);
    if (drop > 0) mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), drop);
    return x;
}

Nat hash_scalar(std::span<const std::uint8_t> m, const Nat& n) {
    if (n < 2) throw std::domain_error("hash_scalar: n < 2");
    std::size_t bits = bit_length(n);
    for (std::uint32_t i = 0; i < kRejectionCap; ++i) {
        Nat k = draw_tagged(kTagScalarHash, m, i, bits);
        if (k < n) return k;
    }
    throw std::runtime_error("hash_scalar: rejection cap exceeded");
}

Point map_to_point(std::span<const std::uint8_t> m, const Point& P, const Nat& n,
                   const CurveParams& curve, MapToPointStats* stats) {
    if (n < 2) throw std::domain_error("map_to_point: n < 2");
    std::size_t bits = bit_length(n);
    for (std::uint32_t i = 0; i < kRejectionCap; ++i) {
        Nat k = draw_tagged(kTagMapToPoint, m, i, bits);
        // k must be a unit mod n so that the point has exact order n
        if (k >= 1 && k < n && gcd(k, n) == 1) {
            if (stats) {
                stats->iterations = static_cast<int>(i) + 1;
                stats->k = k;
            }
            return scalar_mul(k, P, curve);
        }
    }
    throw std::runtime_error("map_to_point: rejection cap exceeded");
}

}  // namespace dualsig
