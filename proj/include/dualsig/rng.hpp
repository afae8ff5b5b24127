#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dualsig/nat.hpp"

namespace dualsig {

class RandomSource {
  public:
    virtual ~RandomSource() = default;
    virtual void fill(std::uint8_t* out, std::size_t len) = 0;
};

// SHA-256 counter stream keyed by a seed byte string. Identical seeds give
// identical byte streams on every platform, which is what makes seeded CLI
// runs byte-for-byte reproducible.
class DeterministicRng final : public RandomSource {
  public:
    explicit DeterministicRng(std::vector<std::uint8_t> seed);
    void fill(std::uint8_t* out, std::size_t len) override;

  private:
    void refill();

    std::vector<std::uint8_t> seed_;
    std::uint64_t counter_ = 0;
    std::array<std::uint8_t, 32> block_{};
    std::size_t pos_ = 32;
};

class SystemRng final : public RandomSource {
  public:
    void fill(std::uint8_t* out, std::size_t len) override;
};

// Uniform in [0, 2^bits).
Nat draw_bits(RandomSource& rng, std::size_t bits);

// Uniform in [0, bound) by rejection on bit_length(bound) bits.
Nat draw_below(RandomSource& rng, const Nat& bound);

// Uniform in [lo, hi).
Nat draw_range(RandomSource& rng, const Nat& lo, const Nat& hi);

// Uniform prime of exactly `bits` bits (top bit set), by redraw.
Nat draw_prime(RandomSource& rng, std::size_t bits, int rounds = 64);

}  // namespace dualsig
