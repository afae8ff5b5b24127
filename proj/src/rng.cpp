#include "dualsig/rng.hpp"

#include <random>
#include <stdexcept>

#include "dualsig/numeric.hpp"
#include "dualsig/sha256.hpp"

namespace dualsig {

DeterministicRng::DeterministicRng(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {}

void DeterministicRng::refill() {
    Sha256 h;
    h.update(seed_);
    std::uint8_t ctr[8];
    for (int i = 0; i < 8; ++i) ctr[i] = std::uint8_t(counter_ >> (56 - 8 * i));
    h.update({ctr, 8});
    block_ = h.finish();
    ++counter_;
    pos_ = 0;
}

void DeterministicRng::fill(std::uint8_t* out, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        if (pos_ == block_.size()) refill();
        out[i] = block_[pos_++];
    }
}

void SystemRng::fill(std::uint8_t* out, std::size_t len) {
    static thread_local std::random_device dev;
    for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<std::uint8_t>(dev());
}

Nat draw_bits(RandomSource& rng, std::size_t bits) {
    if (bits == 0) return 0;
    std::size_t nbytes = (bits + 7) / 8;
    std::vector<std::uint8_t> buf(nbytes);
    rng.fill(buf.data(), buf.size());
    unsigned extra = static_cast<unsigned>(8 * nbytes - bits);
    buf[0] &= static_cast<std::uint8_t>(0xff >> extra);
    return nat_from_bytes_be(buf);
}

Nat draw_below(RandomSource& rng, const Nat& bound) {
    if (bound < 1) throw std::domain_error("draw_below: bound < 1");
    std::size_t bits = bit_length(bound);
    for (;;) {
        Nat x = draw_bits(rng, bits);
        if (x < bound) return x;
    }
}

Nat draw_range(RandomSource& rng, const Nat& lo, const Nat& hi) {
    if (hi <= lo) throw std::domain_error("draw_range: empty range");
    return lo + draw_below(rng, hi - lo);
}

Nat draw_prime(RandomSource& rng, std::size_t bits, int rounds) {
    if (bits < 2) throw std::domain_error("draw_prime: bits < 2");
    Nat top = Nat(1) << (bits - 1);
    for (;;) {
        Nat c = top + draw_bits(rng, bits - 1);
        mpz_setbit(c.get_mpz_t(), 0);
        if (is_prime(c, rounds)) return c;
    }
}

}  // namespace dualsig
