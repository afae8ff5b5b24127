#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace dualsig {

// FIPS 180-4 SHA-256. Self-contained so that the key-derivation wire format
// does not depend on an external crypto library.
class Sha256 {
  public:
    Sha256();
    void update(std::span<const std::uint8_t> data);
    std::array<std::uint8_t, 32> finish();

    static std::array<std::uint8_t, 32> digest(std::span<const std::uint8_t> data);

  private:
    void compress(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, 64> buffer_;
    std::uint64_t total_len_ = 0;
    std::size_t buffer_len_ = 0;
};

}  // namespace dualsig
