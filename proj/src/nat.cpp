#include "dualsig/nat.hpp"

#include <stdexcept>

namespace dualsig {

std::string to_hex(const Nat& x) {
    if (x < 0) throw std::invalid_argument("to_hex: negative value");
    return x.get_str(16);
}

Nat nat_from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("hex: empty string");
    for (char c : s) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
            throw std::invalid_argument("hex: invalid character");
    }
    if (s.size() > 1 && s[0] == '0')
        throw std::invalid_argument("hex: leading zero");
    Nat x;
    if (mpz_set_str(x.get_mpz_t(), s.c_str(), 16) != 0)
        throw std::invalid_argument("hex: parse failure");
    return x;
}

std::size_t bit_length(const Nat& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Nat nat_from_bytes_be(std::span<const std::uint8_t> bytes) {
    Nat x = 0;
    if (!bytes.empty())
        mpz_import(x.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return x;
}

std::vector<std::uint8_t> bytes_from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("hex bytes: odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("hex bytes: invalid character");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(nibble(s[2 * i]) << 4 | nibble(s[2 * i + 1]));
    return out;
}

std::string hex_from_bytes(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

}  // namespace dualsig
