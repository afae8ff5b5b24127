#pragma once

#include <stdexcept>

#include "dualsig/nat.hpp"

namespace dualsig {

// Inversion failed because gcd(x, modulus) != 1. The offending gcd is kept:
// a non-trivial gcd of a value against a semiprime modulus is a factorization.
class not_invertible_error : public std::runtime_error {
  public:
    not_invertible_error(Nat gcd_value)
        : std::runtime_error("mod_inv: value not invertible"), gcd(std::move(gcd_value)) {}
    Nat gcd;
};

class no_square_root_error : public std::runtime_error {
  public:
    no_square_root_error() : std::runtime_error("sqrt_mod: not a quadratic residue") {}
};

// base^exp mod modulus. modulus >= 2, exp >= 0.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

// y with x*y == 1 (mod modulus), 0 <= y < modulus.
Nat mod_inv(const Nat& x, const Nat& modulus);

// Legendre symbol by Euler's criterion: 0 if p | x, +1 for a nonzero
// residue, -1 otherwise. p must be an odd prime.
int legendre(const Nat& x, const Nat& p);

// Square root mod p for p = 3 (mod 4) via x^((p+1)/4); returns the smaller
// of the two roots. Throws no_square_root_error for non-residues.
Nat sqrt_mod(const Nat& x, const Nat& p);

// Miller-Rabin behind small-prime trial division. Bases are a fixed prime
// schedule, so the function is deterministic and consumes no randomness.
bool is_prime(const Nat& k, int rounds = 64);

// Smallest prime >= k (next_prime(k) = k for prime k).
Nat next_prime(const Nat& k);

Nat gcd(const Nat& a, const Nat& b);

}  // namespace dualsig
