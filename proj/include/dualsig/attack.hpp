#pragma once

#include <string>
#include <vector>

#include "dualsig/rng.hpp"
#include "dualsig/scheme.hpp"

namespace dualsig {

// Signing-oracle transcript as seen by the reduction: it chose g, a, b and
// assembled the public key itself; the oracle answered with signatures.
struct OracleTranscript {
    std::vector<std::vector<std::uint8_t>> messages;
    std::vector<Signature> signatures;
    Nat a;
    Nat b;
    Nat g;
    Nat n;
};

class inconclusive_error : public std::runtime_error {
  public:
    inconclusive_error() : std::runtime_error("all residuals are zero; need more signatures") {}
};

class invalid_phi_error : public std::runtime_error {
  public:
    explicit invalid_phi_error(const std::string& what) : std::runtime_error(what) {}
};

// gcd over |b*h(m_i) + a - a*b - s_i| (exact integer residuals). The totient
// of n divides the result. Throws inconclusive_error when every residual
// vanishes.
Nat phi_from_signatures(const OracleTranscript& t);

// Recovers the factors from n and phi by solving
// x^2 - (n - phi + 1)x + n = 0 over the integers. Throws invalid_phi_error
// when the discriminant is not a perfect square or the roots are not prime.
std::pair<Nat, Nat> factor_from_phi(const Nat& n, const Nat& phi);

// Divides small primes (<= 100) out of d until factor_from_phi accepts;
// returns the recovered phi. test_count reports how many candidates were
// tried. Throws invalid_phi_error when no divisor works.
Nat strip_small_factors(const Nat& n, const Nat& d, int* test_count = nullptr);

struct ReductionReport {
    bool success = false;
    unsigned bits = 0;
    int signatures_used = 0;
    Nat n;
    Nat gcd_raw;                   // gcd of residuals before stripping
    Nat phi;                       // recovered totient (when successful)
    Nat p1;
    Nat p2;
    std::vector<Nat> gcd_trajectory;  // running gcd after each residual
    int strip_tests = 0;
    std::string failure;           // empty on success
};

// End-to-end desk-scale run: fresh parameters at the given size, the
// legitimate signer as oracle on `sig_count` random messages, then residual
// gcd + stripping + factoring. bits <= 32 enforced.
ReductionReport run_reduction(unsigned bits, int sig_count, RandomSource& rng);

std::string render_report_machine(const ReductionReport& r);
std::string render_report_human(const ReductionReport& r);

}  // namespace dualsig
