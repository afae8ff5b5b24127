#pragma once

#include <span>

#include "dualsig/curve.hpp"
#include "dualsig/nat.hpp"
#include "dualsig/pairing.hpp"
#include "dualsig/rng.hpp"

namespace dualsig {

// Public curve/subgroup description: p = 4*p1*p2 - 1 prime, curve
// y^2 = x^3 + x, and a base point P of order n = p1*p2.
struct SchemeParams {
    CurveParams curve;
    Nat n;
    Point P;
};

// (g, P, Q, R, r, n); P and n live in params.
struct PublicKey {
    SchemeParams params;
    Nat g;
    Point Q;
    Point R;
    Nat r;
};

struct PrivateKey {
    Nat p1;
    Nat p2;
    Nat a;
    Nat b;
    Nat phi;  // (p1-1)(p2-1), cached
};

struct Signature {
    Nat Sx;  // x-coordinate of S
    Nat s;
};

// Online operation counters for sign/verify: scalar multiplications issued
// directly by the signature equations (hash-to-point internals excluded)
// and pairing evaluations.
struct OpCounts {
    long pairings = 0;
    long point_muls = 0;
};

class generation_error : public std::runtime_error {
  public:
    explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct GeneratedParams {
    SchemeParams params;
    Nat p1;
    Nat p2;
};

// Draws p1 as a random `bits`-bit prime, advances p2 = next_prime(...) from
// a random `bits`-bit start until 4*p1*p2 - 1 is prime (restarting when p2
// outgrows bits+1 bits), then samples a base point of order n whose
// self-pairing has exact order n.
GeneratedParams gen_params(unsigned bits, RandomSource& rng);

// Builds params from known primes and a given base point, validating every
// invariant (used for imported parameter sets). Throws validation_error.
SchemeParams make_params(const Nat& p1, const Nat& p2, const Point& P);

// The base-point search used by gen_params: P = 4*T for random T, retried
// until ord(P) = n and e_n(P, P) is a primitive n-th root of unity.
Point sample_base_point(const CurveParams& curve, const Nat& p1, const Nat& p2,
                        RandomSource& rng);

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

KeyPair keygen(const SchemeParams& params, const Nat& p1, const Nat& p2, RandomSource& rng);

// Deterministic variant with caller-chosen exponents (test vectors, known
// answers). Exponents are used as given; a and b must lie in [1, phi-1].
KeyPair keygen_with(const SchemeParams& params, const Nat& p1, const Nat& p2, const Nat& g,
                    const Nat& a, const Nat& b);

// S = g^{ab} H(m), s = (b h(m) + a - ab) mod phi; deterministic.
Signature sign(const PrivateKey& priv, const PublicKey& pub, std::span<const std::uint8_t> m,
               OpCounts* counts = nullptr);

enum class RejectReason {
    none,
    not_on_curve,             // Sx has no preimage on E
    pairing_mismatch,         // e_n(g^s Sigma, P) vs e_n(r^{h} H(m), Q)
    base_equation_mismatch,   // g^s P vs r^{h} R
};

struct VerifyResult {
    bool ok;
    RejectReason reason;
    static VerifyResult accept() { return {true, RejectReason::none}; }
    static VerifyResult reject(RejectReason r) { return {false, r}; }
};

const char* reject_reason_name(RejectReason r);

VerifyResult verify(const PublicKey& pub, std::span<const std::uint8_t> m, const Signature& sig,
                    OpCounts* counts = nullptr);

// Load-time invariant checks (used by the file layer; throw validation_error).
void validate_params(const SchemeParams& params);
void validate_public_key(const PublicKey& pub);
void validate_private_key(const PrivateKey& priv);
// Cross-checks a key pair: p1*p2 = n and the public parts match the
// exponents.
void validate_key_consistency(const PublicKey& pub, const PrivateKey& priv);

}  // namespace dualsig
