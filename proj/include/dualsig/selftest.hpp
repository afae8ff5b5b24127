#pragma once

#include <string>
#include <vector>

#include "dualsig/pairing.hpp"
#include "dualsig/scheme.hpp"

namespace dualsig {

// Built-in known-answer vector set: a fixed 256-bit-prime key pair with
// g = 2 and structured exponents, plus the derived public values.
struct KatVectors {
    Nat p1;
    Nat p2;
    Nat n;           // expected p1*p2
    Nat q;           // expected 4*p1*p2 - 1 (the field prime)
    Nat a;
    Nat b;
    Nat g;
    Nat r;           // g^b mod n
    Nat pow_a;       // g^a mod n
    Nat pow_a_ab;    // g^{a-ab} mod n
    Point P;
    Point Q;
    Point R;
};

const KatVectors& builtin_kat();

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
};

// Vector checks against a (possibly perturbed) KAT set.
std::vector<CheckResult> run_kat_checks(const KatVectors& v);

// Exhaustive bilinearity table on the 140-point toy curve: for every (u, v),
// e_n(uP, vP) must equal e_n(P, P)^{uv mod n}. The context is injectable so
// a corrupted constant is detectable.
bool toy_pairing_table_ok(const PairingContext& ctx, const Point& P);

// Full suite: KAT vectors plus the toy pairing table.
std::vector<CheckResult> run_selftest();

}  // namespace dualsig
