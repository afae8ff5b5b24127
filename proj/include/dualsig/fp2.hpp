#pragma once

#include "dualsig/nat.hpp"

namespace dualsig {

// Element u + v*i of F_p^2 = F_p[i]/(i^2 + 1). Valid whenever p = 3 (mod 4),
// which every generated field prime satisfies.
struct Fp2 {
    Nat u;
    Nat v;
    bool operator==(const Fp2&) const = default;
};

inline Fp2 fp2_zero() { return {0, 0}; }
inline Fp2 fp2_one() { return {1, 0}; }
inline Fp2 fp2_from_base(const Nat& u) { return {u, 0}; }
inline bool fp2_is_zero(const Fp2& x) { return x.u == 0 && x.v == 0; }
inline bool fp2_is_one(const Fp2& x) { return x.u == 1 && x.v == 0; }

Fp2 fp2_add(const Fp2& x, const Fp2& y, const Nat& p);
Fp2 fp2_sub(const Fp2& x, const Fp2& y, const Nat& p);
Fp2 fp2_neg(const Fp2& x, const Nat& p);
Fp2 fp2_mul(const Fp2& x, const Fp2& y, const Nat& p);
Fp2 fp2_mul_base(const Fp2& x, const Nat& c, const Nat& p);

// Inverse via the norm u^2 + v^2. Throws std::domain_error on zero.
Fp2 fp2_inv(const Fp2& x, const Nat& p);

// Square-and-multiply; x^0 = 1.
Fp2 fp2_pow(const Fp2& x, const Nat& e, const Nat& p);

}  // namespace dualsig
