#include "dualsig/fp2.hpp"

#include <stdexcept>

#include "dualsig/numeric.hpp"

namespace dualsig {

namespace {
inline Nat addm(const Nat& a, const Nat& b, const Nat& p) {
    Nat r = a + b;
    if (r >= p) r -= p;
    return r;
}
inline Nat subm(const Nat& a, const Nat& b, const Nat& p) {
    Nat r = a - b;
    if (r < 0) r += p;
    return r;
}
}  // namespace

Fp2 fp2_add(const Fp2& x, const Fp2& y, const Nat& p) {
    return {addm(x.u, y.u, p), addm(x.v, y.v, p)};
}

Fp2 fp2_sub(const Fp2& x, const Fp2& y, const Nat& p) {
    return {subm(x.u, y.u, p), subm(x.v, y.v, p)};
}

Fp2 fp2_neg(const Fp2& x, const Nat& p) {
    return {x.u == 0 ? Nat(0) : Nat(p - x.u), x.v == 0 ? Nat(0) : Nat(p - x.v)};
}

Fp2 fp2_mul(const Fp2& x, const Fp2& y, const Nat& p) {
    // (u1 + v1 i)(u2 + v2 i) = (u1 u2 - v1 v2) + (u1 v2 + u2 v1) i
    Nat uu = x.u * y.u % p;
    Nat vv = x.v * y.v % p;
    Nat uv = x.u * y.v % p;
    Nat vu = x.v * y.u % p;
    return {subm(uu, vv, p), addm(uv, vu, p)};
}

Fp2 fp2_mul_base(const Fp2& x, const Nat& c, const Nat& p) {
    return {x.u * c % p, x.v * c % p};
}

Fp2 fp2_inv(const Fp2& x, const Nat& p) {
    if (fp2_is_zero(x)) throw std::domain_error("fp2_inv: division by zero");
    // 1/(u + vi) = (u - vi)/(u^2 + v^2); the norm is nonzero because -1 is
    // a non-residue mod p.
    Nat norm = (x.u * x.u + x.v * x.v) % p;
    Nat ninv = mod_inv(norm, p);
    return {x.u * ninv % p, x.v == 0 ? Nat(0) : Nat((p - x.v) * ninv % p)};
}

Fp2 fp2_pow(const Fp2& x, const Nat& e, const Nat& p) {
    if (e < 0) throw std::domain_error("fp2_pow: negative exponent");
    Fp2 acc = fp2_one();
    std::size_t bits = bit_length(e);
    for (std::size_t i = bits; i-- > 0;) {
        acc = fp2_mul(acc, acc, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp2_mul(acc, x, p);
    }
    return acc;
}

}  // namespace dualsig
