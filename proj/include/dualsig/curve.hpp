#pragma once

#include <stdexcept>

#include "dualsig/fp2.hpp"
#include "dualsig/nat.hpp"
#include "dualsig/numeric.hpp"
#include "dualsig/rng.hpp"

namespace dualsig {

// E: y^2 = x^3 + a*x over F_p. p = 3 (mod 4) and -a a non-residue make the
// curve supersingular with p + 1 points.
struct CurveParams {
    Nat p;
    Nat a;
};

template <class E>
struct PointT {
    bool inf = true;
    E x{};
    E y{};

    static PointT infinity() { return PointT{}; }
    static PointT affine(E px, E py) { return PointT{false, std::move(px), std::move(py)}; }
    bool is_infinity() const { return inf; }
    bool operator==(const PointT&) const = default;
};

using Point = PointT<Nat>;        // over F_p
using PointExt = PointT<Fp2>;     // over F_p^2 (distortion images)

class not_on_curve_error : public std::runtime_error {
  public:
    not_on_curve_error() : std::runtime_error("x has no curve point") {}
};

// One set of affine group-law formulas serves both fields; these small
// adapters provide the field arithmetic.
struct FpOps {
    using Elem = Nat;
    const Nat& p;
    Elem add(const Elem& a, const Elem& b) const {
        Nat r = a + b;
        if (r >= p) r -= p;
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Nat r = a - b;
        if (r < 0) r += p;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
    Elem neg(const Elem& a) const { return a == 0 ? Nat(0) : Nat(p - a); }
    Elem inv(const Elem& a) const { return mod_inv(a, p); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem embed(const Nat& c) const { return c % p; }
};

struct Fp2Ops {
    using Elem = Fp2;
    const Nat& p;
    Elem add(const Elem& a, const Elem& b) const { return fp2_add(a, b, p); }
    Elem sub(const Elem& a, const Elem& b) const { return fp2_sub(a, b, p); }
    Elem mul(const Elem& a, const Elem& b) const { return fp2_mul(a, b, p); }
    Elem neg(const Elem& a) const { return fp2_neg(a, p); }
    Elem inv(const Elem& a) const { return fp2_inv(a, p); }
    bool is_zero(const Elem& a) const { return fp2_is_zero(a); }
    Elem embed(const Nat& c) const { return fp2_from_base(c % p); }
};

template <class Ops>
bool on_curve(const PointT<typename Ops::Elem>& pt, const Nat& a, const Ops& f) {
    if (pt.inf) return true;
    auto lhs = f.mul(pt.y, pt.y);
    auto rhs = f.add(f.mul(f.mul(pt.x, pt.x), pt.x), f.mul(f.embed(a), pt.x));
    return lhs == rhs;
}

template <class Ops>
PointT<typename Ops::Elem> chord_tangent_add(const PointT<typename Ops::Elem>& P,
                                             const PointT<typename Ops::Elem>& Q, const Nat& a,
                                             const Ops& f) {
    using Pt = PointT<typename Ops::Elem>;
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x) {
        // vertical cases: inverse points, or doubling a 2-torsion point
        if (f.is_zero(f.add(P.y, Q.y))) return Pt::infinity();
        // doubling: lambda = (3x^2 + a) / 2y
        auto num = f.add(f.mul(f.embed(3), f.mul(P.x, P.x)), f.embed(a));
        auto lam = f.mul(num, f.inv(f.add(P.y, P.y)));
        auto x3 = f.sub(f.sub(f.mul(lam, lam), P.x), P.x);
        auto y3 = f.sub(f.mul(lam, f.sub(P.x, x3)), P.y);
        return Pt::affine(x3, y3);
    }
    auto lam = f.mul(f.sub(Q.y, P.y), f.inv(f.sub(Q.x, P.x)));
    auto x3 = f.sub(f.sub(f.mul(lam, lam), P.x), Q.x);
    auto y3 = f.sub(f.mul(lam, f.sub(P.x, x3)), P.y);
    return Pt::affine(x3, y3);
}

template <class Ops>
PointT<typename Ops::Elem> double_and_add(const Nat& k, const PointT<typename Ops::Elem>& P,
                                          const Nat& a, const Ops& f) {
    using Pt = PointT<typename Ops::Elem>;
    Pt acc = Pt::infinity();
    for (std::size_t i = bit_length(k); i-- > 0;) {
        acc = chord_tangent_add(acc, acc, a, f);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = chord_tangent_add(acc, P, a, f);
    }
    return acc;
}

Point add(const Point& P, const Point& Q, const CurveParams& curve);
PointExt add(const PointExt& P, const PointExt& Q, const CurveParams& curve);
Point scalar_mul(const Nat& k, const Point& P, const CurveParams& curve);
PointExt scalar_mul(const Nat& k, const PointExt& P, const CurveParams& curve);
Point negate(const Point& P, const CurveParams& curve);
PointExt negate(const PointExt& P, const CurveParams& curve);
bool is_on_curve(const Point& P, const CurveParams& curve);
bool is_on_curve(const PointExt& P, const CurveParams& curve);

// (x, y) with y the smaller root of x^3 + ax; the encoded point is +-result.
// Throws not_on_curve_error when the cubic is a non-residue.
Point decompress(const Nat& x, const CurveParams& curve);

// Uniform-ish affine point: uniform x with residue right-hand side, root
// sign chosen by one random bit.
Point random_point(const CurveParams& curve, RandomSource& rng);

}  // namespace dualsig
