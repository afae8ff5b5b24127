#include "dualsig/curve.hpp"

namespace dualsig {

Point add(const Point& P, const Point& Q, const CurveParams& curve) {
    return chord_tangent_add(P, Q, curve.a, FpOps{curve.p});
}

PointExt add(const PointExt& P, const PointExt& Q, const CurveParams& curve) {
    return chord_tangent_add(P, Q, curve.a, Fp2Ops{curve.p});
}

Point scalar_mul(const Nat& k, const Point& P, const CurveParams& curve) {
    return double_and_add(k, P, curve.a, FpOps{curve.p});
}

PointExt scalar_mul(const Nat& k, const PointExt& P, const CurveParams& curve) {
    return double_and_add(k, P, curve.a, Fp2Ops{curve.p});
}

Point negate(const Point& P, const CurveParams& curve) {
    if (P.inf) return P;
    return Point::affine(P.x, FpOps{curve.p}.neg(P.y));
}

PointExt negate(const PointExt& P, const CurveParams& curve) {
    if (P.inf) return P;
    return PointExt::affine(P.x, fp2_neg(P.y, curve.p));
}

bool is_on_curve(const Point& P, const CurveParams& curve) {
    return on_curve(P, curve.a, FpOps{curve.p});
}

bool is_on_curve(const PointExt& P, const CurveParams& curve) {
    return on_curve(P, curve.a, Fp2Ops{curve.p});
}

Point decompress(const Nat& x, const CurveParams& curve) {
    if (x < 0 || x >= curve.p) throw not_on_curve_error();
    Nat rhs = (x * x % curve.p * x + curve.a * x) % curve.p;
    try {
        return Point::affine(x, sqrt_mod(rhs, curve.p));
    } catch (const no_square_root_error&) {
        throw not_on_curve_error();
    }
}

Point random_point(const CurveParams& curve, RandomSource& rng) {
    for (;;) {
        Nat x = draw_below(rng, curve.p);
        Nat rhs = (x * x % curve.p * x + curve.a * x) % curve.p;
        if (legendre(rhs, curve.p) == -1) continue;
        Nat y = sqrt_mod(rhs, curve.p);
        std::uint8_t sign;
        rng.fill(&sign, 1);
        if ((sign & 1) && y != 0) y = curve.p - y;
        return Point::affine(x, y);
    }
}

}  // namespace dualsig
