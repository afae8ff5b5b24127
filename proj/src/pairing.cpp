#include "dualsig/pairing.hpp"

namespace dualsig {

PairingContext make_pairing_context(const CurveParams& curve, const Nat& n) {
    if (n < 2) throw std::domain_error("pairing: n < 2");
    if ((curve.p + 1) % n != 0) throw std::domain_error("pairing: n does not divide p + 1");
    Nat order = curve.p * curve.p - 1;
    return PairingContext{curve, n, order / n};
}

PointExt distortion(const Point& P, const CurveParams& curve) {
    if (P.inf) return PointExt::infinity();
    Nat mx = P.x == 0 ? Nat(0) : Nat(curve.p - P.x);
    return PointExt::affine(Fp2{mx, 0}, Fp2{0, P.y});
}

namespace {

// Evaluates the non-vertical line through V with slope lam at Q:
// l(Q) = (yQ - yV) - lam * (xQ - xV), all in F_p^2.
Fp2 eval_line(const Nat& lam, const Point& V, const PointExt& Q, const Nat& p) {
    Fp2 dx = fp2_sub(Q.x, fp2_from_base(V.x), p);
    Fp2 dy = fp2_sub(Q.y, fp2_from_base(V.y), p);
    Fp2 val = fp2_sub(dy, fp2_mul_base(dx, lam, p), p);
    if (fp2_is_zero(val)) throw degenerate_evaluation_error();
    return val;
}

}  // namespace

Fp2 tate_reduced(const Point& P, const PointExt& Q, const PairingContext& ctx) {
    if (P.inf || Q.inf) return fp2_one();

    const Nat& p = ctx.curve.p;
    const Nat& a = ctx.curve.a;
    Fp2 f = fp2_one();
    Point V = P;

    for (std::size_t i = bit_length(ctx.n) - 1; i-- > 0;) {
        // doubling step
        f = fp2_mul(f, f, p);
        if (!V.inf) {
            if (V.y == 0) {
                // vertical tangent at a 2-torsion point: factor dropped
                V = Point::infinity();
            } else {
                Nat num = (3 * V.x % p * V.x + a) % p;
                Nat lam = num * mod_inv(2 * V.y % p, p) % p;
                f = fp2_mul(f, eval_line(lam, V, Q, p), p);
                Nat x3 = (lam * lam % p + 2 * (p - V.x)) % p;
                Nat y3 = (lam * ((V.x - x3 + p) % p) % p + (p - V.y)) % p;
                V = Point::affine(x3, y3);
            }
        }
        if (mpz_tstbit(ctx.n.get_mpz_t(), i)) {
            // addition step with the base point
            if (V.inf) {
                V = P;  // vertical through P cancels against its denominator
            } else if (V.x == P.x && (V.y + P.y) % p == 0) {
                V = Point::infinity();  // chord is vertical: factor dropped
            } else {
                Nat lam;
                if (V == P) {
                    Nat num = (3 * V.x % p * V.x + a) % p;
                    lam = num * mod_inv(2 * V.y % p, p) % p;
                } else {
                    lam = (P.y - V.y + p) % p * mod_inv((P.x - V.x + p) % p, p) % p;
                }
                f = fp2_mul(f, eval_line(lam, V, Q, p), p);
                Nat x3 = (lam * lam % p + (p - V.x) + (p - P.x)) % p;
                Nat y3 = (lam * ((V.x - x3 + p) % p) % p + (p - V.y)) % p;
                V = Point::affine(x3, y3);
            }
        }
    }
    return fp2_pow(f, ctx.final_exp, p);
}

Fp2 e_n(const Point& X, const Point& Y, const PairingContext& ctx) {
    return tate_reduced(X, distortion(Y, ctx.curve), ctx);
}

}  // namespace dualsig
