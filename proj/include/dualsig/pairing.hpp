#pragma once

#include "dualsig/curve.hpp"
#include "dualsig/fp2.hpp"

namespace dualsig {

// Context for the reduced Tate pairing on the order-n subgroup:
// final_exp = (p^2 - 1)/n, which is 4(p - 1) when p + 1 = 4n.
struct PairingContext {
    CurveParams curve;
    Nat n;
    Nat final_exp;
};

// Validates n | p + 1 and precomputes the final exponent.
PairingContext make_pairing_context(const CurveParams& curve, const Nat& n);

class degenerate_evaluation_error : public std::runtime_error {
  public:
    degenerate_evaluation_error()
        : std::runtime_error("pairing: line evaluates to zero at the second argument") {}
};

// phi(x, y) = (-x, iy): moves a base-field point off its own subgroup so
// that the Tate pairing of a point with its own image is non-trivial.
PointExt distortion(const Point& P, const CurveParams& curve);

// Reduced Tate pairing f_{n,P}(Q)^((p^2-1)/n) via a Miller loop over the
// bits of n. Vertical-line factors are dropped: their values at points with
// base-field x-coordinate lie in F_p and the final exponent is a multiple
// of p - 1, so they contribute 1.
Fp2 tate_reduced(const Point& P, const PointExt& Q, const PairingContext& ctx);

// Pairing used by the signature equations: e_n(X, Y) = tate(X, phi(Y)).
Fp2 e_n(const Point& X, const Point& Y, const PairingContext& ctx);

}  // namespace dualsig
