#pragma once

// Shared toy fixture: E: y^2 = x^3 + x over F_139 has 140 points and a
// unique order-35 subgroup. All expected values here come from exhaustive
// enumeration, independent of the library's group law.

#include <map>
#include <optional>
#include <vector>

#include "dualsig/curve.hpp"
#include "dualsig/pairing.hpp"
#include "dualsig/scheme.hpp"

namespace toy {

using namespace dualsig;

inline const CurveParams& curve() {
    static const CurveParams c{139, 1};
    return c;
}

inline Nat order_n() { return 35; }

// P = 4*(3, 13), the first point (x ascending, smaller root) whose fourth
// multiple has order 35.
inline Point base_point() { return Point::affine(36, 108); }

inline SchemeParams params() { return SchemeParams{curve(), order_n(), base_point()}; }

inline PairingContext pairing_ctx() { return make_pairing_context(curve(), order_n()); }

// Every affine point by brute-force search over the curve equation.
inline const std::vector<Point>& all_points() {
    static const std::vector<Point> pts = [] {
        std::vector<Point> out;
        out.push_back(Point::infinity());
        for (unsigned x = 0; x < 139; ++x) {
            for (unsigned y = 0; y < 139; ++y) {
                if ((y * y) % 139 == (x * x * x + x) % 139)
                    out.push_back(Point::affine(x, y));
            }
        }
        return out;
    }();
    return pts;
}

// <P> in index order: subgroup()[k] = k*P, built with repeated addition.
inline const std::vector<Point>& subgroup() {
    static const std::vector<Point> pts = [] {
        std::vector<Point> out;
        Point acc = Point::infinity();
        for (int i = 0; i < 35; ++i) {
            out.push_back(acc);
            acc = add(acc, base_point(), curve());
        }
        return out;
    }();
    return pts;
}

// Discrete log within <P>, by table lookup.
inline std::optional<unsigned> dlog(const Point& X) {
    const auto& sub = subgroup();
    for (unsigned i = 0; i < sub.size(); ++i)
        if (sub[i] == X) return i;
    return std::nullopt;
}

// Deterministic toy key pair: g = 2 (order 12 mod 35), a = 5, b = 7.
inline KeyPair keypair() {
    return keygen_with(params(), 5, 7, 2, 5, 7);
}

}  // namespace toy
