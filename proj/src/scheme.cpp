#include "dualsig/scheme.hpp"

#include "dualsig/hashing.hpp"
#include "dualsig/numeric.hpp"

namespace dualsig {

namespace {

constexpr int kPointSampleCap = 4096;
constexpr int kPrimeSearchRestarts = 4096;

Point counted_mul(const Nat& k, const Point& P, const CurveParams& curve, OpCounts* counts) {
    if (counts) ++counts->point_muls;
    return scalar_mul(k, P, curve);
}

Fp2 counted_pairing(const Point& X, const Point& Y, const PairingContext& ctx, OpCounts* counts) {
    if (counts) ++counts->pairings;
    return e_n(X, Y, ctx);
}

bool self_pairing_primitive(const SchemeParams& params, const Nat& p1, const Nat& p2) {
    PairingContext ctx = make_pairing_context(params.curve, params.n);
    Fp2 eps = e_n(params.P, params.P, ctx);
    const Nat& p = params.curve.p;
    return fp2_is_one(fp2_pow(eps, params.n, p)) && !fp2_is_one(fp2_pow(eps, params.n / p1, p)) &&
           !fp2_is_one(fp2_pow(eps, params.n / p2, p));
}

}  // namespace

Point sample_base_point(const CurveParams& curve, const Nat& p1, const Nat& p2,
                        RandomSource& rng) {
    Nat n = p1 * p2;
    SchemeParams trial{curve, n, Point::infinity()};
    for (int tries = 0; tries < kPointSampleCap; ++tries) {
        Point T = random_point(curve, rng);
        Point P = scalar_mul(4, T, curve);
        if (P.inf) continue;
        if (scalar_mul(p2, P, curve).inf) continue;  // (n/p1)*P
        if (scalar_mul(p1, P, curve).inf) continue;  // (n/p2)*P
        trial.P = P;
        if (!self_pairing_primitive(trial, p1, p2)) continue;
        return P;
    }
    throw generation_error("base point sampling cap exceeded");
}

GeneratedParams gen_params(unsigned bits, RandomSource& rng) {
    if (bits < 3) throw std::domain_error("gen_params: bits < 3");
    Nat p1 = draw_prime(rng, bits);
    Nat bound = Nat(1) << (bits + 1);  // restart p2 search past bits+1 bits

    for (int restarts = 0; restarts < kPrimeSearchRestarts; ++restarts) {
        Nat start = (Nat(1) << (bits - 1)) + draw_bits(rng, bits - 1);
        Nat p2 = next_prime(start);
        while (p2 < bound) {
            if (p2 != p1) {
                Nat p = 4 * p1 * p2 - 1;
                if (is_prime(p)) {
                    CurveParams curve{p, 1};
                    if (legendre(p - curve.a, p) != -1)
                        throw generation_error("-a unexpectedly a residue");  // p = 3 (mod 4) forbids this
                    Point P = sample_base_point(curve, p1, p2, rng);
                    return GeneratedParams{SchemeParams{curve, p1 * p2, P}, p1, p2};
                }
            }
            p2 = next_prime(p2 + 1);
        }
    }
    throw generation_error("prime search cap exceeded");
}

SchemeParams make_params(const Nat& p1, const Nat& p2, const Point& P) {
    SchemeParams params{CurveParams{4 * p1 * p2 - 1, 1}, p1 * p2, P};
    if (!is_prime(p1) || !is_prime(p2) || p1 == p2)
        throw validation_error("params: p1, p2 must be distinct primes");
    if (!is_prime(params.curve.p)) throw validation_error("params: p not prime");
    if (scalar_mul(p2, P, params.curve).inf || scalar_mul(p1, P, params.curve).inf ||
        !scalar_mul(params.n, P, params.curve).inf)
        throw validation_error("params: base point order is not n");
    validate_params(params);
    if (!self_pairing_primitive(params, p1, p2))
        throw validation_error("params: self-pairing of P is not primitive");
    return params;
}

void validate_params(const SchemeParams& params) {
    const Nat& p = params.curve.p;
    if (p < 3 || p % 4 != 3) throw validation_error("params: p != 3 (mod 4)");
    if (!is_prime(p)) throw validation_error("params: p not prime");
    if (p + 1 != 4 * params.n) throw validation_error("params: p + 1 != 4n");
    if (legendre((p - params.curve.a) % p, p) != -1)
        throw validation_error("params: -a is a square");
    if (!is_on_curve(params.P, params.curve)) throw validation_error("params: P not on curve");
    if (params.P.inf) throw validation_error("params: P is the identity");
    if (!scalar_mul(params.n, params.P, params.curve).inf)
        throw validation_error("params: n*P != infinity");
}

void validate_public_key(const PublicKey& pub) {
    validate_params(pub.params);
    const Nat& n = pub.params.n;
    if (pub.g <= 1 || pub.g >= n - 1) throw validation_error("public key: g out of range");
    if (gcd(pub.g, n) != 1) throw validation_error("public key: gcd(g, n) != 1");
    if (pub.r <= 0 || pub.r >= n) throw validation_error("public key: r out of range");
    for (const Point* pt : {&pub.Q, &pub.R}) {
        if (!is_on_curve(*pt, pub.params.curve)) throw validation_error("public key: point off curve");
        // the order-n subgroup is unique, so n*X = infinity pins X to <P>
        if (!scalar_mul(n, *pt, pub.params.curve).inf)
            throw validation_error("public key: point outside the order-n subgroup");
    }
}

void validate_private_key(const PrivateKey& priv) {
    if (!is_prime(priv.p1) || !is_prime(priv.p2) || priv.p1 == priv.p2)
        throw validation_error("private key: p1, p2 must be distinct primes");
    Nat phi = (priv.p1 - 1) * (priv.p2 - 1);
    if (priv.phi != phi) throw validation_error("private key: phi mismatch");
    if (priv.a < 1 || priv.a > phi - 1 || priv.b < 1 || priv.b > phi - 1)
        throw validation_error("private key: exponent out of range");
}

void validate_key_consistency(const PublicKey& pub, const PrivateKey& priv) {
    validate_public_key(pub);
    validate_private_key(priv);
    if (priv.p1 * priv.p2 != pub.params.n) throw validation_error("keys: p1*p2 != n");
    const Nat& n = pub.params.n;
    if (mod_pow(pub.g, priv.b, n) != pub.r) throw validation_error("keys: r != g^b");
    Point Q = scalar_mul(mod_pow(pub.g, priv.a, n), pub.params.P, pub.params.curve);
    if (!(Q == pub.Q)) throw validation_error("keys: Q != g^a P");
    Nat e = (priv.a - priv.a * priv.b) % priv.phi;
    if (e < 0) e += priv.phi;
    Point R = scalar_mul(mod_pow(pub.g, e, n), pub.params.P, pub.params.curve);
    if (!(R == pub.R)) throw validation_error("keys: R != g^{a-ab} P");
}

KeyPair keygen_with(const SchemeParams& params, const Nat& p1, const Nat& p2, const Nat& g,
                    const Nat& a, const Nat& b) {
    const Nat& n = params.n;
    if (p1 * p2 != n) throw validation_error("keygen: p1*p2 != n");
    Nat phi = (p1 - 1) * (p2 - 1);
    if (a < 1 || a > phi - 1 || b < 1 || b > phi - 1)
        throw validation_error("keygen: exponent out of range");
    if (g <= 1 || g >= n - 1 || gcd(g, n) != 1) throw validation_error("keygen: bad g");

    Nat r = mod_pow(g, b, n);
    Point Q = scalar_mul(mod_pow(g, a, n), params.P, params.curve);
    Nat e = (a - a * b) % phi;  // a - ab is negative for b > 1; wrap into [0, phi)
    if (e < 0) e += phi;
    Point R = scalar_mul(mod_pow(g, e, n), params.P, params.curve);

    return KeyPair{PublicKey{params, g, Q, R, r}, PrivateKey{p1, p2, a, b, phi}};
}

KeyPair keygen(const SchemeParams& params, const Nat& p1, const Nat& p2, RandomSource& rng) {
    const Nat& n = params.n;
    Nat phi = (p1 - 1) * (p2 - 1);
    Nat g;
    do {
        g = draw_range(rng, 2, n - 1);
    } while (gcd(g, n) != 1);
    Nat a = draw_range(rng, 1, phi);
    Nat b = draw_range(rng, 1, phi);
    return keygen_with(params, p1, p2, g, a, b);
}

Signature sign(const PrivateKey& priv, const PublicKey& pub, std::span<const std::uint8_t> m,
               OpCounts* counts) {
    const SchemeParams& params = pub.params;
    const Nat& n = params.n;
    Nat h = hash_scalar(m, n);
    Point H = map_to_point(m, params.P, n, params.curve);

    Nat ab = priv.a * priv.b % priv.phi;
    Point S = counted_mul(mod_pow(pub.g, ab, n), H, params.curve, counts);
    // bh(m) + a - ab, all in Z/phi
    Nat s = (priv.b * h + priv.a - priv.a * priv.b) % priv.phi;
    if (s < 0) s += priv.phi;
    return Signature{S.x, s};
}

const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::none: return "none";
        case RejectReason::not_on_curve: return "not-on-curve";
        case RejectReason::pairing_mismatch: return "pairing-mismatch";
        case RejectReason::base_equation_mismatch: return "base-equation-mismatch";
    }
    return "unknown";
}

VerifyResult verify(const PublicKey& pub, std::span<const std::uint8_t> m, const Signature& sig,
                    OpCounts* counts) {
    const SchemeParams& params = pub.params;
    const Nat& n = params.n;
    if (sig.s < 0) return VerifyResult::reject(RejectReason::base_equation_mismatch);

    Point sigma;
    try {
        sigma = decompress(sig.Sx, params.curve);
    } catch (const not_on_curve_error&) {
        return VerifyResult::reject(RejectReason::not_on_curve);
    }

    Nat h = hash_scalar(m, n);
    Point H = map_to_point(m, params.P, n, params.curve);
    Nat w = mod_pow(pub.g, sig.s, n);
    Nat z = mod_pow(pub.r, h, n);

    PairingContext ctx = make_pairing_context(params.curve, n);
    Fp2 T = counted_pairing(counted_mul(w, sigma, params.curve, counts), params.P, ctx, counts);
    Fp2 U = counted_pairing(counted_mul(z, H, params.curve, counts), pub.Q, ctx, counts);
    // Sigma is only determined up to sign by its x-coordinate;
    // e_n(-X, Y) = e_n(X, Y)^-1 folds both candidates into one comparison.
    if (!(U == T) && !(U == fp2_inv(T, params.curve.p)))
        return VerifyResult::reject(RejectReason::pairing_mismatch);

    Point lhs = counted_mul(w, params.P, params.curve, counts);
    Point rhs = counted_mul(z, pub.R, params.curve, counts);
    if (!(lhs == rhs)) return VerifyResult::reject(RejectReason::base_equation_mismatch);

    return VerifyResult::accept();
}

}  // namespace dualsig
