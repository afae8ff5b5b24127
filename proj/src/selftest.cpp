#include "dualsig/selftest.hpp"

#include "dualsig/numeric.hpp"

namespace dualsig {

namespace {

Nat dec(const char* s) { return Nat(s, 10); }

// The companion values originally circulated with this vector set for
// g^{a-ab} and R do not satisfy the defining equations (they disagree with
// 2^a * (2^{ab})^{-1} modulo one of the two primes); the pair embedded here
// is recomputed from (p1, p2, P, a, b), all of which cross-check.
KatVectors make_builtin() {
    KatVectors v;
    v.p1 = dec(
        "6648101541610901309221290229437670283577419589920755980686054166957863749423"
        "1");
    v.p2 = dec(
        "1157385760891529093145823398348422486009642738646439842030828553445799070383"
        "13");
    v.n = dec(
        "7694418061221480574591795362863949897453901238591237288218960734891120311917"
        "7173949267888201712263661991232457777858219024478549957570794403973548334723"
        "03");
    v.q = dec(
        "3077767224488592229836718145145579958981560495436494915287584293956448124767"
        "0869579707155280684905464796492983111143287609791419983028317761589419333889"
        "211");
    v.a = dec("115792089237316195423570985008687907853269984665640564039457584007913129640449");
    v.b = dec("340282368188589063691604008928471416833");
    v.g = 2;
    v.r = dec(
        "6060473831180419028002527544274466669204983610931948163044337248603633561584"
        "2187469452441526711228464764659030012702057391799470050244498686066943111956"
        "40");
    v.pow_a = dec(
        "3017032781059846123319599093846455792598383300588875602809811232191097667270"
        "7567062559641821552416395531990785457338224542656409487485204528955712151908"
        "67");
    v.pow_a_ab = dec(
        "3857587773717648331848455032166239256994191485267123001803014197710646114876"
        "2693097388680785844550099283171796240566650480127749575567617171317069658365"
        "93");
    v.P = Point::affine(
        dec("2492343830287910304155093376887381755381585900766369722303124919540895089385"
            "9429310143108613613599511882670676138255514518447219689120752272772341649471"
            "097"),
        dec("7379969973486764966658607017040721934904356153827922108275176005385397553581"
            "1642226331502606869434233624734779779132109106217320985031461076144560383831"
            "00"));
    v.Q = Point::affine(
        dec("7260248943743510410597070580439186623312590993698497282989406963716051852174"
            "4775478357470740469666592298291113552066676892443666159686011298743461674422"
            "08"),
        dec("1804789523816175348587711731174083153281119499241138802179335269409050631413"
            "6751081697338862268315480477288944577615443538174923719718185915981630635761"
            "798"));
    v.R = Point::affine(
        dec("3808113094778207791976092099179226667122451539557163308798002839424051561484"
            "9823652834823108377196112044217666066322560158286977447045814441048607898251"
            "23"),
        dec("3308072955314964657139991889210217320162564738151265462522823142128993588372"
            "7010931773403610156031521443805675471803858017569262275400596291845211332571"
            "72"));
    return v;
}

void push(std::vector<CheckResult>& out, const std::string& name, bool ok,
          const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

}  // namespace

const KatVectors& builtin_kat() {
    static const KatVectors v = make_builtin();
    return v;
}

std::vector<CheckResult> run_kat_checks(const KatVectors& v) {
    std::vector<CheckResult> out;
    push(out, "n = p1*p2", v.p1 * v.p2 == v.n, "product mismatch");
    push(out, "q = 4n-1", 4 * v.n - 1 == v.q, "field prime mismatch");
    push(out, "q prime", is_prime(v.q), "compositeness witness found");
    push(out, "q = 3 (mod 4)", v.q % 4 == 3, "wrong residue class");

    CurveParams curve{v.q, 1};
    push(out, "P on curve", is_on_curve(v.P, curve), "curve equation fails");
    bool order_ok = scalar_mul(v.n, v.P, curve).inf && !scalar_mul(v.p2, v.P, curve).inf &&
                    !scalar_mul(v.p1, v.P, curve).inf;
    push(out, "ord(P) = n", order_ok, "base point order mismatch");

    push(out, "r = g^b mod n", mod_pow(v.g, v.b, v.n) == v.r, "exponentiation mismatch");
    push(out, "g^a mod n", mod_pow(v.g, v.a, v.n) == v.pow_a, "exponentiation mismatch");
    Nat phi = (v.p1 - 1) * (v.p2 - 1);
    Nat e = (v.a - v.a * v.b) % phi;
    if (e < 0) e += phi;
    push(out, "g^(a-ab) mod n", mod_pow(v.g, e, v.n) == v.pow_a_ab, "exponentiation mismatch");

    push(out, "Q = g^a P", scalar_mul(v.pow_a, v.P, curve) == v.Q, "point mismatch");
    push(out, "R = g^(a-ab) P", scalar_mul(v.pow_a_ab, v.P, curve) == v.R, "point mismatch");
    return out;
}

bool toy_pairing_table_ok(const PairingContext& ctx, const Point& P) {
    Fp2 base = e_n(P, P, ctx);
    // precompute uP and the base powers
    unsigned long n = ctx.n.get_ui();
    std::vector<Point> multiples(n);
    std::vector<Fp2> powers(n);
    Point acc = Point::infinity();
    Fp2 pw = fp2_one();
    for (unsigned long i = 0; i < n; ++i) {
        multiples[i] = acc;
        powers[i] = pw;
        acc = add(acc, P, ctx.curve);
        pw = fp2_mul(pw, base, ctx.curve.p);
    }
    for (unsigned long u = 0; u < n; ++u) {
        for (unsigned long v = 0; v < n; ++v) {
            Fp2 lhs = e_n(multiples[u], multiples[v], ctx);
            if (!(lhs == powers[(u * v) % n])) return false;
        }
    }
    return true;
}

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out = run_kat_checks(builtin_kat());
    // toy curve fixture: p1 = 5, p2 = 7, p = 139, P = 4*(3, 13)
    CurveParams toy{139, 1};
    Point toyP = Point::affine(36, 108);
    PairingContext ctx = make_pairing_context(toy, 35);
    bool table = false;
    std::string detail;
    try {
        table = toy_pairing_table_ok(ctx, toyP);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    out.push_back({"toy pairing bilinearity table", table, table ? "" : detail});
    return out;
}

}  // namespace dualsig
