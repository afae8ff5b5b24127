// Acceptance suite: every criterion prints one PASS/FAIL line. Run with no
// arguments for the full battery or with criterion numbers to select.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dualsig/attack.hpp"
#include "dualsig/hashing.hpp"
#include "dualsig/keyfile.hpp"
#include "dualsig/numeric.hpp"
#include "toy_fixture.hpp"

using namespace dualsig;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int checks_failed = 0;
void expect(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        log << "    mismatch: " << what << '\n';
    }
}

// ---------------------------------------------------------------------------
// criterion 1: digit-for-digit reproduction of the reference vector set
// (256-bit primes, g = 2, structured exponents)
// ---------------------------------------------------------------------------

struct ReferenceVectors {
    Nat p1, p2, n, q, a, b, r, pow_a, pow_a_ab;
    Nat xP, yP, xQ, yQ, xR, yR;
};

ReferenceVectors reference_vectors() {
    auto dec = [](const char* s) { return Nat(s, 10); };
    ReferenceVectors v;
    v.p1 = dec(
        "664810154161090130922129022943767028357741958992075598068605416695786374"
        "94231");
    v.p2 = dec(
        "115738576089152909314582339834842248600964273864643984203082855344579907"
        "038313");
    v.n = dec(
        "769441806122148057459179536286394989745390123859123728821896073489112031"
        "191771739492678882017122636619912324577778582190244785499575707944039735"
        "4833472303");
    v.q = dec(
        "307776722448859222983671814514557995898156049543649491528758429395644812"
        "476708695797071552806849054647964929831111432876097914199830283177615894"
        "19333889211");
    v.a = dec(
        "115792089237316195423570985008687907853269984665640564039457584007913129"
        "640449");
    v.b = dec("340282368188589063691604008928471416833");
    v.r = dec(
        "606047383118041902800252754427446666920498361093194816304433724860363356"
        "158421874694524415267112284647646590300127020573917994700502444986860669"
        "4311195640");
    v.pow_a = dec(
        "301703278105984612331959909384645579259838330058887560280981123219109766"
        "727075670625596418215524163955319907854573382245426564094874852045289557"
        "1215190867");
    v.pow_a_ab = dec(
        "690123530133273230626309389424846277148918273893781109989393552397526184"
        "662868089706541469966831703048453509930121476438921649862265355773278725"
        "1147641864");
    v.xP = dec(
        "249234383028791030415509337688738175538158590076636972230312491954089508"
        "938594293101431086136135995118826706761382555145184472196891207522727723"
        "41649471097");
    v.yP = dec(
        "737996997348676496665860701704072193490435615382792210827517600538539755"
        "358116422263315026068694342336247347797791321091062173209850314610761445"
        "6038383100");
    v.xQ = dec(
        "726024894374351041059707058043918662331259099369849728298940696371605185"
        "217447754783574707404696665922982911135520666768924436661596860112987434"
        "6167442208");
    v.yQ = dec(
        "180478952381617534858771173117408315328111949924113880217933526940905063"
        "141367510816973388622683154804772889445776154435381749237197181859159816"
        "30635761798");
    v.xR = dec(
        "101511866894396545670585188239649151557179669727386321855694497591433958"
        "158555098408768620625614580819753284158039188667649129712719578441421966"
        "52521538840");
    v.yR = dec(
        "118306095688161874550646029575329976723454038037424706221632110504264075"
        "261475034768741284893776696048730660200567015539148455811330398091422405"
        "26482663137");
    return v;
}

bool criterion1(std::ostream& log) {
    auto start = Clock::now();
    ReferenceVectors v = reference_vectors();
    int before = checks_failed;

    expect(log, v.p1 * v.p2 == v.n, "n != p1*p2");
    expect(log, 4 * v.n - 1 == v.q, "q != 4n-1");
    expect(log, is_prime(v.q), "q not prime");

    CurveParams curve{v.q, 1};
    Point P = Point::affine(v.xP, v.yP);
    expect(log, is_on_curve(P, curve), "P not on curve");
    expect(log, scalar_mul(v.n, P, curve).inf, "n*P != infinity");
    expect(log, !scalar_mul(v.p2, P, curve).inf, "(n/p1)*P = infinity");
    expect(log, !scalar_mul(v.p1, P, curve).inf, "(n/p2)*P = infinity");

    expect(log, mod_pow(2, v.b, v.n) == v.r, "r digits");
    expect(log, mod_pow(2, v.a, v.n) == v.pow_a, "2^a digits");

    Nat phi = (v.p1 - 1) * (v.p2 - 1);
    Nat e = (v.a - v.a * v.b) % phi;
    if (e < 0) e += phi;
    Nat pow_a_ab = mod_pow(2, e, v.n);
    expect(log, pow_a_ab == v.pow_a_ab, "2^(a-ab) digits");

    expect(log, scalar_mul(v.pow_a, P, curve) == Point::affine(v.xQ, v.yQ), "Q coordinates");
    expect(log, scalar_mul(pow_a_ab, P, curve) == Point::affine(v.xR, v.yR), "R coordinates");

    double elapsed = seconds_since(start);
    expect(log, elapsed < 10.0, "runtime over 10 s");
    log << "    runtime " << elapsed << " s\n";

    bool ok = checks_failed == before;
    if (!ok) {
        log << "    note: the reference set's values for 2^(a-ab) and R are mutually\n"
               "    consistent (R equals that scalar times P) but provably inconsistent\n"
               "    with the defining equations: the true 2^a * (2^(ab))^-1 agrees with\n"
               "    the recorded value modulo p1 and differs modulo p2, and no exponent\n"
               "    reduction reproduces it. All other reference digits reproduce exactly.\n";
    }
    return ok;
}

// ---------------------------------------------------------------------------
// criterion 2: exhaustive bilinearity on the 140-point toy curve
// ---------------------------------------------------------------------------

bool criterion2(std::ostream& log) {
    auto start = Clock::now();
    auto ctx = toy::pairing_ctx();
    const auto& sub = toy::subgroup();
    int before = checks_failed;

    Fp2 base = e_n(sub[1], sub[1], ctx);
    std::vector<Fp2> powers(35, fp2_one());
    for (unsigned k = 1; k < 35; ++k) powers[k] = fp2_mul(powers[k - 1], base, ctx.curve.p);
    for (unsigned u = 0; u < 35; ++u) {
        for (unsigned vv = 0; vv < 35; ++vv) {
            if (!(e_n(sub[u], sub[vv], ctx) == powers[(u * vv) % 35])) {
                expect(log, false,
                       "pair (" + std::to_string(u) + ", " + std::to_string(vv) + ")");
            }
        }
    }
    double elapsed = seconds_since(start);
    expect(log, elapsed < 60.0, "runtime over 60 s");
    log << "    1225 pairs checked in " << elapsed << " s\n";
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 3: self-pairing primitivity on freshly generated parameter sets
// ---------------------------------------------------------------------------

bool criterion3(std::ostream& log) {
    int before = checks_failed;
    DeterministicRng rng(bytes_from_hex("ac03"));
    struct Plan {
        unsigned bits;
        int count;
    };
    for (Plan plan : {Plan{3, 7}, Plan{8, 7}, Plan{16, 6}}) {
        for (int i = 0; i < plan.count; ++i) {
            GeneratedParams gen = gen_params(plan.bits, rng);
            auto ctx = make_pairing_context(gen.params.curve, gen.params.n);
            Fp2 eps = e_n(gen.params.P, gen.params.P, ctx);
            const Nat& p = gen.params.curve.p;
            std::string tag = std::to_string(plan.bits) + "-bit set " + std::to_string(i);
            expect(log, fp2_is_one(fp2_pow(eps, gen.params.n, p)), tag + ": eps^n != 1");
            expect(log, !fp2_is_one(fp2_pow(eps, gen.params.n / gen.p1, p)),
                   tag + ": eps^(n/p1) = 1");
            expect(log, !fp2_is_one(fp2_pow(eps, gen.params.n / gen.p2, p)),
                   tag + ": eps^(n/p2) = 1");
        }
    }
    log << "    20 parameter sets checked\n";
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 4: round trip plus seeded tamper corpus at 32-bit primes
// ---------------------------------------------------------------------------

bool criterion4(std::ostream& log) {
    auto start = Clock::now();
    int before = checks_failed;
    DeterministicRng rng(bytes_from_hex("ac04"));
    GeneratedParams gen = gen_params(32, rng);
    KeyPair keys = keygen(gen.params, gen.p1, gen.p2, rng);

    std::vector<std::vector<std::uint8_t>> messages;
    std::vector<Signature> sigs;
    for (int i = 0; i < 100; ++i) {
        std::vector<std::uint8_t> m(32);
        rng.fill(m.data(), m.size());
        Signature sig = sign(keys.priv, keys.pub, m);
        if (!verify(keys.pub, m, sig).ok) expect(log, false, "round trip " + std::to_string(i));
        messages.push_back(std::move(m));
        sigs.push_back(sig);
    }
    log << "    100 round trips in " << seconds_since(start) << " s\n";

    int rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& m = messages[i % 100];
        Signature sig = sigs[i % 100];
        std::vector<std::uint8_t> msg = m;
        switch (i % 3) {
            case 0: {  // flip a bit of Sx
                unsigned long bit = draw_below(rng, bit_length(keys.pub.params.curve.p)).get_ui();
                mpz_combit(sig.Sx.get_mpz_t(), bit);
                break;
            }
            case 1: {  // flip a bit of s
                unsigned long bit = draw_below(rng, bit_length(keys.priv.phi)).get_ui();
                mpz_combit(sig.s.get_mpz_t(), bit);
                break;
            }
            case 2: {  // flip a message bit
                unsigned long idx = draw_below(rng, msg.size() * 8).get_ui();
                msg[idx / 8] ^= static_cast<std::uint8_t>(1u << (idx % 8));
                break;
            }
        }
        rejected += !verify(keys.pub, msg, sig).ok;
    }
    expect(log, rejected == 1000, "tamper corpus: " + std::to_string(1000 - rejected) +
                                      " mutations were accepted");
    double elapsed = seconds_since(start);
    expect(log, elapsed < 300.0, "runtime over 5 min");
    log << "    " << rejected << "/1000 tampered inputs rejected, total " << elapsed << " s\n";
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 5: exhaustive accept-set characterization on the toy set
// ---------------------------------------------------------------------------

bool criterion5(std::ostream& log) {
    int before = checks_failed;
    KeyPair keys = toy::keypair();
    const auto& params = keys.pub.params;
    auto m = bytes("abc");

    Nat h = hash_scalar(m, params.n);
    Point H = map_to_point(m, params.P, params.n, params.curve);
    Nat phi = keys.priv.phi;
    Nat s_star = (keys.priv.b * h + keys.priv.a - keys.priv.a * keys.priv.b) % phi;
    if (s_star < 0) s_star += phi;
    Point S = scalar_mul(mod_pow(keys.pub.g, keys.priv.a * keys.priv.b % phi, params.n), H,
                         params.curve);
    Point S_neg = negate(S, params.curve);

    int extra_accepts = 0, missed_accepts = 0;
    for (const Point& sigma : toy::subgroup()) {
        if (sigma.inf) continue;
        for (unsigned s = 0; s < 24; ++s) {
            bool accepted = verify(keys.pub, m, Signature{sigma.x, s}).ok;
            bool closed_form = (sigma == S || sigma == S_neg) && Nat(s) == s_star;
            if (accepted && !closed_form) {
                ++extra_accepts;
                log << "    accepted outside the closed form: sigma = " << to_hex(sigma.x)
                    << ", s = " << s << " (canonical s = " << s_star.get_str() << ")\n";
            }
            if (!accepted && closed_form) ++missed_accepts;
        }
    }
    expect(log, missed_accepts == 0, "closed-form pair rejected");
    expect(log, extra_accepts == 0, std::to_string(extra_accepts) + " extra acceptances");
    if (extra_accepts > 0) {
        log << "    note: the verifier sees s only through g^s mod n, so every\n"
               "    s' = s + k*ord_n(g) below phi(n) is accepted alongside the canonical\n"
               "    scalar; ord_n(g) divides lambda(n) <= phi(n)/2, so one such alias\n"
               "    always exists. The exact-uniqueness claim cannot hold for any g.\n";
    }
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 6: the factoring reduction through the command-line interface
// ---------------------------------------------------------------------------

bool criterion6(std::ostream& log) {
    auto start = Clock::now();
    int before = checks_failed;
    std::string cmd = std::string(DUALSIG_CLI_PATH) +
                      " attack --bits 24 --sigs 4 --trials 20 --seed ac06 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        expect(log, false, "cannot launch the CLI");
        return false;
    }
    std::string out;
    char buf[512];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    int successes = -1;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("successes = ", 0) == 0) std::sscanf(line.c_str(), "successes = %d", &successes);
    }
    expect(log, exit_code == 0, "CLI exit code " + std::to_string(exit_code));
    expect(log, successes >= 18, "only " + std::to_string(successes) + "/20 trials succeeded");
    double elapsed = seconds_since(start);
    expect(log, elapsed < 120.0, "runtime over 2 min");
    log << "    " << successes << "/20 recoveries in " << elapsed << " s\n";
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 7: instrumented operation counts
// ---------------------------------------------------------------------------

bool criterion7(std::ostream& log) {
    int before = checks_failed;

    auto check_key = [&](const KeyPair& keys, const std::string& tag) {
        auto m = bytes("counted message " + tag);
        OpCounts sc;
        Signature sig = sign(keys.priv, keys.pub, m, &sc);
        expect(log, sc.pairings == 0, tag + ": sign used " + std::to_string(sc.pairings) + " pairings");
        expect(log, sc.point_muls <= 2,
               tag + ": sign used " + std::to_string(sc.point_muls) + " point multiplications");
        OpCounts vc;
        expect(log, verify(keys.pub, m, sig, &vc).ok, tag + ": round trip");
        expect(log, vc.pairings == 2,
               tag + ": verify used " + std::to_string(vc.pairings) + " pairings");
        expect(log, vc.point_muls == 4,
               tag + ": verify used " + std::to_string(vc.point_muls) + " point multiplications");
    };

    check_key(toy::keypair(), "toy");
    DeterministicRng rng(bytes_from_hex("ac07"));
    GeneratedParams gen = gen_params(32, rng);
    check_key(keygen(gen.params, gen.p1, gen.p2, rng), "32-bit");
    log << "    sign: 0 pairings, <= 2 point multiplications; verify: 2 and 4\n";
    return checks_failed == before;
}

// ---------------------------------------------------------------------------
// criterion 8: hash-to-point rejection-loop iteration bounds
// ---------------------------------------------------------------------------

bool criterion8(std::ostream& log) {
    int before = checks_failed;

    auto mean_iterations = [&](const SchemeParams& params) {
        long total = 0;
        for (int i = 0; i < 1000; ++i) {
            auto m = bytes("bound-" + std::to_string(i));
            MapToPointStats stats;
            map_to_point(m, params.P, params.n, params.curve, &stats);
            total += stats.iterations;
        }
        return total / 1000.0;
    };

    double toy_mean = mean_iterations(toy::params());
    log << "    toy (n = 35) mean over 1000 messages: " << toy_mean << '\n';
    expect(log, toy_mean <= 2.5, "toy mean above 2.5");
    if (toy_mean > 2.5) {
        log << "    note: at n = 35 a draw is accepted only when it is a unit below n,\n"
               "    so the acceptance rate is phi(35)/2^6 = 24/64 and the expected number\n"
               "    of draws is 8/3 = 2.67 > 2.5; no message corpus can reliably undercut\n"
               "    the stated bound.\n";
    }

    DeterministicRng rng(bytes_from_hex("ac08"));
    GeneratedParams gen = gen_params(32, rng);
    double wide_mean = mean_iterations(gen.params);
    log << "    64-bit n mean over 1000 messages: " << wide_mean << '\n';
    expect(log, wide_mean <= 2.05, "64-bit mean above 2.05");

    return checks_failed == before;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* title;
        std::function<bool(std::ostream&)> run;
    };
    std::vector<Criterion> all = {
        {1, "reference vectors reproduce digit for digit", criterion1},
        {2, "pairing bilinearity, exhaustive at toy scale", criterion2},
        {3, "self-pairing primitivity on generated sets", criterion3},
        {4, "round trip and tamper rejection at 32-bit primes", criterion4},
        {5, "verifier accepts exactly the closed-form pairs", criterion5},
        {6, "factoring reduction recovers the private primes", criterion6},
        {7, "operation counts: sign 0/<=2, verify 2/4", criterion7},
        {8, "hash-to-point iteration bounds", criterion8},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << '\n';
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n'
                  << log.str();
        failures += !ok;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
