#include "dualsig/attack.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dualsig/hashing.hpp"
#include "dualsig/numeric.hpp"

namespace dualsig {

Nat phi_from_signatures(const OracleTranscript& t) {
    if (t.messages.size() != t.signatures.size())
        throw std::invalid_argument("transcript: length mismatch");
    if (t.signatures.size() < 1) throw std::invalid_argument("transcript: empty");
    Nat d = 0;
    for (std::size_t i = 0; i < t.signatures.size(); ++i) {
        Nat h = hash_scalar(t.messages[i], t.n);
        // exact integer residual; a non-zero value is a multiple of phi(n)
        Nat residual = t.b * h + t.a - t.a * t.b - t.signatures[i].s;
        d = gcd(d, abs(residual));
    }
    if (d == 0) throw inconclusive_error();
    return d;
}

std::pair<Nat, Nat> factor_from_phi(const Nat& n, const Nat& phi) {
    // p1 + p2 = n - phi + 1, p1 * p2 = n
    Nat sum = n - phi + 1;
    if (sum < 2) throw invalid_phi_error("factor: root sum not positive");
    Nat disc = sum * sum - 4 * n;
    if (disc < 0) throw invalid_phi_error("factor: negative discriminant");
    Nat root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root != disc) throw invalid_phi_error("factor: discriminant not a square");
    if ((sum - root) % 2 != 0) throw invalid_phi_error("factor: roots not integral");
    Nat p1 = (sum - root) / 2;
    Nat p2 = (sum + root) / 2;
    if (p1 * p2 != n) throw invalid_phi_error("factor: product mismatch");
    if (!is_prime(p1) || !is_prime(p2)) throw invalid_phi_error("factor: roots not prime");
    return {p1, p2};
}

Nat strip_small_factors(const Nat& n, const Nat& d, int* test_count) {
    static const int kStripPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    std::set<Nat> seen;
    std::deque<Nat> queue{d};
    int tests = 0;
    while (!queue.empty()) {
        Nat c = queue.front();
        queue.pop_front();
        if (c < 2 || seen.count(c)) continue;
        seen.insert(c);
        ++tests;
        try {
            factor_from_phi(n, c);
            if (test_count) *test_count = tests;
            return c;
        } catch (const invalid_phi_error&) {
        }
        for (int q : kStripPrimes) {
            if (c % q == 0) queue.push_back(c / q);
        }
        if (seen.size() > 4096) break;  // smoothness blow-up guard
    }
    if (test_count) *test_count = tests;
    throw invalid_phi_error("strip: no candidate divisor recovers the totient");
}

ReductionReport run_reduction(unsigned bits, int sig_count, RandomSource& rng) {
    if (bits > 32) throw std::domain_error("run_reduction: bits > 32");
    if (sig_count < 1) throw std::domain_error("run_reduction: need at least one signature");

    ReductionReport report;
    report.bits = bits;
    report.signatures_used = sig_count;

    GeneratedParams gen = gen_params(bits, rng);
    const SchemeParams& params = gen.params;
    const Nat& n = params.n;
    report.n = n;

    // The reduction draws its own key material; only the oracle (the
    // legitimate signer) ever touches p1, p2.
    Nat g;
    do {
        g = draw_range(rng, 2, n - 1);
    } while (gcd(g, n) != 1);
    Nat a = draw_range(rng, 1, n);
    Nat b = draw_range(rng, 1, n);

    Nat phi = (gen.p1 - 1) * (gen.p2 - 1);  // oracle-side knowledge
    auto oracle_sign = [&](std::span<const std::uint8_t> m) {
        Nat h = hash_scalar(m, n);
        Point H = map_to_point(m, params.P, n, params.curve);
        Nat ab = a * b % phi;
        Point S = scalar_mul(mod_pow(g, ab, n), H, params.curve);
        Nat s = (b * h + a - a * b) % phi;
        if (s < 0) s += phi;
        return Signature{S.x, s};
    };

    OracleTranscript t;
    t.a = a;
    t.b = b;
    t.g = g;
    t.n = n;
    Nat running = 0;
    for (int i = 0; i < sig_count; ++i) {
        std::vector<std::uint8_t> m(16);
        rng.fill(m.data(), m.size());
        Signature sig = oracle_sign(m);
        Nat h = hash_scalar(m, n);
        running = gcd(running, abs(Nat(b * h + a - a * b - sig.s)));
        report.gcd_trajectory.push_back(running);
        t.messages.push_back(std::move(m));
        t.signatures.push_back(sig);
    }

    try {
        report.gcd_raw = phi_from_signatures(t);
        report.phi = strip_small_factors(n, report.gcd_raw, &report.strip_tests);
        auto [p1, p2] = factor_from_phi(n, report.phi);
        report.p1 = p1;
        report.p2 = p2;
        report.success = true;
    } catch (const inconclusive_error& e) {
        report.failure = e.what();
    } catch (const invalid_phi_error& e) {
        report.failure = e.what();
    }
    return report;
}

std::string render_report_machine(const ReductionReport& r) {
    std::ostringstream out;
    out << "success = " << (r.success ? 1 : 0) << '\n';
    out << "bits = " << r.bits << '\n';
    out << "signatures = " << r.signatures_used << '\n';
    out << "n = " << to_hex(r.n) << '\n';
    out << "gcd_raw = " << to_hex(r.gcd_raw) << '\n';
    for (std::size_t i = 0; i < r.gcd_trajectory.size(); ++i)
        out << "gcd_" << i << " = " << to_hex(r.gcd_trajectory[i]) << '\n';
    out << "strip_tests = " << r.strip_tests << '\n';
    if (r.success) {
        out << "phi = " << to_hex(r.phi) << '\n';
        out << "p1 = " << to_hex(r.p1) << '\n';
        out << "p2 = " << to_hex(r.p2) << '\n';
    } else {
        out << "failure = " << r.failure << '\n';
    }
    return out.str();
}

std::string render_report_human(const ReductionReport& r) {
    std::ostringstream out;
    out << "reduction at " << r.bits << "-bit primes, " << r.signatures_used << " oracle signatures\n";
    out << "  n        = " << r.n.get_str(10) << '\n';
    out << "  gcd      = " << r.gcd_raw.get_str(10) << " (after " << r.gcd_trajectory.size()
        << " residuals)\n";
    if (r.success) {
        out << "  phi(n)   = " << r.phi.get_str(10) << '\n';
        out << "  factors  = " << r.p1.get_str(10) << " * " << r.p2.get_str(10) << '\n';
        out << "  result   = success (" << r.strip_tests << " candidate divisors tested)\n";
    } else {
        out << "  result   = failed: " << r.failure << '\n';
    }
    return out.str();
}

}  // namespace dualsig
