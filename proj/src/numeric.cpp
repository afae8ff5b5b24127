#include "dualsig/numeric.hpp"

#include <array>
#include <vector>

namespace dualsig {

namespace {

// Primes below 1000: trial-division screen and the Miller-Rabin base schedule.
const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<unsigned> ps;
        std::array<bool, 1000> sieve{};
        for (unsigned i = 2; i < sieve.size(); ++i) {
            if (sieve[i]) continue;
            ps.push_back(i);
            for (unsigned j = 2 * i; j < sieve.size(); j += i) sieve[j] = true;
        }
        return ps;
    }();
    return primes;
}

bool miller_rabin_witness(const Nat& n, const Nat& base, const Nat& d, unsigned long s) {
    Nat x = mod_pow(base, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // base witnesses compositeness
}

}  // namespace

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus < 2");
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Nat mod_inv(const Nat& x, const Nat& modulus) {
    if (modulus < 2) throw std::domain_error("mod_inv: modulus < 2");
    Nat g, s, xr = x % modulus;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, xr.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw not_invertible_error(g);
    s %= modulus;
    if (s < 0) s += modulus;
    return s;
}

int legendre(const Nat& x, const Nat& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw std::domain_error("legendre: p not an odd prime");
    Nat e = (p - 1) / 2;
    Nat r = mod_pow(x % p, e, p);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::domain_error("legendre: p not prime");
}

Nat sqrt_mod(const Nat& x, const Nat& p) {
    if (p % 4 != 3) throw std::domain_error("sqrt_mod: p != 3 (mod 4)");
    Nat xr = x % p;
    Nat z = mod_pow(xr, (p + 1) / 4, p);
    if (z * z % p != xr) throw no_square_root_error();
    Nat other = (p - z) % p;
    return z <= other ? z : other;
}

bool is_prime(const Nat& k, int rounds) {
    if (rounds < 1) throw std::domain_error("is_prime: rounds < 1");
    if (k < 2) return false;
    for (unsigned q : small_primes()) {
        if (k == q) return true;
        if (k % q == 0) return false;
    }
    if (k < 1000 * 1000) return true;  // fully screened by trial division

    Nat d = k - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    const auto& bases = small_primes();
    int count = std::min<std::size_t>(static_cast<std::size_t>(rounds), bases.size());
    for (int i = 0; i < count; ++i) {
        if (miller_rabin_witness(k, Nat(bases[i]), d, s)) return false;
    }
    return true;
}

Nat next_prime(const Nat& k) {
    if (k <= 2) return 2;
    Nat c = k;
    if (mpz_even_p(c.get_mpz_t())) c += 1;
    while (!is_prime(c)) c += 2;
    return c;
}

Nat gcd(const Nat& a, const Nat& b) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace dualsig
