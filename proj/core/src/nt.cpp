#include "cyclica/nt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclica::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t acc = 1;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return acc;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Pollard rho with Brent cycle detection; n must be odd composite, not
// a prime power obstacle for correctness (retries with shifted c).
std::uint64_t pollard(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    std::uint64_t d = pollard(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::uint64_t> primes;
    // Strip small factors first so pollard only sees hard cofactors.
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1u);
        }
    }
    return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    a %= m;
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("mult_order: gcd(a, m) != 1");
    // Group order for prime m is m-1; otherwise use Carmichael via the
    // exponent of each prime-power component.  All callers here pass
    // prime m, but keep the general path correct via phi(m).
    std::uint64_t phi = 1;
    for (auto [p, e] : factorize(m)) {
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    std::uint64_t ord = phi;
    for (auto [p, e] : factorize(phi)) {
        (void)e;
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

int legendre(std::uint64_t a, std::uint64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    a %= p;
    if (a == 0) return 0;
    std::uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace cyclica::nt
