#pragma once
// 64-bit integer number theory: modular arithmetic, deterministic
// primality, Pollard-rho factoring, multiplicative orders.
//
// Everything here is exact.  is_prime uses the fixed Miller-Rabin base
// set {2,3,5,7,11,13,17,19,23,29,31,37}, which is a proven primality
// certificate for all n < 3.3e24 and therefore for the whole uint64 range.

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclica::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

bool is_prime(std::uint64_t n);

// Prime factorization n = prod p_i^{e_i}, ascending p_i.  n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Order of a in (Z/m)^*.  Throws std::invalid_argument if gcd(a,m) != 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

// Euler criterion for odd prime p: returns +1, -1, or 0 for p | a.
int legendre(std::uint64_t a, std::uint64_t p);

}  // namespace cyclica::nt
