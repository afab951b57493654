#pragma once
#include <cstdint>
#include <vector>

namespace cyclica {

// Sieve layer over the number-theory kernel: per-prime order records and
// bounded predicate searches.  Everything here reports what it counted;
// no statement about infinitude is ever made.

struct PrimeRecord {
    std::uint64_t p = 0;
    // ord_p(ell) for the ell the search ran with; 0 encodes p | ell,
    // where no order exists and the derived flags are all false.
    std::uint64_t ord = 0;
    bool is_mersenne = false;      // p = 2^n - 1
    bool primitive_root = false;   // ord = p - 1
    bool ord_equals_half = false;  // ord = (p - 1) / 2
    bool base_is_qr = false;       // legendre(ell, p) = +1 (odd p only)
};

struct PrimePredicate {
    enum class Kind {
        all,
        ord_lt_eps,     // ord_p(ell) < eps * p
        primitive_root, // ord_p(ell) = p - 1
        mersenne,       // p = 2^n - 1
        ord_half,       // ord_p(ell) = (p - 1) / 2
        split_in_kql,   // p = 1 (mod q) and ell^((p-1)/q) = 1 (mod p)
    };
    Kind kind = Kind::all;
    std::uint64_t ell = 2;
    double eps = 0.0;
    std::uint64_t q = 0;

    static PrimePredicate all(std::uint64_t ell = 2);
    static PrimePredicate ord_lt_eps(double eps, std::uint64_t ell = 2);
    static PrimePredicate primitive_root(std::uint64_t ell);
    static PrimePredicate mersenne();
    static PrimePredicate ord_half(std::uint64_t ell = 2);
    static PrimePredicate split_in_kql(std::uint64_t q, std::uint64_t ell);
};

// ord_p(ell): least r >= 1 with ell^r = 1 (mod p).  Throws when p is not
// prime or p divides ell.
std::uint64_t ord_mod(std::uint64_t ell, std::uint64_t p);

// All primes in [lo, hi) matching the predicate, ascending.  Workers
// partition the range and the chunks concatenate in order.  Every
// split_in_kql hit is checked against its own conclusion
// ord_p(ell) <= (p-1)/q before being returned.
std::vector<PrimeRecord> search_primes(std::uint64_t lo, std::uint64_t hi,
                                       const PrimePredicate& predicate,
                                       unsigned jobs = 1);

}  // namespace cyclica
