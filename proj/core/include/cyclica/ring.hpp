#pragma once
// The ambient ring R = F[X]/(X^p - 1) for prime p, together with the
// factorization of X^p - 1 into irreducibles over F and the discrete
// Fourier transform on the p-th roots of unity.
//
// The coefficient field F of q elements may itself be an extension.
// When gcd(q, p) = 1 the factor of each cyclotomic coset C (an orbit of
// j -> q*j mod p) is computed as prod_{j in C} (X - zeta^j) inside the
// splitting field and then pulled back to F; the pullback aborts if any
// coefficient fails to land in F, it never coerces.  When char(F) = p
// the ring degenerates to F[X]/((X-1)^p) and the factorization is the
// single factor X - 1 with multiplicity p.

#include <cstdint>
#include <vector>

#include "cyclica/field.hpp"
#include "cyclica/poly.hpp"

namespace cyclica {

struct Ring {
    Field field;          // coefficient field F
    std::uint64_t p = 0;  // prime length
    bool char_p = false;  // char(F) == p

    bool operator==(const Ring& o) const {
        return field == o.field && p == o.p;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

Ring make_ring(Field field, std::uint64_t p);

// Element of R: exactly p packed coefficients, c[i] multiplies X^i.
class RingElem {
public:
    // Empty element over an empty ring, for default-constructible report
    // aggregates; arithmetic throws until a real element is assigned.
    RingElem() = default;
    RingElem(Ring ring, std::vector<ff_t> coeffs);
    static RingElem zero(const Ring& r);
    static RingElem from_poly(const Ring& r, const Poly& f);  // folds mod X^p-1

    const Ring& ring() const { return ring_; }
    const std::vector<ff_t>& coeffs() const { return c_; }
    bool is_zero() const;
    std::size_t weight() const;
    std::vector<std::uint32_t> support() const;
    Poly to_poly() const;  // trims to degree < p

    bool operator==(const RingElem& o) const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;  // cyclic convolution
    RingElem scaled(ff_t s) const;
    RingElem shifted(std::uint64_t t) const;  // times X^t

private:
    Ring ring_;
    std::vector<ff_t> c_;
};

struct Factor {
    std::vector<std::uint32_t> coset;  // exponents j with zeta^j a root
    Poly poly;                         // monic irreducible over F
};

struct Factorization {
    Ring ring;
    unsigned r = 1;       // ord_p(q): common degree of the non-trivial factors
    std::uint64_t s = 0;  // (p-1)/r: number of non-trivial factors
    // Sorted by least coset element; factors[0] is always X - 1.
    // In char-p mode this is the single factor X - 1 (multiplicity p).
    std::vector<Factor> factors;
    unsigned multiplicity = 1;  // p in char-p mode, 1 otherwise

    Field splitting;  // smallest field over F containing the p-th roots
    ff_t zeta = 0;    // fixed primitive p-th root of unity in splitting
    // Embedding table F -> splitting, indexed by packed value; empty when
    // packed values pass through unchanged (F prime or F = splitting).
    std::vector<ff_t> embed;

    ff_t embed_elem(ff_t a) const { return embed.empty() ? a : embed[a]; }
    ff_t zeta_pow(std::uint64_t e) const;  // zeta^(e mod p), table-backed
    std::vector<ff_t> zeta_powers;         // zeta^0 .. zeta^(p-1)
};

// Orbits of j -> mult*j mod p on {0, .., p-1}, sorted by least element;
// the first orbit is always {0}.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t mult,
                                                          std::uint64_t p);

// Factors X^p - 1 over ring.field.  Verifies that the product of all
// factors reconstructs X^p - 1 and aborts on any inconsistency.
Factorization factorize_xp1(const Ring& ring);

// Number of p-th roots of unity killed by f (char-p mode: multiplicity
// of X - 1 in f).  Computed along two independent routes, as the degree
// of gcd(f, X^p - 1) and by evaluating f at every zeta^j; throws
// std::logic_error if the routes disagree.  f must be nonzero.
std::uint64_t zeros_count(const Factorization& fact, const RingElem& f);

// dim_F I_f = p - zeros_count(f).
std::uint64_t ideal_dim(const Factorization& fact, const RingElem& f);

// Spectrum (f(zeta^-j))_{j=0..p-1} over the splitting field.
// Requires gcd(q, p) = 1 (throws in char-p mode).
std::vector<ff_t> dft(const Factorization& fact, const RingElem& f);

// Inverse transform without the 1/p normalization: feeding dft(f) back
// returns the coefficients of p*f, embedded in the splitting field.
std::vector<ff_t> idft_times_p(const Factorization& fact,
                               const std::vector<ff_t>& spectrum);

}  // namespace cyclica
