#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cyclica {

// Z[zeta_p], the ring of integers spanned by a primitive p-th root of
// unity: exact integer-coefficient arithmetic on the power basis
// 1, zeta, ..., zeta^{p-2} after reduction by 1 + X + ... + X^{p-1}.
// The basis is a Z-basis, so the reduced coordinate vector is canonical
// and equality/zero tests are coordinate-wise.
class CycInt {
public:
    explicit CycInt(std::uint64_t p);  // zero
    static CycInt integer(std::uint64_t p, long v);
    static CycInt zeta_power(std::uint64_t p, std::uint64_t e);
    // Coordinates on exponents 0..p-1 (index p-1 gets folded away).
    static CycInt from_exponents(std::uint64_t p,
                                 const std::vector<mpz_class>& acc);

    std::uint64_t p() const { return p_; }
    const std::vector<mpz_class>& coords() const { return c_; }  // size p-1
    bool is_zero() const;
    bool operator==(const CycInt& o) const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt negated() const;

    // Galois conjugate zeta -> zeta^k, gcd(k, p) = 1.
    CycInt conjugate(std::uint64_t k) const;

    // Rational norm N(v) = prod over all conjugates; a plain integer.
    mpz_class norm() const;

    // Exact quotient u / v computed through the norm: u * prod of the
    // nontrivial conjugates of v, divided coordinate-wise by N(v).
    // Throws std::invalid_argument on v = 0 and std::logic_error when v
    // does not divide u (never happens in fraction-free elimination).
    static CycInt exact_div(const CycInt& u, const CycInt& v);

private:
    std::uint64_t p_ = 0;
    std::vector<mpz_class> c_;
};

// Determinant by fraction-free (Bareiss) elimination with row pivoting;
// every intermediate division is exact in the domain Z[zeta_p].  The
// empty matrix has determinant 1.
CycInt cyc_det(std::vector<std::vector<CycInt>> m, std::uint64_t p);

}  // namespace cyclica
