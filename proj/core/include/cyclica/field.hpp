#pragma once
// Finite fields F_{ell^r} in polynomial-basis representation.
//
// An element is packed into a single uint64_t as base-ell digits:
//   value = sum_i c_i * ell^i,  c_i < ell,
// where c_i is the coefficient of X^i in the polynomial basis.  For
// ell = 2 this is the familiar bit-packing.  Packed values enumerate
// the field as 0 .. size()-1, compare cheaply, and double as the
// canonical on-disk encoding.  All arithmetic lives on the Field
// object, which owns the modulus and, for fields of at most 2^16
// elements, discrete log/antilog tables (a pure accelerator: results
// are identical with or without them).
//
// The construction budget is ell^r < 2^62; exhaustive per-element
// sweeps (tables, trace histograms) are only attempted for small
// fields, large fields fall back to generic digit arithmetic.

#include <cstdint>
#include <memory>
#include <vector>

namespace cyclica {

using ff_t = std::uint64_t;

class Field {
public:
    // Empty handle; every operation throws until a real field is
    // assigned.  Exists so that aggregates can default-construct.
    Field() = default;

    // F_ell for prime ell.
    static Field prime_field(std::uint64_t ell);

    // F_{ell^r} with the lexicographically smallest monic irreducible
    // modulus of degree r, where candidates are ordered by their packed
    // base-ell value.  Deterministic across runs and platforms.
    static Field extension(std::uint64_t ell, unsigned r);

    // Explicit modulus, lowest degree first, length r+1, monic.
    // Irreducibility is verified by trial division; throws otherwise.
    static Field with_modulus(std::uint64_t ell, std::vector<std::uint64_t> modulus);

    std::uint64_t ell() const;
    unsigned degree() const;                         // r
    std::uint64_t size() const;                      // ell^r
    const std::vector<std::uint64_t>& modulus() const;  // length r+1

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Element arithmetic.  Arguments must be valid packed values < size();
    // this is checked and std::invalid_argument thrown on violation.
    ff_t add(ff_t a, ff_t b) const;
    ff_t sub(ff_t a, ff_t b) const;
    ff_t neg(ff_t a) const;
    ff_t mul(ff_t a, ff_t b) const;
    ff_t inv(ff_t a) const;              // throws on a = 0
    ff_t div(ff_t a, ff_t b) const;      // throws on b = 0
    ff_t pow(ff_t a, std::uint64_t e) const;

    // Packing helpers.
    ff_t from_int(std::uint64_t n) const;            // n mod ell as a constant
    ff_t from_coeffs(const std::vector<std::uint64_t>& c) const;
    std::vector<std::uint64_t> coeffs(ff_t a) const;  // length r

    // x -> x^ell, the generator of Gal(F_{ell^r}/F_ell).
    ff_t frobenius(ff_t a) const;

    // Absolute trace sum_{i<r} x^{ell^i}; lands in F_ell and is returned
    // as a packed constant < ell.
    ff_t trace(ff_t a) const;

    // Multiplicative order; throws on a = 0.
    std::uint64_t element_order(ff_t a) const;

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl);
    const Impl& I() const;  // throws std::logic_error on empty handle
    std::shared_ptr<const Impl> impl_;
};

// The field of order q for any prime power q (prime_field or the
// canonical extension, depending on the exponent).
Field field_of_order(std::uint64_t q);

}  // namespace cyclica
