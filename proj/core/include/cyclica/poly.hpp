#pragma once
// Dense univariate polynomials over a Field, coefficients stored lowest
// degree first in packed form.  Polynomials are kept normalized: the
// zero polynomial is the empty vector, anything else has a nonzero
// leading coefficient.  Binary operations require both operands to live
// over the same Field and throw std::invalid_argument otherwise.

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclica/field.hpp"

namespace cyclica {

class Poly {
public:
    // Zero polynomial over an empty Field handle, so aggregates can
    // default-construct; arithmetic throws until a real field is set.
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<ff_t> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    // c * X^k
    static Poly monomial(const Field& f, ff_t c, std::size_t k);
    // X^n - 1
    static Poly xn_minus_1(const Field& f, std::uint64_t n);

    const Field& field() const { return field_; }
    const std::vector<ff_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    ff_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    ff_t lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::size_t weight() const;  // number of nonzero coefficients

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator%(const Poly& o) const { return divmod(o).second; }
    Poly operator/(const Poly& o) const { return divmod(o).first; }

    Poly scaled(ff_t s) const;
    Poly monic() const;  // throws on zero
    std::pair<Poly, Poly> divmod(const Poly& den) const;
    ff_t eval(ff_t x) const;  // Horner

    // Substitute exponents i -> i mod n and fold (reduction mod X^n - 1,
    // cheaper than division by the dense binomial).
    Poly fold_mod_xn_minus_1(std::uint64_t n) const;

private:
    void trim();
    Field field_;
    std::vector<ff_t> c_;
};

// Monic gcd via Euclid; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace cyclica
