#include "cyclica/cycint.hpp"

#include <stdexcept>
#include <utility>

namespace cyclica {

namespace {

void require_prime_size(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

}  // namespace

CycInt::CycInt(std::uint64_t p) : p_(p), c_(p - 1) { require_prime_size(p); }

CycInt CycInt::integer(std::uint64_t p, long v) {
    CycInt out(p);
    out.c_[0] = v;
    return out;
}

CycInt CycInt::zeta_power(std::uint64_t p, std::uint64_t e) {
    std::vector<mpz_class> acc(p);
    acc[e % p] = 1;
    return from_exponents(p, acc);
}

CycInt CycInt::from_exponents(std::uint64_t p,
                              const std::vector<mpz_class>& acc) {
    require_prime_size(p);
    if (acc.size() != p)
        throw std::invalid_argument("exponent vector must have length p");
    CycInt out(p);
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
    for (std::uint64_t i = 0; i + 1 < p; ++i) out.c_[i] = acc[i] - acc[p - 1];
    return out;
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycInt::operator==(const CycInt& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CycInt out(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CycInt out(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

CycInt CycInt::negated() const {
    CycInt out(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    std::vector<mpz_class> acc(p_);
    for (std::uint64_t i = 0; i + 1 < p_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint64_t j = 0; j + 1 < p_; ++j) {
            if (o.c_[j] == 0) continue;
            acc[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    return from_exponents(p_, acc);
}

CycInt CycInt::conjugate(std::uint64_t k) const {
    k %= p_;
    if (k == 0) throw std::invalid_argument("conjugate index divisible by p");
    std::vector<mpz_class> acc(p_);
    for (std::uint64_t i = 0; i + 1 < p_; ++i) acc[i * k % p_] += c_[i];
    return from_exponents(p_, acc);
}

mpz_class CycInt::norm() const {
    CycInt prod = *this;
    for (std::uint64_t k = 2; k < p_; ++k) prod = prod * conjugate(k);
    // The full conjugate product is Galois-fixed, hence a rational integer.
    for (std::size_t i = 1; i < prod.c_.size(); ++i)
        if (prod.c_[i] != 0)
            throw std::logic_error("norm fell outside the rational integers");
    return prod.c_[0];
}

CycInt CycInt::exact_div(const CycInt& u, const CycInt& v) {
    if (u.p_ != v.p_) throw std::invalid_argument("mixed cyclotomic orders");
    const std::uint64_t p = u.p_;
    if (v.is_zero()) throw std::invalid_argument("division by zero");

    CycInt cof = CycInt::integer(p, 1);  // product of nontrivial conjugates
    for (std::uint64_t k = 2; k < p; ++k) cof = cof * v.conjugate(k);
    CycInt nv = v * cof;
    for (std::size_t i = 1; i < nv.c_.size(); ++i)
        if (nv.c_[i] != 0)
            throw std::logic_error("norm fell outside the rational integers");
    const mpz_class& n = nv.c_[0];

    CycInt w = u * cof;
    CycInt out(p);
    for (std::size_t i = 0; i < w.c_.size(); ++i) {
        if (!mpz_divisible_p(w.c_[i].get_mpz_t(), n.get_mpz_t()))
            throw std::logic_error("inexact division in Z[zeta_p]");
        mpz_divexact(out.c_[i].get_mpz_t(), w.c_[i].get_mpz_t(),
                     n.get_mpz_t());
    }
    return out;
}

CycInt cyc_det(std::vector<std::vector<CycInt>> m, std::uint64_t p) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    if (n == 0) return CycInt::integer(p, 1);

    int sign = 1;
    CycInt prev = CycInt::integer(p, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return CycInt(p);  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = CycInt::exact_div(
                    m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = CycInt(p);
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : m[n - 1][n - 1].negated();
}

}  // namespace cyclica
