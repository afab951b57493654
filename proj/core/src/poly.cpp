#include "cyclica/poly.hpp"

#include <stdexcept>

namespace cyclica {

namespace {
void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("polynomials over different fields");
}
}  // namespace

Poly::Poly(Field f, std::vector<ff_t> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    for (ff_t v : c_)
        if (v >= field_.size())
            throw std::invalid_argument("coefficient is not a field element");
    trim();
}

Poly Poly::monomial(const Field& f, ff_t c, std::size_t k) {
    if (c == 0) return zero(f);
    std::vector<ff_t> v(k + 1, 0);
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::xn_minus_1(const Field& f, std::uint64_t n) {
    std::vector<ff_t> v(n + 1, 0);
    v[0] = f.neg(1);
    v[n] = 1;
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::weight() const {
    std::size_t w = 0;
    for (ff_t v : c_) w += (v != 0);
    return w;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && c_ == o.c_;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*this, o);
    std::vector<ff_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = field_.add(coeff(i), o.coeff(i));
    Poly res(field_);
    res.c_ = std::move(out);
    res.trim();
    return res;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*this, o);
    std::vector<ff_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = field_.sub(coeff(i), o.coeff(i));
    Poly res(field_);
    res.c_ = std::move(out);
    res.trim();
    return res;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*this, o);
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<ff_t> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
        }
    }
    Poly res(field_);
    res.c_ = std::move(out);
    res.trim();
    return res;
}

Poly Poly::scaled(ff_t s) const {
    if (s == 0) return zero(field_);
    std::vector<ff_t> out(c_);
    for (ff_t& v : out) v = field_.mul(v, s);
    Poly res(field_);
    res.c_ = std::move(out);
    return res;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    if (lead() == 1) return *this;
    return scaled(field_.inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& den) const {
    require_same_field(*this, den);
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (deg() < den.deg()) return {zero(field_), *this};
    std::vector<ff_t> rem(c_);
    std::vector<ff_t> quo(c_.size() - den.c_.size() + 1, 0);
    const ff_t dlead_inv = field_.inv(den.lead());
    for (std::size_t k = rem.size(); k-- >= den.c_.size();) {
        ff_t factor = field_.mul(rem[k], dlead_inv);
        if (factor != 0) {
            quo[k - (den.c_.size() - 1)] = factor;
            for (std::size_t j = 0; j < den.c_.size(); ++j) {
                rem[k - (den.c_.size() - 1) + j] = field_.sub(
                    rem[k - (den.c_.size() - 1) + j],
                    field_.mul(factor, den.c_[j]));
            }
        }
        if (k == 0) break;
    }
    Poly q(field_), r(field_);
    q.c_ = std::move(quo);
    q.trim();
    r.c_ = std::move(rem);
    r.trim();
    return {std::move(q), std::move(r)};
}

ff_t Poly::eval(ff_t x) const {
    ff_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::fold_mod_xn_minus_1(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("fold modulus must be positive");
    std::vector<ff_t> out(std::min<std::uint64_t>(n, c_.size()), 0);
    out.resize(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i % n] = field_.add(out[i % n], c_[i]);
    Poly res(field_);
    res.c_ = std::move(out);
    res.trim();
    return res;
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

}  // namespace cyclica
