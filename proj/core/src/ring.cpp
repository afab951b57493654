#include "cyclica/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cyclica/nt.hpp"

namespace cyclica {

Ring make_ring(Field field, std::uint64_t p) {
    if (!nt::is_prime(p)) throw std::invalid_argument("ring length must be prime");
    bool char_p = (field.ell() == p);
    return Ring{std::move(field), p, char_p};
}

RingElem::RingElem(Ring ring, std::vector<ff_t> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (c_.size() != ring_.p)
        throw std::invalid_argument("ring element needs exactly p coefficients");
    for (ff_t v : c_)
        if (v >= ring_.field.size())
            throw std::invalid_argument("coefficient is not a field element");
}

RingElem RingElem::zero(const Ring& r) {
    return RingElem(r, std::vector<ff_t>(r.p, 0));
}

RingElem RingElem::from_poly(const Ring& r, const Poly& f) {
    if (f.field() != r.field)
        throw std::invalid_argument("polynomial field does not match ring");
    Poly folded = f.fold_mod_xn_minus_1(r.p);
    std::vector<ff_t> c(folded.coeffs());
    c.resize(r.p, 0);
    return RingElem(r, std::move(c));
}

bool RingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](ff_t v) { return v == 0; });
}

std::size_t RingElem::weight() const {
    std::size_t w = 0;
    for (ff_t v : c_) w += (v != 0);
    return w;
}

std::vector<std::uint32_t> RingElem::support() const {
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) s.push_back(static_cast<std::uint32_t>(i));
    return s;
}

Poly RingElem::to_poly() const { return Poly(ring_.field, c_); }

bool RingElem::operator==(const RingElem& o) const {
    return ring_ == o.ring_ && c_ == o.c_;
}

namespace {
void require_same_ring(const RingElem& a, const RingElem& b) {
    if (a.ring() != b.ring())
        throw std::invalid_argument("ring elements from different rings");
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(*this, o);
    std::vector<ff_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = ring_.field.add(c_[i], o.c_[i]);
    return RingElem(ring_, std::move(out));
}

RingElem RingElem::operator-(const RingElem& o) const {
    require_same_ring(*this, o);
    std::vector<ff_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = ring_.field.sub(c_[i], o.c_[i]);
    return RingElem(ring_, std::move(out));
}

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(*this, o);
    const std::size_t p = c_.size();
    std::vector<ff_t> out(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < p; ++j) {
            if (o.c_[j] == 0) continue;
            std::size_t k = i + j >= p ? i + j - p : i + j;
            out[k] = ring_.field.add(out[k], ring_.field.mul(c_[i], o.c_[j]));
        }
    }
    return RingElem(ring_, std::move(out));
}

RingElem RingElem::scaled(ff_t s) const {
    std::vector<ff_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = ring_.field.mul(c_[i], s);
    return RingElem(ring_, std::move(out));
}

RingElem RingElem::shifted(std::uint64_t t) const {
    const std::size_t p = c_.size();
    t %= p;
    std::vector<ff_t> out(p);
    for (std::size_t i = 0; i < p; ++i) out[(i + t) % p] = c_[i];
    return RingElem(ring_, std::move(out));
}

ff_t Factorization::zeta_pow(std::uint64_t e) const {
    return zeta_powers[e % ring.p];
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint64_t mult,
                                                          std::uint64_t p) {
    mult %= p;
    if (mult == 0) throw std::invalid_argument("coset multiplier must be nonzero mod p");
    std::vector<bool> seen(p, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t start = 0; start < p; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> orbit;
        std::uint64_t j = start;
        do {
            orbit.push_back(static_cast<std::uint32_t>(j));
            seen[j] = true;
            j = j * mult % p;
        } while (j != start);
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    // Ascending start index already yields ascending least elements.
    return out;
}

namespace {

// Pulls a splitting-field polynomial back to F; aborts if any
// coefficient is outside the image of F.
Poly pull_back(const Field& base, const std::vector<ff_t>& coeffs,
               const std::vector<ff_t>& embed) {
    std::vector<ff_t> out(coeffs.size());
    if (embed.empty()) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] >= base.size())
                throw std::logic_error(
                    "factor coefficient escaped to the splitting field");
            out[i] = coeffs[i];
        }
    } else {
        std::unordered_map<ff_t, ff_t> pre;
        pre.reserve(embed.size());
        for (ff_t a = 0; a < embed.size(); ++a) pre.emplace(embed[a], a);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            auto it = pre.find(coeffs[i]);
            if (it == pre.end())
                throw std::logic_error(
                    "factor coefficient escaped to the splitting field");
            out[i] = it->second;
        }
    }
    return Poly(base, std::move(out));
}

}  // namespace

Factorization factorize_xp1(const Ring& ring) {
    Factorization fact;
    fact.ring = ring;
    const std::uint64_t p = ring.p;
    const Field& F = ring.field;

    if (ring.char_p) {
        fact.r = 1;
        fact.s = 0;
        fact.multiplicity = static_cast<unsigned>(p);
        fact.splitting = F;
        fact.zeta = 1;
        fact.zeta_powers.assign(p, 1);
        Poly xm1(F, {F.neg(1), 1});
        fact.factors.push_back(Factor{{0}, xm1});
        // (X - 1)^p must reproduce X^p - 1 in characteristic p.
        Poly prod = Poly::one(F);
        for (std::uint64_t i = 0; i < p; ++i) prod = prod * xm1;
        if (prod != Poly::xn_minus_1(F, p))
            throw std::logic_error("char-p factorization failed verification");
        return fact;
    }

    const std::uint64_t q_mod = F.size() % p;
    fact.r = static_cast<unsigned>(nt::mult_order(q_mod, p));
    fact.s = (p - 1) / fact.r;

    // Splitting field and embedding of F into it.
    if (fact.r == 1) {
        fact.splitting = F;  // F already contains the p-th roots
    } else if (F.degree() == 1) {
        fact.splitting = Field::extension(F.ell(), fact.r);
        // Constants keep their packed value; no table needed.
    } else {
        // F = F_{ell^d} with d > 1 and roots outside F: embed via a root
        // of F's modulus located in the splitting field.
        const unsigned deg = F.degree() * fact.r;
        Field E = Field::extension(F.ell(), deg);
        if (E.size() > (1ull << 22))
            throw std::invalid_argument(
                "splitting field too large for embedded factorization");
        ff_t root = 0;
        bool found = false;
        for (ff_t x = 0; x < E.size(); ++x) {
            // Evaluate F's modulus at x inside E (coefficients are constants).
            ff_t acc = 0;
            for (std::size_t i = F.modulus().size(); i-- > 0;)
                acc = E.add(E.mul(acc, x), F.modulus()[i]);
            if (acc == 0) { root = x; found = true; break; }
        }
        if (!found) throw std::logic_error("modulus has no root in splitting field");
        fact.embed.assign(F.size(), 0);
        for (ff_t a = 0; a < F.size(); ++a) {
            ff_t acc = 0, xp = 1;
            auto digits = F.coeffs(a);
            for (unsigned i = 0; i < F.degree(); ++i) {
                acc = E.add(acc, E.mul(digits[i], xp));
                xp = E.mul(xp, root);
            }
            fact.embed[a] = acc;
        }
        fact.splitting = E;
    }

    // Fixed primitive p-th root of unity: the first x^((Q-1)/p) != 1 when
    // scanning packed values upward; deterministic across runs.
    const Field& E = fact.splitting;
    const std::uint64_t cof = (E.size() - 1) / p;
    if ((E.size() - 1) % p != 0)
        throw std::logic_error("splitting field misses the p-th roots");
    for (ff_t x = 2; x < E.size(); ++x) {
        ff_t y = E.pow(x, cof);
        if (y != 1) { fact.zeta = y; break; }
    }
    if (fact.zeta == 0) throw std::logic_error("no p-th root of unity found");
    fact.zeta_powers.resize(p);
    ff_t zp = 1;
    for (std::uint64_t j = 0; j < p; ++j) {
        fact.zeta_powers[j] = zp;
        zp = E.mul(zp, fact.zeta);
    }
    if (zp != 1) throw std::logic_error("zeta does not have order p");

    // One factor per cyclotomic coset.
    for (auto& coset : cyclotomic_cosets(q_mod, p)) {
        std::vector<ff_t> prod{1};  // over E, lowest degree first
        for (std::uint32_t j : coset) {
            // prod *= (X - zeta^j)
            const ff_t mroot = E.neg(fact.zeta_powers[j]);
            std::vector<ff_t> next(prod.size() + 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = E.add(next[i + 1], prod[i]);
                next[i] = E.add(next[i], E.mul(prod[i], mroot));
            }
            prod = std::move(next);
        }
        Poly f = pull_back(F, prod, fact.embed);
        if (f.deg() != static_cast<int>(coset.size()) || !f.is_monic())
            throw std::logic_error("coset factor has wrong shape");
        fact.factors.push_back(Factor{std::move(coset), std::move(f)});
    }

    if (fact.factors.size() != fact.s + 1)
        throw std::logic_error("unexpected factor count");

    // The product of all factors must reconstruct X^p - 1 exactly.
    Poly prod = Poly::one(F);
    for (const Factor& f : fact.factors) prod = prod * f.poly;
    if (prod != Poly::xn_minus_1(F, p))
        throw std::logic_error("factor product does not equal X^p - 1");

    return fact;
}

namespace {

// Multiplicity of (X - 1) in f, for the char-p degenerate mode.
std::uint64_t x_minus_1_multiplicity(const Factorization& fact, const RingElem& f) {
    const Field& F = fact.ring.field;
    Poly xm1(F, {F.neg(1), 1});
    Poly g = f.to_poly();
    std::uint64_t m = 0;
    while (!g.is_zero() && m < fact.ring.p) {
        auto [quo, rem] = g.divmod(xm1);
        if (!rem.is_zero()) break;
        g = quo;
        ++m;
    }
    return m;
}

}  // namespace

std::uint64_t zeros_count(const Factorization& fact, const RingElem& f) {
    if (f.ring() != fact.ring)
        throw std::invalid_argument("element does not belong to this ring");
    if (f.is_zero()) throw std::invalid_argument("zeros_count of zero element");

    if (fact.ring.char_p) return x_minus_1_multiplicity(fact, f);

    const Field& F = fact.ring.field;
    const Field& E = fact.splitting;
    const std::uint64_t p = fact.ring.p;

    // Route 1: degree of gcd(f, X^p - 1) over F.
    Poly g = poly_gcd(f.to_poly(), Poly::xn_minus_1(F, p));
    const std::uint64_t via_gcd = static_cast<std::uint64_t>(g.deg());

    // Route 2: count the roots of unity killed by f, in the splitting field.
    std::uint64_t via_eval = 0;
    const auto& c = f.coeffs();
    for (std::uint64_t j = 0; j < p; ++j) {
        const ff_t x = fact.zeta_powers[j];
        ff_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            acc = E.add(E.mul(acc, x), fact.embed_elem(c[i]));
        via_eval += (acc == 0);
    }

    if (via_gcd != via_eval)
        throw std::logic_error("zero-count routes disagree (gcd vs evaluation)");
    return via_gcd;
}

std::uint64_t ideal_dim(const Factorization& fact, const RingElem& f) {
    return fact.ring.p - zeros_count(fact, f);
}

std::vector<ff_t> dft(const Factorization& fact, const RingElem& f) {
    if (fact.ring.char_p)
        throw std::invalid_argument("dft undefined in characteristic p");
    if (f.ring() != fact.ring)
        throw std::invalid_argument("element does not belong to this ring");
    const Field& E = fact.splitting;
    const std::uint64_t p = fact.ring.p;
    const auto& c = f.coeffs();
    std::vector<ff_t> out(p);
    for (std::uint64_t j = 0; j < p; ++j) {
        // f(zeta^-j)
        const ff_t x = fact.zeta_powers[(p - j) % p];
        ff_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            acc = E.add(E.mul(acc, x), fact.embed_elem(c[i]));
        out[j] = acc;
    }
    return out;
}

std::vector<ff_t> idft_times_p(const Factorization& fact,
                               const std::vector<ff_t>& spectrum) {
    if (fact.ring.char_p)
        throw std::invalid_argument("dft undefined in characteristic p");
    const Field& E = fact.splitting;
    const std::uint64_t p = fact.ring.p;
    if (spectrum.size() != p)
        throw std::invalid_argument("spectrum must have length p");
    std::vector<ff_t> out(p);
    for (std::uint64_t i = 0; i < p; ++i) {
        // p * a_i = sum_j spectrum_j * zeta^{ij}
        ff_t acc = 0;
        for (std::uint64_t j = 0; j < p; ++j)
            acc = E.add(acc, E.mul(spectrum[j], fact.zeta_pow(i * j % p)));
        out[i] = acc;
    }
    return out;
}

}  // namespace cyclica
