#include "cyclica/field.hpp"

#include <stdexcept>
#include <string>

#include "cyclica/nt.hpp"

namespace cyclica {

namespace {

constexpr std::uint64_t kSizeBudget = 1ull << 62;
constexpr std::uint64_t kTableLimit = 1ull << 16;

void unpack(std::uint64_t v, std::uint64_t ell, unsigned r, std::uint64_t* out) {
    for (unsigned i = 0; i < r; ++i) { out[i] = v % ell; v /= ell; }
}

std::uint64_t pack(const std::uint64_t* c, std::uint64_t ell, unsigned r) {
    std::uint64_t v = 0;
    for (unsigned i = r; i-- > 0;) v = v * ell + c[i];
    return v;
}

// Remainder test for digit-vector polynomials over F_ell; den is monic.
bool divides(std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den,
             std::uint64_t ell) {
    const std::size_t d = den.size() - 1;
    while (num.size() > d) {
        std::uint64_t lead = num.back();
        if (lead != 0) {
            const std::size_t shift = num.size() - 1 - d;
            for (std::size_t j = 0; j < d; ++j) {
                // num[shift+j] -= lead * den[j]  (mod ell)
                std::uint64_t sub = lead * den[j] % ell;
                num[shift + j] = (num[shift + j] + ell - sub) % ell;
            }
        }
        num.pop_back();
    }
    for (std::uint64_t c : num)
        if (c != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint64_t>& mod, std::uint64_t ell) {
    const unsigned r = static_cast<unsigned>(mod.size() - 1);
    if (r == 1) return true;
    if (mod[0] == 0) return false;  // X divides
    // Trial division by every monic polynomial of degree <= r/2.
    for (unsigned d = 1; 2 * d <= r; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) {
            count *= ell;
            if (count > (1ull << 22))
                throw std::invalid_argument(
                    "irreducibility check: divisor space too large");
        }
        std::vector<std::uint64_t> den(d + 1);
        den[d] = 1;
        for (std::uint64_t t = 0; t < count; ++t) {
            unpack(t, ell, d, den.data());
            den[d] = 1;
            if (divides(mod, den, ell)) return false;
        }
    }
    return true;
}

}  // namespace

struct Field::Impl {
    std::uint64_t ell = 0;
    unsigned r = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;  // length r+1, monic
    // Discrete log accelerator for q <= 2^16; exp_ is doubled so that
    // exp_[la + lb] needs no reduction mod q-1.
    bool tabled = false;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;

    bool gf2() const { return ell == 2; }

    void check(ff_t a) const {
        if (a >= q)
            throw std::invalid_argument(
                "field element out of range (foreign or corrupt value)");
    }

    ff_t add_raw(ff_t a, ff_t b) const {
        if (gf2()) return a ^ b;
        if (r == 1) {
            ff_t s = a + b;
            return s >= q ? s - q : s;
        }
        std::uint64_t ca[64], cb[64];
        unpack(a, ell, r, ca);
        unpack(b, ell, r, cb);
        for (unsigned i = 0; i < r; ++i) {
            ca[i] += cb[i];
            if (ca[i] >= ell) ca[i] -= ell;
        }
        return pack(ca, ell, r);
    }

    ff_t neg_raw(ff_t a) const {
        if (gf2()) return a;
        if (r == 1) return a == 0 ? 0 : q - a;
        std::uint64_t c[64];
        unpack(a, ell, r, c);
        for (unsigned i = 0; i < r; ++i)
            if (c[i] != 0) c[i] = ell - c[i];
        return pack(c, ell, r);
    }

    // Schoolbook product with modulus reduction; no tables.
    ff_t mul_generic(ff_t a, ff_t b) const {
        if (a == 0 || b == 0) return 0;
        if (r == 1) return nt::mulmod(a, b, ell);
        if (gf2()) {
            // Carryless product of <= 61-bit operands, then reduce by the
            // monic modulus bit pattern.
            unsigned __int128 prod = 0, aa = a;
            std::uint64_t bb = b;
            while (bb) {
                if (bb & 1) prod ^= aa;
                aa <<= 1;
                bb >>= 1;
            }
            std::uint64_t mbits = pack(modulus.data(), 2, r + 1);
            for (int k = 2 * static_cast<int>(r) - 2; k >= static_cast<int>(r); --k) {
                if ((prod >> k) & 1) prod ^= static_cast<unsigned __int128>(mbits) << (k - r);
            }
            return static_cast<std::uint64_t>(prod);
        }
        std::uint64_t ca[64], cb[64], cc[128] = {0};
        unpack(a, ell, r, ca);
        unpack(b, ell, r, cb);
        for (unsigned i = 0; i < r; ++i) {
            if (ca[i] == 0) continue;
            for (unsigned j = 0; j < r; ++j)
                cc[i + j] = (cc[i + j] + ca[i] * cb[j]) % ell;
        }
        for (unsigned k = 2 * r - 2; k >= r; --k) {
            std::uint64_t lead = cc[k];
            if (lead) {
                cc[k] = 0;
                for (unsigned j = 0; j < r; ++j) {
                    std::uint64_t sub = lead * modulus[j] % ell;
                    cc[k - r + j] = (cc[k - r + j] + ell - sub) % ell;
                }
            }
            if (k == r) break;
        }
        return pack(cc, ell, r);
    }

    ff_t mul_raw(ff_t a, ff_t b) const {
        if (a == 0 || b == 0) return 0;
        if (tabled) return exp_[log_[a] + log_[b]];
        return mul_generic(a, b);
    }

    ff_t pow_raw(ff_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (tabled) {
            std::uint64_t le = nt::mulmod(log_[a], e % (q - 1), q - 1);
            return exp_[le];
        }
        ff_t acc = 1;
        while (e) {
            if (e & 1) acc = mul_raw(acc, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return acc;
    }

    ff_t inv_raw(ff_t a) const {
        if (a == 0) throw std::invalid_argument("division by zero field element");
        if (tabled) {
            std::uint32_t la = log_[a];
            return exp_[(q - 1) - la];
        }
        return pow_raw(a, q - 2);
    }

    void build_tables() {
        // Find a multiplicative generator by testing ascending candidates
        // against the prime factors of q-1, then tabulate its powers.
        auto fac = nt::factorize(q - 1);
        ff_t g = 0;
        for (ff_t cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (auto [p, e] : fac) {
                (void)e;
                if (pow_raw_generic(cand, (q - 1) / p) == 1) { ok = false; break; }
            }
            if (ok) { g = cand; break; }
        }
        if (g == 0) throw std::logic_error("no multiplicative generator found");
        exp_.assign(2 * (q - 1), 0);
        log_.assign(q, 0);
        ff_t x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            exp_[i + (q - 1)] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = mul_generic(x, g);
        }
        if (x != 1) throw std::logic_error("generator order mismatch");
        tabled = true;
    }

    ff_t pow_raw_generic(ff_t a, std::uint64_t e) const {
        ff_t acc = 1;
        while (e) {
            if (e & 1) acc = mul_generic(acc, a);
            a = mul_generic(a, a);
            e >>= 1;
        }
        return acc;
    }
};

Field::Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const Field::Impl& Field::I() const {
    if (!impl_) throw std::logic_error("operation on empty Field handle");
    return *impl_;
}

Field Field::with_modulus(std::uint64_t ell, std::vector<std::uint64_t> modulus) {
    if (!nt::is_prime(ell))
        throw std::invalid_argument("field characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (std::uint64_t c : modulus)
        if (c >= ell) throw std::invalid_argument("modulus coefficient out of range");
    const unsigned r = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (q > kSizeBudget / ell)
            throw std::invalid_argument("field size exceeds the 2^62 budget");
        q *= ell;
    }
    if (r > 1 && !is_irreducible(modulus, ell))
        throw std::invalid_argument("modulus is reducible");
    auto impl = std::make_shared<Impl>();
    impl->ell = ell;
    impl->r = r;
    impl->q = q;
    impl->modulus = std::move(modulus);
    if (q <= kTableLimit && q > 2) impl->build_tables();
    return Field(std::move(impl));
}

Field Field::prime_field(std::uint64_t ell) {
    return with_modulus(ell, {0, 1});
}

Field Field::extension(std::uint64_t ell, unsigned r) {
    if (r == 0) throw std::invalid_argument("extension degree must be >= 1");
    if (!nt::is_prime(ell))
        throw std::invalid_argument("field characteristic must be prime");
    if (r == 1) return prime_field(ell);
    std::uint64_t span = 1;  // ell^r, also the candidate count
    for (unsigned i = 0; i < r; ++i) {
        if (span > kSizeBudget / ell)
            throw std::invalid_argument("field size exceeds the 2^62 budget");
        span *= ell;
    }
    std::vector<std::uint64_t> cand(r + 1);
    for (std::uint64_t k = 0; k < span; ++k) {
        unpack(k, ell, r, cand.data());
        cand[r] = 1;
        if (cand[0] == 0) continue;  // divisible by X
        if (is_irreducible(cand, ell)) return with_modulus(ell, cand);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::uint64_t Field::ell() const { return I().ell; }
unsigned Field::degree() const { return I().r; }
std::uint64_t Field::size() const { return I().q; }
const std::vector<std::uint64_t>& Field::modulus() const { return I().modulus; }

bool Field::operator==(const Field& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->ell == o.impl_->ell && impl_->modulus == o.impl_->modulus;
}

ff_t Field::add(ff_t a, ff_t b) const {
    I().check(a);
    I().check(b);
    return I().add_raw(a, b);
}

ff_t Field::sub(ff_t a, ff_t b) const {
    I().check(a);
    I().check(b);
    return I().add_raw(a, I().neg_raw(b));
}

ff_t Field::neg(ff_t a) const {
    I().check(a);
    return I().neg_raw(a);
}

ff_t Field::mul(ff_t a, ff_t b) const {
    I().check(a);
    I().check(b);
    return I().mul_raw(a, b);
}

ff_t Field::inv(ff_t a) const {
    I().check(a);
    return I().inv_raw(a);
}

ff_t Field::div(ff_t a, ff_t b) const {
    I().check(a);
    I().check(b);
    return I().mul_raw(a, I().inv_raw(b));
}

ff_t Field::pow(ff_t a, std::uint64_t e) const {
    I().check(a);
    return I().pow_raw(a, e);
}

ff_t Field::from_int(std::uint64_t n) const { return n % I().ell; }

ff_t Field::from_coeffs(const std::vector<std::uint64_t>& c) const {
    if (c.size() > I().r)
        throw std::invalid_argument("coefficient vector longer than degree");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= I().ell)
            throw std::invalid_argument("coefficient out of range");
        v = v * I().ell + c[i];
    }
    return v;
}

std::vector<std::uint64_t> Field::coeffs(ff_t a) const {
    I().check(a);
    std::vector<std::uint64_t> c(I().r);
    unpack(a, I().ell, I().r, c.data());
    return c;
}

ff_t Field::frobenius(ff_t a) const { return pow(a, I().ell); }

ff_t Field::trace(ff_t a) const {
    I().check(a);
    ff_t acc = a, t = a;
    for (unsigned i = 1; i < I().r; ++i) {
        t = I().pow_raw(t, I().ell);
        acc = I().add_raw(acc, t);
    }
    if (acc >= I().ell)
        throw std::logic_error("trace left the prime subfield");
    return acc;
}

std::uint64_t Field::element_order(ff_t a) const {
    I().check(a);
    if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
    std::uint64_t ord = I().q - 1;
    for (auto [p, e] : nt::factorize(ord)) {
        (void)e;
        while (ord % p == 0 && I().pow_raw(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

Field field_of_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    auto fs = nt::factorize(q);
    if (fs.size() != 1)
        throw std::invalid_argument("field order must be a prime power");
    auto [ell, r] = fs[0];
    return r == 1 ? Field::prime_field(ell)
                  : Field::extension(ell, static_cast<unsigned>(r));
}

}  // namespace cyclica
