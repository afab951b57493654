#include "cyclica/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cyclica/errors.hpp"

namespace cyclica {

namespace {

void require_semisimple(const std::shared_ptr<const Factorization>& fact) {
    if (!fact) throw std::invalid_argument("null factorization");
    if (fact->ring.char_p)
        throw std::invalid_argument(
            "ideal lattice requires gcd(|F|, p) = 1; the characteristic-p "
            "ring is a chain, not a subset lattice");
}

std::uint64_t factor_degree(const Factorization& fact, std::uint32_t i) {
    return static_cast<std::uint64_t>(fact.factors[i].poly.deg());
}

}  // namespace

Poly IdealDescriptor::generator() const {
    require_semisimple(fact);
    std::vector<bool> in(fact->factors.size(), false);
    for (auto i : present) in[i] = true;
    Poly g = Poly::one(fact->ring.field);
    for (std::size_t i = 0; i < fact->factors.size(); ++i)
        if (!in[i]) g = g * fact->factors[i].poly;
    if (!g.is_monic() ||
        static_cast<std::uint64_t>(g.deg()) != fact->ring.p - dim)
        throw std::logic_error("ideal generator failed its degree check");
    return g;
}

std::uint64_t IdealDescriptor::mask() const {
    if (fact->factors.size() > 63)
        throw std::logic_error("too many factors for a 64-bit subset mask");
    std::uint64_t m = 0;
    for (auto i : present) m |= 1ull << i;
    return m;
}

IdealStream::IdealStream(std::shared_ptr<const Factorization> fact)
    : fact_(std::move(fact)) {
    require_semisimple(fact_);
    std::size_t nf = fact_->factors.size();
    if (nf > 62)
        throw BudgetExceeded(
            "ideal lattice has 2^" + std::to_string(nf) +
            " subsets; enumerate by sampling instead");
    total_ = 1ull << nf;
}

std::optional<IdealDescriptor> IdealStream::next() {
    if (done_) return std::nullopt;
    IdealDescriptor d = ideal_from_mask(fact_, mask_);
    if (++mask_ == total_) done_ = true;
    return d;
}

IdealDescriptor ideal_from_mask(std::shared_ptr<const Factorization> fact,
                                std::uint64_t mask) {
    require_semisimple(fact);
    std::size_t nf = fact->factors.size();
    if (nf > 63 || mask >= (1ull << nf))
        throw std::invalid_argument("subset mask out of range");
    IdealDescriptor d;
    d.fact = fact;
    for (std::uint32_t i = 0; i < nf; ++i)
        if (mask >> i & 1) {
            d.present.push_back(i);
            d.dim += factor_degree(*fact, i);
        }
    return d;
}

IdealDescriptor ideal_from_present(std::shared_ptr<const Factorization> fact,
                                   std::vector<std::uint32_t> present) {
    require_semisimple(fact);
    std::sort(present.begin(), present.end());
    if (std::adjacent_find(present.begin(), present.end()) != present.end())
        throw std::invalid_argument("duplicate factor index");
    if (!present.empty() && present.back() >= fact->factors.size())
        throw std::invalid_argument("factor index out of range");
    IdealDescriptor d;
    d.fact = fact;
    d.present = std::move(present);
    for (auto i : d.present) d.dim += factor_degree(*fact, i);
    return d;
}

IdealDescriptor ideal_from_generator(std::shared_ptr<const Factorization> fact,
                                     const Poly& g) {
    require_semisimple(fact);
    if (!(g.field() == fact->ring.field))
        throw std::invalid_argument("generator lives in the wrong field");
    const std::uint64_t p = fact->ring.p;
    Poly gf = g.fold_mod_xn_minus_1(p);
    if (gf.is_zero()) return ideal_from_mask(fact, 0);

    IdealDescriptor d;
    d.fact = fact;
    for (std::uint32_t i = 0; i < fact->factors.size(); ++i) {
        if (!(gf % fact->factors[i].poly).is_zero()) {
            d.present.push_back(i);
            d.dim += factor_degree(*fact, i);
        }
    }
    // Independent route: the factors dividing g are exactly the factors of
    // gcd(g, X^p - 1), so the degrees must account for p - dim.
    Poly common = poly_gcd(gf, Poly::xn_minus_1(fact->ring.field, p));
    if (static_cast<std::uint64_t>(common.deg()) != p - d.dim)
        throw std::logic_error(
            "factor divisibility and gcd degree disagree on the ideal");
    return d;
}

IdealDescriptor ideal_from_element(std::shared_ptr<const Factorization> fact,
                                   const RingElem& f) {
    return ideal_from_generator(fact, f.to_poly());
}

bool ideal_contains(const IdealDescriptor& a, const IdealDescriptor& b) {
    if (a.fact.get() != b.fact.get() &&
        !(a.fact->ring.field == b.fact->ring.field &&
          a.fact->ring.p == b.fact->ring.p))
        throw std::invalid_argument("ideals from different rings");
    return std::includes(a.present.begin(), a.present.end(),
                         b.present.begin(), b.present.end());
}

std::vector<IdealDescriptor> ideals_in_dim_range(
    std::shared_ptr<const Factorization> fact, std::uint64_t lo,
    std::uint64_t hi, std::uint64_t budget, bool unbounded) {
    IdealStream stream(fact);
    if (!unbounded && stream.total() > budget)
        throw BudgetExceeded("ideal lattice of " +
                             std::to_string(stream.total()) +
                             " subsets exceeds the enumeration budget");
    std::vector<IdealDescriptor> out;
    while (auto d = stream.next())
        if (lo <= d->dim && d->dim < hi) out.push_back(std::move(*d));
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ideal_dim_census(
    std::shared_ptr<const Factorization> fact) {
    require_semisimple(fact);
    // Coefficient vector of prod_i (1 + y^{deg_i}) indexed by dimension.
    std::vector<std::uint64_t> count(fact->ring.p + 1, 0);
    count[0] = 1;
    for (std::size_t i = 0; i < fact->factors.size(); ++i) {
        std::uint64_t d = factor_degree(*fact, static_cast<std::uint32_t>(i));
        for (std::uint64_t k = fact->ring.p; k + 1 > d; --k) {
            if (count[k - d] == 0) continue;
            if (count[k] > ~count[k - d])
                throw std::overflow_error("ideal census overflows 64 bits");
            count[k] += count[k - d];
        }
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t k = 0; k <= fact->ring.p; ++k)
        if (count[k]) out.emplace_back(k, count[k]);
    return out;
}

std::vector<IdealDescriptor> sample_ideals_in_dim_range(
    std::shared_ptr<const Factorization> fact, std::uint64_t lo,
    std::uint64_t hi, std::uint64_t count, std::uint64_t seed) {
    require_semisimple(fact);
    const std::uint64_t r = fact->r, s = fact->s;

    // dim = b + a*r with b in {0,1} (is X - 1 present) and a nontrivial
    // factors chosen from s.  Weight each (b, a) cell by C(s, a) so the
    // draw is uniform over all ideals in the window; log-space keeps the
    // weights finite for large s.
    struct Cell {
        std::uint32_t b;
        std::uint64_t a;
        double logw;
    };
    std::vector<Cell> cells;
    double logmax = -1e300;
    for (std::uint32_t b = 0; b <= 1; ++b)
        for (std::uint64_t a = 0; a <= s; ++a) {
            std::uint64_t dim = b + a * r;
            if (dim < lo || dim >= hi) continue;
            double logw = std::lgamma(double(s) + 1) -
                          std::lgamma(double(a) + 1) -
                          std::lgamma(double(s - a) + 1);
            cells.push_back({b, a, logw});
            logmax = std::max(logmax, logw);
        }
    if (cells.empty())
        throw std::invalid_argument("no ideal dimension in [lo, hi)");

    std::vector<double> weights;
    for (auto& c : cells) weights.push_back(std::exp(c.logw - logmax));
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                 weights.end());

    std::vector<std::uint32_t> pool(s);
    std::iota(pool.begin(), pool.end(), 1u);  // nontrivial factor indices
    std::vector<IdealDescriptor> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        const Cell& c = cells[pick(rng)];
        // Partial Fisher-Yates: the first `a` entries become the sample.
        for (std::uint64_t j = 0; j < c.a; ++j) {
            std::uniform_int_distribution<std::uint64_t> u(j, s - 1);
            std::swap(pool[j], pool[u(rng)]);
        }
        std::vector<std::uint32_t> present(pool.begin(), pool.begin() + c.a);
        if (c.b) present.push_back(0);
        out.push_back(ideal_from_present(fact, std::move(present)));
    }
    return out;
}

}  // namespace cyclica
