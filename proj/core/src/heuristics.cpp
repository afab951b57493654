#include "cyclica/heuristics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cyclica/ideals.hpp"
#include "cyclica/nt.hpp"
#include "cyclica/primes.hpp"

namespace cyclica {

namespace {

void require_unit_interval(double x, const char* name) {
    if (!(x > 0.0) || x >= 1.0)
        throw std::invalid_argument(std::string(name) +
                                    " must lie in (0, 1)");
}

double log2_mpz(const mpz_class& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + double(exp);
}

// floor(delta * p), nudged so a delta entered as a ratio of small
// integers (3/7, 1/10) lands on the intended integer despite the
// representation error of the division.
std::uint64_t sphere_radius(std::uint64_t p, double delta) {
    double r = std::floor(delta * double(p) + 1e-9);
    if (r < 0) return 0;
    if (r > double(p)) return p;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

Entropy entropy(double delta) {
    require_unit_interval(delta, "delta");
    Entropy e;
    e.h = -delta * std::log(delta) - (1.0 - delta) * std::log(1.0 - delta);
    e.h_prime = e.h / std::log(2.0);
    return e;
}

EntropyReport sphere_size(std::uint64_t p, double delta) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    require_unit_interval(delta, "delta");

    EntropyReport rep;
    rep.p = p;
    rep.delta = delta;
    rep.radius = sphere_radius(p, delta);
    rep.h_prime = entropy(delta).h_prime;

    mpz_class binom;
    for (std::uint64_t j = 1; j <= rep.radius; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), p, j);
        rep.exact_count += binom;
    }
    mpz_bin_uiui(binom.get_mpz_t(), p, rep.radius);
    rep.lower = binom;
    rep.upper = binom * static_cast<unsigned long>(p);
    rep.log2_count = log2_mpz(rep.exact_count);

    // Up to radius p/2 the top binomial dominates every earlier term, so
    // the sum is sandwiched between it and p times it.
    if (rep.radius >= 1 && 2 * rep.radius <= p &&
        !(rep.lower <= rep.exact_count && rep.exact_count <= rep.upper))
        throw std::logic_error("binomial sandwich violated");
    return rep;
}

double expected_intersection(std::uint64_t p, double eta, double delta) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    require_unit_interval(eta, "eta");
    return double(p) * (entropy(delta).h_prime - (1.0 - eta));
}

ExperimentReport random_ideal_experiment(std::uint64_t p, double eta,
                                         double delta,
                                         std::uint64_t samples,
                                         std::uint64_t seed) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    require_unit_interval(eta, "eta");
    require_unit_interval(delta, "delta");

    Field F2 = Field::prime_field(2);
    auto fact =
        std::make_shared<const Factorization>(factorize_xp1(make_ring(F2, p)));

    // Closest nonzero ideal to dim = eta*p; the stream walks subsets
    // in ascending mask order, so keeping strict improvements only
    // resolves ties toward the smallest subset.
    const double target = eta * double(p);
    IdealStream stream(fact);
    IdealDescriptor best;
    double best_gap = std::numeric_limits<double>::infinity();
    while (auto d = stream.next()) {
        if (d->dim == 0) continue;
        double gap = std::abs(double(d->dim) - target);
        if (gap < best_gap) {
            best_gap = gap;
            best = *d;
        }
    }
    if (best_gap > double(fact->r))
        throw std::invalid_argument("no ideal with dimension near eta*p");

    CyclicCode code = code_from_ideal(best);
    DistanceOptions opt;
    opt.trials = samples;
    opt.seed = seed;
    DistanceResult res = min_distance_upper(code, opt);

    ExperimentReport rep;
    rep.seed = seed;
    rep.p = p;
    rep.eta = eta;
    rep.delta = delta;
    rep.dim = best.dim;
    rep.mask = best.mask();
    rep.samples = samples;
    rep.min_weight = res.distance;
    rep.threshold = delta * double(p);
    rep.verdict = double(rep.min_weight) > rep.threshold;
    rep.low_confidence = samples == 0;
    return rep;
}

WeakUpReport weak_up_expectation(std::uint64_t p) {
    if (!nt::is_prime(p) || p < 3)
        throw std::invalid_argument("p must be an odd prime");
    const std::uint64_t half = (p - 1) / 2;
    if (ord_mod(2, p) != half)
        throw std::invalid_argument("needs ord_p(2) = (p-1)/2");

    Field F2 = Field::prime_field(2);
    auto fact =
        std::make_shared<const Factorization>(factorize_xp1(make_ring(F2, p)));

    WeakUpReport rep;
    rep.p = p;
    rep.half = half;

    // Multiples of one irreducible degree-(p-1)/2 factor form the ideal
    // it generates; count through the classified dimension.
    std::size_t idx = 0;
    while (idx < fact->factors.size() &&
           fact->factors[idx].poly.deg() != static_cast<int>(half))
        ++idx;
    if (idx == fact->factors.size())
        throw std::logic_error("no factor of degree (p-1)/2 found");
    rep.factor_deg = half;
    IdealDescriptor ideal = ideal_from_generator(fact, fact->factors[idx].poly);
    mpz_ui_pow_ui(rep.multiples.get_mpz_t(), 2, ideal.dim);

    rep.sphere = sphere_size(p, 0.1).exact_count;
    rep.exponent =
        log2_mpz(rep.multiples) + log2_mpz(rep.sphere) - double(p);
    rep.predicted = double(p) * (entropy(0.1).h_prime - 0.5);
    return rep;
}

std::vector<QrStudyRow> qr_distance_study(std::uint64_t p_max,
                                          const DistanceOptions& options) {
    std::vector<QrStudyRow> rows;
    for (std::uint64_t p = 7; p <= p_max; ++p) {
        if (!nt::is_prime(p)) continue;
        if (p % 8 != 1 && p % 8 != 7) continue;
        if (2 * ord_mod(2, p) != p - 1) continue;
        CyclicCode code = quadratic_residue_code(p);
        DistanceResult res = min_distance_auto(code, options);
        QrStudyRow row;
        row.p = p;
        row.k = code.k;
        row.d = res.distance;
        row.exact = res.exact;
        row.ratio = double(res.distance) / double(p);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cyclica
