#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cyclica/field.hpp"
#include "cyclica/ring.hpp"
#include "cyclica/uncertainty.hpp"

using namespace cyclica;

namespace {

// Oracle: annihilator of offset + <basis> by brute-force enumeration of
// the affine points and a dense product of linear factors.
Poly naive_affine_annihilator(const Field& E, const std::vector<ff_t>& basis,
                              ff_t offset) {
    std::vector<ff_t> pts{0};
    for (ff_t b : basis) {
        std::size_t sz = pts.size();
        for (std::size_t i = 0; i < sz; ++i)
            pts.push_back(E.add(pts[i], b));
    }
    Poly f = Poly::one(E);
    for (ff_t v : pts)
        f = f * Poly(E, {E.neg(E.add(v, offset)), 1});
    return f;
}

// Oracle: multiplicity of (X - 1) in f over F_p via the shift f(Y + 1);
// the multiplicity is the lowest nonvanishing coefficient of the shift.
std::uint64_t multiplicity_by_shift(const RingElem& f) {
    const Field& F = f.ring().field;
    const std::uint64_t p = f.ring().p;
    const auto& a = f.coeffs();
    // b_j = sum_i C(i,j) a_i, Pascal row by row.
    std::vector<ff_t> b(p, 0);
    std::vector<ff_t> binom(p, 0);
    for (std::uint64_t i = 0; i < p; ++i) {
        binom[i] = 1;  // C(i,i)
        for (std::uint64_t j = i - 1; j + 1 > 1; --j)
            binom[j] = F.add(binom[j], binom[j - 1]);
        binom[0] = 1;
        if (a[i] == 0) continue;
        for (std::uint64_t j = 0; j <= i; ++j)
            b[j] = F.add(b[j], F.mul(a[i], binom[j]));
    }
    std::uint64_t m = 0;
    while (m < p && b[m] == 0) ++m;
    return m;
}

// Independent recount of mu(f) = wt(f) + (p - #spectrum zeros), reading
// the spectrum off the transform rather than the gcd machinery.
std::uint64_t mu_recount(const Factorization& fact, const RingElem& f) {
    auto spec = dft(fact, f);
    std::uint64_t zeros = std::count(spec.begin(), spec.end(), ff_t{0});
    return f.weight() + (fact.ring.p - zeros);
}

std::uint64_t eval_at_zeta(const Factorization& fact, const RingElem& f,
                           std::uint64_t j) {
    const Field& E = fact.splitting;
    ff_t acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = E.add(E.mul(acc, fact.zeta_pow(j)), fact.embed_elem(c[i]));
    return acc;
}

std::uint64_t det_mod_field(const Field& F,
                            std::vector<std::vector<ff_t>> m) {
    const std::size_t n = m.size();
    ff_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = F.neg(det);
        }
        det = F.mul(det, m[k][k]);
        ff_t inv = F.inv(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            ff_t f = F.mul(m[i][k], inv);
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[k][j]));
        }
    }
    return det;
}

// Transplants a witness with prime-subfield coefficients into the ring
// over a larger field containing the same roots of unity and recounts.
std::uint64_t mu_transport(const Field& big, std::uint64_t p,
                           const RingElem& witness) {
    Ring R = make_ring(big, p);
    Factorization fact = factorize_xp1(R);
    RingElem moved(R, witness.coeffs());
    return mu_recount(fact, moved);
}

}  // namespace

TEST_CASE("subspace annihilator matches the naive product") {
    Field F16 = Field::extension(2, 4);
    std::vector<std::vector<ff_t>> bases{{2}, {2, 4}, {2, 4, 8},
                                         {1, 2, 4, 8}};
    for (const auto& basis : bases)
        for (ff_t offset : {ff_t{0}, ff_t{1}, ff_t{9}}) {
            Poly got = ore_subspace_poly(F16, basis, offset);
            Poly want = naive_affine_annihilator(F16, basis, offset);
            CHECK(got.coeffs() == want.coeffs());
            CHECK(got.weight() <= basis.size() + 2);
            CHECK(got.deg() == static_cast<int>(1u << basis.size()));
            CHECK(got.is_monic());
        }

    Field F8 = Field::extension(2, 3);
    CHECK(ore_subspace_poly(F8, {3, 5}, 6).coeffs() ==
          naive_affine_annihilator(F8, {3, 5}, 6).coeffs());
}

TEST_CASE("subspace annihilator validation") {
    Field F8 = Field::extension(2, 3);
    // 6 = 2 + 4 in packed coordinates: dependent.
    CHECK_THROWS_AS(ore_subspace_poly(F8, {2, 4, 6}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ore_subspace_poly(F8, {2, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(ore_subspace_poly(F8, {0}, 0), std::invalid_argument);
    Field F4 = Field::extension(2, 2);
    CHECK_THROWS_AS(ore_subspace_poly(F4, {1, 2, 3}, 0),
                    std::invalid_argument);
    Field F3 = Field::prime_field(3);
    CHECK_THROWS_AS(ore_subspace_poly(F3, {1}, 0), std::invalid_argument);
}

TEST_CASE("mu: enumeration and ideal reduction agree") {
    struct Case {
        std::uint64_t ell;
        unsigned r;
        std::uint64_t p;
        std::uint64_t mu;
    };
    // Primitive-root cases sit at p + 1; (2,1,7) and (2,3,7) dip to p.
    std::vector<Case> cases{{2, 1, 3, 4},  {2, 1, 5, 6}, {2, 1, 7, 7},
                            {2, 1, 11, 12}, {3, 1, 5, 6}, {3, 1, 7, 8},
                            {2, 3, 7, 7}};
    for (const auto& c : cases) {
        MuReport via_sweep = mu_bruteforce(c.ell, c.r, c.p);
        MuReport via_ideals = mu_via_ideals(c.ell, c.r, c.p);
        CHECK(via_sweep.mu == c.mu);
        CHECK(via_ideals.mu == c.mu);
        CHECK(!via_sweep.upper_bound_only);
        CHECK(!via_ideals.upper_bound_only);
        CHECK(via_sweep.method == "bruteforce");
        CHECK(via_ideals.method == "ideal_reduction");

        // Both witnesses recount to mu on the transform route.
        Field F = c.r == 1 ? Field::prime_field(c.ell)
                           : Field::extension(c.ell, c.r);
        Factorization fact = factorize_xp1(make_ring(F, c.p));
        CHECK(mu_recount(fact, via_sweep.witness) == c.mu);
        CHECK(mu_recount(fact, via_ideals.witness) == c.mu);
    }
}

TEST_CASE("mu: threading does not change the sweep answer") {
    MuReport seq = mu_bruteforce(2, 1, 11, 1);
    MuReport par = mu_bruteforce(2, 1, 11, 3);
    CHECK(seq.mu == par.mu);
    CHECK(seq.witness.coeffs() == par.witness.coeffs());
}

TEST_CASE("mu: pinned values at 17 and 23") {
    CHECK(mu_via_ideals(2, 1, 17).mu == 14);
    CHECK(mu_bruteforce(2, 1, 17).mu == 14);
    CHECK(mu_via_ideals(2, 1, 23).mu == 19);
    CHECK(mu_bruteforce(2, 1, 23, 4).mu == 19);
}

TEST_CASE("mu: budget exhaustion degrades to a flagged upper bound") {
    DistanceOptions opt;
    opt.budget = 1u << 8;
    MuReport rep = mu_via_ideals(2, 1, 17, opt);
    CHECK(rep.upper_bound_only);
    CHECK(rep.mu >= 14);  // the true minimum
    CHECK(rep.mu <= 18);  // p + 1 is always achieved by ideal dim p
    Factorization fact = factorize_xp1(make_ring(Field::prime_field(2), 17));
    CHECK(mu_recount(fact, rep.witness) <= rep.mu);
}

TEST_CASE("mu: monotone under field extension via witness transport") {
    MuReport base = mu_bruteforce(2, 1, 7);
    MuReport ext = mu_bruteforce(2, 3, 7);
    CHECK(ext.mu <= base.mu);
    // The F_2 witness embeds coefficient-wise into F_8 with the same
    // weight and the same spectrum, so it recounts to the same value.
    CHECK(mu_transport(Field::extension(2, 3), 7, base.witness) == base.mu);
}

TEST_CASE("characteristic p: chain ring has mu = p + 1") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        CharPReport rep = verify_char_p(p);
        CHECK(rep.claim_holds);
        CHECK(rep.mu == p + 1);
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < p; ++i) total *= p;
        CHECK(rep.checked == total - 1);
        CHECK(rep.report.witness.weight() +
                  ideal_dim(factorize_xp1(make_ring(Field::prime_field(p), p)),
                            rep.report.witness) ==
              p + 1);
    }
    CHECK_THROWS_AS(verify_char_p(11), std::invalid_argument);
    CHECK_THROWS_AS(verify_char_p(4), std::invalid_argument);
}

TEST_CASE("characteristic p: multiplicity agrees with the shift oracle") {
    Field F7 = Field::prime_field(7);
    Ring R = make_ring(F7, 7);
    Factorization fact = factorize_xp1(R);
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        std::vector<ff_t> c(7);
        bool nonzero = false;
        for (auto& v : c) {
            v = rng() % 7;
            nonzero = nonzero || v;
        }
        if (!nonzero) c[3] = 1;
        RingElem f(R, c);
        CHECK(zeros_count(fact, f) == multiplicity_by_shift(f));
    }
    // Both mu routes agree through the chain-ring path too.
    CHECK(mu_bruteforce(3, 1, 3).mu == 4);
    CHECK(mu_via_ideals(3, 1, 3).mu == 4);
    CHECK(mu_via_ideals(5, 1, 5).mu == 6);
}

TEST_CASE("primitive root case: exactly three ideals, all at p + 1") {
    struct Case {
        std::uint64_t ell, p;
    };
    for (auto [ell, p] : {Case{2, 5}, Case{2, 11}, Case{2, 13}, Case{3, 7}}) {
        PrimitiveRootReport rep = verify_primitive_root_case(ell, p);
        CHECK(rep.holds);
        CHECK(rep.mu == p + 1);
        REQUIRE(rep.cases.size() == 3);
        CHECK(rep.cases[0].dim == 1);
        CHECK(rep.cases[0].distance == p);
        CHECK(rep.cases[1].dim == p - 1);
        CHECK(rep.cases[1].distance == 2);
        CHECK(rep.cases[2].dim == p);
        CHECK(rep.cases[2].distance == 1);
        for (const auto& c : rep.cases) CHECK(c.mu_term == p + 1);
    }
    // ord_7(2) = 3: not a generator.
    CHECK_THROWS_AS(verify_primitive_root_case(2, 7), std::invalid_argument);
}

TEST_CASE("trace construction pushes mu to p at (2,7)") {
    TraceReport rep = trace_counterexample(2, 7);
    CHECK(rep.trace_r == 3);
    CHECK(rep.fiber_counts.size() == 2);
    CHECK(rep.fiber_counts[0] + rep.fiber_counts[1] == 7);
    CHECK(rep.max_fiber >= 4);
    CHECK(rep.bound == doctest::Approx(7.5));
    CHECK(rep.counterexample_regime);
    CHECK(rep.report.mu == 7);
    CHECK(rep.report.upper_bound_only);

    Factorization fact = factorize_xp1(make_ring(Field::prime_field(2), 7));
    CHECK(mu_recount(fact, rep.report.witness) == 7);
    // Same coefficients over F_8 certify mu <= 7 there as well.
    CHECK(mu_transport(Field::extension(2, 3), 7, rep.report.witness) == 7);
}

TEST_CASE("trace construction at (2,17) certifies mu <= 17 over F_256") {
    TraceReport rep = trace_counterexample(2, 17);
    CHECK(rep.trace_r == 8);
    CHECK(rep.max_fiber >= 9);
    CHECK(rep.bound == doctest::Approx(17.5));
    CHECK(rep.counterexample_regime);
    CHECK(rep.report.mu <= 17);

    Factorization fact = factorize_xp1(make_ring(Field::prime_field(2), 17));
    CHECK(mu_recount(fact, rep.report.witness) == rep.report.mu);
    // F_256 contains the 17th roots of unity; the transported witness
    // certifies mu over F_256 at or below floor(p + 1 + r - p/q) = 17.
    CHECK(mu_transport(Field::extension(2, 8), 17, rep.report.witness) ==
          rep.report.mu);
}

TEST_CASE("trace construction beyond char 2") {
    TraceReport rep = trace_counterexample(3, 13);
    CHECK(rep.trace_r == 3);
    CHECK(rep.fiber_counts.size() == 3);
    CHECK(rep.max_fiber >= 5);
    CHECK(rep.report.mu <= 12);  // floor of 13 + 1 + 3 - 13/3
    CHECK(rep.counterexample_regime);

    CHECK_THROWS_AS(trace_counterexample(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(trace_counterexample(4, 7), std::invalid_argument);
}

TEST_CASE("mersenne constructions hit their shape targets") {
    struct Case {
        unsigned n, k;
    };
    for (auto [n, k] : {Case{3, 1}, Case{5, 2}, Case{7, 3}}) {
        MersenneReport rep = mersenne_counterexample(n, k);
        const std::uint64_t p = (1ull << n) - 1;
        CHECK(rep.deg == (1ull << n) - (1ull << (n - k)));
        CHECK(rep.deg < p);
        std::uint64_t bound = 1;
        for (unsigned i = 0; i < k; ++i) bound *= n + 1;
        CHECK(rep.wt_bound == bound);
        CHECK(rep.wt <= bound);
        CHECK(rep.dim == (1ull << (n - k)) - 1);
        CHECK(rep.report.mu == rep.wt + rep.dim);
        CHECK(rep.report.upper_bound_only);
        CHECK(rep.report.witness.weight() == rep.wt);
    }
    // (3,1) lands at mu = 7 <= p: a genuine dip below p + 1.
    CHECK(mersenne_counterexample(3, 1).report.mu <= 7);

    CHECK_THROWS_AS(mersenne_counterexample(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(mersenne_counterexample(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(mersenne_counterexample(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mersenne_counterexample(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(mersenne_counterexample(14, 1), std::invalid_argument);
}

TEST_CASE("uncertainty equivalence over F_8 at p = 7") {
    Field F8 = Field::extension(2, 3);
    EquivalenceReport rep = up_equivalence_check(7, F8);
    CHECK(rep.q == 8);
    CHECK(rep.mu == 7);
    CHECK(rep.minor_vanished);
    CHECK(rep.consistent);
    // 1x1 minors are roots of unity and 2x2 minors reduce to
    // zeta^a - zeta^b with a != b, so the first vanish needs size >= 3.
    REQUIRE(rep.minor_rows.size() >= 3);
    REQUIRE(rep.minor_rows.size() == rep.minor_cols.size());

    // Recheck the flagged minor and the reconstructed element directly.
    Factorization fact = factorize_xp1(make_ring(F8, 7));
    const std::size_t k = rep.minor_rows.size();
    std::vector<std::vector<ff_t>> m(k, std::vector<ff_t>(k));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            m[x][y] = fact.zeta_pow(std::uint64_t(rep.minor_rows[x]) *
                                    rep.minor_cols[y]);
    CHECK(det_mod_field(F8, m) == 0);

    CHECK(!rep.constructed.is_zero());
    CHECK(rep.constructed_mu <= 7);
    CHECK(mu_recount(fact, rep.constructed) == rep.constructed_mu);
    auto supp = rep.constructed.support();
    CHECK(std::includes(rep.minor_cols.begin(), rep.minor_cols.end(),
                        supp.begin(), supp.end()));
    for (auto b : rep.minor_rows)
        CHECK(eval_at_zeta(fact, rep.constructed, b) == 0);
}

TEST_CASE("uncertainty equivalence certifies clean cases") {
    EquivalenceReport small = up_equivalence_check(3, Field::extension(2, 2));
    CHECK(small.mu == 4);
    CHECK(!small.minor_vanished);
    CHECK(small.minors_checked == 9 + 9 + 1);
    CHECK(small.consistent);

    EquivalenceReport f11 = up_equivalence_check(5, Field::prime_field(11));
    CHECK(f11.consistent);
    CHECK((f11.mu <= 5) == f11.minor_vanished);
    if (!f11.minor_vanished) CHECK(f11.minors_checked == 251);

    CHECK_THROWS_AS(up_equivalence_check(5, Field::extension(2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(up_equivalence_check(6, Field::prime_field(7)),
                    std::invalid_argument);
}

TEST_CASE("support product bound, exhaustively") {
    DsReport a = donoho_stark_exhaustive(2, 1, 7);
    CHECK(a.holds);
    CHECK(a.checked == 127);
    CHECK(a.min_product == 7);  // all-ones: wt 7, single spectrum line

    DsReport b = donoho_stark_exhaustive(3, 1, 5);
    CHECK(b.holds);
    CHECK(b.checked == 242);
    CHECK(b.min_product == 5);

    DsReport c = donoho_stark_exhaustive(2, 3, 7);
    CHECK(c.holds);
    CHECK(c.checked == (1ull << 21) - 1);
    CHECK(c.min_product == 7);

    CHECK_THROWS_AS(donoho_stark_exhaustive(7, 1, 7), std::invalid_argument);
}

TEST_CASE("support product bound, sampled") {
    DsReport a = donoho_stark_random(2, 1, 23, 3000, 9);
    CHECK(a.holds);
    CHECK(a.checked == 3000);
    CHECK(a.min_product >= 23);
    DsReport b = donoho_stark_random(2, 1, 23, 3000, 9);
    CHECK(b.min_product == a.min_product);
    CHECK(b.argmin.coeffs() == a.argmin.coeffs());
}
