#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

#include "cyclica/codes.hpp"
#include "cyclica/heuristics.hpp"

using namespace cyclica;

namespace {

// Pascal-triangle accumulation, independent of mpz_bin_uiui.
mpz_class pascal_sphere(std::uint64_t p, std::uint64_t radius) {
    std::vector<mpz_class> row{1};
    for (std::uint64_t i = 1; i <= p; ++i) {
        std::vector<mpz_class> next(i + 1, 1);
        for (std::uint64_t j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    mpz_class sum = 0;
    for (std::uint64_t j = 1; j <= radius && j <= p; ++j) sum += row[j];
    return sum;
}

}  // namespace

TEST_CASE("entropy values and symmetry") {
    CHECK(entropy(0.5).h_prime == doctest::Approx(1.0));
    CHECK(entropy(0.1).h_prime == doctest::Approx(0.4690).epsilon(1e-3));
    CHECK(entropy(0.1).h_prime >= 0.46);
    CHECK(entropy(0.1).h_prime <= 0.48);
    CHECK(entropy(0.3).h == doctest::Approx(entropy(0.7).h));
    CHECK(entropy(0.25).h == doctest::Approx(entropy(0.25).h_prime *
                                             std::log(2.0)));
    CHECK_THROWS_AS(entropy(0.0), std::invalid_argument);
    CHECK_THROWS_AS(entropy(1.0), std::invalid_argument);
    CHECK_THROWS_AS(entropy(-0.2), std::invalid_argument);
}

TEST_CASE("sphere size exact counts") {
    // p = 7, radius 3: 7 + 21 + 35.
    EntropyReport a = sphere_size(7, 3.0 / 7.0);
    CHECK(a.radius == 3);
    CHECK(a.exact_count == 63);
    CHECK(a.lower == 35);
    CHECK(a.upper == 245);

    // Half radius of an odd length: half of all words, minus the zero.
    EntropyReport b = sphere_size(23, 0.5);
    CHECK(b.radius == 11);
    CHECK(b.exact_count == (1 << 22) - 1);
    CHECK(b.exact_count == pascal_sphere(23, 11));

    // Radius 1: exactly the p weight-one words.
    EntropyReport c = sphere_size(101, 1.5 / 101.0);
    CHECK(c.radius == 1);
    CHECK(c.exact_count == 101);

    // Radius 0: empty count, log goes to -infinity.
    EntropyReport d = sphere_size(11, 0.05);
    CHECK(d.radius == 0);
    CHECK(d.exact_count == 0);
    CHECK(std::isinf(d.log2_count));
    CHECK(d.log2_count < 0);

    CHECK(sphere_size(31, 0.2).exact_count == pascal_sphere(31, 6));
    CHECK_THROWS_AS(sphere_size(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(sphere_size(7, 0.0), std::invalid_argument);
}

TEST_CASE("sphere size tracks the entropy exponent") {
    EntropyReport rep = sphere_size(101, 0.1);
    CHECK(rep.radius == 10);
    CHECK(std::abs(rep.log2_count / 101.0 - 0.469) < 0.08);
    CHECK(rep.lower <= rep.exact_count);
    CHECK(rep.exact_count <= rep.upper);
}

TEST_CASE("expected intersection exponent signs") {
    CHECK(expected_intersection(100, 0.5, 0.1) < 0);
    CHECK(expected_intersection(100, 0.9, 0.1) > 0);
    double boundary_eta = 1.0 - entropy(0.1).h_prime;
    CHECK(std::abs(expected_intersection(100, boundary_eta, 0.1)) < 1e-9);
    CHECK_THROWS_AS(expected_intersection(100, 0.0, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_intersection(100, 0.5, 1.0),
                    std::invalid_argument);
}

TEST_CASE("random ideal experiment at p = 23") {
    ExperimentReport rep = random_ideal_experiment(23, 0.5, 0.1, 10000, 5);
    // eta*p = 11.5 splits dims 11 and 12; the smaller subset wins.
    CHECK(rep.dim == 11);
    CHECK(rep.mask == 2);
    CHECK(rep.min_weight >= 7);  // exact distance of that ideal is 8
    CHECK(rep.threshold == doctest::Approx(2.3));
    CHECK(rep.verdict);
    CHECK(!rep.low_confidence);

    ExperimentReport again = random_ideal_experiment(23, 0.5, 0.1, 10000, 5);
    CHECK(again.min_weight == rep.min_weight);
    CHECK(again.mask == rep.mask);
}

TEST_CASE("random ideal experiment at p = 7") {
    ExperimentReport rep = random_ideal_experiment(7, 0.57, 0.1, 2000, 1);
    CHECK(rep.dim == 4);
    CHECK(rep.mask == 3);
    CHECK(rep.min_weight == 3);  // exact distance of the chosen ideal
    CHECK(rep.verdict);

    ExperimentReport bare = random_ideal_experiment(7, 0.57, 0.1, 0, 1);
    CHECK(bare.low_confidence);
    CHECK(bare.min_weight >= 3);

    CHECK_THROWS_AS(random_ideal_experiment(8, 0.5, 0.1, 10, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(random_ideal_experiment(7, 1.2, 0.1, 10, 0),
                    std::invalid_argument);
}

TEST_CASE("weak uncertainty expectation arithmetic") {
    // p = 7: no nonzero word has weight <= 0.7, so the intersection
    // count is exactly zero and the exponent degenerates.
    WeakUpReport a = weak_up_expectation(7);
    CHECK(a.half == 3);
    CHECK(a.multiples == 16);  // ideal of a degree-3 factor has dim 4
    CHECK(a.sphere == 0);
    CHECK(std::isinf(a.exponent));
    CHECK(a.exponent < 0);

    // p = 17: multiples 2^9, sphere C(17,1).
    WeakUpReport b = weak_up_expectation(17);
    CHECK(b.multiples == 512);
    CHECK(b.sphere == 17);
    CHECK(b.exponent ==
          doctest::Approx(9.0 + std::log2(17.0) - 17.0).epsilon(1e-12));

    // p = 23 sits close enough to the asymptotic line for a loose check.
    WeakUpReport c = weak_up_expectation(23);
    CHECK(c.multiples == 4096);
    CHECK(c.sphere == 23 + 253);
    CHECK(std::abs(c.exponent - c.predicted) < 0.1 * 23);

    CHECK_THROWS_AS(weak_up_expectation(11), std::invalid_argument);
    CHECK_THROWS_AS(weak_up_expectation(12), std::invalid_argument);
}

TEST_CASE("quadratic residue distance table") {
    auto rows = qr_distance_study(30);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].p == 7);
    CHECK(rows[0].k == 4);
    CHECK(rows[0].d == 3);
    CHECK(rows[0].exact);
    CHECK(rows[0].ratio == doctest::Approx(3.0 / 7.0));
    CHECK(rows[1].p == 17);
    CHECK(rows[1].k == 9);
    CHECK(rows[1].d == 5);
    CHECK(rows[2].p == 23);
    CHECK(rows[2].k == 12);
    CHECK(rows[2].d == 7);
    CHECK(rows[2].ratio == doctest::Approx(7.0 / 23.0));

    // Exact rows coincide with the direct distance pipeline.
    for (const auto& row : rows) {
        REQUIRE(row.exact);
        CHECK(min_distance_exact(quadratic_residue_code(row.p)).distance ==
              row.d);
    }

    DistanceOptions opt;
    opt.jobs = 2;
    auto wide = qr_distance_study(47, opt);
    REQUIRE(wide.size() == 5);
    CHECK(wide[3].p == 41);
    CHECK(wide[3].k == 21);
    CHECK(wide[3].d == 9);
    CHECK(wide[4].p == 47);
    CHECK(wide[4].k == 24);
    CHECK(wide[4].d == 11);

    CHECK(qr_distance_study(6).empty());
}
