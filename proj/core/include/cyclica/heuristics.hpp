#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cyclica/codes.hpp"

namespace cyclica {

// Entropy counting, the random-ideal independence experiment, and the
// small empirical studies built on exact enumeration.  Counts are exact
// big integers; asymptotic predictions are reported next to them, never
// substituted for them.

struct Entropy {
    double h = 0.0;        // natural-log entropy
    double h_prime = 0.0;  // h / log 2
};

// -d log d - (1-d) log(1-d); throws outside (0,1).
Entropy entropy(double delta);

struct EntropyReport {
    std::uint64_t p = 0;
    double delta = 0.0;
    std::uint64_t radius = 0;  // floor(delta * p)
    mpz_class exact_count;     // sum_{j=1}^{radius} C(p,j): nonzero words
    double log2_count = 0.0;   // -inf when the count is 0
    double h_prime = 0.0;      // H'(delta), for comparison
    mpz_class lower, upper;    // C(p,radius) and p * C(p,radius)
};

// Exact count of the nonzero binary words of length p and weight at most
// floor(delta*p).  The lower/upper sandwich is asserted whenever the
// radius is at most p/2 (beyond that the top binomial no longer
// dominates the sum).  delta arriving as a small-integer ratio is nudged
// so floor(delta*p) lands on the intended integer.
EntropyReport sphere_size(std::uint64_t p, double delta);

// p * (H'(delta) - (1 - eta)): the growth exponent of the expected
// intersection of a random dim = eta*p ideal with the radius-delta
// sphere.  Negative means the heuristic predicts empty intersections.
double expected_intersection(std::uint64_t p, double eta, double delta);

struct ExperimentReport {
    std::uint64_t seed = 0;
    std::uint64_t p = 0;
    double eta = 0.0, delta = 0.0;
    std::uint64_t dim = 0;        // chosen ideal dimension
    std::uint64_t mask = 0;       // chosen ideal's factor subset
    std::uint64_t samples = 0;
    std::uint64_t min_weight = 0; // over rows, row pairs, and samples
    double threshold = 0.0;       // delta * p
    bool verdict = false;         // min_weight > threshold
    bool low_confidence = false;  // samples == 0: deterministic stages only
};

// Over F_2: picks the nonzero ideal of F_2[X]/(X^p - 1) whose dimension
// is closest to eta*p (ties to the smallest factor subset), then looks
// for low-weight words by the deterministic row/pair stages plus
// `samples` seeded random codewords.  Bit-reproducible from the seed.
ExperimentReport random_ideal_experiment(std::uint64_t p, double eta,
                                         double delta,
                                         std::uint64_t samples,
                                         std::uint64_t seed);

struct WeakUpReport {
    std::uint64_t p = 0;
    std::uint64_t half = 0;     // (p-1)/2 = ord_p(2), by precondition
    std::uint64_t factor_deg = 0;
    mpz_class multiples;        // elements divisible by one degree-half
                                // factor, zero included: 2^(p - half)
    mpz_class sphere;           // nonzero words of weight <= p/10
    double exponent = 0.0;      // log2(multiples * sphere / 2^p)
    double predicted = 0.0;     // p * (H'(1/10) - 1/2)
};

// The expected-intersection arithmetic for the split regime
// ord_p(2) = (p-1)/2: exact counts on both sides, exponent next to the
// prediction.  Throws if the order precondition fails.
WeakUpReport weak_up_expectation(std::uint64_t p);

struct QrStudyRow {
    std::uint64_t p = 0, k = 0, d = 0;
    bool exact = false;
    double ratio = 0.0;  // d / p
};

// For every prime p <= p_max with p = +-1 (mod 8) and
// ord_p(2) = (p-1)/2: the quadratic-residue code's dimension and its
// distance, exact within the budget and an upper bound beyond it.
std::vector<QrStudyRow> qr_distance_study(std::uint64_t p_max,
                                          const DistanceOptions& options = {});

}  // namespace cyclica
