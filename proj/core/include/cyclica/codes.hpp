#pragma once
#include <cstdint>
#include <memory>
#include <vector>

#include "cyclica/ideals.hpp"
#include "cyclica/poly.hpp"
#include "cyclica/ring.hpp"

namespace cyclica {

// A nonzero ideal of F[X]/(X^p - 1) viewed as a linear [n, k] code over F
// with n = p and k = dim.  The generator matrix is the staircase of cyclic
// shifts X^i * g for i < k; distance kernels materialize those rows
// themselves (packed for GF(2)), so the struct stays light.
struct CyclicCode {
    std::shared_ptr<const Factorization> fact;
    IdealDescriptor ideal;
    Poly gen;  // canonical monic generator, gcd of the ideal, deg = n - k
    std::uint64_t n = 0, k = 0;
};

CyclicCode code_from_ideal(const IdealDescriptor& ideal);
// Classifies an arbitrary nonzero g and uses the canonical generator of
// the ideal it spans (a unit multiple of g produces the same code).
CyclicCode code_from_generator(std::shared_ptr<const Factorization> fact,
                               const Poly& g);
// Takes a monic divisor g of X^p - 1 at face value, skipping the subset
// lattice; this is the entry point for the characteristic-p chain ring,
// where ideals are powers of X - 1.  The `ideal` member carries only the
// dimension (present list stays empty).
CyclicCode code_from_divisor(std::shared_ptr<const Factorization> fact,
                             Poly g);

struct DistanceOptions {
    std::uint64_t budget = 1ull << 26;  // max messages an exact run may walk
    unsigned jobs = 1;                  // worker threads for the GF(2) walk
    std::uint64_t trials = 2000;        // random messages in the upper bound
    std::uint64_t seed = 0;
    // Wall-clock cap on an exact walk, seconds; 0 means no cap.  Expiry
    // stops the walk and flags the result inexact with the best seen so
    // far, so a capped run is a partial result, not an error.
    double time_limit_s = 0.0;
};

struct DistanceResult {
    std::uint64_t n = 0, k = 0;
    std::uint64_t distance = 0;  // exact minimum weight, or best bound seen
    bool exact = false;
    // Minimum-weight codeword found, ties broken by smallest packed value
    // (coefficients read from X^(p-1) down); length n.
    std::vector<ff_t> witness;
    std::uint64_t enumerated = 0;  // codewords examined
    double elapsed_s = 0.0;
};

// Walks all q^k - 1 nonzero messages: a Gray-code walk over packed words
// for GF(2), a mixed-radix odometer with incremental row updates for any
// other field.  Throws BudgetExceeded when the message space is larger
// than options.budget; a positive time_limit_s instead stops at the
// deadline and returns the partial minimum flagged exact = false.
DistanceResult min_distance_exact(const CyclicCode& code,
                                  const DistanceOptions& options = {});

// Upper bound from three deterministic stages: every single row (weight
// of g), scaled row pairs (capped), and seeded random messages.
DistanceResult min_distance_upper(const CyclicCode& code,
                                  const DistanceOptions& options = {});

// Exact when affordable within options.budget, otherwise the upper bound.
DistanceResult min_distance_auto(const CyclicCode& code,
                                 const DistanceOptions& options = {});

// Membership (divisibility by the generator) plus a weight recount.
bool verify_codeword(const CyclicCode& code, const std::vector<ff_t>& word,
                     std::uint64_t claimed_weight);

// The binary quadratic residue code of length p: generator has the
// quadratic residues' roots, degree (p-1)/2, so the code has dimension
// (p+1)/2.  Requires 2 to be a square mod p (p = +-1 mod 8).
CyclicCode quadratic_residue_code(std::uint64_t p);

struct MdsRow {
    std::uint64_t mask = 0;  // ideal subset mask
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    bool mds = false;  // d == n - k + 1
};

struct MdsReport {
    std::uint64_t ell = 0, p = 0;
    bool all_mds = false;
    std::vector<MdsRow> rows;  // every nonzero ideal, masks ascending
};

// Exact-distance sweep over the full ideal lattice when every nontrivial
// factor is linear (p divides ell - 1), recording which ideals meet the
// Singleton bound.  Requires prime ell and p <= 20.
MdsReport mds_check_r1(std::uint64_t ell, std::uint64_t p,
                       const DistanceOptions& options = {});

struct GoodCodeReport {
    std::shared_ptr<const Factorization> fact;
    double epsilon = 0.0;
    IdealDescriptor ideal;  // largest dim in [eps*p/2, eps*p), canonical subset
    std::uint64_t gen_weight = 0;
    DistanceResult dist;
    double rate = 0.0;          // k / n
    double rel_distance = 0.0;  // d / n
};

// Picks the ideal of largest dimension inside [eps*p/2, eps*p), breaking
// ties by the smallest subset mask, and measures its distance (exact when
// the budget allows).  Requires ord_p(ell) < eps * p.
GoodCodeReport build_good_code_candidate(std::uint64_t ell, std::uint64_t p,
                                         double epsilon,
                                         const DistanceOptions& options = {});

}  // namespace cyclica
