#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclica {

// Minors of the p x p Vandermonde matrix V = (zeta^{ij}) at a primitive
// p-th root of unity over the complex numbers.  Every square minor is
// nonzero; the verifier certifies this per minor.
//
// Fast path: evaluate the minor in F_Q for a fixed prime Q = 1 (mod p)
// with zeta mapped to an order-p element.  A nonzero residue certifies a
// nonzero minor (the reduction zeta -> zeta mod Q extends to a ring
// homomorphism Z[zeta] -> F_Q).  A zero residue is inconclusive and
// escalates to an exact determinant over Z[zeta_p]; an exact zero would
// contradict the minor theorem and throws std::logic_error.

struct MinorCertificate {
    bool nonzero = false;
    bool exact_path = false;        // true when Bareiss had to run
    std::uint64_t modular_prime = 0;
};

// Smallest prime Q = 1 (mod p) with Q > 2^24.  The size floor keeps
// accidental zero residues rare; it does not affect soundness.
std::uint64_t chebotarev_modular_prime(std::uint64_t p);

// rows and cols are strictly increasing subsets of {0..p-1}, same size >= 1.
MinorCertificate chebotarev_minor(std::uint64_t p,
                                  const std::vector<std::uint32_t>& rows,
                                  const std::vector<std::uint32_t>& cols);

struct MinorSweepReport {
    std::uint64_t p = 0;
    std::uint64_t minors_checked = 0;
    bool all_nonzero = false;
    // Populated only if a minor ever came back zero; the verifier throws
    // before that can happen, so this stays empty in practice.
    std::optional<std::pair<std::vector<std::uint32_t>,
                            std::vector<std::uint32_t>>> first_failure;
    std::uint64_t modular_prime = 0;
    std::uint64_t exact_escalations = 0;
    double elapsed_s = 0.0;
};

// Exhaustive sweep over all sum_k C(p,k)^2 = C(2p,p) minors, counting the
// empty minor (determinant 1) as checked.  Exact arithmetic caps the
// practical range at p <= 13.
MinorSweepReport chebotarev_sweep(std::uint64_t p);

// Exhaustive over the given sizes only (each in 1..p).
MinorSweepReport chebotarev_sweep_sizes(std::uint64_t p,
                                        const std::vector<std::uint64_t>& sizes);

// Seeded random minors: size uniform in 1..p, then uniform row/col subsets.
MinorSweepReport chebotarev_sweep_random(std::uint64_t p, std::uint64_t count,
                                         std::uint64_t seed);

}  // namespace cyclica
