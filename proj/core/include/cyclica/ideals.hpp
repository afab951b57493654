#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cyclica/poly.hpp"
#include "cyclica/ring.hpp"

namespace cyclica {

// Ideals of R = F[X]/(X^p - 1) in the semisimple case (gcd(|F|, p) = 1).
// Every ideal is generated by a divisor of X^p - 1, so ideals correspond
// one-to-one with subsets of the irreducible factors.  `present` lists the
// factors that do NOT divide the generator: their root positions are free,
// and dim = sum of their degrees.  Factor index i refers to
// Factorization::factors[i], so index 0 is always X - 1.
struct IdealDescriptor {
    std::shared_ptr<const Factorization> fact;
    std::vector<std::uint32_t> present;  // sorted, strictly increasing
    std::uint64_t dim = 0;

    // Product of the absent factors: monic, degree p - dim.  Computed on
    // demand; the full-ring ideal (all factors present) yields 1 and the
    // zero ideal yields X^p - 1 itself.
    Poly generator() const;

    std::uint64_t mask() const;  // bit i set iff factor i is present
};

// Deterministic enumeration of all 2^(s+1) ideals: masks count upward from
// 0 (zero ideal) to 2^(s+1) - 1 (unit ideal), bit i selecting factor i.
class IdealStream {
public:
    explicit IdealStream(std::shared_ptr<const Factorization> fact);
    std::optional<IdealDescriptor> next();
    std::uint64_t total() const { return total_; }

private:
    std::shared_ptr<const Factorization> fact_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
    bool done_ = false;
};

IdealDescriptor ideal_from_mask(std::shared_ptr<const Factorization> fact,
                                std::uint64_t mask);
IdealDescriptor ideal_from_present(std::shared_ptr<const Factorization> fact,
                                   std::vector<std::uint32_t> present);

// Classifies a nonzero g by testing each irreducible factor for
// divisibility, then cross-checks the resulting dimension against
// deg gcd(g, X^p - 1) computed by the Euclidean route.
IdealDescriptor ideal_from_generator(std::shared_ptr<const Factorization> fact,
                                     const Poly& g);
IdealDescriptor ideal_from_element(std::shared_ptr<const Factorization> fact,
                                   const RingElem& f);

// (b) subset of (a) as ideals, i.e. every codeword of b lies in a.
bool ideal_contains(const IdealDescriptor& a, const IdealDescriptor& b);

// All ideals with lo <= dim < hi, masks ascending.  Throws BudgetExceeded
// when the full lattice has more than `budget` subsets, unless unbounded.
std::vector<IdealDescriptor> ideals_in_dim_range(
    std::shared_ptr<const Factorization> fact, std::uint64_t lo,
    std::uint64_t hi, std::uint64_t budget = 1ull << 22,
    bool unbounded = false);

// Counts ideals per dimension without materializing generators.  Returns
// (dim, count) pairs sorted by dim; works for any s since only the
// polynomial coefficients of the subset-sum generating function are kept.
std::vector<std::pair<std::uint64_t, std::uint64_t>> ideal_dim_census(
    std::shared_ptr<const Factorization> fact);

// Seeded sampler for lattices too large to enumerate: draws `count`
// descriptors whose dim lands in [lo, hi) by picking how many nontrivial
// factors to include and then a uniform random subset of that size.
// Duplicates are possible by design; throws invalid_argument when no
// achievable dimension lies in the window.
std::vector<IdealDescriptor> sample_ideals_in_dim_range(
    std::shared_ptr<const Factorization> fact, std::uint64_t lo,
    std::uint64_t hi, std::uint64_t count, std::uint64_t seed);

}  // namespace cyclica
