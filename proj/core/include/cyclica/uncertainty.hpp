#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclica/codes.hpp"
#include "cyclica/poly.hpp"
#include "cyclica/ring.hpp"

namespace cyclica {

// The support-plus-ideal invariant of R = F[X]/(X^p - 1):
//   mu(f) = wt(f) + dim I_f,   mu = min over nonzero f.
// Computed three ways: exhaustive enumeration, reduction to exact ideal
// distances, and explicit constructions that certify upper bounds.

struct MuReport {
    std::uint64_t ell = 0;  // characteristic of the coefficient field
    unsigned r = 1;         // extension degree: coefficients in F_{ell^r}
    std::uint64_t p = 0;
    std::uint64_t mu = 0;
    bool upper_bound_only = false;
    RingElem witness;    // nonzero; wt + dim I recompute to mu (<= if bound)
    std::string method;  // bruteforce | ideal_reduction | construction
};

// Exhaustive minimum over all (ell^r)^p - 1 nonzero elements, walking
// coefficient vectors as ascending base-(ell^r) counters (lowest index is
// the constant term); the witness is the first minimizer in that order.
// Requires (ell^r)^p <= 2^30.
MuReport mu_bruteforce(std::uint64_t ell, unsigned r, std::uint64_t p,
                       unsigned jobs = 1);

// min over nonzero ideals I of (d(I) + dim I).  Every min-weight word h
// of I has I_h inside I, so the minimum equals mu when all distances are
// exact; any inexact distance flags the report as an upper bound.
MuReport mu_via_ideals(std::uint64_t ell, unsigned r, std::uint64_t p,
                       const DistanceOptions& options = {});

struct CharPReport {
    std::uint64_t p = 0;
    std::uint64_t mu = 0;        // always p + 1
    std::uint64_t checked = 0;   // p^p - 1 nonzero elements
    bool claim_holds = false;    // wt(f) > multiplicity of (X-1) in f, all f
    MuReport report;
};

// Exhausts F_p[X]/((X-1)^p) confirming the chain-ring principle: every
// nonzero f divisible by (X-1)^m has weight > m, hence mu = p + 1.
// Requires p <= 7.
CharPReport verify_char_p(std::uint64_t p);

struct PrimitiveRootReport {
    std::uint64_t ell = 0, p = 0;
    std::uint64_t mu = 0;  // p + 1 when the principle holds
    bool holds = false;
    struct Case {
        std::uint64_t dim = 0;       // 1, p-1, p
        std::uint64_t distance = 0;  // p, 2, 1
        std::uint64_t mu_term = 0;   // dim + distance
    };
    std::vector<Case> cases;  // the three nonzero ideals
};

// When ell generates (Z/p)^*, the lattice has exactly three nonzero
// ideals; each contributes dim + d = p + 1.
PrimitiveRootReport verify_primitive_root_case(std::uint64_t ell,
                                               std::uint64_t p);

struct TraceReport {
    MuReport report;  // witness over F_q itself (r = 1)
    unsigned trace_r = 0;                     // ord_p(q)
    std::vector<std::uint64_t> fiber_counts;  // roots of T + alpha, by alpha
    ff_t best_alpha = 0;
    std::uint64_t max_fiber = 0;   // >= p/q by pigeonhole
    double bound = 0.0;            // p + 1 + r - p/q
    bool counterexample_regime = false;  // r < p/q, so mu(f) <= bound < p+1
};

// f = T + alpha for T = sum_{i<r} X^{q^i} (the trace form on the p-th
// roots of unity) and the alpha with the largest root fiber, ties to the
// smallest alpha.  Certifies mu(f) = wt(f) + dim I_f <= p+1+r-p/q.
TraceReport trace_counterexample(std::uint64_t q, std::uint64_t p);

// Annihilator polynomial of an affine F_2-subspace A = offset + <basis>
// inside E = F_{2^n}: the monic product of (X - a) over a in A, computed
// by the linearized recursion s_{V+<b>} = s_V^2 + s_V(b) s_V.  Exponents
// land in {0} union {2^0..2^k}, so wt <= k + 2.  Throws on a dependent
// basis.
Poly ore_subspace_poly(const Field& E, const std::vector<ff_t>& basis,
                       ff_t offset);

struct MersenneReport {
    MuReport report;  // over E = F_{2^n}, p = 2^n - 1
    unsigned n = 0, k = 0;
    std::uint64_t deg = 0;       // 2^n (1 - 2^-k)
    std::uint64_t wt = 0;        // <= (n+1)^k
    std::uint64_t wt_bound = 0;  // (n+1)^k
    std::uint64_t dim = 0;       // 2^(n-k) - 1, recomputed from roots
};

// Product of the annihilators of the k disjoint subspaces
// A_i = {x : low bits 0..i-2 clear, bit i-1 set} in F_{2^n}; yields f
// with small weight and small ideal, certifying mu <= wt + 2^(n-k) - 1.
MersenneReport mersenne_counterexample(unsigned n, unsigned k);

struct EquivalenceReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;  // field size, p divides q - 1
    std::uint64_t mu = 0;  // exhaustive minimum over the field
    std::uint64_t minors_checked = 0;  // all sizes 1..p
    bool minor_vanished = false;
    std::vector<std::uint32_t> minor_rows, minor_cols;  // first vanishing
    RingElem constructed;       // kernel-built f when a minor vanishes
    std::uint64_t constructed_mu = 0;  // recomputed wt + dim I
    bool consistent = false;    // (mu <= p) == minor_vanished, both artifacts check
};

// Verifies, over a finite field containing the p-th roots of unity, that
// "some minor of (zeta^{ij}) vanishes" and "mu <= p" imply each other:
// a vanishing minor yields f from its kernel with mu(f) <= p, and a mu
// witness marks a singular minor (rows from its spectrum zeros, columns
// from its support).  Desk scale: q^p <= 2^30.
EquivalenceReport up_equivalence_check(std::uint64_t p, const Field& field);

struct DsReport {
    std::uint64_t ell = 0;
    unsigned r = 1;
    std::uint64_t p = 0;
    std::uint64_t checked = 0;
    std::uint64_t min_product = 0;  // min over f of |supp f| * |supp fhat|
    bool holds = false;             // min_product >= p
    RingElem argmin;
};

// |supp f| * |supp fhat| >= p for all nonzero f: exhaustive when
// (ell^r)^p <= 2^30.
DsReport donoho_stark_exhaustive(std::uint64_t ell, unsigned r,
                                 std::uint64_t p);
// Seeded random nonzero f over F_{ell^r}.
DsReport donoho_stark_random(std::uint64_t ell, unsigned r, std::uint64_t p,
                             std::uint64_t samples, std::uint64_t seed);

}  // namespace cyclica
