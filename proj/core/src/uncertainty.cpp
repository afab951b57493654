#include "cyclica/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "cyclica/ideals.hpp"
#include "cyclica/nt.hpp"

namespace cyclica {

namespace {

constexpr std::uint64_t kSweepCap = 1ull << 30;

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e,
                          std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (total > cap / q)
            throw std::invalid_argument(
                "element count (ell^r)^p exceeds the enumeration cap");
        total *= q;
    }
    return total;
}

Field make_coeff_field(std::uint64_t ell, unsigned r) {
    return r == 1 ? Field::prime_field(ell) : Field::extension(ell, r);
}

std::vector<ff_t> counter_digits(std::uint64_t v, std::uint64_t q,
                                 std::uint64_t p) {
    std::vector<ff_t> c(p);
    for (std::uint64_t i = 0; i < p; ++i) {
        c[i] = v % q;
        v /= q;
    }
    return c;
}

// Walks counter values v in [lo, hi), lo >= 1, over f_v = sum_i d_i X^i
// with d = base-q digits of v, keeping the weight and the number of
// vanishing spectrum values f(zeta^j) current after every step.  Needs a
// semisimple ring (spectrum values live in the splitting field).
template <class Visit>
void sweep_ring(const Factorization& fact, std::uint64_t lo, std::uint64_t hi,
                Visit&& visit) {
    const Field& F = fact.ring.field;
    const Field& E = fact.splitting;
    const std::uint64_t q = F.size(), p = fact.ring.p;

    std::vector<ff_t> digit = counter_digits(lo, q, p);
    std::vector<ff_t> evals(p, 0);
    std::uint64_t wt = 0, zc = p;

    auto apply = [&](std::uint64_t i, ff_t delta) {
        ff_t de = fact.embed_elem(delta);
        for (std::uint64_t j = 0; j < p; ++j) {
            ff_t next =
                E.add(evals[j], E.mul(de, fact.zeta_powers[i * j % p]));
            if ((next == 0) != (evals[j] == 0)) zc += next == 0 ? 1 : -1;
            evals[j] = next;
        }
    };
    for (std::uint64_t i = 0; i < p; ++i)
        if (digit[i]) {
            apply(i, digit[i]);
            ++wt;
        }

    for (std::uint64_t v = lo;;) {
        visit(v, digit, wt, zc);
        if (++v == hi) break;
        std::uint64_t i = 0;
        while (digit[i] == q - 1) {
            apply(i, F.neg(q - 1));
            digit[i] = 0;
            --wt;
            ++i;
        }
        ff_t old = digit[i]++;
        apply(i, F.sub(digit[i], old));
        if (old == 0) ++wt;
    }
}

struct SweepMin {
    std::uint64_t value = ~0ull;
    std::uint64_t counter = 0;
};

// Minimum of objective(wt, spectrum-zeros) over [lo, hi), first counter
// value winning ties; parallel chunks merge to the same answer.
template <class Objective>
SweepMin sweep_minimum(const Factorization& fact, std::uint64_t total,
                       unsigned jobs, Objective&& objective) {
    jobs = std::max(1u, jobs);
    if (jobs > 1 && (total - 1) / jobs < 1024) jobs = 1;
    auto run = [&](std::uint64_t lo, std::uint64_t hi) {
        SweepMin best;
        sweep_ring(fact, lo, hi,
                   [&](std::uint64_t v, const std::vector<ff_t>&,
                       std::uint64_t wt, std::uint64_t zc) {
                       std::uint64_t val = objective(wt, zc);
                       if (val < best.value) best = {val, v};
                   });
        return best;
    };
    if (jobs == 1) return run(1, total);

    std::vector<SweepMin> parts(jobs);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        std::uint64_t lo = 1 + t * chunk;
        std::uint64_t hi = (t + 1 == jobs) ? total : lo + chunk;
        pool.emplace_back([&, t, lo, hi] { parts[t] = run(lo, hi); });
    }
    for (auto& th : pool) th.join();
    SweepMin best;
    for (const auto& part : parts)
        if (part.value < best.value ||
            (part.value == best.value && part.counter < best.counter))
            best = part;
    return best;
}

std::uint64_t det_over_field(const Field& F,
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
            if (m[i][k] == 0) continue;
            ff_t f = F.mul(m[i][k], inv);
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[k][j]));
        }
    }
    return det;
}

// Nonzero v with m v = 0, for singular m (reduced row echelon route).
std::vector<ff_t> kernel_vector(const Field& F,
                                std::vector<std::vector<ff_t>> m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[row], m[piv]);
        ff_t inv = F.inv(m[row][col]);
        for (std::size_t j = col; j < n; ++j)
            m[row][j] = F.mul(m[row][j], inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            ff_t f = m[i][col];
            for (std::size_t j = col; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    std::size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    if (free_col == n)
        throw std::logic_error("kernel requested of a nonsingular matrix");
    std::vector<ff_t> v(n, 0);
    v[free_col] = 1;
    for (std::size_t rr = 0; rr < pivot_col.size(); ++rr)
        v[pivot_col[rr]] = F.neg(m[rr][free_col]);
    return v;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint64_t p) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < p) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> first_combination(std::size_t k) {
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0u);
    return c;
}

std::uint64_t spectrum_zeros(const Factorization& fact, const RingElem& f) {
    return fact.ring.p - ideal_dim(fact, f);
}

}  // namespace

MuReport mu_bruteforce(std::uint64_t ell, unsigned r, std::uint64_t p,
                       unsigned jobs) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    Field F = make_coeff_field(ell, r);
    const std::uint64_t q = F.size();
    const std::uint64_t total = checked_pow(q, p, kSweepCap);
    Ring R = make_ring(F, p);
    Factorization fact = factorize_xp1(R);

    SweepMin best;
    if (R.char_p) {
        // Chain ring: no spectrum, walk plainly and count the
        // multiplicity of X - 1 through the ring's dual-route counter.
        for (std::uint64_t v = 1; v < total; ++v) {
            RingElem f(R, counter_digits(v, q, p));
            std::uint64_t val = f.weight() + p - zeros_count(fact, f);
            if (val < best.value) best = {val, v};
        }
    } else {
        best = sweep_minimum(fact, total, jobs,
                             [p](std::uint64_t wt, std::uint64_t zc) {
                                 return wt + p - zc;
                             });
    }

    RingElem witness(R, counter_digits(best.counter, q, p));
    // Independent recount of the winning value.
    std::uint64_t again = witness.weight() + ideal_dim(fact, witness);
    if (again != best.value)
        throw std::logic_error("sweep and ring routes disagree on mu");

    MuReport rep;
    rep.ell = ell;
    rep.r = r;
    rep.p = p;
    rep.mu = best.value;
    rep.upper_bound_only = false;
    rep.witness = std::move(witness);
    rep.method = "bruteforce";
    return rep;
}

MuReport mu_via_ideals(std::uint64_t ell, unsigned r, std::uint64_t p,
                       const DistanceOptions& options) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    Field F = make_coeff_field(ell, r);
    Ring R = make_ring(F, p);
    auto fact = std::make_shared<const Factorization>(factorize_xp1(R));

    std::uint64_t best = ~0ull;
    std::vector<ff_t> best_word;
    bool all_exact = true;
    auto consider = [&](const CyclicCode& code) {
        DistanceResult d = min_distance_auto(code, options);
        all_exact = all_exact && d.exact;
        std::uint64_t val = d.distance + code.k;
        if (val < best) {
            best = val;
            best_word = d.witness;
        }
    };

    if (R.char_p) {
        Poly xm1(F, {F.neg(1), 1});
        Poly g = Poly::one(F);
        for (std::uint64_t m = 0; m < p; ++m) {
            if (m) g = g * xm1;  // ideal ((X-1)^m), dim p - m
            consider(code_from_divisor(fact, g));
        }
    } else {
        IdealStream stream(fact);
        while (auto d = stream.next())
            if (d->dim) consider(code_from_ideal(*d));
    }

    RingElem witness(R, best_word);
    std::uint64_t again = witness.weight() + ideal_dim(*fact, witness);
    if (all_exact ? again != best : again > best)
        throw std::logic_error("ideal reduction witness fails its recount");

    MuReport rep;
    rep.ell = ell;
    rep.r = r;
    rep.p = p;
    rep.mu = best;
    rep.upper_bound_only = !all_exact;
    rep.witness = std::move(witness);
    rep.method = "ideal_reduction";
    return rep;
}

CharPReport verify_char_p(std::uint64_t p) {
    if (!nt::is_prime(p) || p > 7)
        throw std::invalid_argument("exhaustion supported for prime p <= 7");
    Field F = Field::prime_field(p);
    Ring R = make_ring(F, p);
    Factorization fact = factorize_xp1(R);
    const std::uint64_t total = checked_pow(p, p, kSweepCap);

    CharPReport rep;
    rep.p = p;
    rep.claim_holds = true;
    SweepMin best;
    for (std::uint64_t v = 1; v < total; ++v) {
        RingElem f(R, counter_digits(v, p, p));
        std::uint64_t m = zeros_count(fact, f);  // multiplicity of X - 1
        std::uint64_t wt = f.weight();
        if (wt <= m) rep.claim_holds = false;
        std::uint64_t val = wt + p - m;
        if (val < best.value) best = {val, v};
        ++rep.checked;
    }
    rep.mu = best.value;

    MuReport mu;
    mu.ell = p;
    mu.r = 1;
    mu.p = p;
    mu.mu = best.value;
    mu.upper_bound_only = false;
    mu.witness = RingElem(R, counter_digits(best.counter, p, p));
    mu.method = "bruteforce";
    rep.report = std::move(mu);
    return rep;
}

PrimitiveRootReport verify_primitive_root_case(std::uint64_t ell,
                                               std::uint64_t p) {
    if (!nt::is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    if (nt::mult_order(ell % p, p) != p - 1)
        throw std::invalid_argument("ell is not a primitive root mod p");
    Field F = Field::prime_field(ell);
    auto fact =
        std::make_shared<const Factorization>(factorize_xp1(make_ring(F, p)));

    PrimitiveRootReport rep;
    rep.ell = ell;
    rep.p = p;
    // Exactly three nonzero ideals: masks 1 ({X-1} free), 2, 3.
    for (std::uint64_t mask = 1; mask <= 3; ++mask) {
        CyclicCode code = code_from_ideal(ideal_from_mask(fact, mask));
        DistanceResult d = min_distance_exact(code);
        rep.cases.push_back({code.k, d.distance, code.k + d.distance});
    }
    rep.mu = ~0ull;
    for (const auto& c : rep.cases) rep.mu = std::min(rep.mu, c.mu_term);
    rep.holds = rep.mu == p + 1 && rep.cases.size() == 3 &&
                rep.cases[0].dim == 1 && rep.cases[0].distance == p &&
                rep.cases[1].dim == p - 1 && rep.cases[1].distance == 2 &&
                rep.cases[2].dim == p && rep.cases[2].distance == 1;
    return rep;
}

TraceReport trace_counterexample(std::uint64_t q, std::uint64_t p) {
    if (!nt::is_prime(q) || !nt::is_prime(p) || q == p)
        throw std::invalid_argument("q and p must be distinct primes");
    Field F = Field::prime_field(q);
    Ring R = make_ring(F, p);
    Factorization fact = factorize_xp1(R);
    const unsigned r = fact.r;  // ord_p(q)
    const Field& E = fact.splitting;

    // T = sum_{i<r} X^{q^i mod p}: the exponents are the coset of 1.
    std::vector<std::uint64_t> exps;
    std::uint64_t e = 1 % p;
    for (unsigned i = 0; i < r; ++i) {
        exps.push_back(e);
        e = nt::mulmod(e, q, p);
    }
    std::vector<ff_t> tc(p, 0);
    for (auto ex : exps) tc[ex] = 1;

    // Root fibers: T(zeta^j) is the trace form, landing in F_q.
    std::vector<std::uint64_t> fiber(q, 0);
    for (std::uint64_t j = 0; j < p; ++j) {
        ff_t acc = 0;
        for (auto ex : exps) acc = E.add(acc, fact.zeta_pow(ex * j));
        if (acc >= q)
            throw std::logic_error("trace form left the prime subfield");
        fiber[F.neg(acc)] += 1;  // T(zeta^j) + alpha = 0 at alpha = -T
    }
    std::uint64_t fiber_sum = std::accumulate(fiber.begin(), fiber.end(),
                                              std::uint64_t{0});
    if (fiber_sum != p)
        throw std::logic_error("root fibers fail to partition the roots");

    ff_t best_alpha = 0;
    for (ff_t a = 1; a < q; ++a)
        if (fiber[a] > fiber[best_alpha]) best_alpha = a;

    tc[0] = best_alpha;
    RingElem f(R, tc);
    std::uint64_t zeros = zeros_count(fact, f);
    if (zeros != fiber[best_alpha])
        throw std::logic_error("fiber count and root count disagree");
    std::uint64_t mu_f = f.weight() + (p - zeros);

    TraceReport rep;
    rep.trace_r = r;
    rep.fiber_counts = fiber;
    rep.best_alpha = best_alpha;
    rep.max_fiber = fiber[best_alpha];
    rep.bound = double(p) + 1.0 + double(r) - double(p) / double(q);
    rep.counterexample_regime = double(r) < double(p) / double(q);
    if (double(mu_f) > rep.bound + 1e-9)
        throw std::logic_error("trace construction exceeds its bound");
    if (rep.max_fiber * q < p)
        throw std::logic_error("pigeonhole bound failed on the fibers");

    MuReport mu;
    mu.ell = q;
    mu.r = 1;
    mu.p = p;
    mu.mu = mu_f;
    mu.upper_bound_only = true;
    mu.witness = std::move(f);
    mu.method = "construction";
    rep.report = std::move(mu);
    return rep;
}

Poly ore_subspace_poly(const Field& E, const std::vector<ff_t>& basis,
                       ff_t offset) {
    if (E.ell() != 2)
        throw std::invalid_argument("subspace annihilators need char 2");
    if (basis.size() > E.degree() || basis.size() > 26)
        throw std::invalid_argument("basis larger than supported dimension");
    const std::size_t k = basis.size();

    // Linearized coefficients of s_V(X) = prod_{v in V}(X - v):
    // lc[i] multiplies X^(2^i); start from V = {0}, s = X.
    std::vector<ff_t> lc{1};
    std::vector<ff_t> span{0};
    auto eval_lin = [&](ff_t x) {
        ff_t acc = 0, pw = x;
        for (ff_t c : lc) {
            acc = E.add(acc, E.mul(c, pw));
            pw = E.mul(pw, pw);
        }
        return acc;
    };
    for (ff_t b : basis) {
        ff_t sb = eval_lin(b);
        // s_V vanishes exactly on V, so sb = 0 means b is dependent.
        if (sb == 0) throw std::invalid_argument("dependent basis vector");
        std::vector<ff_t> next(lc.size() + 1, 0);
        for (std::size_t i = 0; i < lc.size(); ++i) {
            next[i + 1] = E.mul(lc[i], lc[i]);
            next[i] = E.add(next[i], E.mul(sb, lc[i]));
        }
        lc = std::move(next);
        std::size_t sz = span.size();
        for (std::size_t t = 0; t < sz; ++t)
            span.push_back(E.add(span[t], b));
    }

    ff_t shift = eval_lin(offset);  // s_V(X - c) = s_V(X) + s_V(c) in char 2
    std::vector<ff_t> coeffs((1ull << k) + 1, 0);
    coeffs[0] = shift;
    for (std::size_t i = 0; i < lc.size(); ++i) coeffs[1ull << i] = lc[i];
    Poly f(E, coeffs);

    if (!f.is_monic() || f.deg() != static_cast<int>(1ull << k) ||
        f.weight() > k + 2)
        throw std::logic_error("annihilator shape violated");
    for (ff_t v : span) {
        ff_t a = E.add(v, offset);
        ff_t acc = E.add(shift, eval_lin(a));
        if (acc != 0)
            throw std::logic_error("annihilator misses a subspace point");
    }
    return f;
}

MersenneReport mersenne_counterexample(unsigned n, unsigned k) {
    if (n < 2 || n > 13)
        throw std::invalid_argument("supported range is 2 <= n <= 13");
    const std::uint64_t p = (1ull << n) - 1;
    if (!nt::is_prime(p))
        throw std::invalid_argument("2^n - 1 is not prime");
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");

    Field E = Field::extension(2, n);
    Ring R = make_ring(E, p);
    Factorization fact = factorize_xp1(R);

    // A_i = {x : bits 0..i-2 clear, bit i-1 set}: offset 2^(i-1), basis
    // the higher bits.  Pairwise disjoint, sizes 2^(n-i).
    Poly f = Poly::one(E);
    for (unsigned i = 1; i <= k; ++i) {
        std::vector<ff_t> basis;
        for (unsigned b = i; b < n; ++b) basis.push_back(1ull << b);
        f = f * ore_subspace_poly(E, basis, 1ull << (i - 1));
    }

    MersenneReport rep;
    rep.n = n;
    rep.k = k;
    rep.deg = static_cast<std::uint64_t>(f.deg());
    rep.wt = f.weight();
    rep.wt_bound = 1;
    for (unsigned i = 0; i < k; ++i) rep.wt_bound *= n + 1;
    if (rep.deg != (1ull << n) - (1ull << (n - k)) || rep.deg >= p)
        throw std::logic_error("construction degree is off");
    if (rep.wt > rep.wt_bound)
        throw std::logic_error("construction weight exceeds (n+1)^k");

    RingElem fe = RingElem::from_poly(R, f);
    rep.dim = ideal_dim(fact, fe);  // roots recounted by the ring
    if (rep.dim != (1ull << (n - k)) - 1)
        throw std::logic_error("ideal dimension is off");

    MuReport mu;
    mu.ell = 2;
    mu.r = n;
    mu.p = p;
    mu.mu = rep.wt + rep.dim;
    mu.upper_bound_only = true;
    mu.witness = std::move(fe);
    mu.method = "construction";
    rep.report = std::move(mu);
    return rep;
}

EquivalenceReport up_equivalence_check(std::uint64_t p, const Field& field) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    const std::uint64_t q = field.size();
    if ((q - 1) % p != 0)
        throw std::invalid_argument("field lacks primitive p-th roots");
    const std::uint64_t total = checked_pow(q, p, kSweepCap);
    Ring R = make_ring(field, p);
    Factorization fact = factorize_xp1(R);

    EquivalenceReport rep;
    rep.p = p;
    rep.q = q;

    // Exhaustive mu over the field.
    SweepMin best = sweep_minimum(fact, total, 1,
                                  [p](std::uint64_t wt, std::uint64_t zc) {
                                      return wt + p - zc;
                                  });
    RingElem witness(R, counter_digits(best.counter, q, p));
    if (witness.weight() + ideal_dim(fact, witness) != best.value)
        throw std::logic_error("sweep and ring routes disagree on mu");
    rep.mu = best.value;

    // Scan minors of (zeta^{ij}) over the field, sizes ascending, until
    // one vanishes.
    auto zp = [&](std::uint64_t i, std::uint64_t j) {
        return fact.zeta_pow(i * j);
    };
    for (std::size_t k = 1; k <= p && !rep.minor_vanished; ++k) {
        auto rows = first_combination(k);
        do {
            auto cols = first_combination(k);
            do {
                ++rep.minors_checked;
                std::vector<std::vector<ff_t>> m(k, std::vector<ff_t>(k));
                for (std::size_t x = 0; x < k; ++x)
                    for (std::size_t y = 0; y < k; ++y)
                        m[x][y] = zp(rows[x], cols[y]);
                if (det_over_field(field, m) == 0) {
                    rep.minor_vanished = true;
                    rep.minor_rows.assign(rows.begin(), rows.end());
                    rep.minor_cols.assign(cols.begin(), cols.end());
                    break;
                }
            } while (next_combination(cols, p));
        } while (!rep.minor_vanished && next_combination(rows, p));
    }

    bool artifacts_ok = true;

    // Vanishing minor -> small-support f with small spectrum support,
    // built from the kernel.
    if (rep.minor_vanished) {
        const std::size_t k = rep.minor_rows.size();
        std::vector<std::vector<ff_t>> m(k, std::vector<ff_t>(k));
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
                m[x][y] = zp(rep.minor_rows[x], rep.minor_cols[y]);
        std::vector<ff_t> v = kernel_vector(field, m);
        std::vector<ff_t> coeffs(p, 0);
        for (std::size_t y = 0; y < k; ++y)
            coeffs[rep.minor_cols[y]] = v[y];
        rep.constructed = RingElem(R, coeffs);
        if (rep.constructed.is_zero())
            throw std::logic_error("kernel produced the zero element");
        std::uint64_t zeros = spectrum_zeros(fact, rep.constructed);
        rep.constructed_mu = rep.constructed.weight() + (p - zeros);
        // f vanishes on zeta^b for every row index b, so mu(f) <= p.
        artifacts_ok = artifacts_ok && zeros >= k && rep.constructed_mu <= p;
    }

    // mu witness -> singular minor: rows from the witness's spectrum
    // zeros, columns from its support.
    if (rep.mu <= p) {
        std::vector<std::uint32_t> supp = witness.support();
        std::vector<std::uint32_t> zrows;
        for (std::uint64_t j = 0; j < p && zrows.size() < supp.size(); ++j) {
            ff_t acc = 0;
            for (auto i : supp)
                acc = field.add(acc,
                                field.mul(witness.coeffs()[i], zp(i, j)));
            if (acc == 0) zrows.push_back(static_cast<std::uint32_t>(j));
        }
        artifacts_ok = artifacts_ok && zrows.size() == supp.size();
        if (zrows.size() == supp.size()) {
            const std::size_t k = supp.size();
            std::vector<std::vector<ff_t>> m(k, std::vector<ff_t>(k));
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t y = 0; y < k; ++y)
                    m[x][y] = zp(zrows[x], supp[y]);
            artifacts_ok = artifacts_ok && det_over_field(field, m) == 0;
        }
    }

    rep.consistent = ((rep.mu <= p) == rep.minor_vanished) && artifacts_ok;
    return rep;
}

DsReport donoho_stark_exhaustive(std::uint64_t ell, unsigned r,
                                 std::uint64_t p) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    Field F = make_coeff_field(ell, r);
    Ring R = make_ring(F, p);
    if (R.char_p)
        throw std::invalid_argument("spectrum support needs gcd(q, p) = 1");
    const std::uint64_t total = checked_pow(F.size(), p, kSweepCap);
    Factorization fact = factorize_xp1(R);

    SweepMin best = sweep_minimum(fact, total, 1,
                                  [p](std::uint64_t wt, std::uint64_t zc) {
                                      return wt * (p - zc);
                                  });

    DsReport rep;
    rep.ell = ell;
    rep.r = r;
    rep.p = p;
    rep.checked = total - 1;
    rep.min_product = best.value;
    rep.holds = best.value >= p;
    rep.argmin = RingElem(R, counter_digits(best.counter, F.size(), p));
    std::uint64_t zeros = spectrum_zeros(fact, rep.argmin);
    if (rep.argmin.weight() * (p - zeros) != best.value)
        throw std::logic_error("support product fails its recount");
    return rep;
}

DsReport donoho_stark_random(std::uint64_t ell, unsigned r, std::uint64_t p,
                             std::uint64_t samples, std::uint64_t seed) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    Field F = make_coeff_field(ell, r);
    Ring R = make_ring(F, p);
    if (R.char_p)
        throw std::invalid_argument("spectrum support needs gcd(q, p) = 1");
    Factorization fact = factorize_xp1(R);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ff_t> coeff(0, F.size() - 1);
    DsReport rep;
    rep.ell = ell;
    rep.r = r;
    rep.p = p;
    rep.min_product = ~0ull;
    std::vector<ff_t> c(p);
    for (std::uint64_t t = 0; t < samples; ++t) {
        bool nonzero = false;
        for (std::uint64_t i = 0; i < p; ++i) {
            c[i] = coeff(rng);
            nonzero = nonzero || c[i] != 0;
        }
        if (!nonzero) {
            c[0] = 1;  // keep the draw count deterministic
            nonzero = true;
        }
        RingElem f(R, c);
        std::uint64_t val =
            f.weight() * (p - zeros_count(fact, f));
        if (val < rep.min_product) {
            rep.min_product = val;
            rep.argmin = f;
        }
        ++rep.checked;
    }
    rep.holds = rep.min_product >= p;
    return rep;
}

}  // namespace cyclica
