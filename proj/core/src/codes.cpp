#include "cyclica/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "cyclica/errors.hpp"
#include "cyclica/nt.hpp"

namespace cyclica {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Number of row pairs the upper-bound stage will combine before moving on.
constexpr std::uint64_t kPairCap = 1ull << 18;

// Cooperative wall-clock cap shared by the walk workers.  The clock is
// probed once per 2^16 local steps, and the first probe past the
// deadline flips the shared flag so every worker winds down; the merged
// report is then a partial lower-envelope, flagged inexact.
struct WalkClock {
    Clock::time_point deadline{};
    bool enabled = false;
    std::atomic<bool> expired{false};

    explicit WalkClock(double limit_s) {
        if (limit_s > 0) {
            enabled = true;
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(limit_s));
        }
    }
    // `step` counts the caller's own loop iterations from 0.
    bool out_of_time(std::uint64_t step) {
        if (!enabled || (step & 0xffff) != 0xffff) return false;
        if (expired.load(std::memory_order_relaxed)) return true;
        if (Clock::now() < deadline) return false;
        expired.store(true, std::memory_order_relaxed);
        return true;
    }
};

// q^k - 1 if it fits in 63 bits, otherwise nullopt.
std::optional<std::uint64_t> message_count(std::uint64_t q, std::uint64_t k) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (total > (1ull << 62) / q) return std::nullopt;
        total *= q;
    }
    return total - 1;
}

// ---------------------------------------------------------------------
// GF(2) kernel: rows packed 64 coefficients per word.

struct PackedBest {
    std::uint64_t wt = ~0ull;
    std::vector<std::uint64_t> words;
    std::uint64_t walked = 0;  // messages actually visited (exact walks)
};

void packed_consider(PackedBest& best, std::uint64_t wt,
                     const std::vector<std::uint64_t>& cw) {
    if (wt > best.wt) return;
    if (wt == best.wt) {
        // Tie: keep the smaller packed value (top word decides first).
        for (std::size_t i = cw.size(); i-- > 0;) {
            if (cw[i] != best.words[i]) {
                if (cw[i] < best.words[i]) best.words = cw;
                return;
            }
        }
        return;
    }
    best.wt = wt;
    best.words = cw;
}

std::vector<std::vector<std::uint64_t>> packed_rows(const CyclicCode& code) {
    const std::uint64_t p = code.n;
    const std::size_t W = (p + 63) / 64;
    std::vector<std::uint64_t> row(W, 0);
    for (int i = 0; i <= code.gen.deg(); ++i)
        if (code.gen.coeff(i)) row[i / 64] |= 1ull << (i % 64);
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(code.k);
    for (std::uint64_t i = 0; i < code.k; ++i) {
        rows.push_back(row);
        // Cyclic shift X * row: bit p-1 wraps to bit 0.  p is odd, so
        // bit position p stays inside the word array.
        std::uint64_t carry = 0;
        for (auto& w : row) {
            std::uint64_t next = w >> 63;
            w = (w << 1) | carry;
            carry = next;
        }
        std::uint64_t wi = p / 64, bi = p % 64;
        std::uint64_t top = (row[wi] >> bi) & 1;
        row[wi] &= ~(1ull << bi);
        row[0] |= top;
    }
    return rows;
}

std::uint64_t packed_weight(const std::vector<std::uint64_t>& cw) {
    std::uint64_t wt = 0;
    for (auto w : cw) wt += static_cast<std::uint64_t>(std::popcount(w));
    return wt;
}

// Walks messages lo..hi (1-based, Gray order) and reports the best
// codeword seen.  State entering the range is gray(lo - 1).
PackedBest gray_walk(const std::vector<std::vector<std::uint64_t>>& rows,
                     std::uint64_t lo, std::uint64_t hi, WalkClock& clock) {
    const std::size_t W = rows[0].size();
    std::vector<std::uint64_t> cw(W, 0);
    std::uint64_t start = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (start >> j & 1)
            for (std::size_t t = 0; t < W; ++t) cw[t] ^= rows[j][t];
    PackedBest best;
    std::uint64_t m = lo;
    for (; m <= hi; ++m) {
        if (clock.out_of_time(m - lo)) break;
        const auto& row = rows[std::countr_zero(m)];
        std::uint64_t wt = 0;
        for (std::size_t t = 0; t < W; ++t) {
            cw[t] ^= row[t];
            wt += static_cast<std::uint64_t>(std::popcount(cw[t]));
        }
        packed_consider(best, wt, cw);
    }
    best.walked = m - lo;
    return best;
}

std::vector<ff_t> unpack_word(const std::vector<std::uint64_t>& words,
                              std::uint64_t p) {
    std::vector<ff_t> out(p, 0);
    for (std::uint64_t i = 0; i < p; ++i) out[i] = words[i / 64] >> (i % 64) & 1;
    return out;
}

DistanceResult exact_gf2(const CyclicCode& code, const DistanceOptions& opt,
                         std::uint64_t total) {
    auto t0 = Clock::now();
    auto rows = packed_rows(code);
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs > 1 && total / jobs < 1024) jobs = 1;  // not worth the setup

    WalkClock clock(opt.time_limit_s);
    PackedBest best;
    std::uint64_t walked = 0;
    if (jobs == 1) {
        best = gray_walk(rows, 1, total, clock);
        walked = best.walked;
    } else {
        std::vector<PackedBest> parts(jobs);
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::uint64_t lo = 1 + t * chunk;
            std::uint64_t hi = (t + 1 == jobs) ? total : (t + 1) * chunk;
            pool.emplace_back([&rows, &parts, &clock, t, lo, hi] {
                parts[t] = gray_walk(rows, lo, hi, clock);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) {
            walked += part.walked;
            if (part.wt != ~0ull) packed_consider(best, part.wt, part.words);
        }
    }

    DistanceResult res;
    res.n = code.n;
    res.k = code.k;
    res.distance = best.wt;
    res.exact = !clock.expired.load();
    res.witness = unpack_word(best.words, code.n);
    res.enumerated = walked;
    res.elapsed_s = secs_since(t0);
    return res;
}

// ---------------------------------------------------------------------
// Generic kernel: mixed-radix odometer with incremental row updates.

struct GenericBest {
    std::uint64_t wt = ~0ull;
    std::vector<ff_t> word;
};

void generic_consider(GenericBest& best, std::uint64_t wt,
                      const std::vector<ff_t>& cw) {
    if (wt > best.wt) return;
    if (wt == best.wt) {
        for (std::size_t i = cw.size(); i-- > 0;) {
            if (cw[i] != best.word[i]) {
                if (cw[i] < best.word[i]) best.word = cw;
                return;
            }
        }
        return;
    }
    best.wt = wt;
    best.word = cw;
}

std::vector<std::vector<ff_t>> generic_rows(const CyclicCode& code) {
    const std::uint64_t p = code.n;
    std::vector<ff_t> row(p, 0);
    for (int i = 0; i <= code.gen.deg(); ++i) row[i] = code.gen.coeff(i);
    std::vector<std::vector<ff_t>> rows;
    rows.reserve(code.k);
    for (std::uint64_t i = 0; i < code.k; ++i) {
        rows.push_back(row);
        std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
    }
    return rows;
}

DistanceResult exact_generic(const CyclicCode& code,
                             const DistanceOptions& opt, std::uint64_t total) {
    auto t0 = Clock::now();
    const Field& F = code.fact->ring.field;
    const std::uint64_t q = F.size(), p = code.n;
    auto rows = generic_rows(code);

    std::vector<ff_t> digit(code.k, 0), cw(p, 0);
    std::uint64_t wt = 0;
    GenericBest best;
    // Adds delta * rows[j] into cw, keeping the weight current.
    auto apply = [&](std::size_t j, ff_t delta) {
        for (std::uint64_t t = 0; t < p; ++t) {
            if (!rows[j][t]) continue;
            ff_t next = F.add(cw[t], F.mul(delta, rows[j][t]));
            wt += (next != 0) - (cw[t] != 0);
            cw[t] = next;
        }
    };
    const ff_t roll_delta = F.neg(q - 1);  // q-1 -> 0 in one add
    WalkClock clock(opt.time_limit_s);
    std::uint64_t m = 0;
    for (; m < total; ++m) {
        if (clock.out_of_time(m)) break;
        std::size_t j = 0;
        while (digit[j] == q - 1) {
            digit[j] = 0;
            apply(j, roll_delta);
            ++j;
        }
        ff_t old = digit[j]++;
        apply(j, F.sub(digit[j], old));
        generic_consider(best, wt, cw);
    }

    DistanceResult res;
    res.n = code.n;
    res.k = code.k;
    res.distance = best.wt;
    res.exact = !clock.expired.load();
    res.witness = best.word;
    res.enumerated = m;
    res.elapsed_s = secs_since(t0);
    return res;
}

}  // namespace

CyclicCode code_from_ideal(const IdealDescriptor& ideal) {
    if (ideal.dim == 0)
        throw std::invalid_argument("the zero ideal is not a code");
    CyclicCode code;
    code.fact = ideal.fact;
    code.ideal = ideal;
    code.gen = ideal.generator();
    code.n = ideal.fact->ring.p;
    code.k = ideal.dim;
    return code;
}

CyclicCode code_from_generator(std::shared_ptr<const Factorization> fact,
                               const Poly& g) {
    return code_from_ideal(ideal_from_generator(std::move(fact), g));
}

CyclicCode code_from_divisor(std::shared_ptr<const Factorization> fact,
                             Poly g) {
    if (!fact) throw std::invalid_argument("null factorization");
    const std::uint64_t p = fact->ring.p;
    if (!g.is_monic() || static_cast<std::uint64_t>(g.deg()) >= p)
        throw std::invalid_argument("generator must be monic of degree < p");
    if (!(Poly::xn_minus_1(fact->ring.field, p) % g).is_zero())
        throw std::invalid_argument("generator does not divide X^p - 1");
    CyclicCode code;
    code.fact = fact;
    code.ideal.fact = fact;
    code.ideal.dim = p - static_cast<std::uint64_t>(g.deg());
    code.gen = std::move(g);
    code.n = p;
    code.k = code.ideal.dim;
    return code;
}

DistanceResult min_distance_exact(const CyclicCode& code,
                                  const DistanceOptions& options) {
    const std::uint64_t q = code.fact->ring.field.size();
    auto total = message_count(q, code.k);
    if (!total || *total > options.budget)
        throw BudgetExceeded("message space q^k - 1 exceeds the budget");
    if (q == 2) return exact_gf2(code, options, *total);
    return exact_generic(code, options, *total);
}

DistanceResult min_distance_upper(const CyclicCode& code,
                                  const DistanceOptions& options) {
    auto t0 = Clock::now();
    const Field& F = code.fact->ring.field;
    const std::uint64_t q = F.size(), p = code.n, k = code.k;
    std::uint64_t enumerated = 0;

    DistanceResult res;
    res.n = p;
    res.k = k;
    res.exact = false;

    if (q == 2) {
        auto rows = packed_rows(code);
        const std::size_t W = rows[0].size();
        PackedBest best;
        for (auto& row : rows) {
            packed_consider(best, packed_weight(row), row);
            ++enumerated;
        }
        std::uint64_t pairs = 0;
        std::vector<std::uint64_t> cw(W);
        for (std::uint64_t i = 0; i < k && pairs < kPairCap; ++i)
            for (std::uint64_t j = i + 1; j < k && pairs < kPairCap; ++j) {
                for (std::size_t t = 0; t < W; ++t)
                    cw[t] = rows[i][t] ^ rows[j][t];
                packed_consider(best, packed_weight(cw), cw);
                ++pairs;
            }
        enumerated += pairs;
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
            std::fill(cw.begin(), cw.end(), 0);
            bool nonzero = false;
            for (std::uint64_t j = 0; j < k; ++j)
                if (rng() & 1) {
                    nonzero = true;
                    for (std::size_t t = 0; t < W; ++t) cw[t] ^= rows[j][t];
                }
            if (!nonzero) continue;
            packed_consider(best, packed_weight(cw), cw);
            ++enumerated;
        }
        res.distance = best.wt;
        res.witness = unpack_word(best.words, p);
    } else {
        auto rows = generic_rows(code);
        auto weight_of = [](const std::vector<ff_t>& v) {
            return static_cast<std::uint64_t>(
                std::count_if(v.begin(), v.end(), [](ff_t c) { return c != 0; }));
        };
        GenericBest best;
        for (auto& row : rows) {
            generic_consider(best, weight_of(row), row);
            ++enumerated;
        }
        std::uint64_t pairs = 0;
        std::vector<ff_t> cw(p);
        for (std::uint64_t i = 0; i < k && pairs < kPairCap; ++i)
            for (std::uint64_t j = i + 1; j < k && pairs < kPairCap; ++j)
                for (ff_t c = 1; c < q && pairs < kPairCap; ++c) {
                    for (std::uint64_t t = 0; t < p; ++t)
                        cw[t] = F.add(rows[i][t], F.mul(c, rows[j][t]));
                    generic_consider(best, weight_of(cw), cw);
                    ++pairs;
                }
        enumerated += pairs;
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<ff_t> coeff(0, q - 1);
        for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
            std::fill(cw.begin(), cw.end(), 0);
            bool nonzero = false;
            for (std::uint64_t j = 0; j < k; ++j) {
                ff_t c = coeff(rng);
                if (!c) continue;
                nonzero = true;
                for (std::uint64_t t = 0; t < p; ++t)
                    cw[t] = F.add(cw[t], F.mul(c, rows[j][t]));
            }
            if (!nonzero) continue;
            generic_consider(best, weight_of(cw), cw);
            ++enumerated;
        }
        res.distance = best.wt;
        res.witness = best.word;
    }

    res.enumerated = enumerated;
    res.elapsed_s = secs_since(t0);
    return res;
}

DistanceResult min_distance_auto(const CyclicCode& code,
                                 const DistanceOptions& options) {
    const std::uint64_t q = code.fact->ring.field.size();
    auto total = message_count(q, code.k);
    if (total && *total <= options.budget)
        return min_distance_exact(code, options);
    return min_distance_upper(code, options);
}

bool verify_codeword(const CyclicCode& code, const std::vector<ff_t>& word,
                     std::uint64_t claimed_weight) {
    const Field& F = code.fact->ring.field;
    if (word.size() != code.n)
        throw std::invalid_argument("witness length differs from n");
    std::uint64_t wt = 0;
    for (ff_t c : word) {
        if (c >= F.size())
            throw std::invalid_argument("witness digit outside the field");
        wt += c != 0;
    }
    if (wt != claimed_weight || wt == 0) return false;
    Poly w(F, word);
    return (w % code.gen).is_zero();
}

CyclicCode quadratic_residue_code(std::uint64_t p) {
    if (p < 7 || nt::legendre(2, p) != 1)
        throw std::invalid_argument(
            "quadratic residue code over GF(2) needs 2 to be a square mod p");
    auto fact = std::make_shared<const Factorization>(
        factorize_xp1(make_ring(Field::prime_field(2), p)));

    std::vector<bool> is_qr(p, false);
    for (std::uint64_t a = 1; a < p; ++a) is_qr[a * a % p] = true;

    // 2 is a square, so multiplication by 2 preserves residue class and
    // every nontrivial coset sits inside one class.
    std::vector<std::uint32_t> present{0};
    for (std::uint32_t i = 1; i < fact->factors.size(); ++i) {
        const auto& coset = fact->factors[i].coset;
        bool qr = is_qr[coset[0]];
        for (auto j : coset)
            if (is_qr[j] != qr)
                throw std::logic_error("cyclotomic coset straddles residue classes");
        if (!qr) present.push_back(i);
    }
    CyclicCode code = code_from_ideal(ideal_from_present(fact, present));
    if (static_cast<std::uint64_t>(code.gen.deg()) != (p - 1) / 2 ||
        code.k != (p + 1) / 2)
        throw std::logic_error("residue code has the wrong dimension");
    return code;
}

MdsReport mds_check_r1(std::uint64_t ell, std::uint64_t p,
                       const DistanceOptions& options) {
    if (p > 20) throw std::invalid_argument("lattice sweep capped at p = 20");
    Field F = Field::prime_field(ell);
    if (p < 2 || !nt::is_prime(p) || (ell - 1) % p != 0)
        throw std::invalid_argument(
            "need prime p dividing ell - 1 so every factor is linear");
    auto fact =
        std::make_shared<const Factorization>(factorize_xp1(make_ring(F, p)));

    MdsReport report;
    report.ell = ell;
    report.p = p;
    report.all_mds = true;
    for (std::uint64_t mask = 1; mask < (1ull << p); ++mask) {
        CyclicCode code = code_from_ideal(ideal_from_mask(fact, mask));
        DistanceResult d = min_distance_exact(code, options);
        MdsRow row;
        row.mask = mask;
        row.k = code.k;
        row.d = d.distance;
        row.mds = d.distance == p - code.k + 1;
        report.all_mds = report.all_mds && row.mds;
        report.rows.push_back(row);
    }
    return report;
}

GoodCodeReport build_good_code_candidate(std::uint64_t ell, std::uint64_t p,
                                         double epsilon,
                                         const DistanceOptions& options) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    auto fact = std::make_shared<const Factorization>(
        factorize_xp1(make_ring(field_of_order(ell), p)));
    if (fact->ring.char_p || fact->r >= epsilon * double(p))
        throw std::invalid_argument(
            "needs ord_p(ell) < eps * p to place a dimension in the window");

    // Largest dimension in [eps*p/2, eps*p); dims are b + a*r.
    const std::uint64_t r = fact->r, s = fact->s;
    std::uint64_t best_dim = 0;
    bool found = false;
    for (std::uint64_t b = 0; b <= 1; ++b)
        for (std::uint64_t a = 0; a <= s; ++a) {
            std::uint64_t dim = b + a * r;
            if (double(dim) >= epsilon * double(p) / 2 &&
                double(dim) < epsilon * double(p) && dim >= best_dim) {
                best_dim = dim;
                found = true;
            }
        }
    if (!found)
        throw std::invalid_argument("no ideal dimension in [eps*p/2, eps*p)");

    // Smallest subset mask achieving best_dim: low factor indices first.
    // Only r = 1 admits two representations (with or without X - 1); the
    // one containing factor 0 has the smaller mask.
    std::vector<std::uint32_t> present;
    if (r == 1) {
        for (std::uint32_t i = 0; i < best_dim; ++i) present.push_back(i);
    } else {
        if (best_dim % r != 0) present.push_back(0);
        for (std::uint32_t a = 0; a < best_dim / r; ++a) present.push_back(a + 1);
    }

    GoodCodeReport report;
    report.fact = fact;
    report.epsilon = epsilon;
    report.ideal = ideal_from_present(fact, present);
    CyclicCode code = code_from_ideal(report.ideal);
    report.gen_weight = code.gen.weight();
    report.dist = min_distance_auto(code, options);
    report.rate = double(code.k) / double(code.n);
    report.rel_distance = double(report.dist.distance) / double(code.n);
    return report;
}

}  // namespace cyclica
