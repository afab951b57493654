#include "cyclica/chebotarev.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cyclica/cycint.hpp"
#include "cyclica/nt.hpp"

namespace cyclica {

namespace {

using Clock = std::chrono::steady_clock;

void check_subset(std::uint64_t p, const std::vector<std::uint32_t>& s) {
    if (s.empty()) throw std::invalid_argument("minor subsets must be nonempty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= p) throw std::invalid_argument("index out of range");
        if (i && s[i] <= s[i - 1])
            throw std::invalid_argument("subset must be strictly increasing");
    }
}

// First x >= 2 whose (Q-1)/p power is a nontrivial p-th root of unity.
std::uint64_t order_p_element(std::uint64_t Q, std::uint64_t p) {
    for (std::uint64_t x = 2;; ++x) {
        std::uint64_t z = nt::powmod(x, (Q - 1) / p, Q);
        if (z != 1) return z;
    }
}

// det over F_Q by Gaussian elimination; entries zp[rows[i]*cols[j] mod p].
std::uint64_t minor_det_mod(std::uint64_t Q,
                            const std::vector<std::uint64_t>& zp,
                            std::uint64_t p,
                            const std::vector<std::uint32_t>& rows,
                            const std::vector<std::uint32_t>& cols) {
    const std::size_t n = rows.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = zp[std::uint64_t(rows[i]) * cols[j] % p];

    std::uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = Q - det;  // negate
        }
        det = nt::mulmod(det, m[k][k], Q);
        std::uint64_t inv = nt::powmod(m[k][k], Q - 2, Q);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            std::uint64_t f = nt::mulmod(m[i][k], inv, Q);
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = nt::mulmod(f, m[k][j], Q);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + Q - sub;
            }
        }
    }
    return det % Q;
}

bool exact_minor_nonzero(std::uint64_t p,
                         const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols) {
    const std::size_t n = rows.size();
    std::vector<std::vector<CycInt>> m(n, std::vector<CycInt>(n, CycInt(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = CycInt::zeta_power(p, std::uint64_t(rows[i]) * cols[j] % p);
    return !cyc_det(std::move(m), p).is_zero();
}

// Shared machinery for the three sweep drivers.
struct SweepState {
    std::uint64_t p;
    std::uint64_t Q;
    std::vector<std::uint64_t> zp;  // zeta^0..zeta^(p-1) mod Q
    MinorSweepReport report;

    explicit SweepState(std::uint64_t p_) : p(p_) {
        if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
        Q = chebotarev_modular_prime(p);
        std::uint64_t z = order_p_element(Q, p);
        zp.assign(p, 1);
        for (std::uint64_t i = 1; i < p; ++i) zp[i] = nt::mulmod(zp[i - 1], z, Q);
        report.p = p;
        report.modular_prime = Q;
        report.all_nonzero = true;
    }

    void check(const std::vector<std::uint32_t>& rows,
               const std::vector<std::uint32_t>& cols) {
        ++report.minors_checked;
        if (minor_det_mod(Q, zp, p, rows, cols) != 0) return;
        ++report.exact_escalations;
        if (exact_minor_nonzero(p, rows, cols)) return;
        report.all_nonzero = false;
        report.first_failure = {rows, cols};
        throw std::logic_error(
            "a Vandermonde minor vanished over the complex numbers; "
            "this contradicts the minor-invertibility theorem");
    }
};

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

}  // namespace

std::uint64_t chebotarev_modular_prime(std::uint64_t p) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    std::uint64_t Q = ((1ull << 24) / p + 1) * p + 1;
    while (!nt::is_prime(Q)) Q += p;
    return Q;
}

MinorCertificate chebotarev_minor(std::uint64_t p,
                                  const std::vector<std::uint32_t>& rows,
                                  const std::vector<std::uint32_t>& cols) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    check_subset(p, rows);
    check_subset(p, cols);
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor subsets must have equal size");

    SweepState state(p);
    MinorCertificate cert;
    cert.modular_prime = state.Q;
    if (minor_det_mod(state.Q, state.zp, p, rows, cols) != 0) {
        cert.nonzero = true;
        return cert;
    }
    cert.exact_path = true;
    cert.nonzero = exact_minor_nonzero(p, rows, cols);
    if (!cert.nonzero)
        throw std::logic_error(
            "a Vandermonde minor vanished over the complex numbers; "
            "this contradicts the minor-invertibility theorem");
    return cert;
}

MinorSweepReport chebotarev_sweep(std::uint64_t p) {
    if (p > 13)
        throw std::invalid_argument(
            "exhaustive sweep capped at p = 13 (C(2p,p) minors)");
    auto t0 = Clock::now();
    SweepState state(p);
    state.report.minors_checked = 1;  // the empty minor, det 1
    for (std::size_t k = 1; k <= p; ++k) {
        auto rows = first_combination(k);
        do {
            auto cols = first_combination(k);
            do {
                state.check(rows, cols);
            } while (next_combination(cols, p));
        } while (next_combination(rows, p));
    }
    state.report.elapsed_s =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return state.report;
}

MinorSweepReport chebotarev_sweep_sizes(
    std::uint64_t p, const std::vector<std::uint64_t>& sizes) {
    auto t0 = Clock::now();
    SweepState state(p);
    for (std::uint64_t k : sizes) {
        if (k < 1 || k > p) throw std::invalid_argument("size out of range");
        auto rows = first_combination(k);
        do {
            auto cols = first_combination(k);
            do {
                state.check(rows, cols);
            } while (next_combination(cols, p));
        } while (next_combination(rows, p));
    }
    state.report.elapsed_s =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return state.report;
}

MinorSweepReport chebotarev_sweep_random(std::uint64_t p, std::uint64_t count,
                                         std::uint64_t seed) {
    auto t0 = Clock::now();
    SweepState state(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> size_dist(1, p);
    std::vector<std::uint32_t> pool(p);
    auto draw_subset = [&](std::size_t k) {
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t j = 0; j < k; ++j) {
            std::uniform_int_distribution<std::size_t> u(j, p - 1);
            std::swap(pool[j], pool[u(rng)]);
        }
        std::vector<std::uint32_t> s(pool.begin(), pool.begin() + k);
        std::sort(s.begin(), s.end());
        return s;
    };
    for (std::uint64_t t = 0; t < count; ++t) {
        std::size_t k = size_dist(rng);
        auto rows = draw_subset(k);
        auto cols = draw_subset(k);
        state.check(rows, cols);
    }
    state.report.elapsed_s =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return state.report;
}

}  // namespace cyclica
