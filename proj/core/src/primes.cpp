#include "cyclica/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "cyclica/nt.hpp"

namespace cyclica {

namespace {

PrimeRecord make_record(std::uint64_t p, std::uint64_t ell) {
    PrimeRecord rec;
    rec.p = p;
    rec.is_mersenne = p >= 3 && (p & (p + 1)) == 0;
    if (ell % p == 0) return rec;  // ord = 0, flags stay false
    rec.ord = nt::mult_order(ell % p, p);
    rec.primitive_root = rec.ord == p - 1;
    rec.ord_equals_half = 2 * rec.ord == p - 1;
    rec.base_is_qr = p > 2 && nt::legendre(ell, p) == 1;
    return rec;
}

bool matches(const PrimeRecord& rec, const PrimePredicate& pred) {
    switch (pred.kind) {
        case PrimePredicate::Kind::all:
            return true;
        case PrimePredicate::Kind::ord_lt_eps:
            return rec.ord >= 1 &&
                   double(rec.ord) < pred.eps * double(rec.p);
        case PrimePredicate::Kind::primitive_root:
            return rec.primitive_root;
        case PrimePredicate::Kind::mersenne:
            return rec.is_mersenne;
        case PrimePredicate::Kind::ord_half:
            return rec.ord_equals_half;
        case PrimePredicate::Kind::split_in_kql: {
            const std::uint64_t p = rec.p;
            if (rec.ord == 0 || p % pred.q != 1) return false;
            if (nt::powmod(pred.ell % p, (p - 1) / pred.q, p) != 1)
                return false;
            // The criterion forces ord | (p-1)/q; recheck the conclusion.
            if (rec.ord > (p - 1) / pred.q)
                throw std::logic_error(
                    "split criterion hit with ord above (p-1)/q");
            return true;
        }
    }
    return false;
}

void validate(const PrimePredicate& pred) {
    if (pred.ell < 2) throw std::invalid_argument("base must be >= 2");
    switch (pred.kind) {
        case PrimePredicate::Kind::ord_lt_eps:
            if (!(pred.eps > 0.0) || pred.eps >= 1.0)
                throw std::invalid_argument("eps must lie in (0, 1)");
            break;
        case PrimePredicate::Kind::split_in_kql:
            if (pred.q < 2 || !nt::is_prime(pred.q))
                throw std::invalid_argument("q must be prime");
            break;
        default:
            break;
    }
}

std::vector<PrimeRecord> scan(std::uint64_t lo, std::uint64_t hi,
                              const PrimePredicate& pred) {
    std::vector<PrimeRecord> out;
    for (std::uint64_t p = lo; p < hi; ++p) {
        if (!nt::is_prime(p)) continue;
        PrimeRecord rec = make_record(p, pred.ell);
        if (matches(rec, pred)) out.push_back(rec);
    }
    return out;
}

}  // namespace

PrimePredicate PrimePredicate::all(std::uint64_t ell) {
    PrimePredicate p;
    p.kind = Kind::all;
    p.ell = ell;
    return p;
}
PrimePredicate PrimePredicate::ord_lt_eps(double eps, std::uint64_t ell) {
    PrimePredicate p;
    p.kind = Kind::ord_lt_eps;
    p.eps = eps;
    p.ell = ell;
    return p;
}
PrimePredicate PrimePredicate::primitive_root(std::uint64_t ell) {
    PrimePredicate p;
    p.kind = Kind::primitive_root;
    p.ell = ell;
    return p;
}
PrimePredicate PrimePredicate::mersenne() {
    PrimePredicate p;
    p.kind = Kind::mersenne;
    return p;
}
PrimePredicate PrimePredicate::ord_half(std::uint64_t ell) {
    PrimePredicate p;
    p.kind = Kind::ord_half;
    p.ell = ell;
    return p;
}
PrimePredicate PrimePredicate::split_in_kql(std::uint64_t q,
                                            std::uint64_t ell) {
    PrimePredicate p;
    p.kind = Kind::split_in_kql;
    p.q = q;
    p.ell = ell;
    return p;
}

std::uint64_t ord_mod(std::uint64_t ell, std::uint64_t p) {
    if (!nt::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (ell % p == 0) throw std::invalid_argument("p divides the base");
    return nt::mult_order(ell % p, p);
}

std::vector<PrimeRecord> search_primes(std::uint64_t lo, std::uint64_t hi,
                                       const PrimePredicate& predicate,
                                       unsigned jobs) {
    validate(predicate);
    if (lo < 2) lo = 2;
    if (hi <= lo) return {};

    jobs = std::max(1u, jobs);
    if (jobs == 1 || hi - lo < 4 * jobs) return scan(lo, hi, predicate);

    std::vector<std::vector<PrimeRecord>> parts(jobs);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (hi - lo) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        std::uint64_t a = lo + t * chunk;
        std::uint64_t b = (t + 1 == jobs) ? hi : a + chunk;
        pool.emplace_back(
            [&, t, a, b] { parts[t] = scan(a, b, predicate); });
    }
    for (auto& th : pool) th.join();
    std::vector<PrimeRecord> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace cyclica
