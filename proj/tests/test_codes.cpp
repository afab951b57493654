#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclica/codes.hpp"
#include "cyclica/errors.hpp"
#include "cyclica/ideals.hpp"
#include "cyclica/nt.hpp"
#include "cyclica/ring.hpp"
#include "doctest.h"

using namespace cyclica;

namespace {

std::shared_ptr<const Factorization> make_fact(std::uint64_t ell,
                                               std::uint64_t p) {
    return std::make_shared<const Factorization>(
        factorize_xp1(make_ring(Field::prime_field(ell), p)));
}

// Reference distance: walk every message as a polynomial, multiply by the
// generator with plain polynomial arithmetic, fold, and take the weight.
// Shares no code with the Gray/odometer kernels.
struct OracleResult {
    std::uint64_t d;
    std::vector<ff_t> witness;
};

OracleResult oracle_distance(const CyclicCode& code) {
    const Field& F = code.fact->ring.field;
    const std::uint64_t q = F.size(), p = code.n;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < code.k; ++i) total *= q;

    auto value_less = [](const std::vector<ff_t>& a,
                         const std::vector<ff_t>& b) {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };

    OracleResult best{~0ull, {}};
    std::vector<ff_t> msg(code.k, 0);
    for (std::uint64_t m = 1; m < total; ++m) {
        // Plain base-q digits of m, no incremental state.
        std::uint64_t v = m;
        for (std::uint64_t i = 0; i < code.k; ++i) {
            msg[i] = v % q;
            v /= q;
        }
        Poly cw = (Poly(F, msg) * code.gen).fold_mod_xn_minus_1(p);
        std::vector<ff_t> word(p, 0);
        for (int i = 0; i <= cw.deg(); ++i) word[i] = cw.coeff(i);
        std::uint64_t wt = cw.weight();
        if (wt < best.d || (wt == best.d && value_less(word, best.witness)))
            best = {wt, word};
    }
    return best;
}

}  // namespace

TEST_CASE("binary length-7 codes: every ideal against the oracle") {
    auto fact = make_fact(2, 7);
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
        CyclicCode code = code_from_ideal(ideal_from_mask(fact, mask));
        DistanceResult d = min_distance_exact(code);
        OracleResult ref = oracle_distance(code);
        CHECK(d.distance == ref.d);
        CHECK(d.witness == ref.witness);
        CHECK(d.exact);
        CHECK(d.enumerated == (1ull << code.k) - 1);
        CHECK(d.distance <= code.n - code.k + 1);  // Singleton
        CHECK(verify_codeword(code, d.witness, d.distance));
    }

    // The [7,4,3] Hamming code is the residue code at p = 7.
    CyclicCode qr = quadratic_residue_code(7);
    CHECK(qr.k == 4);
    CHECK(qr.gen.deg() == 3);
    CHECK(min_distance_exact(qr).distance == 3);
}

TEST_CASE("ternary length-11 codes: odometer kernel against the oracle") {
    auto fact = make_fact(3, 11);
    REQUIRE(fact->r == 5);
    std::multiset<std::uint64_t> dims;
    for (std::uint64_t mask = 1; mask < 8; ++mask) {
        CyclicCode code = code_from_ideal(ideal_from_mask(fact, mask));
        dims.insert(code.k);
        DistanceResult d = min_distance_exact(code);
        OracleResult ref = oracle_distance(code);
        CHECK(d.distance == ref.d);
        CHECK(d.witness == ref.witness);
        CHECK(verify_codeword(code, d.witness, d.distance));
        // The perfect ternary [11, 6, 5] code shows up at dimension 6.
        if (code.k == 6) CHECK(d.distance == 5);
        if (code.k == 5) CHECK(d.distance == 6);
    }
    CHECK(dims == std::multiset<std::uint64_t>{1, 5, 5, 6, 6, 10, 11});
}

TEST_CASE("named binary residue codes have their known distances") {
    struct Known {
        std::uint64_t p, k, d;
    };
    // [17,9,5], [23,12,7] (perfect Golay), [31,16,7], [47,24,11].
    for (Known want : {Known{17, 9, 5}, Known{23, 12, 7}, Known{31, 16, 7},
                       Known{47, 24, 11}}) {
        CyclicCode code = quadratic_residue_code(want.p);
        CHECK(code.k == want.k);
        DistanceResult d = min_distance_exact(code);
        CHECK(d.distance == want.d);
        CHECK(d.exact);
        CHECK(verify_codeword(code, d.witness, d.distance));
    }
}

TEST_CASE("expurgated residue codes at p = 17 and 23") {
    // Dropping X - 1 from the residue code adds one to the distance.
    for (auto [p, d_expect] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {17, 6}, {23, 8}}) {
        auto fact = make_fact(2, p);
        for (std::uint32_t i = 1; i <= 2; ++i) {
            CyclicCode code =
                code_from_ideal(ideal_from_present(fact, {i}));
            CHECK(code.k == (p - 1) / 2);
            CHECK(min_distance_exact(code).distance == d_expect);
        }
    }
}

TEST_CASE("threaded Gray walk agrees with the single-threaded one") {
    CyclicCode golay = quadratic_residue_code(23);
    DistanceOptions seq, par;
    par.jobs = 3;
    DistanceResult a = min_distance_exact(golay, seq);
    DistanceResult b = min_distance_exact(golay, par);
    CHECK(a.distance == b.distance);
    CHECK(a.witness == b.witness);
    CHECK(a.enumerated == b.enumerated);
}

TEST_CASE("distance budget raises instead of silently truncating") {
    CyclicCode code = quadratic_residue_code(47);
    DistanceOptions tight;
    tight.budget = 1000;
    CHECK_THROWS_AS(min_distance_exact(code, tight), BudgetExceeded);
    // auto falls back to the sampling bound under the same budget.
    DistanceResult ub = min_distance_auto(code, tight);
    CHECK_FALSE(ub.exact);
    CHECK(ub.distance >= 11);
    CHECK(verify_codeword(code, ub.witness, ub.distance));
}

TEST_CASE("upper bound stages are sound and seeded") {
    CyclicCode golay = quadratic_residue_code(23);
    DistanceResult exact = min_distance_exact(golay);
    DistanceOptions opt;
    opt.seed = 7;
    DistanceResult ub1 = min_distance_upper(golay, opt);
    DistanceResult ub2 = min_distance_upper(golay, opt);
    CHECK(ub1.distance >= exact.distance);
    CHECK(ub1.distance <= golay.gen.weight());  // singles stage saw row 0
    CHECK(ub1.distance == ub2.distance);
    CHECK(ub1.witness == ub2.witness);
    CHECK(verify_codeword(golay, ub1.witness, ub1.distance));

    // Generic-field path of the same stages.
    auto fact = make_fact(3, 11);
    CyclicCode tern = code_from_ideal(ideal_from_present(fact, {0, 1}));
    DistanceResult tub = min_distance_upper(tern, opt);
    CHECK(tub.distance >= min_distance_exact(tern).distance);
    CHECK(verify_codeword(tern, tub.witness, tub.distance));
}

TEST_CASE("witness verification rejects frauds") {
    CyclicCode qr = quadratic_residue_code(7);
    DistanceResult d = min_distance_exact(qr);
    REQUIRE(d.distance == 3);
    CHECK_FALSE(verify_codeword(qr, d.witness, d.distance + 1));
    std::vector<ff_t> junk(7, 0);
    junk[0] = 1;  // weight-1 word is not a multiple of the generator
    CHECK_FALSE(verify_codeword(qr, junk, 1));
    std::vector<ff_t> zero(7, 0);
    CHECK_FALSE(verify_codeword(qr, zero, 0));
    CHECK_THROWS_AS(verify_codeword(qr, std::vector<ff_t>(6, 1), 6),
                    std::invalid_argument);
    std::vector<ff_t> bad(7, 0);
    bad[2] = 2;
    CHECK_THROWS_AS(verify_codeword(qr, bad, 1), std::invalid_argument);
}

TEST_CASE("residue code preconditions") {
    CHECK_THROWS_AS(quadratic_residue_code(11), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_residue_code(13), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_residue_code(8), std::invalid_argument);
}

TEST_CASE("generator classification reaches the canonical code") {
    auto fact = make_fact(2, 7);
    CyclicCode direct = code_from_ideal(ideal_from_mask(fact, 2));
    // A shifted, unit-scaled copy of the generator spans the same code.
    Poly g = direct.gen;
    Poly shifted =
        (Poly::monomial(fact->ring.field, 1, 5) * g).fold_mod_xn_minus_1(7);
    CyclicCode via = code_from_generator(fact, shifted);
    CHECK(via.gen == direct.gen);
    CHECK(via.ideal.present == direct.ideal.present);
    CHECK_THROWS_AS(code_from_generator(fact, Poly::zero(fact->ring.field)),
                    std::invalid_argument);
}

TEST_CASE("all length-5 codes over GF(11) meet the Singleton bound") {
    MdsReport report = mds_check_r1(11, 5);
    CHECK(report.all_mds);
    CHECK(report.rows.size() == 31);
    for (const auto& row : report.rows) {
        CHECK(row.mds);
        CHECK(row.d == 5 - row.k + 1);
    }
    // Spot-check one row against the oracle path.
    auto fact = make_fact(11, 5);
    CyclicCode code = code_from_ideal(ideal_from_mask(fact, 0b01011));
    CHECK(oracle_distance(code).d == 5 - 3 + 1);

    CHECK_THROWS_AS(mds_check_r1(7, 5), std::invalid_argument);
    CHECK_THROWS_AS(mds_check_r1(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(mds_check_r1(11, 21), std::invalid_argument);
}

TEST_CASE("good-code candidate picks the top of the window") {
    // At p = 23, eps = 1/2 the usable dimensions are 11 and 12; 11 is the
    // largest strictly below eps*p = 11.5, giving the expurgated Golay.
    GoodCodeReport rep = build_good_code_candidate(2, 23, 0.5);
    CHECK(rep.ideal.dim == 11);
    CHECK(rep.ideal.present == std::vector<std::uint32_t>{1});
    CHECK(rep.dist.exact);
    CHECK(rep.dist.distance == 8);
    CHECK(rep.rate == doctest::Approx(11.0 / 23.0));
    CHECK(rep.rel_distance == doctest::Approx(8.0 / 23.0));

    GoodCodeReport r17 = build_good_code_candidate(2, 17, 0.5);
    CHECK(r17.ideal.dim == 8);
    CHECK(r17.dist.distance == 6);

    // ord_7(2) = 3 >= eps * 7 for eps = 0.25: no window can exist.
    CHECK_THROWS_AS(build_good_code_candidate(2, 7, 0.25),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_good_code_candidate(2, 23, 0.0),
                    std::invalid_argument);
}

TEST_CASE("a wall-clock cap stops an exact walk early, flagged inexact") {
    auto fact = make_fact(2, 23);
    // Whole ring: 2^23 - 1 messages, far past the first clock probe.
    auto code = code_from_ideal(ideal_from_mask(fact, 0b111));
    DistanceOptions opt;
    opt.time_limit_s = 1e-9;
    auto res = min_distance_exact(code, opt);
    CHECK_FALSE(res.exact);
    CHECK(res.enumerated >= 65535);  // probes fire every 2^16 steps
    CHECK(res.enumerated < (1ull << 23) - 1);
    // The unit generator makes every X^i an early Gray-walk codeword.
    CHECK(res.distance == 1);
    CHECK(verify_codeword(code, res.witness, res.distance));

    SUBCASE("threaded walks wind down together") {
        opt.jobs = 2;
        auto threaded = min_distance_exact(code, opt);
        CHECK_FALSE(threaded.exact);
        CHECK(threaded.enumerated < (1ull << 23) - 1);
        CHECK(threaded.distance == 1);
    }

    SUBCASE("spaces smaller than one probe interval still finish exact") {
        auto small = code_from_ideal(ideal_from_mask(fact, 0b011));
        auto sres = min_distance_exact(small, opt);  // 4095 messages
        CHECK(sres.exact);
        CHECK(sres.distance == 7);
        CHECK(sres.enumerated == 4095);
    }

    SUBCASE("the generic odometer honors the same cap") {
        auto f3 = std::make_shared<const Factorization>(
            factorize_xp1(make_ring(Field::prime_field(3), 11)));
        auto full = code_from_ideal(
            ideal_from_mask(f3, (1ull << (f3->s + 1)) - 1));
        auto gres = min_distance_exact(full, opt);  // 3^11 - 1 messages
        CHECK_FALSE(gres.exact);
        CHECK(gres.enumerated >= 65535);
        CHECK(gres.enumerated < 177146);
        CHECK(gres.distance == 1);
    }
}
