#include "doctest.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cyclica/field.hpp"

using namespace cyclica;

namespace {

// Independent irreducibility oracle over F_2 for packed-bit polynomials:
// searches for any nontrivial monic divisor by long division on bits.
bool gf2_has_divisor(std::uint64_t poly, int deg) {
    auto degree = [](std::uint64_t v) {
        return 63 - __builtin_clzll(v);
    };
    for (int d = 1; 2 * d <= deg; ++d) {
        for (std::uint64_t low = 0; low < (1ull << d); ++low) {
            std::uint64_t div = (1ull << d) | low;
            std::uint64_t rem = poly;
            while (rem != 0 && degree(rem) >= d)
                rem ^= div << (degree(rem) - d);
            if (rem == 0) return true;
        }
    }
    return false;
}

std::uint64_t packed_value(const Field& f) {
    const auto& m = f.modulus();
    std::uint64_t v = 0;
    for (std::size_t i = m.size(); i-- > 0;) v = v * f.ell() + m[i];
    return v;
}

}  // namespace

TEST_CASE("modulus choice is the smallest irreducible (pinned + oracle)") {
    // Pinned constructions used everywhere downstream.
    CHECK(Field::extension(2, 3).modulus() ==
          std::vector<std::uint64_t>{1, 1, 0, 1});  // X^3 + X + 1
    CHECK(Field::extension(3, 2).modulus() ==
          std::vector<std::uint64_t>{1, 0, 1});  // X^2 + 1

    // Oracle for F_2 extensions: the chosen modulus is irreducible and no
    // smaller packed candidate is, by an independent bit-level division.
    for (unsigned r : {2u, 3u, 4u, 8u}) {
        Field f = Field::extension(2, r);
        std::uint64_t chosen = packed_value(f);
        CHECK_FALSE(gf2_has_divisor(chosen, static_cast<int>(r)));
        for (std::uint64_t v = 1ull << r; v < chosen; ++v)
            CHECK(gf2_has_divisor(v, static_cast<int>(r)));
    }

    // Same construction twice gives the same field.
    CHECK(Field::extension(2, 8) == Field::extension(2, 8));
}

TEST_CASE("frobenius fixed-point criterion certifies modulus degree") {
    // X generates F_{2^r} over F_2 iff x^(2^r) = x and x^(2^d) != x for
    // every proper divisor d of r; this certifies irreducibility without
    // reusing the construction's trial division.
    for (unsigned r : {2u, 3u, 5u, 8u, 10u, 13u}) {
        Field f = Field::extension(2, r);
        ff_t x = f.from_coeffs({0, 1});
        ff_t y = x;
        for (unsigned i = 0; i < r; ++i) y = f.frobenius(y);
        CHECK(y == x);
        for (unsigned d = 1; d < r; ++d) {
            if (r % d != 0) continue;
            ff_t z = x;
            for (unsigned i = 0; i < d; ++i) z = f.frobenius(z);
            CHECK(z != x);
        }
    }
}

TEST_CASE("field axioms hold exhaustively on F_8 and F_9") {
    for (const Field& f : {Field::extension(2, 3), Field::extension(3, 2)}) {
        const std::uint64_t q = f.size();
        for (ff_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1);
            }
            for (ff_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                // Frobenius is additive.
                CHECK(f.pow(f.add(a, b), f.ell()) ==
                      f.add(f.pow(a, f.ell()), f.pow(b, f.ell())));
                for (ff_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) ==
                          f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("tabled and generic arithmetic agree") {
    // F_{2^17} exceeds the table limit, F_{2^13} does not; checking the
    // subfield embedding x -> same packed constants is not possible here,
    // so instead verify both fields satisfy x^(q-1) = 1 on samples and
    // that F_{2^13} multiplication matches a manual carryless product.
    Field big = Field::extension(2, 17);
    for (ff_t a : std::vector<ff_t>{1, 2, 12345, 99999, big.size() - 1})
        CHECK(big.pow(a, big.size() - 1) == 1);

    Field f = Field::extension(2, 13);
    auto slow_mul = [&](ff_t a, ff_t b) {
        // Shift-xor product reduced by the modulus bits.
        std::uint64_t mbits = packed_value(f);
        unsigned __int128 prod = 0;
        for (unsigned i = 0; i < 13; ++i)
            if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
        for (int k = 24; k >= 13; --k)
            if ((prod >> k) & 1) prod ^= static_cast<unsigned __int128>(mbits) << (k - 13);
        return static_cast<ff_t>(prod);
    };
    for (ff_t a = 1; a < f.size(); a += 97)
        for (ff_t b = 7; b < f.size(); b += 131)
            CHECK(f.mul(a, b) == slow_mul(a, b));
}

TEST_CASE("trace is linear, Galois-invariant and balanced") {
    for (const Field& f :
         {Field::extension(2, 3), Field::extension(3, 2), Field::extension(2, 8)}) {
        const std::uint64_t q = f.size();
        std::map<ff_t, std::uint64_t> histogram;
        for (ff_t a = 0; a < q; ++a) {
            ff_t t = f.trace(a);
            CHECK(t < f.ell());
            histogram[t]++;
            CHECK(f.trace(f.frobenius(a)) == t);
        }
        // Surjective and balanced: every value of F_ell hit q/ell times.
        CHECK(histogram.size() == f.ell());
        for (auto [v, count] : histogram) CHECK(count == q / f.ell());
        // Additivity on a grid.
        for (ff_t a = 0; a < q; a += 3)
            for (ff_t b = 0; b < q; b += 5)
                CHECK(f.trace(f.add(a, b)) == f.add(f.trace(a), f.trace(b)));
    }
    CHECK(Field::extension(2, 3).trace(1) == 1);  // r mod ell = 3 mod 2
    CHECK(Field::extension(3, 2).trace(1) == 2);  // 2 mod 3
    CHECK(Field::extension(2, 8).trace(1) == 0);  // 8 mod 2
}

TEST_CASE("element orders divide q-1 and a generator exists") {
    for (const Field& f : {Field::extension(2, 3), Field::extension(3, 2),
                           Field::prime_field(23)}) {
        const std::uint64_t q = f.size();
        bool has_generator = false;
        for (ff_t a = 1; a < q; ++a) {
            std::uint64_t ord = f.element_order(a);
            CHECK((q - 1) % ord == 0);
            // Oracle: repeated multiplication reaches 1 first at ord.
            ff_t x = a;
            std::uint64_t steps = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++steps;
            }
            CHECK(steps == ord);
            if (ord == q - 1) has_generator = true;
        }
        CHECK(has_generator);
        CHECK(f.element_order(1) == 1);
    }
}

TEST_CASE("packing round-trips and input validation") {
    Field f = Field::extension(3, 2);
    for (ff_t a = 0; a < f.size(); ++a)
        CHECK(f.from_coeffs(f.coeffs(a)) == a);
    CHECK(f.from_int(5) == 2);
    CHECK(f.coeffs(5) == std::vector<std::uint64_t>{2, 1});

    CHECK_THROWS_AS(f.add(9, 0), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    CHECK_THROWS_AS(f.div(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(f.from_coeffs({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime_field(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::extension(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field().size(), std::logic_error);  // empty handle

    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
}
