#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

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

std::multiset<std::uint64_t> all_dims(
    const std::shared_ptr<const Factorization>& fact) {
    std::multiset<std::uint64_t> dims;
    IdealStream stream(fact);
    while (auto d = stream.next()) dims.insert(d->dim);
    return dims;
}

}  // namespace

TEST_CASE("ideal lattice of GF(2)[X]/(X^7-1)") {
    auto fact = make_fact(2, 7);
    REQUIRE(fact->factors.size() == 3);

    CHECK(all_dims(fact) == std::multiset<std::uint64_t>{0, 1, 3, 3, 4, 4, 6, 7});

    // Mask 0 is the zero ideal, full mask the unit ideal.
    auto zero = ideal_from_mask(fact, 0);
    CHECK(zero.dim == 0);
    CHECK(zero.generator() == Poly::xn_minus_1(fact->ring.field, 7));
    auto unit = ideal_from_mask(fact, 7);
    CHECK(unit.dim == 7);
    CHECK(unit.generator() == Poly::one(fact->ring.field));

    // Every generator is a monic divisor of X^7 - 1 of degree 7 - dim.
    IdealStream stream(fact);
    Poly xp1 = Poly::xn_minus_1(fact->ring.field, 7);
    while (auto d = stream.next()) {
        Poly g = d->generator();
        CHECK(g.is_monic());
        CHECK(g.deg() == 7 - int(d->dim));
        CHECK((xp1 % g).is_zero());
        CHECK(ideal_from_mask(fact, d->mask()).present == d->present);
    }
}

TEST_CASE("classifying an element recovers its ideal") {
    auto fact = make_fact(2, 7);
    IdealStream stream(fact);
    while (auto d = stream.next()) {
        Poly g = d->generator();
        auto back = ideal_from_generator(fact, g);
        CHECK(back.present == d->present);
        CHECK(back.dim == d->dim);

        // X^t * g and u * g for u coprime to X^7 - 1 span the same ideal.
        if (!g.is_zero() && d->dim > 0) {
            auto shifted = ideal_from_generator(
                fact, (Poly::monomial(fact->ring.field, 1, 3) * g)
                          .fold_mod_xn_minus_1(7));
            CHECK(shifted.present == d->present);
            Poly u(fact->ring.field, {1, 1, 1});  // order-3 roots, coprime
            auto scaled = ideal_from_generator(fact, u * g);
            CHECK(scaled.present == d->present);
        }
    }

    // The ring's own root-counting is an independent route to dim.
    Ring R = fact->ring;
    for (std::uint64_t bits = 1; bits < 128; bits += 5) {
        std::vector<ff_t> c(7);
        for (int i = 0; i < 7; ++i) c[i] = bits >> i & 1;
        RingElem f(R, c);
        if (f.is_zero()) continue;
        CHECK(ideal_from_element(fact, f).dim == ideal_dim(*fact, f));
    }

    CHECK(ideal_from_generator(fact, Poly::zero(fact->ring.field)).dim == 0);
    CHECK(ideal_from_generator(fact, Poly::xn_minus_1(fact->ring.field, 7)).dim == 0);
    CHECK(ideal_from_generator(fact, Poly::one(fact->ring.field)).dim == 7);
    CHECK_THROWS_AS(
        ideal_from_generator(fact, Poly::one(Field::prime_field(3))),
        std::invalid_argument);
}

TEST_CASE("containment is subset order on present factors") {
    auto fact = make_fact(2, 7);
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) {
            auto ia = ideal_from_mask(fact, a);
            auto ib = ideal_from_mask(fact, b);
            bool subset = (b & ~a) == 0;
            CHECK(ideal_contains(ia, ib) == subset);
            if (subset) CHECK(ib.dim <= ia.dim);
        }
    CHECK_THROWS_AS(
        ideal_contains(ideal_from_mask(fact, 1),
                       ideal_from_mask(make_fact(2, 23), 1)),
        std::invalid_argument);
}

TEST_CASE("dimension censuses match hand counts") {
    // ord_11(2) = 10: one big factor.
    auto c11 = ideal_dim_census(make_fact(2, 11));
    CHECK(c11 == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                     {0, 1}, {1, 1}, {10, 1}, {11, 1}});

    // ord_23(2) = 11: two factors of degree 11.
    auto c23 = ideal_dim_census(make_fact(2, 23));
    CHECK(c23 == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                     {0, 1}, {1, 1}, {11, 2}, {12, 2}, {22, 1}, {23, 1}});

    auto dims23 = all_dims(make_fact(2, 23));
    CHECK(dims23 ==
          std::multiset<std::uint64_t>{0, 1, 11, 11, 12, 12, 22, 23});
}

TEST_CASE("two-million-ideal lattice is countable without materializing") {
    // ord_61(13) = 3, so s = 20 nontrivial factors: 2^21 ideals.
    auto fact = make_fact(13, 61);
    REQUIRE(fact->r == 3);
    REQUIRE(fact->s == 20);

    auto census = ideal_dim_census(fact);
    std::uint64_t total = 0;
    for (auto [dim, count] : census) {
        (void)dim;
        total += count;
    }
    CHECK(total == (1ull << 21));

    // Spot values: dim = b + 3a counted by C(20, a).
    std::map<std::uint64_t, std::uint64_t> by_dim(census.begin(), census.end());
    CHECK(by_dim[0] == 1);
    CHECK(by_dim[1] == 1);
    CHECK(by_dim[3] == 20);
    CHECK(by_dim[4] == 20);
    CHECK(by_dim[30] == 184756);
    CHECK(by_dim[31] == 184756);
    CHECK(by_dim[61] == 1);

    std::uint64_t streamed = 0;
    IdealStream stream(fact);
    CHECK(stream.total() == (1ull << 21));
    while (auto d = stream.next()) {
        (void)d;
        ++streamed;
    }
    CHECK(streamed == (1ull << 21));
}

TEST_CASE("dimension range enumeration respects its budget") {
    auto fact = make_fact(2, 23);
    auto picked = ideals_in_dim_range(fact, 11, 13);
    REQUIRE(picked.size() == 4);
    std::multiset<std::uint64_t> dims;
    for (auto& d : picked) dims.insert(d.dim);
    CHECK(dims == std::multiset<std::uint64_t>{11, 11, 12, 12});
    // Masks come out ascending.
    for (std::size_t i = 1; i < picked.size(); ++i)
        CHECK(picked[i - 1].mask() < picked[i].mask());

    CHECK_THROWS_AS(ideals_in_dim_range(fact, 0, 24, 4), BudgetExceeded);
    CHECK(ideals_in_dim_range(fact, 0, 24, 4, true).size() == 8);
}

TEST_CASE("seeded sampling hits the window deterministically") {
    // ord_127(2) = 7: s = 18, dims b + 7a.
    auto fact = make_fact(2, 127);
    REQUIRE(fact->r == 7);
    REQUIRE(fact->s == 18);

    auto run1 = sample_ideals_in_dim_range(fact, 60, 70, 50, 12345);
    auto run2 = sample_ideals_in_dim_range(fact, 60, 70, 50, 12345);
    REQUIRE(run1.size() == 50);
    for (std::size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].present == run2[i].present);
        CHECK(run1[i].dim >= 60);
        CHECK(run1[i].dim < 70);
        CHECK((run1[i].dim == 63 || run1[i].dim == 64));
    }

    CHECK_THROWS_AS(sample_ideals_in_dim_range(fact, 2, 3, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("characteristic-p chain ring is rejected by the lattice API") {
    auto fact = std::make_shared<const Factorization>(
        factorize_xp1(make_ring(Field::prime_field(5), 5)));
    REQUIRE(fact->ring.char_p);
    CHECK_THROWS_AS(IdealStream{fact}, std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_mask(fact, 0), std::invalid_argument);
    CHECK_THROWS_AS(ideal_dim_census(fact), std::invalid_argument);
}

TEST_CASE("present index validation") {
    auto fact = make_fact(2, 7);
    CHECK_THROWS_AS(ideal_from_present(fact, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_present(fact, {3}), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_mask(fact, 8), std::invalid_argument);
    // Unsorted input is accepted and canonicalized.
    auto d = ideal_from_present(fact, {2, 0});
    CHECK(d.present == std::vector<std::uint32_t>{0, 2});
    CHECK(d.dim == 4);
}
