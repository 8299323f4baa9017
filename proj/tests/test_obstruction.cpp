#include "tcs/contfrac.hpp"
#include "tcs/errors.hpp"
#include "tcs/obstruction.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace tcs;

namespace {

ObstructionQuery q3(Fraction a, Fraction b, Fraction c) {
    return {std::move(a), std::move(b), std::move(c)};
}

} // namespace

TEST_CASE("search_witness examples") {
    const SearchOutcome pos = search_witness(q3(Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3)));
    REQUIRE(pos.status == SearchStatus::Witness);
    CHECK(*pos.witness == ObstructionWitness{2, {-1, -1, -1}});
    CHECK(pos.n == 3);

    const ObstructionQuery case3 = case3_query(Fraction(1, 3), Fraction(1, 3), Fraction(3, 2));
    CHECK(case3.c3 == Fraction(-3, 5));
    const SearchOutcome none = search_witness(case3);
    CHECK(none.status == SearchStatus::None);
    CHECK(none.bound_holds);
    CHECK(none.n == 2);

    CHECK_THROWS_AS(search_witness(q3(Fraction(-1, 2), Fraction(-1, 2), Fraction(0))), InputError);
}

TEST_CASE("case3_no_transverse examples") {
    CHECK(case3_no_transverse(Fraction(1, 3), Fraction(1, 3), Fraction(3, 2)));
    CHECK(case3_no_transverse(Fraction(1, 4), Fraction(2, 5), Fraction(1)));
    CHECK(case3_no_transverse(Fraction(1, 7), Fraction(3, 7), Fraction(19, 10)));
    CHECK_THROWS_AS(case3_query(Fraction(1, 2), Fraction(1, 3), Fraction(3, 2)), InputError);
    CHECK_THROWS_AS(case3_query(Fraction(1, 3), Fraction(1, 3), Fraction(2)), InputError);
}

TEST_CASE("Case 3 data never admits a witness") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        const Fraction r1 = oracle::random_fraction(rng, 60, Fraction(1, 60), Fraction(1, 2));
        const Fraction r2 = oracle::random_fraction(rng, 60, Fraction(1, 60), Fraction(1, 2));
        const Fraction s = oracle::random_fraction(rng, 60, Fraction(1), Fraction(2));
        const SearchOutcome out = search_witness(case3_query(r1, r2, s));
        CHECK(out.status == SearchStatus::None);
        CHECK(out.bound_holds);
    }
}

TEST_CASE("witness_for_k agrees with brute force") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        const ObstructionQuery q = q3(oracle::random_fraction(rng, 12, Fraction(-1), Fraction(0)),
                                      oracle::random_fraction(rng, 12, Fraction(-1), Fraction(0)),
                                      oracle::random_fraction(rng, 12, Fraction(-1), Fraction(0)));
        for (std::int64_t k = 1; k <= 10; ++k) {
            const auto w = witness_for_k(q, k);
            CHECK(w.has_value() == oracle::brute_force_witness(q.c1, q.c2, q.c3, k));
            if (w) {
                CHECK(is_witness(q, *w));
                CHECK(w->k == k);
            }
        }
    }
}

TEST_CASE("search outcome is consistent with its flags") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        const ObstructionQuery q = q3(oracle::random_fraction(rng, 10, Fraction(-1), Fraction(0)),
                                      oracle::random_fraction(rng, 10, Fraction(-1), Fraction(0)),
                                      oracle::random_fraction(rng, 10, Fraction(-1), Fraction(-1, 10)));
        const SearchOutcome out = search_witness(q);
        const Fraction sum = q.c1 + q.c2 + q.c3;
        CHECK(out.n == (Fraction(-1) / q.c3).ceil());
        CHECK(out.bound_holds == (sum < Fraction(-1) - Fraction(1, out.n)));
        switch (out.status) {
        case SearchStatus::Witness:
            REQUIRE(out.witness);
            CHECK(is_witness(q, *out.witness));
            CHECK(out.witness->k < out.n);
            break;
        case SearchStatus::None:
            CHECK(out.bound_holds);
            CHECK_FALSE(out.witness);
            break;
        case SearchStatus::Undetermined:
            CHECK_FALSE(out.bound_holds);
            CHECK_FALSE(out.witness);
            break;
        }
    }
}

TEST_CASE("is_witness rejects bad data") {
    const ObstructionQuery q = q3(Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3));
    CHECK(is_witness(q, {2, {-1, -1, -1}}));
    CHECK_FALSE(is_witness(q, {2, {-1, -1, 0}}));
    CHECK_FALSE(is_witness(q, {3, {-2, -1, -1}}));
    CHECK_FALSE(is_witness(q, {0, {0, 0, -1}}));
}
