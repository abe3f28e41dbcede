#include <doctest.h>

#include "snd/competition.hpp"

using namespace snd;

TEST_CASE("competition probability worked examples") {
    CHECK(competition_probability(2, 4) == Rational(7, 8));
    CHECK(competition_probability(3, 3) == Rational(1, 2));
    CHECK(competition_probability(2, 2) == Rational(1, 2));
    CHECK_THROWS_AS(competition_probability(1, 4), std::invalid_argument);
}

TEST_CASE("winning sequence counts") {
    CHECK(winning_sequence_count(2, 0) == 1);
    // |W_C| = l' - 1 distinct winning assemblies for (l, l') = (2, 4).
    long long l = 2, lp = 4;
    long long assemblies = 0;
    Rational total = 0;
    for (long long i = 0; i <= lp - 2; ++i) {
        ++assemblies;
        total += Rational(winning_sequence_count(l, i), pow2(static_cast<unsigned>(l + i - 1)));
    }
    CHECK(assemblies == lp - 1);
    CHECK(total == competition_probability(l, lp));
}

TEST_CASE("count-sum identity matches the closed sum for all small lengths") {
    for (long long l = 2; l <= 12; ++l)
        for (long long lp = 2; lp <= 12; ++lp) {
            Rational total = 0;
            for (long long i = 0; i <= lp - 2; ++i)
                total += Rational(winning_sequence_count(l, i),
                                  pow2(static_cast<unsigned>(l + i - 1)));
            CHECK(total == competition_probability(l, lp));
        }
}

TEST_CASE("read gadget probability closed form") {
    for (long long h = 6; h <= 24; ++h) {
        Rational p = read_gadget_probability(h);
        CHECK(p == competition_probability(4, 4 * h - 10));
        CHECK(p >= Rational(1) - Rational(1, pow2(static_cast<unsigned>(h))));
    }
    CHECK_THROWS_AS(read_gadget_probability(5), std::invalid_argument);
}

TEST_CASE("theorem 1 product bound") {
    CHECK(theorem1_lower_bound({{2, 4, false}, {3, 3, false}}) == Rational(7, 16));
    CHECK(theorem1_lower_bound({{2, 4, false}, {2, 4, false}, {2, 4, false}}) ==
          Rational(343, 512));
    CHECK(theorem1_lower_bound({{0, 0, true}}) == Rational(1));
    CHECK_THROWS_AS(theorem1_lower_bound({}), std::invalid_argument);
}

TEST_CASE("geometric series identity (closed form check)") {
    auto [lhs2, rhs2] = closed_form_check(2);
    CHECK(lhs2 == Rational(1, 8));
    CHECK(rhs2 == Rational(1, 8));
    for (long long n = 2; n <= 40; ++n) {
        auto [lhs, rhs] = closed_form_check(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("height inequality") {
    // 2^10 = 1024 >= 242 at the base.
    CHECK(h_inequality_check(6));
    for (long long hh = 6; hh <= 40; ++hh) CHECK(h_inequality_check(hh));
    // Below the precondition the inequality genuinely fails: 128 < 134.
    CHECK(pow2(7) < 16 * BigInt(5) * 5 - 68 * 5 + 74);
    CHECK_THROWS_AS(h_inequality_check(5), std::invalid_argument);
}

TEST_CASE("monotonicity of the race probability in both path lengths") {
    for (long long l = 2; l <= 12; ++l)
        for (long long lp = 2; lp < 12; ++lp)
            CHECK(competition_probability(l, lp) < competition_probability(l, lp + 1));
    for (long long lp = 2; lp <= 12; ++lp)
        for (long long l = 2; l < 12; ++l)
            CHECK(competition_probability(l + 1, lp) < competition_probability(l, lp));
}

TEST_CASE("the two race roles partition the outcome space") {
    for (long long l = 2; l <= 12; ++l)
        for (long long lp = 2; lp <= 12; ++lp)
            CHECK(competition_probability(l, lp) + competition_probability(lp, l) == Rational(1));
}
