#include <gtest/gtest.h>

#include <json.hpp>

#include "zhu/engine.hpp"
#include "zhu/identities.hpp"

using namespace zhu;

TEST(Identities, DefaultSweepsHaveNoCounterexamples) {
    for (const auto& name : identity_names()) {
        IdentityReport r = check_identity(name);
        EXPECT_GT(r.tuples_checked, 0) << name;
        EXPECT_TRUE(r.pass()) << name << ": " << r.counterexamples.size() << " counterexamples, first "
                              << (r.counterexamples.empty() ? "" : r.counterexamples[0].tuple);
    }
}

TEST(Identities, AlternatingBinomialExamples) {
    EXPECT_EQ(alternating_binomial_sum(3, 1, 2), binom(1, 2));
    EXPECT_EQ(alternating_binomial_sum(3, 1, 2), Rational(0));
    // n = 1, k = 1, j = 2: r = 1, m = 0, s = 2.
    EXPECT_EQ(alternating_binomial_sum(1, 0, 2), Rational(-1));
    EXPECT_EQ(binom(-1, 1), Rational(-1));
    for (long long r = 0; r <= 8; ++r)
        for (long long m = 0; m <= r; ++m) EXPECT_EQ(alternating_binomial_sum(r, m, 0), binom(r, r - m));
    // Terms past l = r do not vanish when s > r, so the sum stops at r.
    Rational unbounded;
    for (long long l = 0; l <= 1; ++l) unbounded += Rational(neg_one_pow(l)) * binom(1, l) * binom(0 - l, 0);
    EXPECT_NE(unbounded, binom(-1, 0));
    EXPECT_EQ(alternating_binomial_sum(0, 0, 1), binom(-1, 0));
}

TEST(Identities, UnitSumExamples) {
    for (long long nk = 1; nk <= 12; ++nk) EXPECT_EQ(unit_sum_sum(nk, 0, 1), Rational(1));
    EXPECT_EQ(unit_sum_sum(1, 1, 2), Rational(1));
    for (long long n = 0; n <= 6; ++n)
        for (long long k = 1 - n; n + k <= 12; ++k)
            for (long long j = 1; j <= n + k; ++j) EXPECT_EQ(unit_sum_sum(n, k, j), Rational(1));
}

TEST(Identities, TripleBinomialVanishes) {
    EXPECT_EQ(triple_binomial_sum(1, 1, 1, 4), Rational(0));
    EXPECT_EQ(triple_binomial_sum(2, 0, 2, 5), Rational(0));
}

TEST(Identities, CjRegimes) {
    IdentityReport r = check_cj();
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(cj_coefficient(2, 1), Rational(0));
    EXPECT_EQ(cj_coefficient(1, 2), Rational(-3));
    EXPECT_NE(cj_coefficient(1, -2), Rational(0));
}

TEST(Identities, ReportsAreDeterministicJson) {
    IdentityReport a = check_identity("triple_binomial"), b = check_identity("triple_binomial");
    EXPECT_EQ(a.to_json(), b.to_json());
    auto j = nlohmann::json::parse(a.to_json());
    EXPECT_EQ(j["identity"], "triple_binomial");
    EXPECT_EQ(j["tuples_checked"].get<long long>(), a.tuples_checked);
    EXPECT_TRUE(j["counterexamples"].is_array());
}

TEST(Identities, RangesAndErrors) {
    IdentityRanges small;
    small.n = {0, 1};
    small.k = {0, 1};
    small.m_extra = 2;
    IdentityReport r = check_triple_binomial(small);
    EXPECT_TRUE(r.pass());
    EXPECT_LT(r.tuples_checked, check_triple_binomial().tuples_checked);
    IdentityRanges bad;
    bad.n = {3, 1};
    EXPECT_THROW(check_triple_binomial(bad), std::invalid_argument);
    EXPECT_THROW(check_identity("nope"), std::invalid_argument);
}
