#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "zhu/linalg.hpp"

using namespace zhu;

namespace {

Coef C(const char* s) { return Coef::parse(s); }

}  // namespace

TEST(Solve, Identity) {
    SparseMatrix a = SparseMatrix::identity(3);
    SolveResult r = solve(a, {C("1"), C("c"), C("h")});
    ASSERT_TRUE(r.consistent);
    EXPECT_EQ(r.solution, (std::vector<Coef>{C("1"), C("c"), C("h")}));
}

TEST(Solve, UpperTriangularSymbolic) {
    SparseMatrix a(2, 2);
    a.set(0, 0, C("c"));
    a.set(0, 1, C("1"));
    a.set(1, 1, C("c"));
    SolveResult r = solve(a, {C("c+1"), C("c^2")});
    ASSERT_TRUE(r.consistent);
    EXPECT_EQ(r.solution[0], C("1/c"));
    EXPECT_EQ(r.solution[1], C("c"));
}

TEST(Solve, ZeroRightHandSide) {
    SparseMatrix a(2, 3);
    a.set(0, 0, C("c"));
    a.set(1, 2, C("h-1"));
    SolveResult r = solve(a, {Coef(), Coef()});
    ASSERT_TRUE(r.consistent);
    for (const Coef& x : r.solution) EXPECT_TRUE(x.is_zero());
}

TEST(Solve, Inconsistent) {
    SparseMatrix a(2, 1);
    a.set(0, 0, C("1"));
    a.set(1, 0, C("c"));
    EXPECT_FALSE(solve(a, {C("1"), C("1")}).consistent);
    EXPECT_TRUE(solve(a, {C("1"), C("c")}).consistent);
}

TEST(Rank, Basics) {
    EXPECT_EQ(rank(SparseMatrix(3, 4)), 0u);
    SparseMatrix a(3, 3);
    a.set(0, 0, C("c"));
    a.set(0, 1, C("1/2"));
    a.set(1, 0, C("c"));
    a.set(1, 1, C("1/2"));
    EXPECT_EQ(rank(a), 1u);
    a.set(2, 2, C("h"));
    EXPECT_EQ(rank(a), 2u);
}

TEST(RowSpace, MembershipRechecks) {
    SparseMatrix a(2, 3);
    a.set(0, 0, C("1"));
    a.set(0, 1, C("c"));
    a.set(1, 1, C("1"));
    a.set(1, 2, C("h"));
    std::vector<Coef> v{C("2"), C("2*c + 3"), C("3*h")};
    auto y = row_space_membership(a, v);
    ASSERT_TRUE(y);
    EXPECT_EQ((*y)[0], C("2"));
    EXPECT_EQ((*y)[1], C("3"));
    EXPECT_FALSE(row_space_membership(a, {C("0"), C("0"), C("1")}));
}

TEST(Dump, TripletFormat) {
    SparseMatrix a(2, 2);
    a.set(1, 0, C("c/2"));
    std::ostringstream os;
    a.dump(os);
    EXPECT_EQ(os.str(), "2 2 1\n1 0 1/2*c\n");
}

TEST(Echelon, ExpressesCombinationsOfInputs) {
    using E = Echelon<int, std::less<int>>;
    E e;
    E::Row r0{{0, C("1")}, {1, C("c")}}, r1{{1, C("1")}, {2, C("1")}}, r2{{0, C("1")}, {1, C("c - 1")}, {2, C("-1")}};
    EXPECT_TRUE(e.insert(r0));
    EXPECT_TRUE(e.insert(r1));
    EXPECT_FALSE(e.insert(r2));  // r0 - r1
    EXPECT_EQ(e.rank(), 2u);
    E::Row target{{0, C("h")}, {1, C("h*c + 2")}, {2, C("2")}};
    auto coeffs = e.express(target);
    ASSERT_TRUE(coeffs);
    E::Row sum;
    std::vector<E::Row> in{r0, r1, r2};
    for (const auto& [id, f] : *coeffs)
        for (const auto& [k, v] : in[id]) sum[k] += f * v;
    for (auto it = sum.begin(); it != sum.end();) it = it->second.is_zero() ? sum.erase(it) : std::next(it);
    EXPECT_EQ(sum, target);
    EXPECT_FALSE(e.express(E::Row{{3, C("1")}}));
    EXPECT_TRUE(e.express(E::Row{})->empty());
}

TEST(LinalgProperty, RandomSystemsAgreeWithSpecialization) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
        SparseMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (rng() % 3 == 0) continue;
                Coef v = Coef(coef(rng)) + Coef(coef(rng)) * Coef::param(kC);
                if (rng() % 4 == 0) v = v / (Coef::param(kC) + Coef(2));
                a.set(i, j, v);
            }
        std::vector<Coef> x(m);
        for (auto& xi : x) xi = Coef(coef(rng)) + Coef::param(kC) * Coef(coef(rng));
        std::vector<Coef> b = a.multiply(x);
        SolveResult r = solve(a, b);
        ASSERT_TRUE(r.consistent);
        EXPECT_EQ(a.multiply(r.solution), b);
        // Duplicating a row leaves the rank unchanged.
        SparseMatrix dup(n + 1, m);
        for (const auto& [rc, v] : a.entries()) dup.set(rc.first, rc.second, v);
        for (std::size_t j = 0; j < m; ++j) dup.set(n, j, a.at(0, j));
        EXPECT_EQ(rank(dup), r.rank);
        // Specialize c -> 5/3 when no pivot vanishes there.
        Bindings at;
        at[kC] = Rational(5, 3);
        SparseMatrix sa = a.substitute(at);
        if (rank(sa) != r.rank) continue;
        bool square_full = r.rank == m;
        if (!square_full) continue;
        std::vector<Coef> sb;
        for (const Coef& v : b) sb.push_back(v.substitute(at));
        SolveResult sr = solve(sa, sb);
        ASSERT_TRUE(sr.consistent);
        for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(sr.solution[j], r.solution[j].substitute(at));
        ++checked;
    }
    EXPECT_GT(checked, 20);
}
