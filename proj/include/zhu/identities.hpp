#pragma once

#include <string>
#include <vector>

#include "zhu/rational.hpp"

namespace zhu {

struct Interval {
    long long lo = 0;
    long long hi = 0;
};

// Sweep ranges. Constraint filters (k > -n, 1 <= j <= n+k, m > 2n+k, r >= m)
// are applied on top of the boxes.
struct IdentityRanges {
    Interval n{0, 6};
    Interval k{-6, 6};
    // m runs over 2n+k+1 .. 2n+k+m_extra (and the band n+1 .. 2n+k).
    long long m_extra = 12;
    Interval r{0, 12};
    Interval s{-12, 12};
    Interval j{-12, 12};  // C_j sweep
};

struct Counterexample {
    std::string tuple;  // e.g. "n=1 k=1 j=1 m=4"
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string identity;
    long long tuples_checked = 0;
    std::vector<Counterexample> counterexamples;
    bool pass() const { return counterexamples.empty(); }
    // {"identity", "tuples_checked", "counterexamples": [{"tuple", "lhs", "rhs"}]}
    std::string to_json() const;
};

// sum_{i=0}^{n+k} (-1)^(i+1) C(n+k,i) C(m-i-n-1,j-1) C(m-i-n-j-1,n+k-j)
Rational triple_binomial_sum(long long n, long long k, long long j, long long m);
// sum_{l=0}^{r} (-1)^l C(s,l) C(r-l,m)
Rational alternating_binomial_sum(long long r, long long m, long long s);
// sum_{r=0}^{j-1} (-1)^r C(n+k,j-1-r) C(n+k-j+r,r)
Rational unit_sum_sum(long long n, long long k, long long j);

// Vanishing for m > 2n+k; on the band n+1 <= m <= 2n+k the recursion
// coefficient (-1)^(m+k) C(m-n-1,j-1) C(m-n-j-1,n+k-j) is the indicator of
// j = m-n.
IdentityReport check_triple_binomial(const IdentityRanges& r = {});
// Both forms of the alternating binomial sum, plus the Vandermonde special case.
IdentityReport check_alternating_binomial(const IdentityRanges& r = {});
// C_j: 1 at j = 0, 0 for 0 < |j| <= n, closed form for j > n, nonzero with
// same-sign terms for j < -n.
IdentityReport check_cj(const IdentityRanges& r = {});
IdentityReport check_unit_sum(const IdentityRanges& r = {});

std::vector<std::string> identity_names();
// Throws std::invalid_argument for unknown names.
IdentityReport check_identity(const std::string& name, const IdentityRanges& r = {});

}  // namespace zhu
