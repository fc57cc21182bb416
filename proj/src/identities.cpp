#include "zhu/identities.hpp"

#include <stdexcept>

#include <json.hpp>

#include "zhu/engine.hpp"

namespace zhu {

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["tuples_checked"] = tuples_checked;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : counterexamples)
        j["counterexamples"].push_back({{"tuple", c.tuple}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
    return j.dump(2);
}

Rational triple_binomial_sum(long long n, long long k, long long j, long long m) {
    Rational s;
    for (long long i = 0; i <= n + k; ++i)
        s += Rational(-neg_one_pow(i)) * binom(n + k, i) * binom(m - i - n - 1, j - 1) * binom(m - i - n - j - 1, n + k - j);
    return s;
}

Rational alternating_binomial_sum(long long r, long long m, long long s) {
    Rational t;
    for (long long l = 0; l <= r; ++l) t += Rational(neg_one_pow(l)) * binom(s, l) * binom(r - l, m);
    return t;
}

Rational unit_sum_sum(long long n, long long k, long long j) {
    Rational t;
    for (long long r = 0; r <= j - 1; ++r) t += Rational(neg_one_pow(r)) * binom(n + k, j - 1 - r) * binom(n + k - j + r, r);
    return t;
}

namespace {

std::string tup(std::initializer_list<std::pair<const char*, long long>> xs) {
    std::string s;
    for (const auto& [k, v] : xs) {
        if (!s.empty()) s += ' ';
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

void expect(IdentityReport& rep, const std::string& t, const Rational& lhs, const Rational& rhs) {
    ++rep.tuples_checked;
    if (lhs != rhs) rep.counterexamples.push_back({t, lhs, rhs});
}

void validate(const Interval& i, const char* name) {
    if (i.lo > i.hi) throw std::invalid_argument(std::string("empty range for ") + name);
}

}  // namespace

IdentityReport check_triple_binomial(const IdentityRanges& rg) {
    validate(rg.n, "n");
    validate(rg.k, "k");
    IdentityReport rep;
    rep.identity = "triple_binomial";
    for (long long n = std::max(0LL, rg.n.lo); n <= rg.n.hi; ++n)
        for (long long k = std::max(rg.k.lo, -n + 1); k <= rg.k.hi; ++k)
            for (long long j = 1; j <= n + k; ++j) {
                for (long long m = 2 * n + k + 1; m <= 2 * n + k + rg.m_extra; ++m)
                    expect(rep, tup({{"n", n}, {"k", k}, {"j", j}, {"m", m}}), triple_binomial_sum(n, k, j, m), Rational(0));
                for (long long m = n + 1; m <= 2 * n + k; ++m)
                    expect(rep, tup({{"band", 1}, {"n", n}, {"k", k}, {"j", j}, {"m", m}}),
                           Rational(neg_one_pow(m + k)) * binom(m - n - 1, j - 1) * binom(m - n - j - 1, n + k - j),
                           Rational(j == m - n ? 1 : 0));
            }
    return rep;
}

IdentityReport check_alternating_binomial(const IdentityRanges& rg) {
    validate(rg.r, "r");
    validate(rg.s, "s");
    IdentityReport rep;
    rep.identity = "alternating_binomial";
    for (long long r = std::max(0LL, rg.r.lo); r <= rg.r.hi; ++r)
        for (long long m = 0; m <= r; ++m)
            for (long long s = rg.s.lo; s <= rg.s.hi; ++s) {
                expect(rep, tup({{"r", r}, {"m", m}, {"s", s}}), alternating_binomial_sum(r, m, s), binom(r - s, r - m));
                Rational van;
                for (long long l = 0; l <= r - m; ++l) van += binom(s, l) * binom(-m - 1, r - m - l);
                expect(rep, tup({{"vandermonde", 1}, {"r", r}, {"m", m}, {"s", s}}), van, binom(s - m - 1, r - m));
            }
    // Specialization r = n+k-1, m = n+k-j, s = n+k.
    for (long long n = std::max(0LL, rg.n.lo); n <= rg.n.hi; ++n)
        for (long long k = std::max(rg.k.lo, -n + 1); k <= rg.k.hi; ++k)
            for (long long j = 1; j <= n + k; ++j) {
                Rational lhs = alternating_binomial_sum(n + k - 1, n + k - j, n + k);
                expect(rep, tup({{"n", n}, {"k", k}, {"j", j}}), lhs, binom(-1, j - 1));
                expect(rep, tup({{"sign", 1}, {"n", n}, {"k", k}, {"j", j}}), binom(-1, j - 1), Rational(neg_one_pow(j - 1)));
            }
    return rep;
}

IdentityReport check_cj(const IdentityRanges& rg) {
    validate(rg.n, "n");
    validate(rg.j, "j");
    IdentityReport rep;
    rep.identity = "cj";
    for (long long n = std::max(0LL, rg.n.lo); n <= rg.n.hi; ++n)
        for (long long j = rg.j.lo; j <= rg.j.hi; ++j) {
            const std::string t = tup({{"n", n}, {"j", j}});
            Rational c = cj_coefficient(n, j);
            if (j == 0) {
                expect(rep, t, c, Rational(1));
            } else if (j > 0 && j <= n) {
                expect(rep, t, c, Rational(0));
            } else if (j > n) {
                expect(rep, t, c, Rational(neg_one_pow(n)) * binom(j + n, n) * binom(j - 1, n));
            } else if (j < -n) {
                ++rep.tuples_checked;
                int sign = 0;
                bool same = true;
                for (long long m = 0; m <= n; ++m) {
                    Rational term = Rational(neg_one_pow(m)) * binom(m + n, n) * binom(j + n, m + n);
                    if (term.is_zero()) same = false;
                    if (sign == 0) sign = term.sign();
                    if (term.sign() != sign) same = false;
                }
                if (c.is_zero() || !same) rep.counterexamples.push_back({t + " (sign pattern)", c, Rational(0)});
            } else {
                // -n <= j < 0
                expect(rep, t, c, Rational(0));
            }
        }
    return rep;
}

IdentityReport check_unit_sum(const IdentityRanges& rg) {
    validate(rg.n, "n");
    validate(rg.k, "k");
    IdentityReport rep;
    rep.identity = "unit_sum";
    for (long long n = std::max(0LL, rg.n.lo); n <= rg.n.hi; ++n)
        for (long long k = std::max(rg.k.lo, -n + 1); k <= rg.k.hi; ++k)
            for (long long j = 1; j <= n + k; ++j)
                expect(rep, tup({{"n", n}, {"k", k}, {"j", j}}), unit_sum_sum(n, k, j), Rational(1));
    return rep;
}

std::vector<std::string> identity_names() { return {"triple_binomial", "alternating_binomial", "cj", "unit_sum"}; }

IdentityReport check_identity(const std::string& name, const IdentityRanges& r) {
    if (name == "triple_binomial") return check_triple_binomial(r);
    if (name == "alternating_binomial") return check_alternating_binomial(r);
    if (name == "cj") return check_cj(r);
    if (name == "unit_sum") return check_unit_sum(r);
    throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace zhu
