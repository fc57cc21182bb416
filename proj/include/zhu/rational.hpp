#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <string>
#include <string_view>

namespace zhu {

// Exact rational number. Values that fit in int64 numerator/denominator stay
// in machine words; anything larger is held in a GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : n_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    // Only valid when is_integer() and the value fits in a long.
    long long to_int64() const;
    bool fits_int64() const { return !big_ && d_ == 1; }

    std::string str() const;
    std::size_t hash() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

private:
    static Rational from_mpq(mpq_class q);
    void set_small_or_big(__int128 num, __int128 den);

    long long n_ = 0;
    long long d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

// Generalized binomial p(p-1)...(p-q+1)/q!, zero for q < 0.
Rational binom(long long p, long long q);

// (-1)^k as a sign.
inline int neg_one_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace zhu
