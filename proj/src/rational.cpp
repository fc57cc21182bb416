#include "zhu/rational.hpp"

#include <limits>
#include <stdexcept>

namespace zhu {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits64(i128 v) {
    return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    set_small_or_big(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        r.n_ = q.get_num().get_si();
        r.d_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

void Rational::set_small_or_big(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits64(num) && fits64(den)) {
        n_ = static_cast<long long>(num);
        d_ = static_cast<long long>(den);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
        *this = from_mpq(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t\n");
        auto e = t.find_last_not_of(" \t\n");
        t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ((ch == '-' || ch == '+') && i == 0);
        if (!ok) throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    if (s[0] == '+') s = s.substr(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

long long Rational::to_int64() const {
    if (big_ || d_ != 1) throw std::range_error("rational is not a machine integer");
    return n_;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

std::size_t Rational::hash() const {
    if (!big_) return std::hash<long long>()(n_) * 1000003u ^ std::hash<long long>()(d_);
    return std::hash<std::string>()(big_->get_str());
}

Rational Rational::operator-() const {
    if (!big_ && n_ != std::numeric_limits<long long>::min()) {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    return from_mpq(-to_mpq());
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational");
    if (!big_) {
        Rational r;
        r.set_small_or_big(d_, n_);
        return r;
    }
    return from_mpq(1 / to_mpq());
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        Rational r;
        if (a.d_ == 1 && b.d_ == 1) {
            r.set_small_or_big(static_cast<i128>(a.n_) + b.n_, 1);
        } else {
            r.set_small_or_big(static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_,
                               static_cast<i128>(a.d_) * b.d_);
        }
        return r;
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        Rational r;
        r.set_small_or_big(static_cast<i128>(a.n_) * b.n_, static_cast<i128>(a.d_) * b.d_);
        return r;
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    if (!a.big_ && !b.big_) {
        Rational r;
        r.set_small_or_big(static_cast<i128>(a.n_) * b.d_, static_cast<i128>(a.d_) * b.n_);
        return r;
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms: small and big never coincide
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

Rational binom(long long p, long long q) {
    if (q < 0) return Rational(0);
    if (p >= 0 && q > p) return Rational(0);
    mpz_class num = 1;
    for (long long i = 0; i < q; ++i) num *= mpz_class(static_cast<long>(p - i));
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(q));
    return Rational(mpq_class(num, den));
}

}  // namespace zhu
