#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "zhu/poly.hpp"
#include "zhu/rational.hpp"

namespace zhu {

using Bindings = std::array<std::optional<Rational>, kNumParams>;

// Reduced quotient num/den of polynomials in the declared parameters.
// Constants take a fast path that never touches polynomial storage.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long long v) : k_(v) {}           // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& v) : k_(v) {}     // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p);                   // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);
    static RatFunc param(int index);
    static RatFunc parse(std::string_view text);

    bool is_zero() const { return !sym_ && k_.is_zero(); }
    bool is_one() const { return !sym_ && k_.is_one(); }
    bool is_constant() const { return !sym_; }
    const Rational& constant() const;  // requires is_constant()
    Poly numerator() const;
    Poly denominator() const;
    // Number of stored polynomial terms; used as a pivot size measure.
    std::size_t size() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc substitute(const Bindings& values) const;
    // Full evaluation; throws if a needed parameter is unbound or the
    // denominator vanishes.
    Rational evaluate(const Bindings& values) const;

    // Canonical text: "3/2", "c - 1", "(c^2 - 1)/(c + 2)".
    std::string str() const;
    // True when str() needs parentheses to be used as a factor.
    bool needs_parens() const;
    std::size_t hash() const;

private:
    struct Sym {
        Poly num;
        Poly den;
    };
    static RatFunc make(Poly num, Poly den);

    Rational k_;
    std::shared_ptr<const Sym> sym_;
};

using Coef = RatFunc;

}  // namespace zhu
