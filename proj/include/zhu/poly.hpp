#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zhu/rational.hpp"

namespace zhu {

// Declared parameters: central charge, Verma lowest weight, Fock charge and
// the (inert) Heisenberg shift.
constexpr int kNumParams = 4;
enum Param : int { kC = 0, kH = 1, kLambda = 2, kShift = 3 };
const std::array<std::string, kNumParams>& param_names();
int param_index(std::string_view name);  // -1 if unknown

using Exponent = std::array<unsigned short, kNumParams>;

struct ExponentOrder {
    // Graded, then lexicographic with higher index variables first.
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class Poly {
public:
    using Terms = std::map<Exponent, Rational, ExponentOrder>;

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static Poly variable(int index, unsigned short power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    int total_degree() const;
    int degree_in(int var) const;
    bool uses(int var) const { return degree_in(var) > 0; }
    // Leading term under ExponentOrder (largest exponent).
    const Exponent& leading_exponent() const;
    const Rational& leading_coefficient() const;

    void add_term(const Exponent& e, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned k) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Coefficients with respect to one variable.
    std::map<int, Poly> coefficients_in(int var) const;
    static Poly from_coefficients(int var, const std::map<int, Poly>& coeffs);

    // Exact quotient when b divides a, otherwise nullopt.
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);

    // Divide by the leading coefficient; zero stays zero.
    Poly monic() const;
    // Rational evaluation; every used parameter must be bound.
    Rational evaluate(const std::array<std::optional<Rational>, kNumParams>& values) const;
    // Replace bound parameters, keep the rest symbolic.
    Poly substitute(const std::array<std::optional<Rational>, kNumParams>& values) const;

    std::string str() const;
    std::size_t hash() const;
    std::size_t size() const { return terms_.size(); }

private:
    Terms terms_;
};

}  // namespace zhu
