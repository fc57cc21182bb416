#include "zhu/poly.hpp"

#include <stdexcept>

namespace zhu {

const std::array<std::string, kNumParams>& param_names() {
    static const std::array<std::string, kNumParams> names{"c", "h", "lambda", "a"};
    return names;
}

int param_index(std::string_view name) {
    const auto& names = param_names();
    for (int i = 0; i < kNumParams; ++i)
        if (names[i] == name) return i;
    return -1;
}

namespace {
int degree_of(const Exponent& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}
}  // namespace

bool ExponentOrder::operator()(const Exponent& a, const Exponent& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    for (int i = kNumParams - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

Poly Poly::variable(int index, unsigned short power) {
    Poly p;
    Exponent e{};
    e[index] = power;
    p.terms_.emplace(e, Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first); }

int Poly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

const Exponent& Poly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int i = 0; i < kNumParams; ++i) e[i] = static_cast<unsigned short>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r(Rational(1)), base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

std::map<int, Poly> Poly::coefficients_in(int var) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        int d = rest[var];
        rest[var] = 0;
        out[d].add_term(rest, c);
    }
    return out;
}

Poly Poly::from_coefficients(int var, const std::map<int, Poly>& coeffs) {
    Poly r;
    for (const auto& [d, p] : coeffs)
        for (const auto& [e, c] : p.terms_) {
            Exponent f = e;
            f[var] = static_cast<unsigned short>(f[var] + d);
            r.add_term(f, c);
        }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = a;
    const Exponent& lb = b.leading_exponent();
    const Rational& lc = b.leading_coefficient();
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        Exponent t;
        for (int i = 0; i < kNumParams; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            t[i] = static_cast<unsigned short>(lr[i] - lb[i]);
        }
        Rational c = r.leading_coefficient() / lc;
        Poly mono;
        mono.terms_.emplace(t, c);
        q.add_term(t, c);
        r = r - mono * b;
    }
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

namespace {

int main_variable(const Poly& a, const Poly& b) {
    for (int v = kNumParams - 1; v >= 0; --v)
        if (a.uses(v) || b.uses(v)) return v;
    return -1;
}

Poly content_in(const Poly& p, int var) {
    Poly g;
    for (const auto& [d, c] : p.coefficients_in(var)) {
        g = Poly::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(Rational(1));
    }
    return g;
}

Poly leading_in(const Poly& p, int var) {
    auto cs = p.coefficients_in(var);
    return cs.rbegin()->second;
}

Poly exact(const Poly& a, const Poly& b) {
    auto q = Poly::divide_exact(a, b);
    if (!q) throw std::logic_error("internal: expected exact polynomial division");
    return *q;
}

// Pseudo-remainder of a by b in var: lc(b)^(deg a - deg b + 1) a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
    int db = b.degree_in(var);
    Poly lb = leading_in(b, var);
    Poly r = a;
    int steps = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Poly lr = leading_in(r, var);
        r = r * lb - lr * Poly::variable(var, static_cast<unsigned short>(dr - db)) * b;
        --steps;
    }
    if (steps > 0) r = r * lb.pow(static_cast<unsigned>(steps));
    return r;
}

Poly primitive_part_in(const Poly& p, int var) {
    if (p.is_zero()) return p;
    return exact(p, content_in(p, var));
}

// Subresultant PRS gcd of two primitive polynomials in var.
Poly subresultant_gcd(Poly a, Poly b, int var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    Poly g(Rational(1)), h(Rational(1));
    while (true) {
        int d = a.degree_in(var) - b.degree_in(var);
        Poly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) return Poly(Rational(1));
        a = b;
        b = exact(r, g * h.pow(static_cast<unsigned>(d)));
        g = leading_in(a, var);
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
        }
    }
    return primitive_part_in(b, var);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    int v = main_variable(a, b);
    if (!a.uses(v)) return gcd(a, content_in(b, v));
    if (!b.uses(v)) return gcd(content_in(a, v), b);
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = exact(a, ca), pb = exact(b, cb);
    Poly g = subresultant_gcd(pa, pb, v);
    return (gcd(ca, cb) * g).monic();
}

Rational Poly::evaluate(const std::array<std::optional<Rational>, kNumParams>& values) const {
    Poly s = substitute(values);
    if (!s.is_constant())
        throw std::invalid_argument("evaluation needs a value for every parameter in " + str());
    return s.constant_value();
}

Poly Poly::substitute(const std::array<std::optional<Rational>, kNumParams>& values) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        Rational coef = c;
        for (int i = 0; i < kNumParams; ++i) {
            if (e[i] && values[i]) {
                Rational p(1);
                for (int k = 0; k < e[i]; ++k) p *= *values[i];
                coef *= p;
                rest[i] = 0;
            }
        }
        r.add_term(rest, coef);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < kNumParams; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += param_names()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

std::size_t Poly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [e, c] : terms_) {
        for (auto x : e) h = h * 31 + x;
        h ^= c.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace zhu
