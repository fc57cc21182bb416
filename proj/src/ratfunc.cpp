#include "zhu/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

#include "zhu/parse_error.hpp"

namespace zhu {

RatFunc::RatFunc(const Poly& p) { *this = make(p, Poly(Rational(1))); }

RatFunc::RatFunc(const Poly& num, const Poly& den) { *this = make(num, den); }

RatFunc RatFunc::param(int index) { return RatFunc(Poly::variable(index)); }

RatFunc RatFunc::make(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc r;
    if (num.is_zero()) return r;
    if (den.is_constant()) {
        Rational d = den.constant_value();
        if (num.is_constant()) {
            r.k_ = num.constant_value() / d;
            return r;
        }
        num = num.scaled(d.inverse());
        den = Poly(Rational(1));
    } else {
        Poly g = Poly::gcd(num, den);
        if (!g.is_constant()) {
            num = *Poly::divide_exact(num, g);
            den = *Poly::divide_exact(den, g);
        }
        Rational lc = den.leading_coefficient();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        if (den.is_constant() && num.is_constant()) {
            r.k_ = num.constant_value() / den.constant_value();
            return r;
        }
    }
    r.sym_ = std::make_shared<const Sym>(Sym{std::move(num), std::move(den)});
    return r;
}

const Rational& RatFunc::constant() const {
    if (sym_) throw std::logic_error("coefficient is not constant: " + str());
    return k_;
}

Poly RatFunc::numerator() const { return sym_ ? sym_->num : Poly(k_); }

Poly RatFunc::denominator() const { return sym_ ? sym_->den : Poly(Rational(1)); }

std::size_t RatFunc::size() const { return sym_ ? sym_->num.size() + sym_->den.size() : 1; }

RatFunc RatFunc::operator-() const {
    if (!sym_) return RatFunc(-k_);
    RatFunc r;
    r.sym_ = std::make_shared<const Sym>(Sym{-sym_->num, sym_->den});
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    if (!sym_) return RatFunc(k_.inverse());
    return make(sym_->den, sym_->num);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (!a.sym_ && !b.sym_) return RatFunc(a.k_ + b.k_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly an = a.numerator(), ad = a.denominator(), bn = b.numerator(), bd = b.denominator();
    if (ad == bd) return RatFunc::make(an + bn, ad);
    return RatFunc::make(an * bd + bn * ad, ad * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (!a.sym_ && !b.sym_) return RatFunc(a.k_ * b.k_);
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (!a.sym_) {
        RatFunc r;
        r.sym_ = std::make_shared<const RatFunc::Sym>(RatFunc::Sym{b.sym_->num.scaled(a.k_), b.sym_->den});
        return r;
    }
    if (!b.sym_) return b * a;
    return RatFunc::make(a.sym_->num * b.sym_->num, a.sym_->den * b.sym_->den);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero coefficient");
    if (!a.sym_ && !b.sym_) return RatFunc(a.k_ / b.k_);
    return a * b.inverse();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (!a.sym_ && !b.sym_) return a.k_ == b.k_;
    if (!a.sym_ || !b.sym_) return false;
    return a.sym_->num == b.sym_->num && a.sym_->den == b.sym_->den;
}

RatFunc RatFunc::substitute(const Bindings& values) const {
    if (!sym_) return *this;
    Poly d = sym_->den.substitute(values);
    if (d.is_zero()) throw std::domain_error("denominator vanishes under substitution: " + str());
    return make(sym_->num.substitute(values), d);
}

Rational RatFunc::evaluate(const Bindings& values) const {
    RatFunc s = substitute(values);
    if (!s.is_constant()) throw std::invalid_argument("unbound parameter in " + str());
    return s.k_;
}

std::string RatFunc::str() const {
    if (!sym_) return k_.str();
    std::string n = sym_->num.str();
    if (sym_->den.is_constant()) return n;
    bool num_single = sym_->num.size() == 1;
    return (num_single ? n : "(" + n + ")") + "/(" + sym_->den.str() + ")";
}

bool RatFunc::needs_parens() const {
    if (!sym_) return false;
    return true;
}

std::size_t RatFunc::hash() const {
    if (!sym_) return k_.hash();
    return sym_->num.hash() * 7919 ^ sym_->den.hash();
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    RatFunc parse_all() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, std::string(s_), pos_); }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }
    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                r = r + term();
            } else if (peek('-')) {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }
    RatFunc term() {
        RatFunc r = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                r = r * unary();
            } else if (peek('/')) {
                ++pos_;
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else if (starts_atom()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }
    RatFunc unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    RatFunc power() {
        RatFunc base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            RatFunc r(1);
            for (unsigned long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            int idx = param_index(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown parameter '" + name + "'");
            }
            return RatFunc::param(idx);
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

}  // namespace zhu
