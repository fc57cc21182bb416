#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zhu/ratfunc.hpp"

namespace zhu {

// PBW word u(-k1)...u(-kr) on a lowest vector, k1 >= ... >= kr >= 1, stored as
// bytes. Physics modes: the weight (or module degree) is the sum of the k's.
class Mono {
public:
    Mono() = default;
    static Mono from_parts(std::vector<int> parts);  // sorts descending
    static Mono from_sorted(std::string bytes, int weight) { return Mono(std::move(bytes), weight); }

    int weight() const { return w_; }
    int length() const { return static_cast<int>(k_.size()); }
    bool empty() const { return k_.empty(); }
    int part(int i) const { return static_cast<unsigned char>(k_[static_cast<std::size_t>(i)]); }
    int top() const { return k_.empty() ? 0 : part(0); }
    int count(int k) const;
    std::vector<int> parts() const;
    const std::string& bytes() const { return k_; }

    Mono with_part(int k) const;       // insert one part
    Mono without_part(int k) const;    // remove one occurrence (must exist)
    Mono rest() const;                 // drop the leading (largest) part

    friend bool operator==(const Mono& a, const Mono& b) { return a.k_ == b.k_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.k_ != b.k_; }

private:
    Mono(std::string k, int w) : k_(std::move(k)), w_(w) {}
    std::string k_;
    int w_ = 0;
};

// Deterministic order: weight, then length, then descending parts lexicographically.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.length() != b.length()) return a.length() < b.length();
        return a.bytes() < b.bytes();
    }
};

// All PBW words of the given weight with parts in [min_part, max_part], in
// MonoOrder.
std::vector<Mono> pbw_basis(int weight, int min_part, int max_part);
// Same, for every weight 0..max_weight.
std::vector<Mono> pbw_basis_upto(int max_weight, int min_part, int max_part);

struct MonoHash {
    std::size_t operator()(const Mono& m) const { return std::hash<std::string>()(m.bytes()); }
};

class Element {
public:
    using Terms = std::map<Mono, Coef, MonoOrder>;

    Element() = default;
    explicit Element(const Mono& m, const Coef& c = Coef(1)) { add(m, c); }
    static Element vacuum() { return Element(Mono()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coef coefficient(const Mono& m) const;

    void add(const Mono& m, const Coef& c);
    void add_scaled(const Element& e, const Coef& c);
    Element scaled(const Coef& c) const;

    Element operator-() const { return scaled(Coef(-1)); }
    friend Element operator+(Element a, const Element& b) {
        a.add_scaled(b, Coef(1));
        return a;
    }
    friend Element operator-(Element a, const Element& b) {
        a.add_scaled(b, Coef(-1));
        return a;
    }
    Element& operator+=(const Element& b) {
        add_scaled(b, Coef(1));
        return *this;
    }
    Element& operator-=(const Element& b) {
        add_scaled(b, Coef(-1));
        return *this;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    int max_weight() const;  // -1 for zero
    int min_weight() const;  // -1 for zero
    int max_length() const;
    bool is_homogeneous() const;
    // Homogeneous components keyed by weight.
    std::map<int, Element> components() const;
    Element component(int weight) const;
    // Keep only monomials satisfying the predicate.
    Element filtered(const std::function<bool(const Mono&)>& keep) const;

    Element substitute(const Bindings& values) const;

private:
    Terms terms_;
};

}  // namespace zhu
