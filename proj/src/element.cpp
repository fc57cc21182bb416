#include "zhu/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhu {

Mono Mono::from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::string k;
    int w = 0;
    for (int p : parts) {
        if (p < 1 || p > 255) throw std::out_of_range("mode out of supported range: " + std::to_string(-p));
        k.push_back(static_cast<char>(p));
        w += p;
    }
    return Mono(std::move(k), w);
}

int Mono::count(int k) const {
    int c = 0;
    for (char ch : k_)
        if (static_cast<unsigned char>(ch) == k) ++c;
    return c;
}

std::vector<int> Mono::parts() const {
    std::vector<int> out;
    out.reserve(k_.size());
    for (char ch : k_) out.push_back(static_cast<unsigned char>(ch));
    return out;
}

Mono Mono::with_part(int k) const {
    if (k < 1 || k > 255) throw std::out_of_range("mode out of supported range: " + std::to_string(-k));
    std::string s = k_;
    auto pos = std::find_if(s.begin(), s.end(), [k](char ch) { return static_cast<unsigned char>(ch) < k; });
    s.insert(pos, static_cast<char>(k));
    return Mono(std::move(s), w_ + k);
}

Mono Mono::without_part(int k) const {
    std::string s = k_;
    auto pos = std::find_if(s.begin(), s.end(), [k](char ch) { return static_cast<unsigned char>(ch) == k; });
    if (pos == s.end()) throw std::logic_error("part not present");
    s.erase(pos);
    return Mono(std::move(s), w_ - k);
}

Mono Mono::rest() const {
    if (k_.empty()) throw std::logic_error("rest of empty word");
    return Mono(k_.substr(1), w_ - part(0));
}

namespace {

void partitions(int remaining, int max_part, int min_part, std::string& cur, int weight, std::vector<Mono>& out) {
    if (remaining == 0) {
        out.push_back(Mono::from_sorted(cur, weight));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= min_part; --k) {
        cur.push_back(static_cast<char>(k));
        partitions(remaining - k, k, min_part, cur, weight, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Mono> pbw_basis(int weight, int min_part, int max_part) {
    std::vector<Mono> out;
    if (weight < 0) return out;
    std::string cur;
    partitions(weight, std::min(max_part, 255), std::max(min_part, 1), cur, weight, out);
    std::sort(out.begin(), out.end(), MonoOrder());
    return out;
}

std::vector<Mono> pbw_basis_upto(int max_weight, int min_part, int max_part) {
    std::vector<Mono> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto b = pbw_basis(w, min_part, max_part);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

Coef Element::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coef() : it->second;
}

void Element::add(const Mono& m, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& e, const Coef& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
        for (const auto& [m, x] : e.terms_) add(m, x);
    } else {
        for (const auto& [m, x] : e.terms_) add(m, x * c);
    }
}

Element Element::scaled(const Coef& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, x * c);
    return r;
}

int Element::max_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

int Element::min_weight() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

int Element::max_length() const {
    int l = -1;
    for (const auto& [m, c] : terms_) l = std::max(l, m.length());
    return l;
}

bool Element::is_homogeneous() const { return terms_.empty() || max_weight() == min_weight(); }

std::map<int, Element> Element::components() const {
    std::map<int, Element> out;
    for (const auto& [m, c] : terms_) out[m.weight()].terms_.emplace_hint(out[m.weight()].terms_.end(), m, c);
    return out;
}

Element Element::component(int weight) const {
    Element r;
    for (const auto& [m, c] : terms_)
        if (m.weight() == weight) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Element Element::filtered(const std::function<bool(const Mono&)>& keep) const {
    Element r;
    for (const auto& [m, c] : terms_)
        if (keep(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Element Element::substitute(const Bindings& values) const {
    Element r;
    for (const auto& [m, c] : terms_) r.add(m, c.substitute(values));
    return r;
}

}  // namespace zhu
