#include "zhu/voa.hpp"

#include <cctype>
#include <stdexcept>

#include "zhu/parse_error.hpp"

namespace zhu {

const Presentation& Presentation::heisenberg() {
    static const Presentation p{Algebra::Heisenberg, "a", 1, 1, {}};
    return p;
}

const Presentation& Presentation::virasoro() {
    static const Presentation p{Algebra::Virasoro, "L", 2, 2, {kC}};
    return p;
}

const Presentation& Presentation::by_name(std::string_view name) {
    if (name == "heisenberg" || name == "heis" || name == "a") return heisenberg();
    if (name == "virasoro" || name == "vir" || name == "L") return virasoro();
    throw std::invalid_argument("unknown presentation '" + std::string(name) + "' (expected heisenberg|virasoro)");
}

BracketValue Presentation::bracket(int m, int p) const {
    BracketValue b;
    b.mode = m + p;
    if (algebra == Algebra::Heisenberg) {
        b.mode_coef = Coef(0);
        b.central = (m + p == 0) ? Coef(m) : Coef(0);
    } else {
        b.mode_coef = Coef(m - p);
        if (m + p == 0) {
            long long mm = m;
            b.central = Coef(Rational(mm * mm * mm - mm, 12)) * Coef::param(kC);
        }
    }
    return b;
}

Space::Space(const Presentation& p, LowestKind kind) : pres_(&p), kind_(kind) {
    if (p.algebra == Algebra::Heisenberg && kind == LowestKind::Verma)
        throw std::invalid_argument("Verma modules belong to the Virasoro presentation");
    if (p.algebra == Algebra::Virasoro && kind == LowestKind::Fock)
        throw std::invalid_argument("Fock modules belong to the Heisenberg presentation");
    min_part_ = (kind == LowestKind::Vacuum) ? p.vacuum_annihilation : 1;
    if (kind == LowestKind::Fock) lowest_ = Coef::param(kLambda);
    if (kind == LowestKind::Verma) lowest_ = Coef::param(kH);
}

void Space::clear_cache() {
    apply_cache_.clear();
    composite_cache_.clear();
}

namespace {

void put_int(std::string& s, int v) {
    unsigned u = static_cast<unsigned>(v + 32768);
    s.push_back(static_cast<char>(u & 0xffu));
    s.push_back(static_cast<char>((u >> 8) & 0xffu));
}

}  // namespace

Element Space::apply_heis(int m, const Mono& v) const {
    if (m <= -1) return Element(v.with_part(-m));
    if (m == 0) return kind_ == LowestKind::Fock ? Element(v, lowest_) : Element();
    int c = v.count(m);
    if (c == 0) return Element();
    return Element(v.without_part(m), Coef(static_cast<long long>(m) * c));
}

const Element& Space::apply_vir(int m, const Mono& v) {
    std::string key;
    key.reserve(v.bytes().size() + 2);
    put_int(key, m);
    key += v.bytes();
    auto it = apply_cache_.find(key);
    if (it != apply_cache_.end()) return it->second;

    Element out;
    if (m == 0) {
        out = Element(v, lowest_ + Coef(v.weight()));
    } else if (v.empty()) {
        if (is_creation(m)) out = Element(Mono::from_parts({-m}));
    } else {
        int k1 = v.top();
        if (is_creation(m) && -m >= k1) {
            out = Element(v.with_part(-m));
        } else {
            Mono rest = v.rest();
            Element inner = apply(m, rest);
            out = apply(-k1, inner);
            BracketValue b = pres_->bracket(m, -k1);
            if (!b.mode_coef.is_zero()) out.add_scaled(apply(b.mode, rest), b.mode_coef);
            if (!b.central.is_zero()) out.add(rest, b.central);
        }
    }
    return apply_cache_.emplace(std::move(key), std::move(out)).first->second;
}

Element Space::apply(int m, const Mono& v) {
    if (pres_->algebra == Algebra::Heisenberg) return apply_heis(m, v);
    return apply_vir(m, v);
}

Element Space::apply(int m, const Element& v) {
    Element out;
    for (const auto& [mono, c] : v.terms()) {
        if (pres_->algebra == Algebra::Heisenberg)
            out.add_scaled(apply_heis(m, mono), c);
        else
            out.add_scaled(apply_vir(m, mono), c);
    }
    return out;
}

Element Space::normalize(const std::vector<int>& word) {
    Element v = Element::vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
    return v;
}

Element Space::composite(const Element& w, int p, const Element& v) {
    Element out;
    for (const auto& [wm, wc] : w.terms())
        for (const auto& [vm, vc] : v.terms()) out.add_scaled(composite(wm, p, vm), wc * vc);
    return out;
}

const Element& Space::composite(const Mono& w, int p, const Mono& v) {
    static const Element zero;
    if (w.weight() + v.weight() - p - 1 < 0) return zero;
    std::string key;
    key.reserve(w.bytes().size() + v.bytes().size() + 3);
    key += w.bytes();
    key.push_back('\0');
    put_int(key, p);
    key += v.bytes();
    auto it = composite_cache_.find(key);
    if (it != composite_cache_.end()) return it->second;

    Element out;
    if (w.empty()) {
        if (p == -1) out = Element(v);
    } else if (use_skew_ && is_vacuum() && w.length() > v.length()) {
        out = composite_skew(w, p, v);
    } else {
        out = composite_iterate(w, p, v);
    }
    return composite_cache_.emplace(std::move(key), std::move(out)).first->second;
}

// (a_n b)_p v = sum_i (-1)^i C(n,i) [a_{n-i} b_{p+i} v - (-1)^n b_{n+p-i} a_i v]
Element Space::composite_iterate(const Mono& w, int p, const Mono& v) {
    const int gw = pres_->gen_weight;
    const int n = pres_->to_index(-w.top());
    const Mono b = w.rest();
    Element out;
    for (int i = 0; p + i < b.weight() + v.weight(); ++i) {
        const Element& x = composite(b, p + i, v);
        if (x.is_zero()) continue;
        Coef coef = Coef(binom(n, i)) * Coef(neg_one_pow(i));
        out.add_scaled(apply(pres_->to_physics(n - i), x), coef);
    }
    for (int i = 0; i < gw + v.weight(); ++i) {
        Element y = apply(pres_->to_physics(i), v);
        if (y.is_zero()) continue;
        Coef coef = Coef(binom(n, i)) * Coef(-neg_one_pow(n) * neg_one_pow(i));
        for (const auto& [ym, yc] : y.terms()) out.add_scaled(composite(b, n + p - i, ym), coef * yc);
    }
    return out;
}

// w_p v = sum_i (-1)^(p+i+1) L(-1)^i/i! (v_{p+i} w), evaluated by Horner.
Element Space::composite_skew(const Mono& w, int p, const Mono& v) {
    int top = w.weight() + v.weight() - p - 1;
    Element acc;
    for (int i = top; i >= 0; --i) {
        Element next;
        if (!acc.is_zero()) next = l_minus1(acc).scaled(Coef(Rational(1, i + 1)));
        if (p + i < w.weight() + v.weight()) next.add_scaled(composite(v, p + i, w), Coef(neg_one_pow(p + i + 1)));
        acc = std::move(next);
    }
    return acc;
}

Element Space::l_minus1(const Element& v) {
    if (pres_->algebra == Algebra::Virasoro) return apply(-1, v);
    if (!is_vacuum()) throw std::invalid_argument("L(-1) is only provided on the Heisenberg vacuum module");
    Element out;
    for (const auto& [m, c] : v.terms()) {
        int prev = -1;
        for (int k : m.parts()) {
            if (k == prev) continue;
            prev = k;
            int mult = m.count(k);
            out.add(m.without_part(k).with_part(k + 1), c * Coef(static_cast<long long>(k) * mult));
        }
    }
    return out;
}

Element Space::l_zero(const Element& v) const {
    if (kind_ == LowestKind::Fock) throw std::invalid_argument("L(0) is not provided on Fock modules");
    Element out;
    for (const auto& [m, c] : v.terms()) out.add(m, c * (lowest_ + Coef(m.weight())));
    return out;
}

int annihilation_bound(const Element& w, const Element& v) {
    return std::max(w.max_weight(), 0) + std::max(v.max_weight(), 0);
}

std::string mono_string(const Mono& m, const Presentation& p, const std::string& marker) {
    std::string s;
    auto parts = m.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        s += p.symbol + "(-" + std::to_string(parts[i]) + ")";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + marker;
}

namespace {

std::string render(const Element& e, const Presentation& p, const std::string& marker) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string body = mono_string(m, p, marker);
        if (c.is_constant()) {
            const Rational& k = c.constant();
            bool neg = k.sign() < 0;
            Rational mag = neg ? -k : k;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (!mag.is_one()) out += mag.str() + " ";
        } else {
            if (!first) out += " + ";
            out += "(" + c.str() + ") ";
        }
        out += body;
        first = false;
    }
    return out;
}

class ElementParser {
public:
    ElementParser(std::string_view s, Space& space) : s_(s), space_(space) {}

    Element parse() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip();
            if (pos_ == s_.size()) return Element();
            pos_ = save;
        }
        Element out;
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) {
                if (first) fail("empty element");
                break;
            }
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out.add_scaled(term(), Coef(sign));
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, std::string(s_), pos_); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    long long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }
    Element term() {
        skip();
        Coef coef(1);
        if (pos_ < s_.size() && s_[pos_] == '(') {
            int depth = 0;
            std::size_t start = pos_;
            for (; pos_ < s_.size(); ++pos_) {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')' && --depth == 0) break;
            }
            if (pos_ == s_.size()) fail("unbalanced '('");
            try {
                coef = Coef::parse(s_.substr(start + 1, pos_ - start - 1));
            } catch (const ParseError& e) {
                pos_ = start + 1 + e.position();
                fail("bad coefficient");
            }
            ++pos_;
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            coef = Coef(Rational::parse(s_.substr(start, pos_ - start)));
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
        std::vector<int> word;
        const std::string& sym = space_.presentation().symbol;
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '|') break;
            if (s_.compare(pos_, sym.size(), sym) != 0) fail("expected '" + sym + "(' or a lowest-vector marker");
            pos_ += sym.size();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
            ++pos_;
            long long mode = integer();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            long long power = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                power = integer();
                if (power < 0) fail("negative power");
            }
            if (mode < -255 || mode > 255) fail("mode out of supported range");
            for (long long i = 0; i < power; ++i) word.push_back(static_cast<int>(mode));
        }
        std::string marker = space_.lowest_marker();
        if (s_.compare(pos_, marker.size(), marker) != 0)
            fail("expected lowest-vector marker '" + marker + "'");
        pos_ += marker.size();
        return space_.normalize(word).scaled(coef);
    }

    std::string_view s_;
    Space& space_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Element& e, const Space& space) {
    return render(e, space.presentation(), space.lowest_marker());
}

std::string to_string(const Element& e, const Presentation& p) { return render(e, p, "|0>"); }

Element parse_element(std::string_view text, Space& space) { return ElementParser(text, space).parse(); }

}  // namespace zhu
