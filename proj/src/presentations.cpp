#include "zhu/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "zhu/certificate.hpp"
#include "zhu/parse_error.hpp"

namespace zhu {

// ---------------------------------------------------------------- NcPolynomial

NcPolynomial NcPolynomial::constant(const Rational& c, std::set<std::string> commuting) {
    NcPolynomial p(std::move(commuting));
    p.add({}, c);
    return p;
}

NcPolynomial NcPolynomial::variable(const std::string& name, std::set<std::string> commuting) {
    NcPolynomial p(std::move(commuting));
    p.add({name}, Rational(1));
    return p;
}

NcPolynomial::Word NcPolynomial::canonical(Word w) const {
    for (std::size_t i = 0; i < w.size();) {
        if (!commuting_.count(w[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < w.size() && commuting_.count(w[j])) ++j;
        std::sort(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
        i = j;
    }
    return w;
}

void NcPolynomial::add(Word w, const Rational& c) {
    if (c.is_zero()) return;
    w = canonical(std::move(w));
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::set<std::string> NcPolynomial::variables() const {
    std::set<std::string> out;
    for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
    return out;
}

int NcPolynomial::degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
    NcPolynomial r = *this;
    r.commuting_.insert(o.commuting_.begin(), o.commuting_.end());
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const { return *this + o.scaled(Rational(-1)); }

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
    NcPolynomial r(commuting_);
    r.commuting_.insert(o.commuting_.begin(), o.commuting_.end());
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            r.add(std::move(w), ca * cb);
        }
    return r;
}

NcPolynomial NcPolynomial::scaled(const Rational& c) const {
    NcPolynomial r(commuting_);
    for (const auto& [w, x] : terms_) r.add(w, x * c);
    return r;
}

NcPolynomial NcPolynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    NcPolynomial r = constant(Rational(1), commuting_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

NcPolynomial NcPolynomial::substitute(const std::map<std::string, NcPolynomial>& subs) const {
    NcPolynomial out(commuting_);
    for (const auto& [w, c] : terms_) {
        NcPolynomial t = constant(c, commuting_);
        for (const std::string& v : w) {
            auto it = subs.find(v);
            t = t * (it == subs.end() ? variable(v, commuting_) : it->second);
        }
        out = out + t;
    }
    return out;
}

std::string NcPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest degree first.
    std::vector<std::pair<Word, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    for (const auto& [w, c] : order) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string body;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!body.empty()) body += "*";
            body += w[i];
            if (j - i > 1) body += "^" + std::to_string(j - i);
            i = j;
        }
        if (body.empty())
            out += mag.str();
        else if (mag.is_one())
            out += body;
        else
            out += mag.str() + "*" + body;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view s, const std::set<std::string>& commuting) : s_(s), commuting_(commuting) {}

    NcPolynomial run() {
        NcPolynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, std::string(s_), pos_); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    NcPolynomial expr() {
        NcPolynomial acc(commuting_);
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        } else if (peek('+')) {
            ++pos_;
        }
        NcPolynomial t = term();
        acc = neg ? acc - t : acc + t;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    NcPolynomial term() {
        NcPolynomial acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    long long integer() {
        skip();
        std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > 100'000'000'000LL) fail("integer too large");
            v = v * 10 + (s_[pos_++] - '0');
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    NcPolynomial factor() {
        skip();
        if (pos_ >= s_.size()) fail("expected a factor");
        NcPolynomial base(commuting_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long num = integer();
            long long den = 1;
            if (peek('/')) {
                ++pos_;
                std::size_t at = pos_;
                den = integer();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            base = NcPolynomial::constant(Rational(num, den), commuting_);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            base = NcPolynomial::variable(std::string(s_.substr(start, pos_ - start)), commuting_);
        } else {
            fail("expected a number, variable or '('");
        }
        if (peek('^')) {
            ++pos_;
            long long k = integer();
            if (k > 64) fail("exponent too large");
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    std::string_view s_;
    const std::set<std::string>& commuting_;
    std::size_t pos_ = 0;
};

}  // namespace

NcPolynomial NcPolynomial::parse(std::string_view text, const std::set<std::string>& commuting) {
    return PolyParser(text, commuting).run();
}

// ---------------------------------------------------------------- specs

using nlohmann::json;

std::string PresentationSpec::to_json() const {
    json j;
    j["name"] = name;
    j["level"] = level;
    j["presentation"] = presentation->name();
    j["commuting"] = std::vector<std::string>(commuting.begin(), commuting.end());
    j["assignment"] = json::object();
    for (const auto& [v, e] : assignment) j["assignment"][v] = e;
    j["definitions"] = json::object();
    for (const auto& [v, p] : definitions) j["definitions"][v] = p;
    j["relations"] = relations;
    j["search_bound"] = search_bound;
    j["expected_notes"] = expected_notes;
    j["filtered"] = json::array();
    for (const auto& f : filtered) j["filtered"].push_back({{"poly", f.poly}, {"r", f.r}});
    return j.dump(2);
}

PresentationSpec PresentationSpec::from_json(const std::string& text) {
    PresentationSpec s;
    try {
        json j = json::parse(text);
        s.name = j.at("name").get<std::string>();
        s.level = j.at("level").get<int>();
        if (s.level < 0) throw std::invalid_argument("level must be >= 0");
        s.presentation = &Presentation::by_name(j.at("presentation").get<std::string>());
        if (j.contains("commuting")) {
            s.commuting.clear();
            for (const auto& v : j["commuting"]) s.commuting.insert(v.get<std::string>());
        }
        // nlohmann objects iterate in key order; definitions may depend on
        // each other, which Evaluator resolves on demand.
        for (const auto& [k, v] : j.at("assignment").items()) s.assignment.emplace_back(k, v.get<std::string>());
        if (j.contains("definitions"))
            for (const auto& [k, v] : j["definitions"].items()) s.definitions.emplace_back(k, v.get<std::string>());
        s.relations = j.at("relations").get<std::vector<std::string>>();
        s.search_bound = j.value("search_bound", 0);
        s.expected_notes = j.value("expected_notes", "");
        if (j.contains("filtered"))
            for (const auto& f : j["filtered"]) s.filtered.push_back({f.at("poly").get<std::string>(), f.at("r").get<int>()});
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed presentation spec: ") + e.what());
    }
    return s;
}

namespace {

const std::vector<std::pair<std::string, std::string>> kHeisXY = {{"x", "a(-1)|0>"}, {"y", "a(-1)^2|0>"}};
const std::vector<std::pair<std::string, std::string>> kHeisFive = {{"x", "a(-1)|0>"},
                                                                     {"y", "a(-1)^2|0>"},
                                                                     {"yt", "a(-4)a(-1)|0>"},
                                                                     {"z", "a(-4)a(-1)^2|0>"},
                                                                     {"zt", "a(-4)^2a(-1)|0>"}};
const std::vector<std::pair<std::string, std::string>> kChangeOfVariables = {
    {"Y", "1/12 (x^2 - 2y - yt)"},
    {"Z", "1/32 (x^3 + 2x*yt + zt)"},
    {"W", "-1/40 (2z + zt + 2x*y - 2x*yt - 3x^3)"}};

}  // namespace

std::vector<PresentationSpec> builtin_specs() {
    std::vector<PresentationSpec> out;
    const Presentation& H = Presentation::heisenberg();
    const Presentation& V = Presentation::virasoro();
    {
        PresentationSpec s;
        s.name = "heis_A0";
        s.presentation = &H;
        s.level = 0;
        s.assignment = kHeisXY;
        s.relations = {"x^2 - y"};
        s.expected_notes = "A_0 = C[x,y]/(x^2 - y), isomorphic to C[x]";
        out.push_back(s);
    }
    {
        PresentationSpec s;
        s.name = "heis_A1";
        s.presentation = &H;
        s.level = 1;
        s.assignment = kHeisXY;
        s.relations = {"(x^2 - y)(x^2 - y + 2)"};
        s.expected_notes = "A_1 = C[x,y]/((x^2 - y)(x^2 - y + 2)), isomorphic to C[x] + C[x]";
        out.push_back(s);
    }
    {
        PresentationSpec s;
        s.name = "heis_A1_fivevar";
        s.presentation = &H;
        s.level = 1;
        s.assignment = kHeisFive;
        s.definitions = kChangeOfVariables;
        s.relations = {"(x^2 - y)(x^2 - y + 2)", "x^2 - 2y - yt", "4x^3 - 5x*y - z", "3x^3 - 4x*y + zt", "Y", "Z", "W"};
        s.expected_notes = "A_1 = C[x,y]<yt,z,zt>/I_1; yt, z, zt eliminate to polynomials in x, y, "
                           "and I_1 = ((x^2 - y)(x^2 - y + 2), Y, Z, W)";
        out.push_back(s);
    }
    {
        PresentationSpec s;
        s.name = "heis_A2";
        s.presentation = &H;
        s.level = 2;
        s.assignment = kHeisFive;
        s.definitions = kChangeOfVariables;
        s.relations = {"(x^2 - y)(x^2 - y + 2)(x^2 - y + 4)",
                       "(x^2 - y + 4)Y",
                       "(x^2 - y + 4)Z",
                       "(x^2 - y + 4)W",
                       "Y^2 - Y",
                       "Z^2",
                       "W^2",
                       "Z*Y",
                       "Y*W",
                       "Z*W - Y",
                       "Y*Z - Z",
                       "W*Y - W",
                       "Y + W*Z - 1/8 (x^2 - y)(x^2 - y + 2)"};
        s.expected_notes = "A_2 = C[x,y]<Y,Z,W>/I_2, isomorphic to C[x] + C[x] + C[x] (x) M_2(C); "
                           "completeness of the 13 generators is not machine-verified";
        s.filtered = {{"(x^2 - y)Y", 3}, {"Y^2", 3},        {"(x^2 - y)Z", 4}, {"(x^2 - y)W", 4}, {"Z*Y", 4},
                      {"Y*W", 4},        {"(x^2 - y)^3", 5}, {"Z^2", 5},        {"W^2", 5}};
        out.push_back(s);
    }
    {
        PresentationSpec s;
        s.name = "vir_A0";
        s.presentation = &V;
        s.level = 0;
        s.assignment = {{"x", "L(-2)|0>"}, {"y", "L(-2)^2|0>"}};
        s.relations = {"y - x^2 - 2x"};
        s.expected_notes = "A_0 = C[x,y]/(y - x^2 - 2x), isomorphic to C[x]";
        out.push_back(s);
    }
    {
        PresentationSpec s;
        s.name = "vir_A1";
        s.presentation = &V;
        s.level = 1;
        s.assignment = {{"x", "L(-2)|0>"}, {"y", "L(-2)^2|0>"}};
        s.relations = {"(y - x^2 - 2x)(y - x^2 - 6x + 4)"};
        // Bound 0 misses the certificate: it needs u of weight 4 = gen_weight + n + 1.
        s.search_bound = 1;
        s.expected_notes = "A_1 = C[x,y]/((y - x^2 - 2x)(y - x^2 - 6x + 4))";
        out.push_back(s);
    }
    return out;
}

PresentationSpec builtin_spec(const std::string& name) {
    for (auto& s : builtin_specs())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown presentation '" + name + "'");
}

// ---------------------------------------------------------------- evaluation

Evaluator::Evaluator(const PresentationSpec& spec, int level)
    : spec_(&spec), engine_(*spec.presentation, level < 0 ? spec.level : level) {}

const Element& Evaluator::variable(const std::string& name) {
    auto it = values_.find(name);
    if (it != values_.end()) return it->second;
    for (const auto& [v, text] : spec_->assignment)
        if (v == name) return values_.emplace(name, parse_element(text, engine_.space())).first->second;
    for (const auto& [v, text] : spec_->definitions)
        if (v == name) {
            if (!resolving_.insert(name).second) throw std::invalid_argument("definition of '" + name + "' is cyclic");
            Element e = evaluate(parse(text));
            resolving_.erase(name);
            return values_.emplace(name, std::move(e)).first->second;
        }
    throw std::invalid_argument("no assignment for variable '" + name + "'");
}

Element Evaluator::evaluate(const NcPolynomial& p, bool right_associated) {
    Element out;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            out.add(Mono(), Coef(c));
            continue;
        }
        Element value;
        if (right_associated) {
            value = variable(w.back());
            for (std::size_t i = w.size() - 1; i-- > 0;) value = engine_.star(variable(w[i]), value);
        } else {
            NcPolynomial::Word prefix;
            const Element* acc = nullptr;
            for (const std::string& v : w) {
                prefix.push_back(v);
                auto it = left_cache_.find(prefix);
                if (it == left_cache_.end()) {
                    Element next = acc ? engine_.star(*acc, variable(v)) : variable(v);
                    it = left_cache_.emplace(prefix, std::move(next)).first;
                }
                acc = &it->second;
            }
            value = *acc;
        }
        out.add_scaled(value, Coef(c));
    }
    return out;
}

// ---------------------------------------------------------------- workflows

bool PresentationReport::pass() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationReport& r) { return r.pass(); });
}

std::string PresentationReport::to_json(const PresentationSpec& spec) const {
    json j;
    j["name"] = name;
    j["level"] = level;
    j["search_bound"] = search_bound;
    j["expected_notes"] = spec.expected_notes;
    j["limitation"] = "relations are verified (membership, zero-mode annihilation, descent); completeness of the "
                      "relation set and the structural isomorphism are not machine-verified";
    j["pass"] = pass();
    j["relations"] = json::array();
    for (const auto& r : relations) {
        json t;
        t["relation"] = r.relation;
        t["membership"] = r.membership ? "certified" : "not_found_up_to_bound";
        t["candidates"] = r.certificate.candidates;
        t["rank"] = r.certificate.rank;
        t["certificate_terms"] = r.certificate.certificate.combination.size();
        t["zero_mode"] = r.zero_mode;
        json degs = json::array();
        for (const auto& d : r.zero_mode_report.degrees) degs.push_back({{"degree", d.degree}, {"pass", d.pass}, {"detail", d.detail}});
        t["zero_mode_degrees"] = degs;
        t["descent"] = r.descent_applicable ? json(r.descent) : json("not_applicable");
        t["seconds"] = r.seconds;
        t["pass"] = r.pass();
        if (r.membership) t["certificate"] = json::parse(certificate_to_json(r.certificate.certificate, *spec.presentation, level));
        j["relations"].push_back(std::move(t));
    }
    return j.dump(2);
}

PresentationReport verify_presentation(const PresentationSpec& spec, const VerifyOptions& opts) {
    PresentationReport rep;
    rep.name = spec.name;
    rep.level = spec.level;
    rep.search_bound = opts.search_bound >= 0 ? opts.search_bound : spec.search_bound;
    Evaluator ev(spec);
    std::unique_ptr<Evaluator> lower;
    if (opts.descent && spec.level >= 1) lower = std::make_unique<Evaluator>(spec, spec.level - 1);
    GradedModule module(*spec.presentation);
    MembershipOptions mo;
    mo.search_bound = rep.search_bound;
    for (const std::string& rel : spec.relations) {
        auto t0 = std::chrono::steady_clock::now();
        RelationReport r;
        r.relation = rel;
        NcPolynomial p = ev.parse(rel);
        Element value = ev.evaluate(p);
        r.certificate = ev.engine().membership(value, mo);
        r.membership = r.certificate.found;
        if (opts.zero_mode) {
            r.zero_mode_report = zero_mode_annihilation_check(ev.engine(), module, value);
            r.zero_mode = r.zero_mode_report.pass;
        } else {
            r.zero_mode = true;
        }
        if (lower) {
            r.descent_applicable = true;
            r.descent = lower->engine().membership(lower->evaluate(p), mo).found;
        } else {
            r.descent = true;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.relations.push_back(std::move(r));
    }
    return rep;
}

std::vector<FilteredReport> lower_order_check(const PresentationSpec& spec, const std::vector<FilteredProduct>& products) {
    const auto& list = products.empty() ? spec.filtered : products;
    Evaluator ev(spec);
    std::vector<FilteredReport> out;
    for (const auto& f : list) {
        if (f.r < 0) throw std::invalid_argument("filtration bound must be >= 0");
        MembershipOptions mo;
        mo.search_bound = spec.search_bound;
        mo.filtration = f.r;
        MembershipResult res = ev.engine().membership(ev.evaluate(f.poly), mo);
        out.push_back({f.poly, f.r, res.found, res.certificate.combination.size()});
    }
    return out;
}

}  // namespace zhu
