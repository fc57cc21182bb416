#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zhu/engine.hpp"
#include "zhu/modules.hpp"

namespace zhu {

// Polynomial over Q in named variables. Variables in `commuting` commute with
// each other: each maximal run of them inside a word is kept sorted. All other
// variables are noncommuting.
class NcPolynomial {
public:
    using Word = std::vector<std::string>;

    NcPolynomial() = default;
    explicit NcPolynomial(std::set<std::string> commuting) : commuting_(std::move(commuting)) {}
    static NcPolynomial constant(const Rational& c, std::set<std::string> commuting = {});
    static NcPolynomial variable(const std::string& name, std::set<std::string> commuting = {});

    // Grammar: sums and differences of products; a product is a juxtaposition
    // or '*' of factors; a factor is a rational (p or p/q), a variable name
    // ([A-Za-z][A-Za-z0-9_]*) or a parenthesized expression, with optional ^k.
    static NcPolynomial parse(std::string_view text, const std::set<std::string>& commuting);

    const std::map<Word, Rational>& terms() const { return terms_; }
    const std::set<std::string>& commuting() const { return commuting_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<std::string> variables() const;
    int degree() const;

    NcPolynomial operator+(const NcPolynomial& o) const;
    NcPolynomial operator-(const NcPolynomial& o) const;
    NcPolynomial operator*(const NcPolynomial& o) const;
    NcPolynomial scaled(const Rational& c) const;
    NcPolynomial pow(int k) const;
    // Replaces each listed variable by a polynomial.
    NcPolynomial substitute(const std::map<std::string, NcPolynomial>& subs) const;

    friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void add(Word w, const Rational& c);
    Word canonical(Word w) const;

    std::set<std::string> commuting_;
    std::map<Word, Rational> terms_;
};

struct FilteredProduct {
    std::string poly;
    int r = 0;  // membership in O_n(V) + F_r(1)
};

struct PresentationSpec {
    std::string name;
    int level = 0;
    const Presentation* presentation = nullptr;
    std::set<std::string> commuting{"x", "y"};
    std::vector<std::pair<std::string, std::string>> assignment;   // variable -> element text
    std::vector<std::pair<std::string, std::string>> definitions;  // variable -> polynomial text
    std::vector<std::string> relations;
    int search_bound = 0;
    std::string expected_notes;
    std::vector<FilteredProduct> filtered;

    std::string to_json() const;
    static PresentationSpec from_json(const std::string& text);
};

std::vector<PresentationSpec> builtin_specs();
// Throws std::invalid_argument for unknown names.
PresentationSpec builtin_spec(const std::string& name);

// Values of variables and polynomials at a given level, with memoized words.
class Evaluator {
public:
    // level < 0 uses spec.level.
    Evaluator(const PresentationSpec& spec, int level = -1);

    ZhuEngine& engine() { return engine_; }
    const PresentationSpec& spec() const { return *spec_; }
    const Element& variable(const std::string& name);
    NcPolynomial parse(std::string_view text) const { return NcPolynomial::parse(text, spec_->commuting); }
    // Each word by left-associated (or right-associated) star products.
    Element evaluate(const NcPolynomial& p, bool right_associated = false);
    Element evaluate(std::string_view text, bool right_associated = false) { return evaluate(parse(text), right_associated); }

private:
    const PresentationSpec* spec_;
    ZhuEngine engine_;
    std::map<std::string, Element> values_;
    std::set<std::string> resolving_;
    std::map<NcPolynomial::Word, Element> left_cache_;
};

struct RelationReport {
    std::string relation;
    bool membership = false;
    MembershipResult certificate;
    bool zero_mode = false;
    ModuleCheckReport zero_mode_report;
    // Descent: the relation evaluated at level n-1 lies in O_{n-1}(V); true
    // (vacuously) at level 0.
    bool descent = false;
    bool descent_applicable = false;
    double seconds = 0;
    bool pass() const { return membership && zero_mode && descent; }
};

struct PresentationReport {
    std::string name;
    int level = 0;
    int search_bound = 0;
    std::vector<RelationReport> relations;
    bool pass() const;
    // {"name", "level", "search_bound", "expected_notes", "limitation", "relations": [...]}
    std::string to_json(const PresentationSpec& spec) const;
};

struct VerifyOptions {
    int search_bound = -1;  // -1: the spec's stored bound
    bool zero_mode = true;
    bool descent = true;
};

PresentationReport verify_presentation(const PresentationSpec& spec, const VerifyOptions& opts = {});

struct FilteredReport {
    std::string poly;
    int r = 0;
    bool found = false;
    std::size_t certificate_terms = 0;
};

// Membership of each filtered product (or the given list) in O_n(V) + F_r(1).
std::vector<FilteredReport> lower_order_check(const PresentationSpec& spec,
                                              const std::vector<FilteredProduct>& products = {});

}  // namespace zhu
