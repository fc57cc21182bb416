#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zhu/linalg.hpp"
#include "zhu/voa.hpp"

namespace zhu {

enum class SpanKind { Circle, GeneralizedCircle, OL, Filtration };
std::string to_string(SpanKind k);
SpanKind span_kind_from_string(const std::string& s);

// A spanning vector of O_n(V) (or, for Filtration, a PBW word of the
// filtration piece F_r(1) used by filtered membership). Operands are basis
// words; the value is recomputed on demand by ZhuEngine::value.
//   Circle:            u o_n v
//   GeneralizedCircle: Res (1+x)^(wt u+n+k) Y(u,x)v / x^(m+2n+2)
//   OL:                (L(-1) + L(0)) v
//   Filtration:        v itself
struct SpanningVector {
    SpanKind kind = SpanKind::Circle;
    Mono u;
    Mono v;
    int m = 0;
    int k = 0;
};

struct SpanOrder {
    bool operator()(const SpanningVector& a, const SpanningVector& b) const;
};

using Combination = std::map<SpanningVector, Coef, SpanOrder>;

struct MembershipCertificate {
    Element target;
    Combination combination;  // target = sum coef * value
};

// input = result + sum coef * value over the certificate.
struct Reduction {
    Element result;
    Combination certificate;
};

struct MembershipOptions {
    // Extra weight added to the candidate window; also widens the u range.
    int search_bound = 0;
    // Max weight of the left operand u in circle candidates; -1 picks
    // gen_weight + n + search_bound.
    int u_weight_bound = -1;
    // false restricts to O_n^o(V) (circle products only).
    bool include_ol = true;
    // >= 0 adds the PBW words of length <= filtration as extra vectors.
    int filtration = -1;
};

struct MembershipResult {
    bool found = false;
    MembershipCertificate certificate;
    int search_bound = 0;
    std::size_t candidates = 0;
    std::size_t rank = 0;
};

enum class SeparationVerdict { Separated, NotSeparatedUpToBound, FoundMembership };
std::string to_string(SeparationVerdict v);

struct SeparationResult {
    SeparationVerdict verdict = SeparationVerdict::NotSeparatedUpToBound;
    // For Separated: the weight carrying the obstruction.
    int witness_weight = -1;
    std::string reason;
    MembershipCertificate certificate;
};

struct MultFormulaResult {
    Element state;  // u_{-t}^{i_t} ... u_{-1}^{i_1} 1
    Element main;
    Element g;      // terms with at least one nonnegative mode, normal ordered
    Element star;   // state *_n v computed from the definition
};

struct CorMultResult {
    Element main;
    Element g;                        // star - main
    std::optional<Element> g_finite;  // closed form when i = 1, n >= wt u + t >= 2
    std::optional<Element> g_series;  // general closed form when i = 1
    bool g_vanishing_branch = false;  // i = 1, n + wt u + t - 1 >= 0, wt u + t < 2
    Element star;
};

class ZhuEngine {
public:
    ZhuEngine(const Presentation& p, int level);

    const Presentation& presentation() const { return *pres_; }
    int level() const { return n_; }
    Space& space() { return space_; }

    Element circle(const Element& u, const Element& v);
    Element generalized_circle(const Element& u, const Element& v, int m, int k);
    Element star(const Element& u, const Element& v);
    Element value(const SpanningVector& s);

    // Index-space rewriting of u_d as a combination of u_j, j >= -2n-1,
    // modulo generalized circle vectors; also returns the multipliers of
    // generalized_circle(u, ., l, 0).
    const std::pair<std::map<int, Rational>, std::map<int, Rational>>& recursion_coefficients(int d);

    // Rewrites deep generator modes (parts >= 2n+gw+1).
    Reduction recursion_reduce(const Element& v);
    // Removes the part 2n+gw (u_{-2n-1} in vertex indexing); n >= 1.
    Reduction l_reduce(const Element& v);
    // Both, to a fixpoint: the output lies in the reduced range.
    Reduction spanning_normal_form(const Element& v);
    // Same result as spanning_normal_form (or recursion_reduce when lred is
    // false) without a certificate; memoized per basis word.
    Element reduce_fast(const Element& v, bool lred = true);
    // Parts allowed in the output of spanning_normal_form.
    int min_reduced_part() const { return pres_->vacuum_annihilation; }
    int max_reduced_part() const;
    bool in_reduced_range(const Mono& m) const;
    std::vector<Mono> reduced_basis(int max_weight) const;

    MultFormulaResult mult_formula(const std::vector<int>& exponents, const Element& v);
    MultFormulaResult mult_formula(const Element& u, const std::vector<int>& exponents, const Element& v);
    CorMultResult cor_mult(const Element& u, int t, int i, const Element& v);

    std::vector<SpanningVector> o_n_span(int weight_bound_u, int weight_bound_v, bool include_generalized,
                                         int generalized_depth = 2);

    MembershipResult membership(const Element& target, const MembershipOptions& opts = {});
    bool recheck(const MembershipCertificate& cert);

    SeparationResult ol_separation_check(const Element& u, int search_bound = 0);

    // (power of x, coefficient) for x^0 .. x^order of the reduced regular part.
    std::vector<std::pair<int, Element>> yplus_reduced(const Element& u, const Element& v, int order);

private:
    Element mode_combo(const std::map<int, Rational>& idx, const Mono& rest);
    bool step(const Mono& m, const Coef& c, Element& work, Combination* cert, bool rec, bool lred);
    Reduction run(const Element& v, bool rec, bool lred, bool track);
    const Element& reduce_mono(const Mono& m, bool lred);
    Element normal_ordered(const Element& u, const std::vector<int>& modes, const Element& v);

    const Presentation* pres_;
    int n_;
    Space space_;
    std::map<int, std::pair<std::map<int, Rational>, std::map<int, Rational>>> rec_cache_;
    std::unordered_map<std::string, Element> reduce_cache_;

    // Candidate echelons, reused and extended across membership calls.
    struct Window {
        std::vector<SpanningVector> cands;
        std::vector<std::size_t> ids;
        Echelon<Mono, MonoOrder> ech;
        std::size_t next = 0;
    };
    std::map<std::tuple<int, int, bool, int>, std::unique_ptr<Window>> windows_;
};

// C_j = sum_{m=0}^{n} (-1)^m C(m+n, n) C(j+n, m+n).
Rational cj_coefficient(long long n, long long j);

void add_to(Combination& c, const SpanningVector& s, const Coef& x);

}  // namespace zhu
