#include "zhu/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "zhu/linalg.hpp"

namespace zhu {

std::string to_string(SpanKind k) {
    switch (k) {
        case SpanKind::Circle: return "circle";
        case SpanKind::GeneralizedCircle: return "generalized_circle";
        case SpanKind::OL: return "ol";
        case SpanKind::Filtration: return "filtration";
    }
    return "?";
}

SpanKind span_kind_from_string(const std::string& s) {
    if (s == "circle") return SpanKind::Circle;
    if (s == "generalized_circle") return SpanKind::GeneralizedCircle;
    if (s == "ol") return SpanKind::OL;
    if (s == "filtration") return SpanKind::Filtration;
    throw std::invalid_argument("unknown spanning vector kind '" + s + "'");
}

std::string to_string(SeparationVerdict v) {
    switch (v) {
        case SeparationVerdict::Separated: return "Separated";
        case SeparationVerdict::NotSeparatedUpToBound: return "NotSeparatedUpToBound";
        case SeparationVerdict::FoundMembership: return "FoundMembership";
    }
    return "?";
}

bool SpanOrder::operator()(const SpanningVector& a, const SpanningVector& b) const {
    if (a.kind != b.kind) return a.kind < b.kind;
    MonoOrder mo;
    if (a.u != b.u) return mo(a.u, b.u);
    if (a.v != b.v) return mo(a.v, b.v);
    return std::tie(a.m, a.k) < std::tie(b.m, b.k);
}

void add_to(Combination& c, const SpanningVector& s, const Coef& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = c.try_emplace(s, x);
    if (inserted) return;
    it->second += x;
    if (it->second.is_zero()) c.erase(it);
}

Rational cj_coefficient(long long n, long long j) {
    Rational s;
    for (long long m = 0; m <= n; ++m) s += Rational(neg_one_pow(m)) * binom(m + n, n) * binom(j + n, m + n);
    return s;
}

ZhuEngine::ZhuEngine(const Presentation& p, int level) : pres_(&p), n_(level), space_(Space::vacuum(p)) {
    if (level < 0) throw std::invalid_argument("level n must be >= 0");
}

namespace {

void require_weight(int wt, int n) {
    if (wt + n < 0) throw std::invalid_argument("unsupported weight: wt u + n < 0");
}

}  // namespace

Element ZhuEngine::circle(const Element& u, const Element& v) {
    Element out;
    for (const auto& [w, comp] : u.components()) {
        require_weight(w, n_);
        const int top = w + n_;
        for (int i = 0; i <= top; ++i) out.add_scaled(space_.composite(comp, i - 2 * n_ - 2, v), Coef(binom(top, i)));
    }
    return out;
}

Element ZhuEngine::generalized_circle(const Element& u, const Element& v, int m, int k) {
    if (k < 0 || m < k) throw std::invalid_argument("generalized_circle requires m >= k >= 0");
    Element out;
    for (const auto& [w, comp] : u.components()) {
        require_weight(w, n_);
        const int top = w + n_ + k;
        for (int i = 0; i <= top; ++i)
            out.add_scaled(space_.composite(comp, i - m - 2 * n_ - 2, v), Coef(binom(top, i)));
    }
    return out;
}

Element ZhuEngine::star(const Element& u, const Element& v) {
    Element out;
    for (const auto& [w, comp] : u.components()) {
        require_weight(w, n_);
        const int top = w + n_;
        for (int m = 0; m <= n_; ++m) {
            Rational outer = Rational(neg_one_pow(m)) * binom(m + n_, n_);
            for (int i = 0; i <= top; ++i)
                out.add_scaled(space_.composite(comp, i - n_ - m - 1, v), Coef(outer * binom(top, i)));
        }
    }
    return out;
}

Element ZhuEngine::value(const SpanningVector& s) {
    switch (s.kind) {
        case SpanKind::Circle: return circle(Element(s.u), Element(s.v));
        case SpanKind::GeneralizedCircle: return generalized_circle(Element(s.u), Element(s.v), s.m, s.k);
        case SpanKind::OL: return space_.ol(Element(s.v));
        case SpanKind::Filtration: return Element(s.v);
    }
    return Element();
}

const std::pair<std::map<int, Rational>, std::map<int, Rational>>& ZhuEngine::recursion_coefficients(int d) {
    auto it = rec_cache_.find(d);
    if (it != rec_cache_.end()) return it->second;
    const int lo = -2 * n_ - 1;
    const int top = pres_->gen_weight + n_;
    std::map<int, Rational> vec{{d, Rational(1)}}, cert;
    while (!vec.empty() && vec.begin()->first < lo) {
        auto [j, c] = *vec.begin();
        const int l = -j - 2 * n_ - 2;
        cert[l] += c;
        for (int i = 0; i <= top; ++i) {
            Rational& slot = vec[i - l - 2 * n_ - 2];
            slot -= c * binom(top, i);
        }
        for (auto e = vec.begin(); e != vec.end();) e = e->second.is_zero() ? vec.erase(e) : std::next(e);
    }
    return rec_cache_.emplace(d, std::make_pair(std::move(vec), std::move(cert))).first->second;
}

int ZhuEngine::max_reduced_part() const {
    const int gw = pres_->gen_weight;
    return n_ == 0 ? gw : 2 * n_ + gw - 1;
}

bool ZhuEngine::in_reduced_range(const Mono& m) const {
    return m.empty() || (m.top() <= max_reduced_part() && m.parts().back() >= min_reduced_part());
}

std::vector<Mono> ZhuEngine::reduced_basis(int max_weight) const {
    return pbw_basis_upto(max_weight, min_reduced_part(), max_reduced_part());
}

Element ZhuEngine::mode_combo(const std::map<int, Rational>& idx, const Mono& rest) {
    Element out;
    for (const auto& [j, c] : idx) out.add_scaled(space_.apply(pres_->to_physics(j), rest), Coef(c));
    return out;
}

// One rewrite of the basis word m (coefficient c, already removed from work).
bool ZhuEngine::step(const Mono& m, const Coef& c, Element& work, Combination* cert, bool rec, bool lred) {
    const int gw = pres_->gen_weight;
    const int deep = 2 * n_ + gw + 1;
    if (rec && m.top() >= deep) {
        const auto& [vec, mult] = recursion_coefficients(pres_->to_index(-m.top()));
        Mono rest = m.rest();
        work.add_scaled(mode_combo(vec, rest), c);
        if (cert)
            for (const auto& [l, x] : mult) {
                // m = k = 0 is the plain circle product.
                SpanKind kind = l == 0 ? SpanKind::Circle : SpanKind::GeneralizedCircle;
                add_to(*cert, SpanningVector{kind, pres_->generator(), rest, l, 0}, c * Coef(x));
            }
        return true;
    }
    const int target = 2 * n_ + gw;
    if (lred && n_ >= 1 && m.count(target) > 0) {
        Mono lower = m.without_part(target).with_part(target - 1);
        Element o = space_.ol(Element(lower));
        Coef lead = o.coefficient(m);
        if (lead.is_zero()) throw std::logic_error("L-reduction: vanishing leading coefficient");
        Coef f = c / lead;
        work.add(m, c);
        work.add_scaled(o, -f);
        if (cert) add_to(*cert, SpanningVector{SpanKind::OL, Mono(), lower, 0, 0}, f);
        return true;
    }
    return false;
}

Reduction ZhuEngine::run(const Element& v, bool rec, bool lred, bool track) {
    Reduction r;
    Element work = v;
    Combination* cert = track ? &r.certificate : nullptr;
    std::size_t guard = 0;
    while (!work.is_zero()) {
        if (++guard > 50'000'000) throw std::runtime_error("reduction did not terminate");
        auto last = std::prev(work.terms().end());
        Mono m = last->first;
        Coef c = last->second;
        work.add(m, -c);
        if (!step(m, c, work, cert, rec, lred)) r.result.add(m, c);
    }
    return r;
}

Reduction ZhuEngine::recursion_reduce(const Element& v) { return run(v, true, false, true); }

Reduction ZhuEngine::l_reduce(const Element& v) {
    if (n_ < 1) throw std::invalid_argument("l_reduce requires n >= 1");
    return run(v, false, true, true);
}

Reduction ZhuEngine::spanning_normal_form(const Element& v) { return run(v, true, true, true); }

const Element& ZhuEngine::reduce_mono(const Mono& m, bool lred) {
    std::string key = (lred ? "L" : "R") + m.bytes();
    auto it = reduce_cache_.find(key);
    if (it != reduce_cache_.end()) return it->second;
    Element once;
    Element out;
    if (step(m, Coef(1), once, nullptr, true, lred)) {
        for (const auto& [mm, cc] : once.terms()) out.add_scaled(reduce_mono(mm, lred), cc);
    } else {
        out = Element(m);
    }
    return reduce_cache_.emplace(std::move(key), std::move(out)).first->second;
}

Element ZhuEngine::reduce_fast(const Element& v, bool lred) {
    Element out;
    for (const auto& [m, c] : v.terms()) out.add_scaled(reduce_mono(m, lred && n_ >= 1), c);
    return out;
}

MembershipResult ZhuEngine::membership(const Element& target, const MembershipOptions& opts) {
    MembershipResult res;
    res.search_bound = opts.search_bound;
    res.certificate.target = target;
    const bool lred = opts.include_ol && n_ >= 1;
    auto reduce = [&](const Element& e) { return reduce_fast(e, lred); };
    auto reduce_tracked = [&](const Element& e) { return run(e, true, lred, true); };

    Element t_red = reduce(target);
    Combination comb;
    if (!t_red.is_zero()) {
        const int gw = pres_->gen_weight;
        const int W = t_red.max_weight() + opts.search_bound;
        const int bu = opts.u_weight_bound >= 0 ? opts.u_weight_bound : gw + n_ + opts.search_bound;
        const int max_part = lred ? max_reduced_part() : 2 * n_ + gw;
        auto& slot = windows_[{W, bu, opts.include_ol, opts.filtration}];
        if (!slot) {
            slot = std::make_unique<Window>();
            auto& cands = slot->cands;
            for (const Mono& u : pbw_basis_upto(bu, pres_->vacuum_annihilation, 255)) {
                if (u.empty()) continue;
                for (const Mono& v : pbw_basis_upto(W - u.weight() - 2 * n_ - 1, min_reduced_part(), max_part))
                    cands.push_back({SpanKind::Circle, u, v, 0, 0});
            }
            if (lred)
                for (const Mono& v : pbw_basis_upto(W - 1, min_reduced_part(), max_part))
                    cands.push_back({SpanKind::OL, Mono(), v, 0, 0});
            if (opts.filtration >= 0)
                for (const Mono& v : pbw_basis_upto(W, min_reduced_part(), max_part))
                    if (v.length() <= opts.filtration) cands.push_back({SpanKind::Filtration, Mono(), v, 0, 0});
        }
        Window& win = *slot;
        const auto& cands = win.cands;
        res.candidates = cands.size();

        // Extend the cached echelon only until it reaches the target.
        bool reached = win.ech.contains(t_red.terms());
        for (std::size_t added = 0; !reached && win.next < cands.size(); ++win.next) {
            Element red = reduce(value(cands[win.next]));
            if (red.is_zero()) continue;
            win.ids.push_back(win.next);
            win.ech.insert(red.terms());
            if (++added % 64 == 0) reached = win.ech.contains(t_red.terms());
        }
        res.rank = win.ech.rank();
        std::optional<std::map<std::size_t, Coef>> coeffs = win.ech.express(t_red.terms());
        if (!coeffs) return res;
        const auto& ids = win.ids;
        for (const auto& [row, lambda] : *coeffs) {
            const SpanningVector& s = cands[ids[row]];
            add_to(comb, s, lambda);
            Reduction r = reduce_tracked(value(s));
            for (const auto& [sv, x] : r.certificate) add_to(comb, sv, -lambda * x);
        }
    }
    Reduction rt = reduce_tracked(target);
    for (const auto& [sv, x] : rt.certificate) add_to(comb, sv, x);
    res.certificate.combination = std::move(comb);
    if (!recheck(res.certificate)) throw RecheckFailure("membership certificate failed its recheck");
    res.found = true;
    return res;
}

bool ZhuEngine::recheck(const MembershipCertificate& cert) {
    Element sum;
    for (const auto& [sv, c] : cert.combination) sum.add_scaled(value(sv), c);
    return sum == cert.target;
}

SeparationResult ZhuEngine::ol_separation_check(const Element& u, int search_bound) {
    if (!u.is_homogeneous()) throw std::invalid_argument("separation check requires a homogeneous u");
    SeparationResult res;
    Element o = space_.ol(u);
    res.certificate.target = o;
    if (o.is_zero()) {
        res.verdict = SeparationVerdict::FoundMembership;
        res.reason = "(L(-1)+L(0))u = 0";
        return res;
    }
    if (n_ == 0) {
        // u o_0 1 = u_{-2}1 + wt(u) u_{-1}1 = (L(-1)+L(0))u.
        for (const auto& [m, c] : u.terms()) add_to(res.certificate.combination, {SpanKind::Circle, m, Mono(), 0, 0}, c);
        if (!recheck(res.certificate)) throw RecheckFailure("separation: u o_0 1 != (L(-1)+L(0))u");
        res.verdict = SeparationVerdict::FoundMembership;
        res.reason = "(L(-1)+L(0))u = u o_0 1";
        return res;
    }
    // Every O_n^o spanning vector lives in weights >= n+1.
    if (o.min_weight() <= n_) {
        res.verdict = SeparationVerdict::Separated;
        res.witness_weight = o.min_weight();
        res.reason = "(L(-1)+L(0))u has a nonzero component of weight " + std::to_string(o.min_weight()) +
                     " <= n, while O_n^o(V) is contained in weights >= n+1";
        return res;
    }
    MembershipOptions opts;
    opts.search_bound = search_bound;
    opts.include_ol = false;
    MembershipResult mr = membership(o, opts);
    if (mr.found) {
        res.verdict = SeparationVerdict::FoundMembership;
        res.certificate = mr.certificate;
        res.reason = "certificate in O_n^o(V)";
    } else {
        res.verdict = SeparationVerdict::NotSeparatedUpToBound;
        res.reason = "no O_n^o(V) certificate within search bound " + std::to_string(search_bound);
    }
    return res;
}

std::vector<SpanningVector> ZhuEngine::o_n_span(int weight_bound_u, int weight_bound_v, bool include_generalized,
                                                int generalized_depth) {
    if (weight_bound_u < 0 || weight_bound_v < 0) throw std::invalid_argument("o_n_span bounds must be >= 0");
    const int mp = pres_->vacuum_annihilation;
    auto us = pbw_basis_upto(weight_bound_u, mp, 255);
    auto vs = pbw_basis_upto(weight_bound_v, mp, 255);
    std::vector<SpanningVector> out;
    auto keep = [&](const SpanningVector& s) {
        if (!value(s).is_zero()) out.push_back(s);
    };
    for (const Mono& u : us)
        for (const Mono& v : vs) keep({SpanKind::Circle, u, v, 0, 0});
    if (include_generalized)
        for (const Mono& u : us)
            for (const Mono& v : vs)
                for (int m = 1; m <= generalized_depth; ++m)
                    for (int k = 0; k <= m; ++k) keep({SpanKind::GeneralizedCircle, u, v, m, k});
    for (const Mono& v : vs) keep({SpanKind::OL, Mono(), v, 0, 0});
    std::sort(out.begin(), out.end(), SpanOrder());
    return out;
}

std::vector<std::pair<int, Element>> ZhuEngine::yplus_reduced(const Element& u, const Element& v, int order) {
    if (u.is_zero() || !u.is_homogeneous()) throw std::invalid_argument("yplus_reduced requires a nonzero homogeneous u");
    const int w = u.max_weight();
    if (w < -n_) throw std::invalid_argument("yplus_reduced requires wt u >= -n");
    std::vector<std::pair<int, Element>> out;
    for (int p = 0; p <= order; ++p) {
        Element c;
        if (w == -n_) {
            if (p <= 2 * n_) c = space_.composite(u, -p - 1, v);
        } else if (p <= n_ - w) {
            c = space_.composite(u, -p - 1, v);
        } else {
            const int m = p + w;
            for (int k = n_ - w + 2; k <= 2 * n_ + 1; ++k) {
                Rational f = Rational(neg_one_pow(m - w)) * binom(m - n_ - 1, k - n_ + w - 2) *
                             binom(m - k - w, 2 * n_ - k + 1);
                if (!f.is_zero()) c.add_scaled(space_.composite(u, -k, v), Coef(f));
            }
        }
        out.emplace_back(p, std::move(c));
    }
    return out;
}

// Normal-ordered product of modes of u (vertex indices, leftmost first) on v:
// negative indices act in the written order from the left, nonnegative ones
// act first on v in the written order.
Element ZhuEngine::normal_ordered(const Element& u, const std::vector<int>& modes, const Element& v) {
    Element w = v;
    for (int q : modes)
        if (q >= 0) w = space_.composite(u, q, w);
    for (auto it = modes.rbegin(); it != modes.rend(); ++it)
        if (*it < 0) w = space_.composite(u, *it, w);
    return w;
}

MultFormulaResult ZhuEngine::mult_formula(const std::vector<int>& exponents, const Element& v) {
    return mult_formula(Element(pres_->generator()), exponents, v);
}

MultFormulaResult ZhuEngine::mult_formula(const Element& u, const std::vector<int>& exponents, const Element& v) {
    if (exponents.empty()) throw std::invalid_argument("mult_formula needs t >= 1");
    if (u.is_zero() || !u.is_homogeneous()) throw std::invalid_argument("mult_formula requires a nonzero homogeneous u");
    const int t = static_cast<int>(exponents.size());
    const int wu = u.max_weight();
    MultFormulaResult res;
    res.state = Element::vacuum();
    long long r = 0;
    for (int s = 1; s <= t; ++s) {
        if (exponents[s - 1] < 0) throw std::invalid_argument("exponents must be >= 0");
        for (int rep = 0; rep < exponents[s - 1]; ++rep) res.state = space_.composite(u, -s, res.state);
        r += static_cast<long long>(wu + s - 1) * exponents[s - 1];
    }
    // Factors in state order: block t leftmost.
    std::vector<int> block;
    for (int s = t; s >= 1; --s)
        for (int rep = 0; rep < exponents[s - 1]; ++rep) block.push_back(s);
    const int p = static_cast<int>(block.size());
    // Coefficient of each total sum S = n - j, split by main (all k >= 0) and g.
    std::map<int, Rational> coeff;
    for (int m = 0; m <= n_; ++m) {
        Rational om = Rational(neg_one_pow(m)) * binom(m + n_, n_);
        for (long long j = -m; j + m <= n_ + r; ++j) coeff[static_cast<int>(n_ - j)] += om * binom(n_ + r, j + m);
    }
    int max_sum = 0;
    for (const auto& [S, c] : coeff)
        if (!c.is_zero()) max_sum = std::max(max_sum, S);

    // Annihilators act in factor order before all creators, so they are applied
    // as the recursion descends and zero branches are cut. A mode u_q kills a
    // state of weight w when q > w + wu - 1.
    std::vector<int> creators(p);
    std::function<void(int, int, Rational, bool, const Element&)> rec =
        [&](int f, int sum, Rational coef, bool neg, const Element& w) {
            if (f == p) {
                auto it = coeff.find(sum);
                if (it == coeff.end() || it->second.is_zero()) return;
                Element out = w;
                for (int g = p - 1; g >= 0 && !out.is_zero(); --g)
                    if (creators[g] != 0) out = space_.composite(u, creators[g], out);
                (neg ? res.g : res.main).add_scaled(out, Coef(coef * it->second));
                return;
            }
            const int ww = std::max(w.max_weight(), 0);
            const int lo = -block[f] - wu - ww + 1;
            // Most negative total the later factors can still add.
            int neg_room = 0;
            for (int g = f + 1; g < p; ++g) neg_room += block[g] + wu + ww + (g - f) * std::max(wu - 1, 0) - 1;
            const int hi = max_sum - sum + neg_room;
            for (int kv = std::min(lo, 0); kv <= hi; ++kv) {
                if (kv < 0 && (kv > -block[f] || kv < lo)) continue;
                Rational b = binom(kv + block[f] - 1, block[f] - 1);
                if (b.is_zero()) continue;
                const int q = -kv - block[f];
                if (q >= 0) {
                    creators[f] = 0;
                    Element nw = space_.composite(u, q, w);
                    if (nw.is_zero()) continue;
                    rec(f + 1, sum + kv, coef * b, true, nw);
                } else {
                    creators[f] = q;
                    rec(f + 1, sum + kv, coef * b, neg, w);
                }
            }
        };
    rec(0, 0, Rational(1), false, v);
    res.star = star(res.state, v);
    return res;
}

CorMultResult ZhuEngine::cor_mult(const Element& u, int t, int i, const Element& v) {
    if (t < 1 || i < 1) throw std::invalid_argument("cor_mult requires t, i >= 1");
    if (u.is_zero() || !u.is_homogeneous()) throw std::invalid_argument("cor_mult requires a nonzero homogeneous u");
    const int wu = u.max_weight();
    Element state = Element::vacuum();
    for (int rep = 0; rep < i; ++rep) state = space_.composite(u, -t, state);
    CorMultResult res;
    std::vector<int> parts(i);
    for (int m = 0; m <= n_; ++m) {
        Rational om = Rational(neg_one_pow(m)) * binom(m + n_, n_);
        for (int j = 0; j <= m + n_; ++j) {
            Rational c = om * binom(n_ + static_cast<long long>(i) * (wu + t - 1), m + n_ - j);
            if (c.is_zero()) continue;
            std::function<void(int, int, Rational)> rec = [&](int l, int remaining, Rational coef) {
                if (l == i - 1) {
                    parts[l] = remaining;
                    coef *= binom(remaining + t - 1, t - 1);
                    std::vector<int> modes(i);
                    for (int q = 0; q < i; ++q) modes[q] = -parts[q] - t;
                    res.main.add_scaled(normal_ordered(u, modes, v), Coef(coef));
                    return;
                }
                for (int x = 0; x <= remaining; ++x) {
                    parts[l] = x;
                    rec(l + 1, remaining - x, coef * binom(x + t - 1, t - 1));
                }
            };
            rec(0, j, c);
        }
    }
    res.star = star(state, v);
    res.g = res.star - res.main;
    if (i == 1) {
        const int wv = std::max(v.max_weight(), 0);
        Element series;
        for (int m = 0; m <= n_; ++m) {
            Rational om = Rational(neg_one_pow(m)) * binom(m + n_, n_);
            for (int j = -1; j >= -t - wu - wv; --j) {
                Rational c = om * binom(n_ + wu + t - 1, m + n_ - j) * binom(j + t - 1, t - 1);
                if (!c.is_zero()) series.add_scaled(space_.composite(u, -j - t, v), Coef(c));
            }
        }
        res.g_series = series;
        res.g_vanishing_branch = n_ + wu + t - 1 >= 0 && wu + t < 2;
        const int kk = wu + t;
        if (n_ >= kk && kk >= 2) {
            Element fin;
            for (int m = 0; m <= kk - 2; ++m) {
                Rational om = Rational(neg_one_pow(m)) * binom(m + n_, n_);
                for (int j = -1; j >= m - kk + 1; --j) {
                    Rational c = om * binom(n_ + kk - 1, m + n_ - j) * binom(j + t - 1, t - 1);
                    if (!c.is_zero()) fin.add_scaled(space_.composite(u, -j - t, v), Coef(c));
                }
            }
            res.g_finite = fin;
        }
    }
    return res;
}

}  // namespace zhu
