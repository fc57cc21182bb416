// One line per acceptance criterion: PASS/FAIL, runtime, detail. Exit status
// is 0 only when every criterion passes.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "suites.hpp"
#include "zhu/engine.hpp"
#include "zhu/identities.hpp"
#include "zhu/presentations.hpp"

using namespace zhu;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Rechecks every certificate in a fresh engine, independent of the one that produced it.
bool recheck_all(const PresentationSpec& spec, const PresentationReport& rep) {
    ZhuEngine fresh(*spec.presentation, spec.level);
    for (const auto& r : rep.relations)
        if (!r.membership || !fresh.recheck(r.certificate.certificate)) return false;
    return true;
}

Outcome presentation(const std::string& name, bool need_descent) {
    PresentationSpec spec = builtin_spec(name);
    PresentationReport rep = verify_presentation(spec);
    int mem = 0, zm = 0, desc = 0;
    for (const auto& r : rep.relations) {
        mem += r.membership;
        zm += r.zero_mode;
        desc += r.descent;
    }
    const int total = static_cast<int>(rep.relations.size());
    bool ok = total > 0 && mem == total && zm == total && recheck_all(spec, rep);
    if (need_descent) ok = ok && desc == total;
    std::ostringstream os;
    os << name << " n=" << spec.level << ": " << mem << "/" << total << " certified, " << zm << "/" << total
       << " zero-mode annihilated on degrees 0.." << spec.level;
    if (need_descent) os << ", " << desc << "/" << total << " certified in O_" << spec.level - 1;
    return {ok, os.str()};
}

Outcome identities() {
    std::ostringstream os;
    bool ok = true;
    for (const auto& name : identity_names()) {
        IdentityReport r = check_identity(name);
        ok = ok && r.pass() && r.tuples_checked > 0;
        os << name << " " << r.tuples_checked << " tuples/" << r.counterexamples.size() << " counterexamples; ";
    }
    return {ok, os.str()};
}

Outcome separation() {
    const Presentation& H = Presentation::heisenberg();
    const Presentation& V = Presentation::virasoro();
    const Element a(Mono::from_parts({1})), w(Mono::from_parts({2}));
    bool ok = true;
    std::ostringstream os;
    auto check = [&](const Presentation& p, int n, const Element& u, SeparationVerdict expect) {
        ZhuEngine e(p, n);
        SeparationResult r = e.ol_separation_check(u);
        bool good = r.verdict == expect;
        if (expect == SeparationVerdict::FoundMembership)
            good = good && e.recheck(r.certificate) && r.certificate.target == e.space().ol(u) &&
                   !r.certificate.combination.empty();
        ok = ok && good;
        os << p.name() << " n=" << n << " " << to_string(u, p) << ": " << to_string(r.verdict) << "; ";
    };
    check(H, 1, a, SeparationVerdict::Separated);
    check(H, 2, a, SeparationVerdict::Separated);
    check(V, 2, w, SeparationVerdict::Separated);
    check(H, 0, a, SeparationVerdict::FoundMembership);
    check(V, 0, w, SeparationVerdict::FoundMembership);
    return {ok, os.str()};
}

Outcome properties(std::uint64_t seed) {
    constexpr int kCases = 200;
    std::ostringstream os;
    bool ok = true;
    auto add = [&](const char* name, const suites::Result& r, int min_cases) {
        ok = ok && r.ok() && r.cases >= min_cases;
        os << name << " " << r.cases << "/" << r.failures << "; ";
        if (!r.first_failure.empty()) os << "(" << r.first_failure << ") ";
    };
    add("ideal", suites::ideal(seed, kCases), kCases);
    add("associator", suites::associator(seed, kCases), kCases);
    add("recursion", suites::recursion_difference(seed, kCases), kCases);
    add("mult_formula", suites::mult_formula(seed, kCases), kCases);
    add("hom", suites::hom_property(seed, kCases), kCases);
    add("filtered", suites::filtered(seed, kCases), kCases);
    return {ok, "cases/failures: " + os.str() + "seed " + std::to_string(seed)};
}

Outcome reduction_sweep() {
    std::ostringstream os;
    bool ok = true;
    auto sweep = [&](const Presentation& p, int n) {
        ZhuEngine e(p, n);
        int words = 0, bad = 0;
        for (const Mono& w : pbw_basis_upto(8, p.vacuum_annihilation, 255)) {
            ++words;
            const Element v(w);
            Reduction r = e.spanning_normal_form(v);
            bool good = e.recheck({v - r.result, r.certificate});
            for (const auto& [m, c] : r.result.terms()) good = good && e.in_reduced_range(m);
            MembershipOptions opts;
            bool found = false;
            for (int b = 0; b <= 2 && !found; ++b) {
                opts.search_bound = b;
                MembershipResult mr = e.membership(v - r.result, opts);
                found = mr.found && e.recheck(mr.certificate);
            }
            if (!(good && found)) ++bad;
        }
        ok = ok && bad == 0;
        os << p.name() << " n=" << n << ": " << words << " words, " << bad << " failures (modes " << e.min_reduced_part()
           << ".." << e.max_reduced_part() << "); ";
    };
    sweep(Presentation::heisenberg(), 1);
    sweep(Presentation::heisenberg(), 2);
    sweep(Presentation::virasoro(), 1);
    return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = suites::kDefaultSeed;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[i + 1], nullptr, 10);

    struct Criterion {
        int id;
        const char* title;
        double budget_seconds;  // 0: none
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "combinatorial identities", 30, identities},
        {2, "A_0 Heisenberg relation", 5, [] { return presentation("heis_A0", false); }},
        {3, "A_1 Heisenberg relation", 120, [] { return presentation("heis_A1", false); }},
        {4, "A_2 Heisenberg, 13 generators", 0, [] { return presentation("heis_A2", true); }},
        {5, "Virasoro A_0 and A_1",
         120,
         [] {
             Outcome a = presentation("vir_A0", false), b = presentation("vir_A1", false);
             return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
         }},
        {6, "O^L separation", 60, separation},
        {7, "property suites", 600, [seed] { return properties(seed); }},
        {8, "reduction soundness sweep", 300, reduction_sweep},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += " [over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget]";
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ") " << std::fixed
                  << std::setprecision(2) << secs << " s: " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
