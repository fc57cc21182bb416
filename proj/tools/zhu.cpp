// Command-line front end. Exit codes: 0 verified, 1 verification failure or
// counterexample, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zhu/certificate.hpp"
#include "zhu/engine.hpp"
#include "zhu/identities.hpp"
#include "zhu/modules.hpp"
#include "zhu/parse_error.hpp"
#include "zhu/presentations.hpp"

using namespace zhu;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string algebra = "heisenberg";
    int level = 0;
    int bound = 0;
    std::string format = "text";
    std::vector<std::string> bind;
    Bindings bindings{};
};

void parse_bindings(Config& cfg) {
    const auto& names = param_names();
    for (const auto& b : cfg.bind) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) throw UsageError("binding '" + b + "' is not of the form name=value");
        const std::string name = b.substr(0, eq);
        std::size_t idx = names.size();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) idx = i;
        if (idx == names.size() || idx == kShift) throw UsageError("unknown parameter '" + name + "' (use c, h or lambda)");
        cfg.bindings[idx] = Rational::parse(b.substr(eq + 1));
    }
}

bool json_out(const Config& c) { return c.format == "json"; }

const Presentation& algebra(const Config& c) {
    if (c.algebra != "heisenberg" && c.algebra != "virasoro")
        throw UsageError("unknown algebra '" + c.algebra + "' (heisenberg or virasoro)");
    return Presentation::by_name(c.algebra);
}

Element parse_in(const std::string& text, Space& s, const Config& c) { return parse_element(text, s).substitute(c.bindings); }

std::string render(const Element& e, const Presentation& p, const Config& c) { return to_string(e.substitute(c.bindings), p); }

void require_level(const Config& c) {
    if (c.level < 0) throw UsageError("--level must be >= 0");
    if (c.bound < 0) throw UsageError("--bound must be >= 0");
}

int print_element(const std::string& cmd, const Element& e, const Presentation& p, const Config& c, bool with_level) {
    if (json_out(c)) {
        json j{{"command", cmd}, {"algebra", p.name()}, {"result", render(e, p, c)}};
        if (with_level) j["level"] = c.level;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render(e, p, c) << "\n";
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_membership(const std::string& expr, const Config& c) {
    require_level(c);
    const Presentation& p = algebra(c);
    ZhuEngine e(p, c.level);
    const Element t = parse_in(expr, e.space(), c);
    MembershipOptions o;
    o.search_bound = c.bound;
    MembershipResult r = e.membership(t, o);
    if (json_out(c)) {
        json j{{"command", "membership"}, {"found", r.found}, {"search_bound", c.bound},
               {"candidates", r.candidates}, {"rank", r.rank}};
        if (r.found) j["certificate"] = json::parse(certificate_to_json(r.certificate, p, c.level));
        std::cout << j.dump(2) << "\n";
    } else if (r.found) {
        std::cout << "certified: " << r.certificate.combination.size() << " spanning vectors, rechecked exactly\n"
                  << certificate_to_json(r.certificate, p, c.level) << "\n";
    } else {
        std::cout << "not found up to search bound " << c.bound << " (" << r.candidates << " candidates, rank " << r.rank
                  << "); this is not a proof of non-membership\n";
    }
    return r.found ? 0 : 1;
}

int cmd_reduce(const std::string& expr, bool cert, const Config& c) {
    require_level(c);
    const Presentation& p = algebra(c);
    ZhuEngine e(p, c.level);
    const Element v = parse_in(expr, e.space(), c);
    Reduction r = c.level == 0 ? e.recursion_reduce(v) : e.spanning_normal_form(v);
    MembershipCertificate mc{v - r.result, r.certificate};
    const bool ok = e.recheck(mc);
    if (json_out(c)) {
        json j{{"command", "reduce"}, {"algebra", p.name()}, {"level", c.level}, {"result", render(r.result, p, c)}};
        if (cert) j["certificate"] = json::parse(certificate_to_json(mc, p, c.level));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render(r.result, p, c) << "\n";
        if (cert) std::cout << certificate_to_json(mc, p, c.level) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_separation(const std::string& expr, const Config& c) {
    require_level(c);
    const Presentation& p = algebra(c);
    ZhuEngine e(p, c.level);
    const Element u = parse_in(expr, e.space(), c);
    SeparationResult r = e.ol_separation_check(u, c.bound);
    if (json_out(c)) {
        json j{{"command", "separation"}, {"algebra", p.name()}, {"level", c.level}, {"verdict", to_string(r.verdict)},
               {"reason", r.reason}};
        if (r.witness_weight >= 0) j["witness_weight"] = r.witness_weight;
        if (r.verdict == SeparationVerdict::FoundMembership)
            j["certificate"] = json::parse(certificate_to_json(r.certificate, p, c.level));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(r.verdict) << ": " << r.reason << "\n";
    }
    return r.verdict == SeparationVerdict::NotSeparatedUpToBound ? 1 : 0;
}

int cmd_zero_mode(const std::string& expr, const std::string& module, int degree, const Config& c) {
    if (degree < 0) throw UsageError("--degree must be >= 0");
    const Presentation* p = nullptr;
    if (module == "fock") p = &Presentation::heisenberg();
    else if (module == "verma") p = &Presentation::virasoro();
    else throw UsageError("unknown module '" + module + "' (fock or verma)");
    GradedModule m(*p);
    Space vac = Space::vacuum(*p);
    const Element v = parse_in(expr, vac, c);
    ZeroModeMatrix z = zero_mode(m, v, degree);
    z.matrix = z.matrix.substitute(c.bindings);
    if (json_out(c)) {
        std::cout << zero_mode_json(z, m) << "\n";
    } else {
        std::cout << "o(" << to_string(v, *p) << ") on " << module << " degree " << degree << ", basis:";
        for (const Mono& b : z.basis) std::cout << " " << mono_string(b, *p, "|v>");
        std::cout << "\n";
        for (std::size_t i = 0; i < z.matrix.rows(); ++i) {
            for (std::size_t j = 0; j < z.matrix.cols(); ++j) std::cout << (j ? "  " : "  [") << z.matrix.at(i, j).str();
            std::cout << "]\n";
        }
    }
    return 0;
}

PresentationSpec load_spec(const std::string& which) {
    for (const auto& s : builtin_specs())
        if (s.name == which) return s;
    std::ifstream probe(which);
    if (!probe) throw UsageError("'" + which + "' is neither a builtin presentation nor a readable file");
    return PresentationSpec::from_json(read_file(which));
}

int cmd_verify_presentation(const std::string& which, int bound, bool zero, bool descent, bool lower, bool print_spec,
                            const Config& c) {
    PresentationSpec spec = load_spec(which);
    if (print_spec) {
        std::cout << spec.to_json() << "\n";
        return 0;
    }
    VerifyOptions o;
    o.search_bound = bound;
    o.zero_mode = zero;
    o.descent = descent;
    PresentationReport rep = verify_presentation(spec, o);
    bool ok = rep.pass();
    std::vector<FilteredReport> low;
    if (lower) {
        low = lower_order_check(spec);
        for (const auto& f : low) ok = ok && f.found;
    }
    if (json_out(c)) {
        json j = json::parse(rep.to_json(spec));
        if (lower) {
            j["lower_order"] = json::array();
            for (const auto& f : low)
                j["lower_order"].push_back({{"poly", f.poly}, {"r", f.r}, {"found", f.found}, {"certificate_terms", f.certificate_terms}});
        }
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.name << " (level " << rep.level << ", search bound " << rep.search_bound << ")\n";
        for (const auto& r : rep.relations) {
            std::cout << "  " << (r.pass() ? "ok  " : "FAIL") << " " << r.relation << ": membership "
                      << (r.membership ? "certified" : "not found") << ", zero modes " << (r.zero_mode ? "vanish" : "nonzero");
            if (r.descent_applicable) std::cout << ", descent " << (r.descent ? "certified" : "not found");
            std::cout << " (" << r.seconds << " s)\n";
        }
        for (const auto& f : low)
            std::cout << "  " << (f.found ? "ok  " : "FAIL") << " " << f.poly << " in O_" << rep.level << " + F_" << f.r << "\n";
        std::cout << (ok ? "all relations verified" : "verification failed") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify_identities(const std::string& which, const IdentityRanges& r, const Config& c) {
    std::vector<std::string> names = which.empty() ? identity_names() : std::vector<std::string>{which};
    bool ok = true;
    json all = json::array();
    for (const auto& n : names) {
        IdentityReport rep = check_identity(n, r);
        ok = ok && rep.pass();
        if (json_out(c)) {
            all.push_back(json::parse(rep.to_json()));
        } else {
            std::cout << n << ": " << rep.tuples_checked << " tuples, " << rep.counterexamples.size() << " counterexamples\n";
            for (const auto& ce : rep.counterexamples)
                std::cout << "  " << ce.tuple << ": " << ce.lhs.str() << " != " << ce.rhs.str() << "\n";
        }
    }
    if (json_out(c)) std::cout << (names.size() == 1 ? all[0] : json{{"reports", all}, {"pass", ok}}).dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_recheck(const std::string& path, const Config& c) {
    const std::string text = read_file(path);
    LoadedCertificate lc = certificate_from_json(text);
    ZhuEngine e(*lc.presentation, lc.level);
    const bool ok = e.recheck(lc.certificate);
    if (json_out(c)) {
        std::cout << json{{"command", "recheck"}, {"valid", ok}, {"terms", lc.certificate.combination.size()}}.dump(2) << "\n";
    } else {
        std::cout << (ok ? "certificate verified" : "certificate does NOT sum to its target") << " ("
                  << lc.certificate.combination.size() << " terms, " << lc.presentation->name() << ", level " << lc.level << ")\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in level-n Zhu algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("-a,--algebra", cfg.algebra, "heisenberg or virasoro")->capture_default_str();
    app.add_option("-f,--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("-b,--bind", cfg.bind, "parameter value, e.g. c=1/2, h=0, lambda=3");
    auto level = [&](CLI::App* s) { s->add_option("-n,--level", cfg.level, "level n")->capture_default_str(); };
    auto bound = [&](CLI::App* s) { s->add_option("-B,--bound", cfg.bound, "search bound")->capture_default_str(); };

    std::string e1, e2, e3;
    int mode_index = 0;

    auto* normalize = app.add_subcommand("normalize", "PBW-canonical form of an element");
    normalize->add_option("expr", e1)->required();

    auto* mode = app.add_subcommand("mode", "state_j applied to a target");
    mode->add_option("j", mode_index)->required();
    mode->add_option("state", e1)->required();
    mode->add_option("target", e2)->required();

    auto* circle = app.add_subcommand("circle", "u o_n v");
    auto* star = app.add_subcommand("star", "u *_n v");
    for (auto* s : {circle, star}) {
        s->add_option("u", e1)->required();
        s->add_option("v", e2)->required();
        level(s);
    }

    bool want_cert = false;
    auto* reduce = app.add_subcommand("reduce", "reduce to the spanning range modulo O_n");
    reduce->add_option("expr", e1)->required();
    reduce->add_flag("--certificate", want_cert, "also print the certificate for input - output");
    level(reduce);

    auto* membership = app.add_subcommand("membership", "bounded search for an O_n certificate");
    membership->add_option("expr", e1)->required();
    level(membership);
    bound(membership);

    int vp_bound = -1;
    bool no_zero = false, no_descent = false, lower = false, print_spec = false;
    auto* vp = app.add_subcommand("verify-presentation", "verify a builtin or JSON presentation");
    vp->add_option("presentation", e1, "builtin name or spec file")->required();
    vp->add_option("-B,--bound", vp_bound, "search bound (default: stored in the spec)");
    vp->add_flag("--no-zero-mode", no_zero);
    vp->add_flag("--no-descent", no_descent);
    vp->add_flag("--lower-order", lower, "also check the filtered products");
    vp->add_flag("--print-spec", print_spec, "print the spec as JSON and exit");

    std::string identity;
    IdentityRanges ranges;
    auto* vi = app.add_subcommand("verify-identities", "exact sweeps of the binomial identities");
    vi->add_option("--identity", identity)->check(CLI::IsMember(identity_names()));
    vi->add_option("--n-min", ranges.n.lo);
    vi->add_option("--n-max", ranges.n.hi);
    vi->add_option("--k-min", ranges.k.lo);
    vi->add_option("--k-max", ranges.k.hi);
    vi->add_option("--m-extra", ranges.m_extra);
    vi->add_option("--r-min", ranges.r.lo);
    vi->add_option("--r-max", ranges.r.hi);
    vi->add_option("--s-min", ranges.s.lo);
    vi->add_option("--s-max", ranges.s.hi);
    vi->add_option("--j-min", ranges.j.lo);
    vi->add_option("--j-max", ranges.j.hi);

    auto* sep = app.add_subcommand("separation", "is (L(-1)+L(0))u outside O_n^o?");
    sep->add_option("expr", e1)->required();
    level(sep);
    bound(sep);

    std::string module = "fock";
    int degree = 0;
    auto* zm = app.add_subcommand("zero-mode", "matrix of o(v) on a module degree");
    zm->add_option("expr", e1)->required();
    zm->add_option("--module", module)->capture_default_str();
    zm->add_option("--degree", degree)->capture_default_str();

    auto* rc = app.add_subcommand("recheck", "re-verify a certificate file");
    rc->add_option("file", e1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        parse_bindings(cfg);
        if (*normalize) {
            const Presentation& p = algebra(cfg);
            Space s = Space::vacuum(p);
            return print_element("normalize", parse_in(e1, s, cfg), p, cfg, false);
        }
        if (*mode) {
            const Presentation& p = algebra(cfg);
            Space s = Space::vacuum(p);
            return print_element("mode", s.composite(parse_in(e1, s, cfg), mode_index, parse_in(e2, s, cfg)), p, cfg, false);
        }
        if (*circle || *star) {
            require_level(cfg);
            const Presentation& p = algebra(cfg);
            ZhuEngine e(p, cfg.level);
            const Element u = parse_in(e1, e.space(), cfg), v = parse_in(e2, e.space(), cfg);
            return *circle ? print_element("circle", e.circle(u, v), p, cfg, true)
                           : print_element("star", e.star(u, v), p, cfg, true);
        }
        if (*reduce) return cmd_reduce(e1, want_cert, cfg);
        if (*membership) return cmd_membership(e1, cfg);
        if (*vp) return cmd_verify_presentation(e1, vp_bound, !no_zero, !no_descent, lower, print_spec, cfg);
        if (*vi) return cmd_verify_identities(identity, ranges, cfg);
        if (*sep) return cmd_separation(e1, cfg);
        if (*zm) return cmd_zero_mode(e1, module, degree, cfg);
        if (*rc) return cmd_recheck(e1, cfg);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RecheckFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
