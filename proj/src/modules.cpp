#include "zhu/modules.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

namespace zhu {

GradedModule::GradedModule(const Presentation& p)
    : space_(p, p.algebra == Algebra::Heisenberg ? LowestKind::Fock : LowestKind::Verma) {}

namespace {

Element apply_zero_mode(GradedModule& m, const Element& v, const Element& w) {
    Element out;
    for (const auto& [wt, comp] : v.components()) out.add_scaled(m.act_state(comp, wt - 1, w), Coef(1));
    return out;
}

int default_degree(const ZhuEngine& e, int d) { return d < 0 ? e.level() : d; }

}  // namespace

ZeroModeMatrix zero_mode(GradedModule& m, const Element& v, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    ZeroModeMatrix z;
    z.state = v;
    z.degree = degree;
    z.basis = m.basis(degree);
    std::map<Mono, std::size_t, MonoOrder> index;
    for (std::size_t i = 0; i < z.basis.size(); ++i) index.emplace(z.basis[i], i);
    z.matrix = SparseMatrix(z.basis.size(), z.basis.size());
    for (std::size_t j = 0; j < z.basis.size(); ++j) {
        Element col = apply_zero_mode(m, v, Element(z.basis[j]));
        for (const auto& [mono, c] : col.terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw std::logic_error("zero mode left degree " + std::to_string(degree));
            z.matrix.set(it->second, j, c);
        }
    }
    return z;
}

ModuleCheckReport hom_property_check(ZhuEngine& e, GradedModule& m, const Element& u, const Element& v,
                                     int max_degree) {
    ModuleCheckReport rep;
    const Element uv = e.star(u, v);
    for (int d = 0; d <= default_degree(e, max_degree); ++d) {
        DegreeCheck dc{d, true, ""};
        for (const Mono& b : m.basis(d)) {
            Element w(b);
            Element lhs = apply_zero_mode(m, uv, w);
            Element rhs = apply_zero_mode(m, u, apply_zero_mode(m, v, w));
            if (lhs != rhs) {
                dc.pass = false;
                dc.detail = "mismatch on " + mono_string(b, m.presentation(), "|v>") + ": " +
                            to_string(lhs - rhs, m.space());
                break;
            }
        }
        rep.pass = rep.pass && dc.pass;
        rep.degrees.push_back(std::move(dc));
    }
    return rep;
}

ModuleCheckReport zero_mode_annihilation_check(ZhuEngine& e, GradedModule& m, const Element& relation_value,
                                               int max_degree) {
    ModuleCheckReport rep;
    for (int d = 0; d <= default_degree(e, max_degree); ++d) {
        DegreeCheck dc{d, true, ""};
        for (const Mono& b : m.basis(d)) {
            Element out = apply_zero_mode(m, relation_value, Element(b));
            if (!out.is_zero()) {
                dc.pass = false;
                dc.detail = "o(r) " + mono_string(b, m.presentation(), "|v>") + " = " + to_string(out, m.space());
                break;
            }
        }
        rep.pass = rep.pass && dc.pass;
        rep.degrees.push_back(std::move(dc));
    }
    return rep;
}

std::string zero_mode_json(const ZeroModeMatrix& z, GradedModule& m) {
    nlohmann::json j;
    j["state"] = to_string(z.state, m.presentation());
    j["module"] = m.kind_name();
    j["degree"] = z.degree;
    j["basis"] = nlohmann::json::array();
    for (const Mono& b : z.basis) j["basis"].push_back(mono_string(b, m.presentation(), "|v>"));
    j["entries"] = nlohmann::json::array();
    for (const auto& [rc, v] : z.matrix.entries()) j["entries"].push_back({rc.first, rc.second, v.str()});
    return j.dump(2);
}

}  // namespace zhu
