#pragma once

#include <string>
#include <vector>

#include "zhu/engine.hpp"
#include "zhu/linalg.hpp"
#include "zhu/voa.hpp"

namespace zhu {

// Fock module M(1, lambda) (Heisenberg) or Verma module M(c, h) (Virasoro),
// graded by degree. Basis words use parts >= 1 on the lowest vector |v>.
class GradedModule {
public:
    explicit GradedModule(const Presentation& p);

    const Presentation& presentation() const { return space_.presentation(); }
    LowestKind kind() const { return space_.kind(); }
    std::string kind_name() const { return kind() == LowestKind::Fock ? "fock" : "verma"; }
    Space& space() { return space_; }

    std::vector<Mono> basis(int degree) const { return pbw_basis(degree, 1, 255); }

    // u(j) in physics modes.
    Element act_mode(int j, const Element& w) { return space_.apply(j, w); }
    // v_p w for a state v of the vacuum module.
    Element act_state(const Element& v, int p, const Element& w) { return space_.composite(v, p, w); }

private:
    Space space_;
};

struct ZeroModeMatrix {
    Element state;
    int degree = 0;
    std::vector<Mono> basis;
    SparseMatrix matrix{0, 0};  // column j = o(state) basis[j]
};

// o(v) = sum over homogeneous components of v_{wt v - 1}.
ZeroModeMatrix zero_mode(GradedModule& m, const Element& v, int degree);

struct DegreeCheck {
    int degree = 0;
    bool pass = false;
    std::string detail;
};

struct ModuleCheckReport {
    bool pass = true;
    std::vector<DegreeCheck> degrees;
};

// o(u *_n v) = o(u) o(v) on degrees 0..max_degree (default n).
ModuleCheckReport hom_property_check(ZhuEngine& e, GradedModule& m, const Element& u, const Element& v,
                                     int max_degree = -1);
// o(r) = 0 on degrees 0..max_degree (default n).
ModuleCheckReport zero_mode_annihilation_check(ZhuEngine& e, GradedModule& m, const Element& relation_value,
                                               int max_degree = -1);

// {"state", "degree", "module", "basis": [...], "entries": [[row, col, value], ...]}
std::string zero_mode_json(const ZeroModeMatrix& z, GradedModule& m);

}  // namespace zhu
