#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zhu/element.hpp"

namespace zhu {

enum class Algebra { Heisenberg, Virasoro };

// [u(m), u(p)] = mode_coef * u(m+p) + central (times the lowest vector).
struct BracketValue {
    Coef mode_coef;
    int mode = 0;
    Coef central;
};

// Single-generator VOA. Modes are "physics" modes u(m), related to the vertex
// operator index by u(m) = u_{m + gen_weight - 1}.
struct Presentation {
    Algebra algebra = Algebra::Heisenberg;
    std::string symbol;
    int gen_weight = 1;
    // u(m)|0> = 0 for all m >= -vacuum_annihilation + 1.
    int vacuum_annihilation = 1;
    std::vector<int> central_params;

    static const Presentation& heisenberg();
    static const Presentation& virasoro();
    static const Presentation& by_name(std::string_view name);

    BracketValue bracket(int m, int p) const;
    int to_index(int physics_mode) const { return physics_mode + gen_weight - 1; }
    int to_physics(int index) const { return index - gen_weight + 1; }
    // The generator state u = u_{-1}|0> as a PBW word.
    Mono generator() const { return Mono::from_parts({gen_weight}); }
    std::string name() const { return algebra == Algebra::Heisenberg ? "heisenberg" : "virasoro"; }
};

enum class LowestKind { Vacuum, Fock, Verma };

// A lowest-weight space for the generator's modes: the vacuum module V, the
// Fock module M(1, lambda) or the Verma module M(c, h). Holds memo tables, so a
// Space must not be shared between threads.
class Space {
public:
    Space(const Presentation& p, LowestKind kind);
    static Space vacuum(const Presentation& p) { return Space(p, LowestKind::Vacuum); }

    const Presentation& presentation() const { return *pres_; }
    LowestKind kind() const { return kind_; }
    bool is_vacuum() const { return kind_ == LowestKind::Vacuum; }
    // Smallest allowed k in a basis word u(-k1)...u(-kr).
    int min_part() const { return min_part_; }
    bool is_creation(int m) const { return -m >= min_part_; }
    // Eigenvalue of the lowest vector for alpha(0) (Fock) or L(0) (Verma).
    const Coef& lowest_eigenvalue() const { return lowest_; }
    std::string lowest_marker() const { return is_vacuum() ? "|0>" : "|v>"; }
    bool valid(const Mono& m) const { return m.empty() || m.parts().back() >= min_part_; }

    // u(m) applied to a basis word / element, PBW-canonical result.
    Element apply(int m, const Element& v);
    Element apply(int m, const Mono& v);
    // A word of physics modes applied (rightmost first) to the lowest vector.
    Element normalize(const std::vector<int>& word);

    // w_p v for a state w of the vacuum module, p in vertex-operator indexing.
    Element composite(const Element& w, int p, const Element& v);
    const Element& composite(const Mono& w, int p, const Mono& v);

    // L(-1) and L(0) on the vacuum module.
    Element l_minus1(const Element& v);
    Element l_zero(const Element& v) const;
    Element ol(const Element& v) { return l_minus1(v) + l_zero(v); }

    std::size_t cache_size() const { return apply_cache_.size() + composite_cache_.size(); }
    void clear_cache();
    // Disable the skew-symmetry shortcut (used to cross-check it).
    void set_use_skew(bool on) { use_skew_ = on; }

private:
    const Element& apply_vir(int m, const Mono& v);
    Element apply_heis(int m, const Mono& v) const;
    Element composite_iterate(const Mono& w, int p, const Mono& v);
    Element composite_skew(const Mono& w, int p, const Mono& v);

    const Presentation* pres_;
    LowestKind kind_;
    int min_part_;
    Coef lowest_;
    bool use_skew_ = true;
    std::unordered_map<std::string, Element> apply_cache_;
    std::unordered_map<std::string, Element> composite_cache_;
};

// Smallest N with w_p v = 0 for all p >= N (weights bounded below by 0).
int annihilation_bound(const Element& w, const Element& v);

// Text form: terms like "3/2 a(-2)a(-1)^2|0>" or "(c - 1) L(-3)L(-2)|0>".
std::string to_string(const Element& e, const Space& space);
std::string to_string(const Element& e, const Presentation& p);
std::string mono_string(const Mono& m, const Presentation& p, const std::string& marker = "|0>");
// Parse and normalize into the given space. Accepts non-PBW order, L(-1) and
// nonnegative modes.
Element parse_element(std::string_view text, Space& space);

}  // namespace zhu
