#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "zhu/voa.hpp"

using namespace zhu;

namespace {

const Presentation* const kBoth[] = {&Presentation::heisenberg(), &Presentation::virasoro()};

void for_each_word(int max_len, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> w;
    std::function<void()> rec = [&]() {
        if (!w.empty()) f(w);
        if (static_cast<int>(w.size()) == max_len) return;
        for (int m = lo; m <= hi; ++m) {
            w.push_back(m);
            rec();
            w.pop_back();
        }
    };
    rec();
}

}  // namespace

TEST(VoaProperty, PermutationChangesOnlyShorterWords) {
    for (const Presentation* p : kBoth) {
        Space s = Space::vacuum(*p);
        for_each_word(4, -6, -1, [&](const std::vector<int>& word) {
            if (!std::is_sorted(word.begin(), word.end())) return;
            Element base = s.normalize(word);
            int len = static_cast<int>(word.size());
            std::vector<int> perm = word;
            while (std::next_permutation(perm.begin(), perm.end())) {
                Element diff = base - s.normalize(perm);
                ASSERT_LT(diff.max_length(), len) << p->name();
            }
        });
    }
}

TEST(VoaProperty, GeneratorStateModesMatchApply) {
    for (const Presentation* p : kBoth) {
        Space s = Space::vacuum(*p);
        Element gen(p->generator());
        for (const Mono& m : pbw_basis_upto(8, s.min_part(), 8)) {
            for (int q = -6; q <= 6; ++q)
                ASSERT_EQ(s.composite(gen, q, Element(m)), s.apply(p->to_physics(q), m)) << p->name() << " p=" << q;
        }
    }
}

TEST(VoaProperty, LMinus1CommutatorWithModes) {
    // [L(-1), u_k] = -k u_{k-1}, k in vertex-operator indexing.
    for (const Presentation* p : kBoth) {
        Space s = Space::vacuum(*p);
        for (const Mono& m : pbw_basis_upto(8, s.min_part(), 8)) {
            Element x(m);
            for (int k = -4; k <= 6; ++k) {
                Element lhs = s.l_minus1(s.apply(p->to_physics(k), x)) - s.apply(p->to_physics(k), s.l_minus1(x));
                Element rhs = s.apply(p->to_physics(k - 1), x).scaled(Coef(-k));
                ASSERT_EQ(lhs, rhs) << p->name() << " k=" << k;
            }
        }
    }
}

TEST(VoaProperty, OutputWeightsFollowModeBookkeeping) {
    for (const Presentation* p : kBoth) {
        Space s = Space::vacuum(*p);
        auto basis = pbw_basis_upto(6, s.min_part(), 6);
        for (const Mono& w : basis)
            for (const Mono& v : basis)
                for (int q = -3; q <= 6; ++q) {
                    const Element& r = s.composite(w, q, v);
                    for (const auto& [mono, c] : r.terms()) ASSERT_EQ(mono.weight(), w.weight() + v.weight() - q - 1);
                }
    }
}

TEST(VoaProperty, SkewSymmetryPathAgreesWithIterate) {
    for (const Presentation* p : kBoth) {
        Space fast = Space::vacuum(*p), slow = Space::vacuum(*p);
        slow.set_use_skew(false);
        auto basis = pbw_basis_upto(6, fast.min_part(), 6);
        for (const Mono& w : basis)
            for (const Mono& v : basis)
                for (int q = -4; q <= 5; ++q) ASSERT_EQ(fast.composite(w, q, v), slow.composite(w, q, v)) << p->name();
    }
}

TEST(VoaProperty, CompositeIsCacheCoherent) {
    Space s = Space::vacuum(Presentation::virasoro());
    Mono w = Mono::from_parts({3, 2}), v = Mono::from_parts({4, 2});
    Element first = s.composite(w, -2, v);
    s.clear_cache();
    EXPECT_EQ(s.composite(w, -2, v), first);
    EXPECT_GT(s.cache_size(), 0u);
}
