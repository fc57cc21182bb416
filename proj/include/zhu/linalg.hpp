#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zhu/ratfunc.hpp"

namespace zhu {

// Thrown when an exact recheck of a computed answer fails. Never expected.
class RecheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::map<std::pair<std::size_t, std::size_t>, Coef>& entries() const { return entries_; }
    Coef at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Coef& v);

    std::vector<Coef> multiply(const std::vector<Coef>& x) const;
    SparseMatrix transpose() const;
    SparseMatrix substitute(const Bindings& b) const;

    // Triplet text dump: "rows cols nnz" then one "r c value" line per entry.
    void dump(std::ostream& os) const;

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, Coef> entries_;
};

struct SolveResult {
    bool consistent = false;
    std::vector<Coef> solution;  // free variables set to zero
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col) in elimination order
    std::size_t rank = 0;
};

// Fraction-free (Bareiss) elimination over the parameter polynomial ring.
// Rows are cleared of denominators first; pivots are the smallest nonzero
// entry (by term count) in the column, earliest row on ties. A consistent
// answer is rechecked exactly before it is returned.
SolveResult solve(const SparseMatrix& a, const std::vector<Coef>& b);
std::size_t rank(const SparseMatrix& a);
// Coefficients y with y^T A = v, or nullopt.
std::optional<std::vector<Coef>> row_space_membership(const SparseMatrix& a, const std::vector<Coef>& v);

// Incrementally built row echelon form over the coefficient field, with
// provenance: every stored row remembers how it was formed from input rows,
// so membership answers come back as combinations of inputs.
// Rows are sparse maps Key -> Coef; the pivot of a row is its largest key.
template <class Key, class Cmp>
class Echelon {
public:
    using Row = std::map<Key, Coef, Cmp>;

    // Adds an input row; returns true when it raised the rank.
    bool insert(const Row& row) {
        const std::size_t id = inputs_++;
        Row r = row;
        std::vector<std::pair<std::size_t, Coef>> steps;
        reduce(r, steps);
        if (r.empty()) return false;
        Coef lead = r.rbegin()->second;
        Coef inv = lead.inverse();
        for (auto& [k, v] : r) v *= inv;
        pivot_of_.emplace(r.rbegin()->first, rows_.size());
        rows_.push_back(Stored{std::move(r), id, inv, std::move(steps)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t inputs() const { return inputs_; }

    // Coefficients (input id -> coefficient) expressing target, or nullopt.
    std::optional<std::map<std::size_t, Coef>> express(const Row& target) const {
        Row r = target;
        std::vector<std::pair<std::size_t, Coef>> steps;
        reduce(r, steps);
        if (!r.empty()) return std::nullopt;
        // target = sum f_k E_k, E_k = inv_k (input_k - sum g_kj E_j), j < k.
        std::vector<Coef> on_row(rows_.size());
        for (const auto& [k, f] : steps) on_row[k] += f;
        std::map<std::size_t, Coef> out;
        for (std::size_t k = rows_.size(); k-- > 0;) {
            if (on_row[k].is_zero()) continue;
            const Stored& s = rows_[k];
            Coef t = on_row[k] * s.inv;
            out[s.input] += t;
            for (const auto& [j, g] : s.steps) on_row[j] -= t * g;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    bool contains(const Row& target) const {
        Row r = target;
        std::vector<std::pair<std::size_t, Coef>> steps;
        reduce(r, steps);
        return r.empty();
    }

private:
    struct Stored {
        Row row;
        std::size_t input;
        Coef inv;
        std::vector<std::pair<std::size_t, Coef>> steps;
    };

    void reduce(Row& r, std::vector<std::pair<std::size_t, Coef>>& steps) const {
        while (!r.empty()) {
            auto lead = r.rbegin();
            auto p = pivot_of_.find(lead->first);
            if (p == pivot_of_.end()) return;
            Coef f = lead->second;
            steps.emplace_back(p->second, f);
            for (const auto& [k, v] : rows_[p->second].row) {
                auto [it, inserted] = r.try_emplace(k, -(f * v));
                if (inserted) continue;
                it->second -= f * v;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }

    std::vector<Stored> rows_;
    std::map<Key, std::size_t, Cmp> pivot_of_;
    std::size_t inputs_ = 0;
};

}  // namespace zhu
