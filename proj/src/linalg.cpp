#include "zhu/linalg.hpp"

#include <string>

namespace zhu {

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Coef(1));
    return m;
}

Coef SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Coef() : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Coef& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

std::vector<Coef> SparseMatrix::multiply(const std::vector<Coef>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in multiply");
    std::vector<Coef> out(rows_);
    for (const auto& [rc, v] : entries_) out[rc.first] += v * x[rc.second];
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::substitute(const Bindings& b) const {
    SparseMatrix s(rows_, cols_);
    for (const auto& [rc, v] : entries_) s.set(rc.first, rc.second, v.substitute(b));
    return s;
}

void SparseMatrix::dump(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& [rc, v] : entries_) os << rc.first << ' ' << rc.second << ' ' << v.str() << '\n';
}

namespace {

Poly lcm(const Poly& a, const Poly& b) {
    Poly g = Poly::gcd(a, b);
    auto q = Poly::divide_exact(a * b, g);
    if (!q) throw std::logic_error("gcd does not divide product");
    return q->monic();
}

struct Eliminated {
    std::vector<std::vector<Poly>> m;  // augmented, row echelon
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

// Denominator-free copy of [A | b], then Bareiss elimination to row echelon.
Eliminated bareiss(const SparseMatrix& a, const std::vector<Coef>* b) {
    const std::size_t rows = a.rows(), cols = a.cols() + (b ? 1 : 0);
    std::vector<std::vector<Coef>> dense(rows, std::vector<Coef>(cols));
    for (const auto& [rc, v] : a.entries()) dense[rc.first][rc.second] = v;
    if (b)
        for (std::size_t i = 0; i < rows; ++i) dense[i][a.cols()] = (*b)[i];

    Eliminated e;
    e.m.assign(rows, std::vector<Poly>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Poly den(Rational(1));
        for (const Coef& v : dense[i])
            if (!v.is_constant() || !v.constant().is_integer()) den = lcm(den, v.denominator());
        for (std::size_t j = 0; j < cols; ++j) {
            if (dense[i][j].is_zero()) continue;
            auto q = Poly::divide_exact(den, dense[i][j].denominator());
            e.m[i][j] = dense[i][j].numerator() * *q;
        }
    }

    Poly prev(Rational(1));
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!e.m[i][col].is_zero() && (best == rows || e.m[i][col].size() < e.m[best][col].size())) best = i;
        if (best == rows) continue;
        std::swap(e.m[r], e.m[best]);
        e.pivots.emplace_back(r, col);
        const Poly& p = e.m[r][col];
        for (std::size_t i = r + 1; i < rows; ++i) {
            Poly f = e.m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                Poly num = p * e.m[i][j] - f * e.m[r][j];
                auto q = Poly::divide_exact(num, prev);
                if (!q) throw RecheckFailure("Bareiss division was not exact");
                e.m[i][j] = std::move(*q);
            }
            e.m[i][col] = Poly();
        }
        prev = p;
        ++r;
    }
    return e;
}

}  // namespace

SolveResult solve(const SparseMatrix& a, const std::vector<Coef>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve");
    Eliminated e = bareiss(a, &b);
    SolveResult res;
    res.pivots = e.pivots;
    res.rank = e.pivots.size();
    const std::size_t rhs = a.cols();
    for (std::size_t i = res.rank; i < a.rows(); ++i)
        if (!e.m[i][rhs].is_zero()) return res;
    res.consistent = true;
    res.solution.assign(a.cols(), Coef());
    for (std::size_t k = res.rank; k-- > 0;) {
        auto [row, col] = e.pivots[k];
        Coef acc(e.m[row][rhs]);
        for (std::size_t j = col + 1; j < a.cols(); ++j)
            if (!e.m[row][j].is_zero() && !res.solution[j].is_zero()) acc -= Coef(e.m[row][j]) * res.solution[j];
        res.solution[col] = acc / Coef(e.m[row][col]);
    }
    if (a.multiply(res.solution) != b) throw RecheckFailure("solve: A*x != b after elimination");
    return res;
}

std::size_t rank(const SparseMatrix& a) { return bareiss(a, nullptr).pivots.size(); }

std::optional<std::vector<Coef>> row_space_membership(const SparseMatrix& a, const std::vector<Coef>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("dimension mismatch in row_space_membership");
    SparseMatrix t = a.transpose();
    SolveResult r = solve(t, v);
    if (!r.consistent) return std::nullopt;
    if (t.multiply(r.solution) != v) throw RecheckFailure("row_space_membership: combination != v");
    return r.solution;
}

}  // namespace zhu
