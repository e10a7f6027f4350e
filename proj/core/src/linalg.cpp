#include "cga/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cga {

RrefResult rref(RationalMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m(piv, pc).is_zero()) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        m.swap_rows(pr, piv);
        if (!m(pr, pc).is_one()) {
            const Rational inv = m(pr, pc);
            for (std::size_t j = pc; j < cols; ++j) {
                if (!m(pr, j).is_zero()) {
                    m(pr, j) /= inv;
                }
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || m(i, pc).is_zero()) {
                continue;
            }
            const Rational factor = m(i, pc);
            for (std::size_t j = pc; j < cols; ++j) {
                if (!m(pr, j).is_zero()) {
                    m(i, j) -= factor * m(pr, j);
                }
            }
        }
        pivots.push_back(pc);
        ++pr;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    RationalMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) {
            throw std::invalid_argument("spanning vector length does not match ambient dimension");
        }
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            m(i, j) = vectors[i][j];
        }
    }
    RrefResult r = rref(std::move(m));
    Subspace s(ambient_dim);
    s.pivots_ = r.pivots;
    s.basis_.reserve(r.pivots.size());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        s.basis_.push_back(r.matrix.row(i));
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    rows.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        rows.push_back(unit_vec(ambient_dim, i));
    }
    return span_of(ambient_dim, rows);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) {
        throw std::invalid_argument("vector length does not match ambient dimension");
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (!c.is_zero()) {
            vec_add_scaled(v, -c, basis_[i]);
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

Subspace kernel(RationalMatrix m) {
    const std::size_t cols = m.cols();
    RrefResult r = rref(std::move(m));
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : r.pivots) {
        is_pivot[pc] = true;
    }
    std::vector<Vec> generators;
    generators.reserve(cols - r.rank());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vec v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            if (!r.matrix(i, f).is_zero()) {
                v[r.pivots[i]] = -r.matrix(i, f);
            }
        }
        generators.push_back(std::move(v));
    }
    return Subspace::span_of(cols, generators);
}

AffineSolutionSet solve_affine(const RationalMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }
    const std::size_t cols = m.cols();
    RationalMatrix aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, cols) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    AffineSolutionSet out{std::nullopt, kernel(m)};
    const bool feasible = r.pivots.empty() || r.pivots.back() != cols;
    if (feasible) {
        Vec particular(cols);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            particular[r.pivots[i]] = r.matrix(i, cols);
        }
        out.particular = std::move(particular);
    }
    return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("subspace sum: ambient dimensions differ");
    }
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span_of(a.ambient_dim(), rows);
}

// Zassenhaus: row-reduce [A | A; B | 0]; rows whose left half vanishes carry
// an intersection basis in the right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("subspace intersection: ambient dimensions differ");
    }
    const std::size_t n = a.ambient_dim();
    RationalMatrix m(a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a.basis()[i][j];
            m(i, n + j) = a.basis()[i][j];
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(a.dim() + i, j) = b.basis()[i][j];
        }
    }
    RrefResult r = rref(std::move(m));
    std::vector<Vec> generators;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        if (r.pivots[i] < n) {
            continue;  // left half still alive
        }
        Vec right(n);
        for (std::size_t j = 0; j < n; ++j) {
            right[j] = r.matrix(i, n + j);
        }
        generators.push_back(std::move(right));
    }
    return Subspace::span_of(n, generators);
}

bool subspace_contains(const Subspace& a, const Vec& v) { return a.contains(v); }

Vec unit_vec(std::size_t ambient_dim, std::size_t index) {
    if (index >= ambient_dim) {
        throw std::invalid_argument("unit vector index out of range");
    }
    Vec v(ambient_dim);
    v[index] = 1;
    return v;
}

}  // namespace cga
