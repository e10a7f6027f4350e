#include "cga/derivations.hpp"

#include <utility>

namespace cga {

RationalMatrix leibniz_matrix(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    RationalMatrix m(pairs * n, n * n);

    auto table_entry = [&a](std::size_t i, std::size_t j) -> const LieAlgebra::SparseVec* {
        auto it = a.brackets().find({i, j});
        return it == a.brackets().end() ? nullptr : &it->second;
    };

    std::size_t pair_index = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++pair_index) {
            const std::size_t row0 = pair_index * n;
            // + D[b_i, b_j]: structure constants of the pair hit column (c, d)
            if (const auto* s = table_entry(i, j)) {
                for (const auto& [d, v] : *s) {
                    for (std::size_t c = 0; c < n; ++c) {
                        m(row0 + c, c * n + d) += v;
                    }
                }
            }
            // - [D b_i, b_j] = - sum_c D_{c,i} [b_c, b_j]
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) {
                    continue;
                }
                const bool flip = c > j;
                const auto* s = flip ? table_entry(j, c) : table_entry(c, j);
                if (!s) {
                    continue;
                }
                for (const auto& [target, v] : *s) {
                    m(row0 + target, c * n + i) += flip ? v : -v;
                }
            }
            // - [b_i, D b_j] = - sum_c D_{c,j} [b_i, b_c]
            for (std::size_t c = 0; c < n; ++c) {
                if (c == i) {
                    continue;
                }
                const bool flip = c < i;
                const auto* s = flip ? table_entry(c, i) : table_entry(i, c);
                if (!s) {
                    continue;
                }
                for (const auto& [target, v] : *s) {
                    m(row0 + target, c * n + j) += flip ? v : -v;
                }
            }
        }
    }
    return m;
}

RationalMatrix delta_map(const LieAlgebra& a) {
    if (!a.l()) {
        throw std::invalid_argument("delta_map is only defined for conformal Galilei algebras");
    }
    const std::size_t n = a.dim();
    RationalMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (a.basis()[i].tag) {
            case BasisLabel::Tag::P: d(i, i) = Rational(1, 2); break;
            case BasisLabel::Tag::Z: d(i, i) = 1; break;
            default: break;
        }
    }
    return d;
}

LeibnizReport is_derivation(const LieAlgebra& a, const RationalMatrix& m) {
    const std::size_t n = a.dim();
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("candidate derivation has wrong shape");
    }
    LeibnizReport report;
    std::vector<Element> b;
    std::vector<Element> images;
    b.reserve(n);
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        b.push_back(a.basis_element(i));
        images.push_back(a.element(m.col(i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Element residual = a.element(m.apply(a.bracket(b[i], b[j]).coords())) -
                               a.bracket(images[i], b[j]) - a.bracket(b[i], images[j]);
            ++report.pairs_checked;
            if (!residual.is_zero()) {
                report.violations.push_back({i, j, residual.coords()});
            }
        }
    }
    return report;
}

DerivationSpace DerivationSpace::compute(const LieAlgebra& a) {
    if (!a.l()) {
        throw std::invalid_argument("DerivationSpace::compute expects a conformal Galilei algebra");
    }
    DerivationSpace out;
    out.algebra_ = &a;
    out.kernel_ = kernel(leibniz_matrix(a));
    out.delta_ = delta_map(a);

    const std::size_t n = a.dim();
    std::vector<Vec> ad_rows;
    for (std::size_t i = 0; i + 1 < n; ++i) {  // every canonical basis element except central z
        out.ad_basis_.push_back(a.ad(a.basis_element(i)));
        ad_rows.push_back(out.ad_basis_.back().flat());
    }
    const Subspace ad_span = Subspace::span_of(n * n, ad_rows);
    const Subspace delta_span = Subspace::span_of(n * n, {out.delta_.flat()});
    const Subspace sum = subspace_sum(ad_span, delta_span);
    const Subspace meet = subspace_intersect(ad_span, delta_span);

    if (ad_span.dim() != out.ad_basis_.size() || meet.dim() != 0 || !(sum == out.kernel_)) {
        std::string detail = "dim ker(Leibniz) = " + std::to_string(out.kernel_.dim()) +
                             ", dim span(ad basis) = " + std::to_string(ad_span.dim()) +
                             ", dim(ad ^ delta) = " + std::to_string(meet.dim()) +
                             ", dim(ad + delta) = " + std::to_string(sum.dim());
        throw StructureError("inner derivations plus delta do not split ker(Leibniz)", std::move(detail));
    }

    out.basis_ = out.ad_basis_;
    out.basis_.push_back(out.delta_);
    out.coord_matrix_ = RationalMatrix(n * n, out.basis_.size());
    for (std::size_t c = 0; c < out.basis_.size(); ++c) {
        const Vec flat = out.basis_[c].flat();
        for (std::size_t r = 0; r < n * n; ++r) {
            out.coord_matrix_(r, c) = flat[r];
        }
    }
    return out;
}

std::size_t DerivationSpace::outer_dimension() const { return dim() - ad_basis_.size(); }

RationalMatrix DerivationSpace::from_coords(const Vec& t) const {
    if (t.size() != dim()) {
        throw std::invalid_argument("derivation coordinate count mismatch");
    }
    const std::size_t n = algebra_->dim();
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_zero()) {
            out += t[i] * basis_[i];
        }
    }
    return out;
}

Vec DerivationSpace::to_coords(const RationalMatrix& d) const {
    const std::size_t n = algebra_->dim();
    if (d.rows() != n || d.cols() != n) {
        throw std::invalid_argument("derivation matrix has wrong shape");
    }
    AffineSolutionSet sol = solve_affine(coord_matrix_, d.flat());
    if (sol.empty()) {
        throw StructureError("matrix is not in the span of the derivation basis", "");
    }
    return *sol.particular;
}

DerivationDecomposition decompose_derivation(const LieAlgebra& a, const DerivationSpace& ders,
                                             const RationalMatrix& d) {
    if (&a != &ders.algebra()) {
        throw std::invalid_argument("derivation space was computed for a different algebra");
    }
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) {
        throw std::invalid_argument("derivation matrix has wrong shape");
    }
    const std::size_t z = a.index_of(BasisLabel::z());

    // lambda_D is the z-eigenvalue: D(z) must be a multiple of z.
    const Vec dz = d.col(z);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != z && !dz[i].is_zero()) {
            throw StructureError("D(z) is not proportional to z; input is not a derivation",
                                 "D(z) = " + a.element(dz).str());
        }
    }
    const Rational lambda = dz[z];

    // Solve ad(x) = D - lambda delta over x in the algebra.
    RationalMatrix inner = d - lambda * ders.delta();
    RationalMatrix ad_columns(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec flat = a.ad(a.basis_element(i)).flat();
        for (std::size_t r = 0; r < n * n; ++r) {
            ad_columns(r, i) = flat[r];
        }
    }
    AffineSolutionSet sol = solve_affine(ad_columns, inner.flat());
    if (sol.empty()) {
        throw StructureError("inner part of the decomposition is not an ad image",
                             "residual matrix is nonzero for every candidate x");
    }
    Vec x = *sol.particular;
    x[z] = 0;  // ad(z) = 0, so the z-coordinate is a free gauge; pin it

    DerivationDecomposition out{a.element(std::move(x)), lambda, false};
    const RationalMatrix rebuilt = a.ad(out.x_component) + lambda * ders.delta();
    out.residual_ok = (rebuilt == d);
    return out;
}

std::size_t outer_dimension(const LieAlgebra& a) { return DerivationSpace::compute(a).outer_dimension(); }

RationalMatrix random_derivation(const DerivationSpace& ders, std::uint64_t key) {
    SplitMix64 rng(key);
    return ders.from_coords(random_coords(rng, ders.dim()));
}

}  // namespace cga
