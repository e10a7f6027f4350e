#ifndef CGA_DERIVATIONS_HPP
#define CGA_DERIVATIONS_HPP

#include "cga/lie_algebra.hpp"
#include "cga/linalg.hpp"
#include "cga/matrix.hpp"
#include "cga/prng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cga {

/// Raised when a structural fact the construction relies on fails to hold
/// (e.g. the inner-plus-outer split not exhausting the derivation kernel).
/// Carries a rendered description of the offending objects.
class StructureError : public std::runtime_error {
public:
    StructureError(std::string what, std::string detail)
        : std::runtime_error(std::move(what)), detail_(std::move(detail)) {}

    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

/// Leibniz constraint system for linear maps D on the algebra, assembled over
/// all unordered basis pairs: D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] = 0.
/// Rows: C(dim,2) * dim (pair-major, component-minor); columns: dim^2,
/// indexing the row-major flattening of D. kernel(leibniz_matrix(a)) is
/// exactly Der(a) in flattened coordinates.
RationalMatrix leibniz_matrix(const LieAlgebra& a);

/// The grading derivation of g(l): zero on e, h, f; 1/2 on each p_k; 1 on z.
/// Only defined for conformal Galilei algebras.
RationalMatrix delta_map(const LieAlgebra& a);

struct LeibnizViolation {
    std::size_t i, j;
    Vec residual;
};

struct LeibnizReport {
    std::size_t pairs_checked = 0;
    std::vector<LeibnizViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Direct Leibniz check of a candidate matrix, pair by pair. Independent of
/// the kernel route: it evaluates brackets instead of solving anything.
LeibnizReport is_derivation(const LieAlgebra& a, const RationalMatrix& m);

/// Der(g(l)) with its canonical split: inner derivations ad(b) for the
/// non-central canonical basis elements, plus the outer direction delta.
/// Construction verifies span(ad basis) + span{delta} = ker(Leibniz) as a
/// direct sum and throws StructureError otherwise.
class DerivationSpace {
public:
    static DerivationSpace compute(const LieAlgebra& a);

    const LieAlgebra& algebra() const { return *algebra_; }
    std::size_t dim() const { return basis_.size(); }

    /// Canonical basis: ad(e), ad(h), ad(f), ad(p_0), ..., ad(p_2l), delta.
    const std::vector<RationalMatrix>& basis() const { return basis_; }
    const std::vector<RationalMatrix>& ad_basis() const { return ad_basis_; }
    const RationalMatrix& delta() const { return delta_; }
    std::size_t delta_index() const { return basis_.size() - 1; }

    /// ker(Leibniz) as a subspace of flattened matrix space (ambient dim^2).
    const Subspace& kernel_space() const { return kernel_; }

    std::size_t outer_dimension() const;

    RationalMatrix from_coords(const Vec& t) const;
    /// Coordinates of a derivation in the canonical basis; throws
    /// StructureError if the matrix is not in the span.
    Vec to_coords(const RationalMatrix& d) const;

private:
    DerivationSpace() : kernel_(0) {}

    const LieAlgebra* algebra_ = nullptr;
    std::vector<RationalMatrix> basis_;
    std::vector<RationalMatrix> ad_basis_;
    RationalMatrix delta_;
    Subspace kernel_;
    RationalMatrix coord_matrix_;  // dim^2 x dim(Der), column i = flat(basis_[i])
};

struct DerivationDecomposition {
    Element x_component;          // x_D, canonical representative with zero z-coordinate
    Rational delta_coefficient;   // lambda_D, the z-eigenvalue of D
    bool residual_ok = false;     // D == ad(x_D) + lambda_D delta, entry for entry
};

/// Splits a derivation as ad(x_D) + lambda_D delta. lambda_D is read off
/// D(z); the z-coordinate of x_D is pinned to zero (ad(z) = 0 makes it
/// unobservable). Throws StructureError if D(z) is not a multiple of z or
/// the inner part is not an ad image -- either would mean the input is not
/// a derivation of g(l).
DerivationDecomposition decompose_derivation(const LieAlgebra& a, const DerivationSpace& ders,
                                             const RationalMatrix& d);

/// dim Der(a) minus the inner dimension; computes the full derivation space.
/// Use DerivationSpace::outer_dimension() when the space is already at hand.
std::size_t outer_dimension(const LieAlgebra& a);

/// Seeded random element of Der in the canonical basis.
RationalMatrix random_derivation(const DerivationSpace& ders, std::uint64_t key);

}  // namespace cga

#endif
