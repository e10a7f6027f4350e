#ifndef CGA_LINALG_HPP
#define CGA_LINALG_HPP

#include "cga/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cga {

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  // pivot columns, strictly increasing

    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form over exact rationals: pivot entries 1, pivot
/// columns cleared above and below. The result is the unique RREF of the
/// row space, so it doubles as a canonical form.
RrefResult rref(RationalMatrix m);

/// A linear subspace of Q^n held as its canonical RREF basis. Two equal
/// subspaces compare equal member-for-member, so operator== is subspace
/// equality.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Canonicalizes an arbitrary spanning set (zero vectors welcome).
    static Subspace span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /// v minus its projection onto the subspace along the pivot coordinates;
    /// zero iff contains(v).
    Vec reduce(Vec v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;             // nonzero RREF rows
    std::vector<std::size_t> pivots_;    // pivot column of each basis row
};

/// Canonical basis of the nullspace {v : m v = 0}.
Subspace kernel(RationalMatrix m);

/// Solution set of m x = b: empty (no particular solution), or an affine
/// flat particular + homogeneous. Infeasibility is a value, not an error.
struct AffineSolutionSet {
    std::optional<Vec> particular;
    Subspace homogeneous;

    bool empty() const { return !particular.has_value(); }
};

AffineSolutionSet solve_affine(const RationalMatrix& m, const Vec& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vec& v);

Vec unit_vec(std::size_t ambient_dim, std::size_t index);

}  // namespace cga

#endif
