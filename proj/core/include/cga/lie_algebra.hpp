#ifndef CGA_LIE_ALGEBRA_HPP
#define CGA_LIE_ALGEBRA_HPP

#include "cga/linalg.hpp"
#include "cga/matrix.hpp"
#include "cga/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cga {

/// Positive half-integer l, stored as 2l (an odd integer) so every derived
/// quantity -- 2(l-k), 2l-k, the sign exponent k+l+1/2 -- is exact integer
/// arithmetic.
class HalfInt {
public:
    explicit HalfInt(long twice);
    static HalfInt parse(std::string_view text);  // "1/2", "3/2", ...

    long twice() const { return twice_; }
    std::string str() const;

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

private:
    long twice_;
};

struct BasisLabel {
    enum class Tag { E, H, F, P, Z };
    Tag tag = Tag::E;
    long index = 0;  // only meaningful for P

    static BasisLabel e() { return {Tag::E, 0}; }
    static BasisLabel h() { return {Tag::H, 0}; }
    static BasisLabel f() { return {Tag::F, 0}; }
    static BasisLabel p(long k) { return {Tag::P, k}; }
    static BasisLabel z() { return {Tag::Z, 0}; }
    static BasisLabel parse(std::string_view text);

    std::string str() const;

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

class LieAlgebra;

/// An element of a fixed algebra, as exact coordinates in its basis.
class Element {
public:
    Element(const LieAlgebra& algebra, Vec coords);

    const LieAlgebra& algebra() const { return *algebra_; }
    const Vec& coords() const { return coords_; }

    bool is_zero() const { return is_zero_vec(coords_); }

    /// Canonical serialization: comma-joined canonical rational coordinates.
    /// Stable across runs; used for reports and for keying seeded oracles.
    std::string key() const;
    /// Human form, e.g. "2e - 1/2 p0 + z".
    std::string str() const;

    Element operator-() const;
    friend Element operator+(Element a, const Element& b);
    friend Element operator-(Element a, const Element& b);
    friend Element operator*(const Rational& s, Element a);
    friend bool operator==(const Element& a, const Element& b);

private:
    const LieAlgebra* algebra_;
    Vec coords_;
};

struct JacobiViolation {
    std::size_t i, j, k;
    Vec defect;  // coordinates of [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj]
};

struct JacobiReport {
    std::size_t triples_checked = 0;
    std::vector<JacobiViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Finite-dimensional Lie algebra over Q given by structure constants. The
/// first-class citizen is the conformal Galilei algebra g(l) with basis
/// (e, h, f, p_0, ..., p_2l, z); a generic table constructor exists for
/// small foreign algebras and deliberately broken tables in tests.
class LieAlgebra {
public:
    using SparseVec = std::map<std::size_t, Rational>;
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

    /// g(l) = sl2 semidirect H_l, dim 2l+5, with the brackets
    ///   [h,e] = 2e, [h,f] = -2f, [e,f] = h,
    ///   [h,p_k] = 2(l-k) p_k, [e,p_k] = k p_{k-1}, [f,p_k] = (2l-k) p_{k+1},
    ///   [p_k,p_{k'}] = delta_{k+k',2l} (-1)^{k+l+1/2} k! (2l-k)! z,
    /// and z central.
    static LieAlgebra conformal_galilei(HalfInt l);

    /// Generic table; keys must have i < j, entries are coordinates of
    /// [b_i, b_j]. No Jacobi assumption -- run jacobi_defect to find out.
    static LieAlgebra from_table(std::vector<BasisLabel> basis, BracketTable table);

    std::size_t dim() const { return basis_.size(); }
    const std::optional<HalfInt>& l() const { return l_; }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    const BracketTable& brackets() const { return table_; }
    const std::vector<std::size_t>& sl2_part() const { return sl2_part_; }
    const std::vector<std::size_t>& heisenberg_part() const { return heis_part_; }

    std::size_t index_of(const BasisLabel& label) const;  // throws if absent
    Element basis_element(std::size_t i) const;
    Element element(Vec coords) const;
    Element zero() const;

    Element bracket(const Element& x, const Element& y) const;
    RationalMatrix ad(const Element& x) const;
    Subspace center() const;
    JacobiReport jacobi_defect() const;

private:
    LieAlgebra() = default;

    std::optional<HalfInt> l_;
    std::vector<BasisLabel> basis_;
    BracketTable table_;
    std::vector<std::size_t> sl2_part_;
    std::vector<std::size_t> heis_part_;
};

}  // namespace cga

#endif
