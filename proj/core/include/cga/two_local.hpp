#ifndef CGA_TWO_LOCAL_HPP
#define CGA_TWO_LOCAL_HPP

#include "cga/derivations.hpp"
#include "cga/lie_algebra.hpp"
#include "cga/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cga {

class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedOracle : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Access to a 2-local map Delta through its per-pair witnesses: witness(x,y)
/// is a genuine derivation agreeing with Delta at both x and y. The point
/// value Delta(x) is read off as witness(x, h)(x), falling back to
/// witness(x, e)(x) if the oracle refuses the first pair; a well-formed
/// oracle makes the choice immaterial.
class WitnessOracle {
public:
    virtual ~WitnessOracle() = default;

    virtual RationalMatrix witness(const Element& x, const Element& y) const = 0;

    Element evaluate(const Element& x) const;

    const LieAlgebra& algebra() const { return *algebra_; }

protected:
    explicit WitnessOracle(const LieAlgebra& a);

private:
    const LieAlgebra* algebra_;
};

/// {D in Der : D(x) = vx, D(y) = vy} in canonical Der coordinates.
AffineSolutionSet witness_solve(const LieAlgebra& a, const DerivationSpace& ders, const Element& x,
                                const Element& vx, const Element& y, const Element& vy);

/// {D in Der : D(x) = 0} in Der coordinates.
Subspace point_stabilizer(const LieAlgebra& a, const DerivationSpace& ders, const Element& x);

/// {D in Der : D(x) = D(y) = 0} in Der coordinates.
Subspace pair_stabilizer(const LieAlgebra& a, const DerivationSpace& ders, const Element& x,
                         const Element& y);

/// A stabilizer computation kept together with the points it annihilates.
struct StabilizerQuery {
    std::vector<Element> points;
    Subspace result;  // Der coordinates
};

/// {D in Der : D(p) = 0 for every listed p}; the empty list gives all of Der.
StabilizerQuery stabilizer_query(const LieAlgebra& a, const DerivationSpace& ders,
                                 std::vector<Element> points);

/// A genuine 2-local derivation around a planted derivation d_true whose
/// witnesses are deliberately non-constant: each queried pair receives
/// d_true plus a seeded random element of that pair's stabilizer, so point
/// values always equal d_true applied while the witnesses themselves vary.
class AdversarialOracle : public WitnessOracle {
public:
    AdversarialOracle(const DerivationSpace& ders, RationalMatrix d_true, std::uint64_t seed);

    RationalMatrix witness(const Element& x, const Element& y) const override;

    const RationalMatrix& planted() const { return d_true_; }

private:
    const DerivationSpace* ders_;
    RationalMatrix d_true_;
    std::uint64_t seed_;
};

AdversarialOracle adversarial_oracle(const LieAlgebra& a, const DerivationSpace& ders,
                                     RationalMatrix d_true, std::uint64_t seed);

/// Negative control: the witness for (x, y) is a random derivation keyed by
/// x alone, so point values come from unrelated derivations and no single
/// derivation matches them globally. Not a 2-local derivation.
class PointwiseRandomOracle : public WitnessOracle {
public:
    PointwiseRandomOracle(const DerivationSpace& ders, std::uint64_t seed);

    RationalMatrix witness(const Element& x, const Element& y) const override;

private:
    const DerivationSpace* ders_;
    std::uint64_t seed_;
};

enum class ResolveVerdict { Resolved, Inconsistent };

struct ResolveMismatch {
    Element point;
    Element expected;  // oracle's point value
    Element got;       // candidate derivation applied
};

struct ResolveReport {
    RationalMatrix recovered;
    Rational lambda_z;
    std::size_t probes_checked = 0;
    std::vector<ResolveMismatch> mismatches;
    ResolveVerdict verdict = ResolveVerdict::Inconsistent;

    bool resolved() const { return verdict == ResolveVerdict::Resolved; }
};

/// Reconstructs a single derivation from a 2-local map: take W = witness(h,e),
/// correct by lambda_z delta where Delta(z) - W(z) = lambda_z z, then verify
/// the candidate against the oracle on every probe. For a genuine 2-local
/// derivation the candidate matches everywhere; any mismatch (or a point
/// value of z not lining up along z) yields INCONSISTENT.
ResolveReport resolve_two_local(const LieAlgebra& a, const DerivationSpace& ders,
                                const WitnessOracle& oracle, const std::vector<Element>& probes);

/// Basis elements, ten seeded random elements, e + p_0, and sum(p_i) + z.
std::vector<Element> default_probes(const LieAlgebra& a, std::uint64_t seed);

struct HomogeneityViolation {
    Rational scale;
    Element point;
    Element expected;
    Element got;
};

struct HomogeneityReport {
    std::size_t samples_checked = 0;
    std::vector<HomogeneityViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks Delta(k x) = k Delta(x) on the given (k, x) samples via the
/// oracle's point evaluation.
HomogeneityReport check_homogeneity(const WitnessOracle& oracle,
                                    const std::vector<std::pair<Rational, Element>>& samples);

std::vector<std::pair<Rational, Element>> homogeneity_samples(const LieAlgebra& a, std::uint64_t seed,
                                                              std::size_t count);

}  // namespace cga

#endif
