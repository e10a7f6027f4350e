#include "cga/two_local.hpp"

#include "cga/prng.hpp"

namespace cga {

namespace {

void require_matching(const LieAlgebra& a, const DerivationSpace& ders) {
    if (&a != &ders.algebra()) {
        throw std::invalid_argument("derivation space was computed for a different algebra");
    }
}

// Rows of the linear system "D(x) = v" over Der coordinates t: the matrix
// column i holds basis_i(x).
RationalMatrix evaluation_matrix(const DerivationSpace& ders, const Element& x) {
    const std::size_t n = ders.algebra().dim();
    RationalMatrix m(n, ders.dim());
    for (std::size_t i = 0; i < ders.dim(); ++i) {
        const Vec image = ders.basis()[i].apply(x.coords());
        for (std::size_t r = 0; r < n; ++r) {
            m(r, i) = image[r];
        }
    }
    return m;
}

RationalMatrix stacked_evaluation_matrix(const DerivationSpace& ders, const Element& x,
                                         const Element& y) {
    const std::size_t n = ders.algebra().dim();
    const RationalMatrix mx = evaluation_matrix(ders, x);
    const RationalMatrix my = evaluation_matrix(ders, y);
    RationalMatrix m(2 * n, ders.dim());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < ders.dim(); ++c) {
            m(r, c) = mx(r, c);
            m(n + r, c) = my(r, c);
        }
    }
    return m;
}

std::uint64_t pair_key(std::uint64_t seed, const Element& x, const Element& y) {
    return mix_keys(mix_keys(seed, fnv1a64(x.key())), fnv1a64(y.key()));
}

}  // namespace

WitnessOracle::WitnessOracle(const LieAlgebra& a) : algebra_(&a) {
    if (!a.l()) {
        throw std::invalid_argument("witness oracles are defined over conformal Galilei algebras");
    }
}

Element WitnessOracle::evaluate(const Element& x) const {
    const Element h = algebra_->basis_element(algebra_->index_of(BasisLabel::h()));
    try {
        return algebra_->element(witness(x, h).apply(x.coords()));
    } catch (const OracleRefusal&) {
        const Element e = algebra_->basis_element(algebra_->index_of(BasisLabel::e()));
        return algebra_->element(witness(x, e).apply(x.coords()));
    }
}

AffineSolutionSet witness_solve(const LieAlgebra& a, const DerivationSpace& ders, const Element& x,
                                const Element& vx, const Element& y, const Element& vy) {
    require_matching(a, ders);
    Vec rhs = vx.coords();
    rhs.insert(rhs.end(), vy.coords().begin(), vy.coords().end());
    return solve_affine(stacked_evaluation_matrix(ders, x, y), rhs);
}

Subspace point_stabilizer(const LieAlgebra& a, const DerivationSpace& ders, const Element& x) {
    require_matching(a, ders);
    return kernel(evaluation_matrix(ders, x));
}

Subspace pair_stabilizer(const LieAlgebra& a, const DerivationSpace& ders, const Element& x,
                         const Element& y) {
    require_matching(a, ders);
    return kernel(stacked_evaluation_matrix(ders, x, y));
}

StabilizerQuery stabilizer_query(const LieAlgebra& a, const DerivationSpace& ders,
                                 std::vector<Element> points) {
    require_matching(a, ders);
    const std::size_t n = a.dim();
    RationalMatrix m(n * points.size(), ders.dim());
    for (std::size_t p = 0; p < points.size(); ++p) {
        const RationalMatrix block = evaluation_matrix(ders, points[p]);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < ders.dim(); ++c) {
                m(p * n + r, c) = block(r, c);
            }
        }
    }
    Subspace result = points.empty() ? Subspace::full(ders.dim()) : kernel(std::move(m));
    return StabilizerQuery{std::move(points), std::move(result)};
}

AdversarialOracle::AdversarialOracle(const DerivationSpace& ders, RationalMatrix d_true,
                                     std::uint64_t seed)
    : WitnessOracle(ders.algebra()), ders_(&ders), d_true_(std::move(d_true)), seed_(seed) {
    if (!is_derivation(ders.algebra(), d_true_).ok()) {
        throw std::invalid_argument("planted matrix is not a derivation");
    }
}

RationalMatrix AdversarialOracle::witness(const Element& x, const Element& y) const {
    const Subspace stab = pair_stabilizer(ders_->algebra(), *ders_, x, y);
    SplitMix64 rng(pair_key(seed_, x, y));
    RationalMatrix w = d_true_;
    for (const Vec& direction : stab.basis()) {
        w += small_nonzero_rational(rng) * ders_->from_coords(direction);
    }
    return w;
}

AdversarialOracle adversarial_oracle(const LieAlgebra& a, const DerivationSpace& ders,
                                     RationalMatrix d_true, std::uint64_t seed) {
    require_matching(a, ders);
    return AdversarialOracle(ders, std::move(d_true), seed);
}

PointwiseRandomOracle::PointwiseRandomOracle(const DerivationSpace& ders, std::uint64_t seed)
    : WitnessOracle(ders.algebra()), ders_(&ders), seed_(seed) {}

RationalMatrix PointwiseRandomOracle::witness(const Element& x, const Element& /*y*/) const {
    return random_derivation(*ders_, mix_keys(seed_, fnv1a64(x.key())));
}

ResolveReport resolve_two_local(const LieAlgebra& a, const DerivationSpace& ders,
                                const WitnessOracle& oracle, const std::vector<Element>& probes) {
    require_matching(a, ders);
    if (probes.empty()) {
        throw std::invalid_argument("resolve_two_local needs at least one probe");
    }
    const Element h = a.basis_element(a.index_of(BasisLabel::h()));
    const Element e = a.basis_element(a.index_of(BasisLabel::e()));
    const Element z = a.basis_element(a.index_of(BasisLabel::z()));
    const std::size_t zi = a.index_of(BasisLabel::z());

    RationalMatrix w = oracle.witness(h, e);
    if (!is_derivation(a, w).ok()) {
        throw MalformedOracle("witness(h, e) is not a derivation");
    }

    ResolveReport report{w, Rational(0), 0, {}, ResolveVerdict::Inconsistent};

    // the oracle's value at z minus W(z) must lie along z; its coefficient
    // is the delta correction
    const Element value_at_z = oracle.evaluate(z);
    Vec gap = (value_at_z - a.element(w.apply(z.coords()))).coords();
    for (std::size_t i = 0; i < gap.size(); ++i) {
        if (i != zi && !gap[i].is_zero()) {
            report.mismatches.push_back({z, value_at_z, a.element(w.apply(z.coords()))});
            return report;
        }
    }
    report.lambda_z = gap[zi];
    report.recovered = w + report.lambda_z * ders.delta();

    for (const Element& probe : probes) {
        const Element expected = oracle.evaluate(probe);
        const Element got = a.element(report.recovered.apply(probe.coords()));
        ++report.probes_checked;
        if (!(expected == got)) {
            report.mismatches.push_back({probe, expected, got});
        }
    }
    if (report.mismatches.empty()) {
        report.verdict = ResolveVerdict::Resolved;
    }
    return report;
}

std::vector<Element> default_probes(const LieAlgebra& a, std::uint64_t seed) {
    std::vector<Element> probes;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        probes.push_back(a.basis_element(i));
    }
    SplitMix64 rng(mix_keys(seed, fnv1a64("probes")));
    for (int i = 0; i < 10; ++i) {
        probes.push_back(a.element(random_coords(rng, a.dim())));
    }
    const Element e = a.basis_element(a.index_of(BasisLabel::e()));
    const Element p0 = a.basis_element(a.index_of(BasisLabel::p(0)));
    probes.push_back(e + p0);
    Vec all_p(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto tag = a.basis()[i].tag;
        if (tag == BasisLabel::Tag::P || tag == BasisLabel::Tag::Z) {
            all_p[i] = 1;
        }
    }
    probes.push_back(a.element(std::move(all_p)));
    return probes;
}

HomogeneityReport check_homogeneity(const WitnessOracle& oracle,
                                    const std::vector<std::pair<Rational, Element>>& samples) {
    HomogeneityReport report;
    for (const auto& [k, x] : samples) {
        const Element expected = k * oracle.evaluate(x);
        const Element got = oracle.evaluate(k * x);
        ++report.samples_checked;
        if (!(expected == got)) {
            report.violations.push_back({k, x, expected, got});
        }
    }
    return report;
}

std::vector<std::pair<Rational, Element>> homogeneity_samples(const LieAlgebra& a, std::uint64_t seed,
                                                              std::size_t count) {
    std::vector<std::pair<Rational, Element>> samples;
    SplitMix64 rng(mix_keys(seed, fnv1a64("homogeneity")));
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // hit the k = 0 and negative-integer cases explicitly early on
        Rational k;
        if (i == 0) {
            k = 0;
        } else if (i == 1) {
            k = -2;
        } else {
            k = small_rational(rng);
        }
        samples.emplace_back(k, a.element(random_coords(rng, a.dim())));
    }
    return samples;
}

}  // namespace cga
