#include "cga/derivations.hpp"
#include "cga/prng.hpp"

#include <doctest.h>

using cga::BasisLabel;
using cga::DerivationSpace;
using cga::Element;
using cga::HalfInt;
using cga::LieAlgebra;
using cga::Rational;
using cga::RationalMatrix;
using cga::Vec;

TEST_SUITE("derivations") {

TEST_CASE("leibniz system shapes") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(1));
    const RationalMatrix small = cga::leibniz_matrix(a);
    CHECK(small.rows() == 90);   // C(6,2) pairs x 6 components
    CHECK(small.cols() == 36);

    const LieAlgebra big = LieAlgebra::conformal_galilei(HalfInt(21));
    const RationalMatrix large = cga::leibniz_matrix(big);
    CHECK(large.rows() == 8450);  // C(26,2) x 26
    CHECK(large.cols() == 676);
}

TEST_CASE("the identity map is not a derivation of a nonabelian algebra") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(1));
    const RationalMatrix id = RationalMatrix::identity(a.dim());
    CHECK(!cga::is_zero_vec(cga::leibniz_matrix(a).apply(id.flat())));

    const cga::LeibnizReport report = cga::is_derivation(a, id);
    REQUIRE(!report.ok());
    bool on_eh = false;
    for (const auto& v : report.violations) {
        if (v.i == 0 && v.j == 1) {  // the (e,h) pair: [h,e] = 2e but Leibniz doubles it
            on_eh = true;
        }
    }
    CHECK(on_eh);
    CHECK_THROWS_AS(cga::is_derivation(a, RationalMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("the assembled system and the direct check compute the same residuals") {
    // leibniz_matrix * flat(M) must list, pair-major and component-minor,
    // exactly the residuals that is_derivation evaluates bracket by bracket
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    const RationalMatrix L = cga::leibniz_matrix(a);
    cga::SplitMix64 rng(2024);
    const std::size_t n = a.dim();
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = cga::small_rational(rng);
            }
        }
        const Vec stacked = L.apply(m.flat());
        std::size_t pair_index = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++pair_index) {
                const Element bi = a.basis_element(i), bj = a.basis_element(j);
                const Element residual =
                    a.element(m.apply(a.bracket(bi, bj).coords())) -
                    a.bracket(a.element(m.col(i)), bj) - a.bracket(bi, a.element(m.col(j)));
                for (std::size_t c = 0; c < n; ++c) {
                    CHECK(stacked[pair_index * n + c] == residual.coords()[c]);
                }
            }
        }
    }
}

TEST_CASE("ad images and the zero map satisfy Leibniz") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    CHECK(cga::is_derivation(a, RationalMatrix(a.dim(), a.dim())).ok());
    cga::SplitMix64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const Element x = a.element(cga::random_coords(rng, a.dim()));
        CHECK(cga::is_derivation(a, a.ad(x)).ok());
    }
}

TEST_CASE("delta is an outer derivation") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    const RationalMatrix delta = cga::delta_map(a);
    CHECK(cga::is_derivation(a, delta).ok());
    CHECK(cga::is_zero_vec(delta.col(a.index_of(BasisLabel::e()))));

    const DerivationSpace ders = DerivationSpace::compute(a);
    std::vector<Vec> ad_rows;
    for (const RationalMatrix& m : ders.ad_basis()) {
        ad_rows.push_back(m.flat());
    }
    const cga::Subspace ad_span = cga::Subspace::span_of(a.dim() * a.dim(), ad_rows);
    CHECK(!ad_span.contains(delta.flat()));  // ad(x)(z) = 0 always, delta(z) = z
    CHECK(ders.kernel_space().contains(delta.flat()));

    CHECK_THROWS_AS(cga::delta_map(LieAlgebra::from_table({BasisLabel::p(0)}, {})),
                    std::invalid_argument);
}

TEST_CASE("derivation space dimensions and canonical basis") {
    for (long tw : {1L, 3L}) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        CHECK(ders.dim() == static_cast<std::size_t>(tw) + 5);
        CHECK(ders.outer_dimension() == 1);
        CHECK(cga::outer_dimension(a) == 1);
        CHECK(ders.ad_basis().size() == static_cast<std::size_t>(tw) + 4);
        CHECK(ders.basis().size() == ders.dim());
        CHECK(ders.basis().back() == ders.delta());
        for (const RationalMatrix& d : ders.basis()) {
            CHECK(cga::is_derivation(a, d).ok());
        }
    }
}

TEST_CASE("the canonical Der basis is homogeneous for ad(h)-conjugation") {
    // [ad(h), ad(b)] = ad([h,b]), so each canonical basis element is an
    // eigenvector of conjugation by ad(h): weight 2 on ad(e), -2 on ad(f),
    // 2(l-k) on ad(p_k), 0 on ad(h) and delta.
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    const DerivationSpace ders = DerivationSpace::compute(a);
    const RationalMatrix adh = a.ad(a.basis_element(1));
    auto weight_of = [&](std::size_t index) -> Rational {
        if (index == ders.delta_index() || index == 1) {
            return 0;
        }
        if (index == 0) {
            return 2;
        }
        if (index == 2) {
            return -2;
        }
        return Rational(3 - 2 * (static_cast<long>(index) - 3));  // 2(l-k) for p_k
    };
    for (std::size_t i = 0; i < ders.basis().size(); ++i) {
        const RationalMatrix& b = ders.basis()[i];
        CHECK(adh * b - b * adh == weight_of(i) * b);
    }
}

TEST_CASE("every derivation fixes the z line and the heisenberg ideal") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(5));
    const DerivationSpace ders = DerivationSpace::compute(a);
    const std::size_t zi = a.index_of(BasisLabel::z());
    for (const RationalMatrix& d : ders.basis()) {
        // D(z) lands in span{z}
        const Vec dz = d.col(zi);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (i != zi) {
                CHECK(dz[i].is_zero());
            }
        }
        // D(span{p_*, z}) stays inside span{p_*, z}
        for (std::size_t j : a.heisenberg_part()) {
            const Vec dj = d.col(j);
            for (std::size_t i : a.sl2_part()) {
                CHECK(dj[i].is_zero());
            }
        }
    }
}

TEST_CASE("decompose on the canonical examples") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(1));
    const DerivationSpace ders = DerivationSpace::compute(a);
    const Element e = a.basis_element(0);

    const auto dec_delta = cga::decompose_derivation(a, ders, ders.delta());
    CHECK(dec_delta.x_component.is_zero());
    CHECK(dec_delta.delta_coefficient == Rational(1));
    CHECK(dec_delta.residual_ok);

    const auto dec_ade = cga::decompose_derivation(a, ders, a.ad(e));
    CHECK(dec_ade.x_component == e);
    CHECK(dec_ade.delta_coefficient == Rational(0));
    CHECK(dec_ade.residual_ok);

    const auto dec_mix = cga::decompose_derivation(a, ders, a.ad(e) + Rational(3) * ders.delta());
    CHECK(dec_mix.x_component == e);
    CHECK(dec_mix.delta_coefficient == Rational(3));
    CHECK(dec_mix.residual_ok);
}

TEST_CASE("decompose round-trips random derivations") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    const DerivationSpace ders = DerivationSpace::compute(a);
    const std::size_t zi = a.index_of(BasisLabel::z());
    cga::SplitMix64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalMatrix d = ders.from_coords(cga::random_coords(rng, ders.dim()));
        const auto dec = cga::decompose_derivation(a, ders, d);
        CHECK(dec.residual_ok);
        CHECK(a.ad(dec.x_component) + dec.delta_coefficient * ders.delta() == d);
        CHECK(dec.x_component.coords()[zi].is_zero());
        CHECK(d(zi, zi) == dec.delta_coefficient);  // lambda_D is the z-eigenvalue
    }
}

TEST_CASE("decompose rejects non-derivations") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(1));
    const DerivationSpace ders = DerivationSpace::compute(a);

    // D(z) = e cannot come from a derivation
    RationalMatrix bad(a.dim(), a.dim());
    bad(0, a.index_of(BasisLabel::z())) = 1;
    CHECK_THROWS_AS(cga::decompose_derivation(a, ders, bad), cga::StructureError);

    // identity has D(z) = z but its inner part is not an ad image
    CHECK_THROWS_AS(cga::decompose_derivation(a, ders, RationalMatrix::identity(a.dim())),
                    cga::StructureError);
}

TEST_CASE("coordinates round-trip through the canonical basis") {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(3));
    const DerivationSpace ders = DerivationSpace::compute(a);
    cga::SplitMix64 rng(123);
    for (int i = 0; i < 10; ++i) {
        const Vec t = cga::random_coords(rng, ders.dim());
        CHECK(ders.to_coords(ders.from_coords(t)) == t);
    }
    CHECK_THROWS_AS(ders.to_coords(RationalMatrix::identity(a.dim())), cga::StructureError);

    const std::uint64_t key = 99;
    CHECK(cga::random_derivation(ders, key) == cga::random_derivation(ders, key));
}

}  // TEST_SUITE
