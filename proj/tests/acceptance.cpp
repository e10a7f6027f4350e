// Acceptance suite: every release-gating property of the library, one line
// of output per criterion, nonzero exit on any failure. All comparisons are
// over exact rationals; the only tolerances anywhere are wall-clock budgets.

#include "cga/derivations.hpp"
#include "cga/json_io.hpp"
#include "cga/lie_algebra.hpp"
#include "cga/prng.hpp"
#include "cga/suite.hpp"
#include "cga/two_local.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace cga;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        pass = false;
        note = note.empty() ? why : note + "; " + why;
    }
};

std::vector<long> small_l() { return {1, 3, 5}; }

std::vector<long> all_l() {
    std::vector<long> out;
    for (long tw = 1; tw <= 21; tw += 2) {
        out.push_back(tw);
    }
    return out;
}

// 1. antisymmetry + Jacobi with zero defect for every l up to 21/2
Outcome criterion_lie_validity() {
    Outcome out;
    for (long tw : all_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = i; j < a.dim(); ++j) {
                const Element bi = a.basis_element(i), bj = a.basis_element(j);
                if (!(a.bracket(bi, bj) + a.bracket(bj, bi)).is_zero()) {
                    out.fail("antisymmetry fails at l=" + HalfInt(tw).str());
                }
            }
        }
        const JacobiReport rep = a.jacobi_defect();
        if (!rep.ok()) {
            out.fail("jacobi defect at l=" + HalfInt(tw).str() + " on " +
                     std::to_string(rep.violations.size()) + " triples");
        }
    }
    return out;
}

// 2. ker(Leibniz) has dimension 2l+5 and splits as span{delta} + ad(g)
Outcome criterion_derivation_split() {
    Outcome out;
    for (long tw : all_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const std::size_t n = a.dim();
        const Subspace ker = kernel(leibniz_matrix(a));
        if (ker.dim() != static_cast<std::size_t>(tw) + 5) {
            out.fail("dim ker = " + std::to_string(ker.dim()) + " at l=" + HalfInt(tw).str());
        }
        const RationalMatrix delta = delta_map(a);
        if (!ker.contains(delta.flat())) {
            out.fail("delta not in ker at l=" + HalfInt(tw).str());
        }
        std::vector<Vec> ad_rows;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ad_rows.push_back(a.ad(a.basis_element(i)).flat());
        }
        const Subspace ad_span = Subspace::span_of(n * n, ad_rows);
        const Subspace delta_span = Subspace::span_of(n * n, {delta.flat()});
        if (ad_span.contains(delta.flat())) {
            out.fail("delta is inner at l=" + HalfInt(tw).str());
        }
        if (subspace_intersect(ad_span, delta_span).dim() != 0 ||
            !(subspace_sum(ad_span, delta_span) == ker)) {
            out.fail("no direct sum at l=" + HalfInt(tw).str());
        }
    }
    return out;
}

// 3. 200 seeded derivations per small l decompose and reassemble exactly
Outcome criterion_decomposition_roundtrip() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        const std::size_t zi = a.index_of(BasisLabel::z());
        for (std::uint64_t trial = 0; trial < 200; ++trial) {
            const RationalMatrix d =
                random_derivation(ders, mix_keys(mix_keys(7, tw), trial));
            const DerivationDecomposition dec = decompose_derivation(a, ders, d);
            const bool exact =
                dec.residual_ok && a.ad(dec.x_component) + dec.delta_coefficient * ders.delta() == d;
            const bool eigen = d.col(zi) == (dec.delta_coefficient * a.basis_element(zi)).coords();
            if (!exact || !eigen) {
                out.fail("trial " + std::to_string(trial) + " at l=" + HalfInt(tw).str());
                break;
            }
        }
    }
    return out;
}

// 4. stabilizer dims {h:2, e:3, f:3, z:2l+4} with the exact predicted spans
Outcome criterion_stabilizers() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        const std::size_t DELTA = ders.delta_index();
        auto unit_span = [&](std::vector<std::size_t> coords) {
            std::vector<Vec> rows;
            for (std::size_t c : coords) {
                rows.push_back(unit_vec(ders.dim(), c));
            }
            return Subspace::span_of(ders.dim(), rows);
        };
        auto stab = [&](const BasisLabel& lbl) {
            return point_stabilizer(a, ders, a.basis_element(a.index_of(lbl)));
        };
        const Subspace sh = stab(BasisLabel::h());
        const Subspace se = stab(BasisLabel::e());
        const Subspace sf = stab(BasisLabel::f());
        const Subspace sz = stab(BasisLabel::z());
        std::vector<std::size_t> inner(DELTA);
        for (std::size_t i = 0; i < DELTA; ++i) {
            inner[i] = i;
        }
        const bool ok = sh.dim() == 2 && sh == unit_span({1, DELTA}) &&
                        se.dim() == 3 && se == unit_span({0, 3, DELTA}) &&
                        sf.dim() == 3 &&
                        sf == unit_span({2, a.index_of(BasisLabel::p(tw)), DELTA}) &&
                        sz.dim() == static_cast<std::size_t>(tw) + 4 && sz == unit_span(inner);
        if (!ok) {
            out.fail("stabilizer mismatch at l=" + HalfInt(tw).str());
        }
    }
    return out;
}

// 5. D(h) = D(e) = 0 forces D(f) = 0: the pair stabilizer is the delta line
Outcome criterion_he_pair() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        const Element h = a.basis_element(a.index_of(BasisLabel::h()));
        const Element e = a.basis_element(a.index_of(BasisLabel::e()));
        const Element f = a.basis_element(a.index_of(BasisLabel::f()));
        const Subspace pair = pair_stabilizer(a, ders, h, e);
        if (!(pair == Subspace::span_of(ders.dim(), {unit_vec(ders.dim(), ders.delta_index())}))) {
            out.fail("pair stabilizer is not the delta line at l=" + HalfInt(tw).str());
            continue;
        }
        for (const Vec& coords : pair.basis()) {
            if (!is_zero_vec(ders.from_coords(coords).apply(f.coords()))) {
                out.fail("a derivation vanishing on h,e moves f at l=" + HalfInt(tw).str());
            }
        }
        if (!is_zero_vec(ders.delta().apply(f.coords()))) {
            out.fail("delta(f) != 0 at l=" + HalfInt(tw).str());
        }
    }
    return out;
}

// 6. 100 adversarial-oracle trials per small l resolve to the planted matrix
Outcome criterion_resolver() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const std::uint64_t key = mix_keys(mix_keys(11, tw), trial);
            const RationalMatrix planted = random_derivation(ders, mix_keys(key, 1));
            const AdversarialOracle oracle(ders, planted, mix_keys(key, 2));
            const ResolveReport rep =
                resolve_two_local(a, ders, oracle, default_probes(a, mix_keys(key, 3)));
            if (!rep.resolved() || !(rep.recovered == planted)) {
                out.fail("trial " + std::to_string(trial) + " at l=" + HalfInt(tw).str());
                break;
            }
        }
    }
    return out;
}

// 7. pointwise-inconsistent oracles flagged in at least 19 of 20 trials per l
Outcome criterion_negative_detection() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        std::size_t detections = 0;
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            const std::uint64_t key = mix_keys(mix_keys(13, tw), trial);
            const PointwiseRandomOracle fake(ders, key);
            const ResolveReport rep =
                resolve_two_local(a, ders, fake, default_probes(a, mix_keys(key, 1)));
            if (!rep.resolved()) {
                ++detections;
            }
        }
        if (detections < 19) {
            out.fail("only " + std::to_string(detections) + "/20 detected at l=" + HalfInt(tw).str());
        }
    }
    return out;
}

// 8. point evaluation is homogeneous for genuine oracles, violated for fakes
Outcome criterion_homogeneity() {
    Outcome out;
    for (long tw : small_l()) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(tw));
        const DerivationSpace ders = DerivationSpace::compute(a);
        const std::uint64_t key = mix_keys(17, tw);
        const AdversarialOracle oracle(ders, random_derivation(ders, key), mix_keys(key, 1));
        const auto samples = homogeneity_samples(a, mix_keys(key, 2), 50);
        if (!check_homogeneity(oracle, samples).ok()) {
            out.fail("genuine oracle violates homogeneity at l=" + HalfInt(tw).str());
        }
        const PointwiseRandomOracle fake(ders, mix_keys(key, 3));
        const HomogeneityReport rep = check_homogeneity(fake, samples);
        if (rep.ok() || rep.violations.empty()) {
            out.fail("fake oracle not reported at l=" + HalfInt(tw).str());
        }
    }
    return out;
}

// 9. `cga suite --json --seed 7` is byte-identical across two runs
Outcome criterion_determinism() {
    Outcome out;
    const char* cli = std::getenv("CGA_CLI");
    if (cli != nullptr) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path();
        const fs::path first = dir / "cga_acceptance_run1.json";
        const fs::path second = dir / "cga_acceptance_run2.json";
        for (const auto& [path, tag] : {std::pair{first, "1"}, std::pair{second, "2"}}) {
            const std::string cmd = std::string("\"") + cli + "\" suite --json --seed 7 --out \"" +
                                    path.string() + "\"";
            if (std::system(cmd.c_str()) != 0) {
                out.fail(std::string("suite run ") + tag + " failed");
                return out;
            }
        }
        std::ifstream a(first, std::ios::binary), b(second, std::ios::binary);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        if (sa.str().empty() || sa.str() != sb.str()) {
            out.fail("CLI outputs differ between runs");
        }
        fs::remove(first);
        fs::remove(second);
        out.note = "via CLI";
    } else {
        SuiteConfig cfg = SuiteConfig::defaults();
        cfg.seeds = {7};
        const std::string once = encode_suite_report(run_suite(cfg));
        const std::string twice = encode_suite_report(run_suite(cfg));
        if (once != twice) {
            out.fail("reports differ between runs");
        }
        out.note = "in-process (set CGA_CLI to exercise the binary)";
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0 = no budget stated
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Lie-algebra validity (antisymmetry + Jacobi, l = 1/2..21/2)", criterion_lie_validity, 10.0},
        {2, "derivation split: dim ker = 2l+5 and Cdelta + ad(g), l = 1/2..21/2",
         criterion_derivation_split, 60.0},
        {3, "decomposition round-trip, 200 seeded derivations per l in {1/2,3/2,5/2}",
         criterion_decomposition_roundtrip, 0.0},
        {4, "point stabilizers are exactly the predicted spans (dims 2/3/3/2l+4)",
         criterion_stabilizers, 0.0},
        {5, "vanishing at h and e forces vanishing at f (pair stabilizer = delta line)",
         criterion_he_pair, 0.0},
        {6, "resolver recovers 100 planted derivations per l in {1/2,3/2,5/2}", criterion_resolver,
         30.0},
        {7, "pointwise-inconsistent oracles detected in >= 19/20 trials per l",
         criterion_negative_detection, 0.0},
        {8, "point evaluation homogeneity: exact for genuine oracles, reported for fakes",
         criterion_homogeneity, 0.0},
        {9, "suite --json --seed 7 is byte-identical across consecutive runs",
         criterion_determinism, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            out.fail("took " + std::to_string(seconds) + " s, budget " +
                     std::to_string(c.budget_seconds) + " s");
        }
        if (!out.pass) {
            ++failures;
        }
        std::printf("[%s] %d. %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    out.note.empty() ? "" : " -- ", out.note.c_str());
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria pass\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
