#include "cga/suite.hpp"

#include "cga/derivations.hpp"
#include "cga/prng.hpp"
#include "cga/two_local.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

namespace cga {

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig cfg;
    for (long tw = 1; tw <= 9; tw += 2) {
        cfg.l_values.push_back(HalfInt(tw));
    }
    cfg.seeds = {1, 2, 3, 4, 5};
    cfg.trials_per_l = 20;
    return cfg;
}

SuiteConfig SuiteConfig::extended() {
    SuiteConfig cfg = defaults();
    for (long tw = 11; tw <= 21; tw += 2) {
        cfg.l_values.push_back(HalfInt(tw));
    }
    return cfg;
}

void SuiteConfig::validate() const {
    if (l_values.empty()) {
        throw std::invalid_argument("suite config needs at least one l value");
    }
    if (seeds.empty()) {
        throw std::invalid_argument("suite config needs at least one seed");
    }
    if (trials_per_l < 1) {
        throw std::invalid_argument("suite config needs trials_per_l >= 1");
    }
}

bool SuiteBlock::pass() const {
    if (!jacobi || !completed || !direct_sum || !stabilizers_exact) {
        return false;
    }
    const std::size_t expected_dim = static_cast<std::size_t>(l_twice) + 5;
    if (dim_der != expected_dim || outer_dim != 1) {
        return false;
    }
    const StabilizerDims expected{2, 3, 3, expected_dim - 1};
    if (!(stabilizer_dims == expected)) {
        return false;
    }
    if (resolver_passes != resolver_trials) {
        return false;
    }
    // tolerate the conservatively stated 1-in-20 coincidence allowance
    return negative_detections * 20 >= negative_trials * 19;
}

bool SuiteReport::overall_pass() const {
    if (blocks.empty()) {
        return false;
    }
    for (const SuiteBlock& b : blocks) {
        if (!b.pass()) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t trial_key(const SuiteConfig& cfg, long l_twice, std::string_view kind, std::size_t trial) {
    const std::uint64_t seed = cfg.seeds[trial % cfg.seeds.size()];
    std::uint64_t key = mix_keys(seed, static_cast<std::uint64_t>(l_twice));
    key = mix_keys(key, fnv1a64(kind));
    return mix_keys(key, trial);
}

Subspace predicted_stabilizer(const DerivationSpace& ders, std::initializer_list<std::size_t> coords) {
    std::vector<Vec> rows;
    for (std::size_t c : coords) {
        rows.push_back(unit_vec(ders.dim(), c));
    }
    return Subspace::span_of(ders.dim(), rows);
}

}  // namespace

SuiteBlock run_block(const LieAlgebra& a, const SuiteConfig& cfg) {
    SuiteBlock blk;
    blk.l_label = a.l() ? a.l()->str() : "custom";
    blk.l_twice = a.l() ? a.l()->twice() : 0;

    blk.jacobi = a.jacobi_defect().ok();
    if (!blk.jacobi || !a.l()) {
        return blk;  // remaining checks skipped
    }

    std::optional<DerivationSpace> maybe_ders;
    try {
        maybe_ders = DerivationSpace::compute(a);
    } catch (const StructureError&) {
        return blk;  // direct_sum stays false, block fails
    }
    const DerivationSpace& ders = *maybe_ders;
    blk.direct_sum = true;
    blk.dim_der = ders.dim();
    blk.outer_dim = ders.outer_dimension();

    const long tw = a.l()->twice();
    const std::size_t E = a.index_of(BasisLabel::e());
    const std::size_t H = a.index_of(BasisLabel::h());
    const std::size_t F = a.index_of(BasisLabel::f());
    const std::size_t P0 = a.index_of(BasisLabel::p(0));
    const std::size_t P2L = a.index_of(BasisLabel::p(tw));
    const std::size_t DELTA = ders.delta_index();

    const Element e = a.basis_element(E);
    const Element h = a.basis_element(H);
    const Element f = a.basis_element(F);
    const Element z = a.basis_element(a.index_of(BasisLabel::z()));

    const Subspace stab_h = point_stabilizer(a, ders, h);
    const Subspace stab_e = point_stabilizer(a, ders, e);
    const Subspace stab_f = point_stabilizer(a, ders, f);
    const Subspace stab_z = point_stabilizer(a, ders, z);
    blk.stabilizer_dims = {stab_h.dim(), stab_e.dim(), stab_f.dim(), stab_z.dim()};

    std::vector<Vec> all_ad_rows;  // every inner direction, no delta
    for (std::size_t i = 0; i + 1 < ders.dim(); ++i) {
        all_ad_rows.push_back(unit_vec(ders.dim(), i));
    }
    blk.stabilizers_exact =
        stab_h == predicted_stabilizer(ders, {H, DELTA}) &&
        stab_e == predicted_stabilizer(ders, {E, P0, DELTA}) &&
        stab_f == predicted_stabilizer(ders, {F, P2L, DELTA}) &&
        stab_z == Subspace::span_of(ders.dim(), all_ad_rows) &&
        pair_stabilizer(a, ders, h, e) == predicted_stabilizer(ders, {DELTA});

    blk.resolver_trials = cfg.trials_per_l;
    for (std::size_t t = 0; t < cfg.trials_per_l; ++t) {
        const RationalMatrix planted = random_derivation(ders, trial_key(cfg, tw, "plant", t));
        const AdversarialOracle oracle(ders, planted, trial_key(cfg, tw, "oracle", t));
        const auto probes = default_probes(a, trial_key(cfg, tw, "probes", t));
        const ResolveReport rep = resolve_two_local(a, ders, oracle, probes);
        if (rep.resolved() && rep.recovered == planted) {
            ++blk.resolver_passes;
        }
    }

    blk.negative_trials = cfg.trials_per_l;
    for (std::size_t t = 0; t < cfg.trials_per_l; ++t) {
        const PointwiseRandomOracle fake(ders, trial_key(cfg, tw, "negative", t));
        const auto probes = default_probes(a, trial_key(cfg, tw, "negative-probes", t));
        const ResolveReport rep = resolve_two_local(a, ders, fake, probes);
        if (!rep.resolved()) {
            ++blk.negative_detections;
        }
    }

    blk.completed = true;
    return blk;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    SuiteReport report;
    for (const HalfInt& l : cfg.l_values) {
        const LieAlgebra a = LieAlgebra::conformal_galilei(l);
        report.blocks.push_back(run_block(a, cfg));
    }
    return report;
}

std::string render_text(const SuiteReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "l" << std::setw(8) << "jacobi" << std::setw(10) << "dim(Der)"
       << std::setw(7) << "outer" << std::setw(7) << "split" << std::setw(15) << "stab h/e/f/z"
       << std::setw(10) << "resolver" << std::setw(10) << "negative" << "result\n";
    for (const SuiteBlock& b : r.blocks) {
        os << std::left << std::setw(6) << b.l_label;
        if (!b.jacobi) {
            os << "FAIL    (remaining checks skipped)\n";
            continue;
        }
        const std::string stab = std::to_string(b.stabilizer_dims.h) + "/" +
                                 std::to_string(b.stabilizer_dims.e) + "/" +
                                 std::to_string(b.stabilizer_dims.f) + "/" +
                                 std::to_string(b.stabilizer_dims.z);
        os << std::setw(8) << "ok" << std::setw(10) << b.dim_der << std::setw(7) << b.outer_dim
           << std::setw(7) << (b.direct_sum ? "yes" : "NO") << std::setw(15) << stab << std::setw(10)
           << (std::to_string(b.resolver_passes) + "/" + std::to_string(b.resolver_trials))
           << std::setw(10)
           << (std::to_string(b.negative_detections) + "/" + std::to_string(b.negative_trials))
           << (b.pass() ? "PASS" : "FAIL") << "\n";
    }
    os << "overall: " << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace cga
