#ifndef CGA_SUITE_HPP
#define CGA_SUITE_HPP

#include "cga/lie_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cga {

/// Configuration of the one-shot verification suite. Results are a pure
/// function of (l_values, seeds, trials_per_l); output/format only steer
/// rendering.
struct SuiteConfig {
    std::vector<HalfInt> l_values;
    std::vector<std::uint64_t> seeds;
    std::size_t trials_per_l = 20;
    std::string out_path;  // empty = stdout
    enum class Format { Text, Json } format = Format::Text;

    /// l = 1/2 .. 9/2, seeds 1..5, 20 trials: sub-minute on a laptop.
    static SuiteConfig defaults();
    /// Same, but l up to 21/2.
    static SuiteConfig extended();

    void validate() const;  // throws std::invalid_argument
};

struct StabilizerDims {
    std::size_t h = 0, e = 0, f = 0, z = 0;

    friend bool operator==(const StabilizerDims&, const StabilizerDims&) = default;
};

struct SuiteBlock {
    std::string l_label;
    long l_twice = 0;  // 2l, 0 when the algebra is not a g(l)
    bool jacobi = false;
    bool completed = false;  // false: aborted after a structural failure
    std::size_t dim_der = 0;
    std::size_t outer_dim = 0;
    bool direct_sum = false;
    StabilizerDims stabilizer_dims;
    bool stabilizers_exact = false;  // computed stabilizers equal the predicted spans
    std::size_t resolver_trials = 0;
    std::size_t resolver_passes = 0;
    std::size_t negative_trials = 0;
    std::size_t negative_detections = 0;

    bool pass() const;
};

struct SuiteReport {
    std::vector<SuiteBlock> blocks;

    bool overall_pass() const;
};

/// All checks for one algebra: Jacobi, derivation-space split, stabilizer
/// shapes, resolver trials around planted derivations, negative detection.
/// A Jacobi failure short-circuits the rest of the block.
SuiteBlock run_block(const LieAlgebra& a, const SuiteConfig& cfg);

SuiteReport run_suite(const SuiteConfig& cfg);

std::string render_text(const SuiteReport& r);

}  // namespace cga

#endif
