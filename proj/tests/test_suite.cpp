#include "cga/json_io.hpp"
#include "cga/suite.hpp"

#include <doctest.h>

using cga::HalfInt;
using cga::LieAlgebra;
using cga::Rational;
using cga::SuiteConfig;
using cga::SuiteReport;

TEST_SUITE("suite") {

TEST_CASE("default and extended configurations") {
    const SuiteConfig def = SuiteConfig::defaults();
    REQUIRE(def.l_values.size() == 5);
    CHECK(def.l_values.front().str() == "1/2");
    CHECK(def.l_values.back().str() == "9/2");
    CHECK(def.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
    CHECK(def.trials_per_l == 20);

    const SuiteConfig ext = SuiteConfig::extended();
    REQUIRE(ext.l_values.size() == 11);
    CHECK(ext.l_values.back().str() == "21/2");
}

TEST_CASE("config validation") {
    SuiteConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // no l values
    cfg.l_values = {HalfInt(1)};
    cfg.seeds.clear();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.seeds = {1};
    cfg.trials_per_l = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("the default configuration passes end to end") {
    const SuiteReport rep = cga::run_suite(SuiteConfig::defaults());
    REQUIRE(rep.blocks.size() == 5);
    for (const auto& b : rep.blocks) {
        CHECK(b.pass());
    }
    CHECK(rep.overall_pass());
}

TEST_CASE("a single-l run passes with one block") {
    SuiteConfig cfg;
    cfg.l_values = {HalfInt(1)};
    cfg.seeds = {1};
    cfg.trials_per_l = 3;
    const SuiteReport rep = cga::run_suite(cfg);
    REQUIRE(rep.blocks.size() == 1);
    const auto& b = rep.blocks.front();
    CHECK(b.jacobi);
    CHECK(b.completed);
    CHECK(b.dim_der == 6);
    CHECK(b.outer_dim == 1);
    CHECK(b.direct_sum);
    CHECK(b.stabilizer_dims == cga::StabilizerDims{2, 3, 3, 5});
    CHECK(b.stabilizers_exact);
    CHECK(b.resolver_passes == 3);
    CHECK(b.negative_detections == 3);
    CHECK(b.pass());
    CHECK(rep.overall_pass());
}

TEST_CASE("a corrupted bracket table fails at jacobi and skips the rest") {
    const LieAlgebra good = LieAlgebra::conformal_galilei(HalfInt(1));
    LieAlgebra::BracketTable table = good.brackets();
    table[{0, 2}][1] = Rational(-1);  // flip [e,f]
    const LieAlgebra bad = LieAlgebra::from_table(good.basis(), table);

    SuiteConfig cfg;
    cfg.l_values = {HalfInt(1)};
    cfg.seeds = {1};
    cfg.trials_per_l = 2;
    const cga::SuiteBlock blk = cga::run_block(bad, cfg);
    CHECK(!blk.jacobi);
    CHECK(!blk.completed);
    CHECK(blk.dim_der == 0);           // never computed
    CHECK(blk.resolver_trials == 0);   // skipped
    CHECK(!blk.pass());

    SuiteReport rep;
    rep.blocks.push_back(blk);
    CHECK(!rep.overall_pass());
}

TEST_CASE("reports are deterministic functions of the config") {
    SuiteConfig cfg;
    cfg.l_values = {HalfInt(1), HalfInt(3)};
    cfg.seeds = {7};
    cfg.trials_per_l = 2;
    const std::string once = cga::encode_suite_report(cga::run_suite(cfg));
    const std::string twice = cga::encode_suite_report(cga::run_suite(cfg));
    CHECK(once == twice);

    cfg.seeds = {8};
    const std::string other = cga::encode_suite_report(cga::run_suite(cfg));
    CHECK(once == other);  // all checks still pass; the report carries outcomes, not transcripts
}

TEST_CASE("block pass logic notices failures") {
    SuiteConfig cfg;
    cfg.l_values = {HalfInt(1)};
    cfg.seeds = {2};
    cfg.trials_per_l = 2;
    cga::SuiteBlock blk = cga::run_suite(cfg).blocks.front();
    REQUIRE(blk.pass());
    blk.resolver_passes -= 1;
    CHECK(!blk.pass());

    cga::SuiteBlock blk2 = cga::run_suite(cfg).blocks.front();
    blk2.negative_detections = 0;
    CHECK(!blk2.pass());

    cga::SuiteBlock blk3 = cga::run_suite(cfg).blocks.front();
    blk3.stabilizer_dims.h = 3;
    CHECK(!blk3.pass());
}

TEST_CASE("text rendering carries the verdict") {
    SuiteConfig cfg;
    cfg.l_values = {HalfInt(1)};
    cfg.seeds = {3};
    cfg.trials_per_l = 2;
    const std::string text = cga::render_text(cga::run_suite(cfg));
    CHECK(text.find("overall: PASS") != std::string::npos);
    CHECK(text.find("1/2") != std::string::npos);
    CHECK(text.find("2/3/3/5") != std::string::npos);
}

}  // TEST_SUITE
