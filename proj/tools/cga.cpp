// cga: construct conformal Galilei algebras g(l), compute their derivation
// algebras, and resolve 2-local derivations back to genuine derivations,
// everything over exact rationals.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/config error.

#include "cga/derivations.hpp"
#include "cga/json_io.hpp"
#include "cga/lie_algebra.hpp"
#include "cga/prng.hpp"
#include "cga/suite.hpp"
#include "cga/two_local.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsageError = 2;

using Json = nlohmann::ordered_json;

struct CommonOptions {
    std::string l_text = "3/2";
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::string out_path;
};

void write_output(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        if (body.empty() || body.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file " + out_path);
    }
    out << body;
    if (body.empty() || body.back() != '\n') {
        out << '\n';
    }
}

std::string describe_brackets(const cga::LieAlgebra& a) {
    std::ostringstream os;
    for (const auto& [key, coeffs] : a.brackets()) {
        cga::Vec coords(a.dim());
        for (const auto& [target, v] : coeffs) {
            coords[target] = v;
        }
        os << "  [" << a.basis()[key.first].str() << ", " << a.basis()[key.second].str()
           << "] = " << a.element(coords).str() << "\n";
    }
    return os.str();
}

int cmd_info(const CommonOptions& opt) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    if (opt.json) {
        write_output(opt.out_path, cga::encode_algebra(a));
        return kExitPass;
    }
    std::ostringstream os;
    os << "conformal Galilei algebra g(" << a.l()->str() << ")\n";
    os << "dim = " << a.dim() << "\n";
    os << "basis =";
    for (const auto& label : a.basis()) {
        os << " " << label.str();
    }
    os << "\nnonzero brackets (i < j):\n" << describe_brackets(a);
    write_output(opt.out_path, os.str());
    return kExitPass;
}

int cmd_jacobi(const CommonOptions& opt) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::JacobiReport report = a.jacobi_defect();
    std::ostringstream os;
    if (opt.json) {
        Json j;
        j["l"] = a.l()->str();
        j["triples_checked"] = report.triples_checked;
        j["violations"] = report.violations.size();
        j["ok"] = report.ok();
        os << j.dump(2);
    } else {
        os << "jacobi(" << a.l()->str() << "): " << (report.ok() ? "ok" : "FAIL") << " ("
           << report.triples_checked << " basis triples)";
        for (const auto& v : report.violations) {
            os << "\n  defect on (" << a.basis()[v.i].str() << ", " << a.basis()[v.j].str() << ", "
               << a.basis()[v.k].str() << "): " << a.element(v.defect).str();
        }
    }
    write_output(opt.out_path, os.str());
    return report.ok() ? kExitPass : kExitVerificationFailure;
}

int cmd_derivations(const CommonOptions& opt) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::DerivationSpace ders = cga::DerivationSpace::compute(a);
    if (opt.json) {
        write_output(opt.out_path, cga::encode_derivation_summary(ders));
        return kExitPass;
    }
    std::ostringstream os;
    os << "Der(g(" << a.l()->str() << ")): dim = " << ders.dim()
       << ", inner = " << ders.ad_basis().size() << ", outer = " << ders.outer_dimension()
       << ", split verified\n";
    os << "delta acts as 0 on sl2, 1/2 on each p_k, 1 on z";
    write_output(opt.out_path, os.str());
    return kExitPass;
}

int cmd_decompose(const CommonOptions& opt, const std::string& matrix_path) {
    std::ifstream in(matrix_path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file " + matrix_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::RationalMatrix d = cga::decode_matrix(buffer.str());
    const cga::LeibnizReport leibniz = cga::is_derivation(a, d);
    if (!leibniz.ok()) {
        std::ostringstream os;
        os << "input is not a derivation of g(" << a.l()->str() << "); Leibniz fails on "
           << leibniz.violations.size() << " basis pair(s), first at ("
           << a.basis()[leibniz.violations[0].i].str() << ", "
           << a.basis()[leibniz.violations[0].j].str() << ")";
        write_output(opt.out_path, os.str());
        return kExitVerificationFailure;
    }
    const cga::DerivationSpace ders = cga::DerivationSpace::compute(a);
    const cga::DerivationDecomposition dec = cga::decompose_derivation(a, ders, d);
    std::ostringstream os;
    if (opt.json) {
        Json j;
        j["x"] = Json::array();
        for (const cga::Rational& c : dec.x_component.coords()) {
            j["x"].push_back(c.str());
        }
        j["lambda"] = dec.delta_coefficient.str();
        j["exact"] = dec.residual_ok;
        os << j.dump(2);
    } else {
        os << "D = ad(x) + lambda delta with\n  x = " << dec.x_component.str() << "\n  lambda = "
           << dec.delta_coefficient.str() << "\n  reassembly exact: " << (dec.residual_ok ? "yes" : "NO");
    }
    write_output(opt.out_path, os.str());
    return dec.residual_ok ? kExitPass : kExitVerificationFailure;
}

int cmd_stabilizer(const CommonOptions& opt, const std::string& point_text) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::Element x = a.basis_element(a.index_of(cga::BasisLabel::parse(point_text)));
    const cga::DerivationSpace ders = cga::DerivationSpace::compute(a);
    const cga::Subspace stab = cga::point_stabilizer(a, ders, x);
    if (opt.json) {
        write_output(opt.out_path, cga::encode_subspace(stab));
        return kExitPass;
    }
    std::ostringstream os;
    os << "stabilizer of " << point_text << " inside Der(g(" << a.l()->str() << ")): dim = " << stab.dim()
       << "\ncoordinates are over the basis ad(e), ad(h), ad(f), ad(p_0).."
       << "ad(p_" << a.l()->twice() << "), delta\n";
    for (const auto& row : stab.basis()) {
        os << "  [";
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? ", " : "") << row[i].str();
        }
        os << "]\n";
    }
    write_output(opt.out_path, os.str());
    return kExitPass;
}

int cmd_resolve(const CommonOptions& opt) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::DerivationSpace ders = cga::DerivationSpace::compute(a);
    std::size_t passes = 0;
    std::ostringstream os;
    Json trial_reports = Json::array();
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::uint64_t key = cga::mix_keys(opt.seed, t);
        const cga::RationalMatrix planted = cga::random_derivation(ders, cga::mix_keys(key, 1));
        const cga::AdversarialOracle oracle(ders, planted, cga::mix_keys(key, 2));
        const auto probes = cga::default_probes(a, cga::mix_keys(key, 3));
        const cga::ResolveReport rep = cga::resolve_two_local(a, ders, oracle, probes);
        const bool exact = rep.resolved() && rep.recovered == planted;
        if (exact) {
            ++passes;
        }
        if (opt.json) {
            Json entry;
            entry["trial"] = t;
            entry["verdict"] = rep.resolved() ? "RESOLVED" : "INCONSISTENT";
            entry["exact_recovery"] = exact;
            entry["lambda_z"] = rep.lambda_z.str();
            entry["probes_checked"] = rep.probes_checked;
            trial_reports.push_back(std::move(entry));
        } else {
            os << "trial " << t << ": " << (rep.resolved() ? "RESOLVED" : "INCONSISTENT")
               << (exact ? ", recovered planted derivation exactly" : ", RECOVERY MISMATCH") << "\n";
        }
    }
    const bool all_pass = passes == opt.trials;
    if (opt.json) {
        Json j;
        j["l"] = a.l()->str();
        j["seed"] = opt.seed;
        j["trials"] = opt.trials;
        j["passes"] = passes;
        j["trial_reports"] = std::move(trial_reports);
        j["pass"] = all_pass;
        write_output(opt.out_path, j.dump(2));
    } else {
        os << "resolved " << passes << "/" << opt.trials << " adversarial oracles exactly";
        write_output(opt.out_path, os.str());
    }
    return all_pass ? kExitPass : kExitVerificationFailure;
}

int cmd_negative(const CommonOptions& opt, std::size_t seed_count) {
    const cga::LieAlgebra a = cga::LieAlgebra::conformal_galilei(cga::HalfInt::parse(opt.l_text));
    const cga::DerivationSpace ders = cga::DerivationSpace::compute(a);
    std::size_t detections = 0;
    std::ostringstream os;
    for (std::size_t s = 0; s < seed_count; ++s) {
        const std::uint64_t key = cga::mix_keys(opt.seed, s);
        const cga::PointwiseRandomOracle fake(ders, key);
        const auto probes = cga::default_probes(a, cga::mix_keys(key, 1));
        const cga::ResolveReport rep = cga::resolve_two_local(a, ders, fake, probes);
        if (!rep.resolved()) {
            ++detections;
        }
        if (!opt.json) {
            os << "seed " << s << ": " << (rep.resolved() ? "NOT DETECTED" : "flagged INCONSISTENT")
               << "\n";
        }
    }
    const bool pass = detections * 20 >= seed_count * 19;
    if (opt.json) {
        Json j;
        j["l"] = a.l()->str();
        j["trials"] = seed_count;
        j["detections"] = detections;
        j["pass"] = pass;
        write_output(opt.out_path, j.dump(2));
    } else {
        os << "flagged " << detections << "/" << seed_count << " pointwise-inconsistent oracles";
        write_output(opt.out_path, os.str());
    }
    return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_suite(cga::SuiteConfig cfg) {
    cfg.validate();
    const cga::SuiteReport report = cga::run_suite(cfg);
    const std::string body = cfg.format == cga::SuiteConfig::Format::Json
                                 ? cga::encode_suite_report(report)
                                 : cga::render_text(report);
    write_output(cfg.out_path, body);
    return report.overall_pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the conformal Galilei algebra g(l): structure constants,\n"
                 "derivation algebra, and resolution of 2-local derivations"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string matrix_path;
    std::string point_text = "h";
    std::size_t negative_seeds = 20;
    bool extended = false;
    std::vector<std::string> suite_l;
    std::uint64_t suite_trials = 0;  // 0 = keep default

    auto add_common = [&opt](CLI::App* cmd, bool with_seed, bool with_l = true) {
        if (with_l) {
            cmd->add_option("--l", opt.l_text, "half-integer l, e.g. 3/2")->capture_default_str();
        }
        cmd->add_flag("--json", opt.json, "emit canonical JSON");
        cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
        if (with_seed) {
            cmd->add_option("--seed", opt.seed, "seed for all randomized pieces")
                ->envname("CGA_SEED")
                ->capture_default_str();
        }
    };

    add_common(app.add_subcommand("info", "print the algebra: dimension, basis, bracket table"), false);
    add_common(app.add_subcommand("jacobi", "verify the Jacobi identity on all basis triples"), false);
    add_common(app.add_subcommand("derivations", "compute Der(g(l)) and its inner/outer split"), false);

    CLI::App* decompose = app.add_subcommand("decompose", "split a derivation as ad(x) + lambda delta");
    add_common(decompose, false);
    decompose->add_option("--matrix", matrix_path, "JSON matrix file (array of arrays of rationals)")
        ->required();

    CLI::App* stabilizer = app.add_subcommand("stabilizer", "derivations vanishing at a basis point");
    add_common(stabilizer, false);
    stabilizer->add_option("--point", point_text, "basis label: e, h, f, z or pK")->capture_default_str();

    CLI::App* resolve =
        app.add_subcommand("resolve", "recover planted derivations from adversarial 2-local oracles");
    add_common(resolve, true);
    resolve->add_option("--trials", opt.trials, "number of seeded trials")->capture_default_str();

    CLI::App* negative =
        app.add_subcommand("negative", "run pointwise-inconsistent fake oracles; expect detection");
    add_common(negative, true);
    negative->add_option("--seeds", negative_seeds, "number of seeded fake-oracle trials")
        ->capture_default_str();

    CLI::App* suite = app.add_subcommand("suite", "run every check across a range of l");
    add_common(suite, true, /*with_l=*/false);
    suite->add_flag("--extended", extended, "raise the l range from 9/2 to 21/2");
    suite->add_option("--trials", suite_trials, "resolver/negative trials per l (default 20)");
    suite->add_option("--l", suite_l, "restrict to these l values (repeatable; default 1/2..9/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        if (app.got_subcommand("info")) {
            return cmd_info(opt);
        }
        if (app.got_subcommand("jacobi")) {
            return cmd_jacobi(opt);
        }
        if (app.got_subcommand("derivations")) {
            return cmd_derivations(opt);
        }
        if (app.got_subcommand("decompose")) {
            return cmd_decompose(opt, matrix_path);
        }
        if (app.got_subcommand("stabilizer")) {
            return cmd_stabilizer(opt, point_text);
        }
        if (app.got_subcommand("resolve")) {
            return cmd_resolve(opt);
        }
        if (app.got_subcommand("negative")) {
            return cmd_negative(opt, negative_seeds);
        }
        if (app.got_subcommand("suite")) {
            cga::SuiteConfig cfg = extended ? cga::SuiteConfig::extended() : cga::SuiteConfig::defaults();
            if (!suite_l.empty()) {
                cfg.l_values.clear();
                for (const std::string& text : suite_l) {
                    cfg.l_values.push_back(cga::HalfInt::parse(text));
                }
            }
            if (suite->count("--seed") > 0 || std::getenv("CGA_SEED") != nullptr) {
                cfg.seeds = {opt.seed};
            }
            if (suite_trials > 0) {
                cfg.trials_per_l = suite_trials;
            }
            cfg.out_path = opt.out_path;
            cfg.format = opt.json ? cga::SuiteConfig::Format::Json : cga::SuiteConfig::Format::Text;
            return cmd_suite(std::move(cfg));
        }
    } catch (const cga::JsonParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const cga::StructureError& e) {
        std::cerr << "structural inconsistency: " << e.what() << "\n  " << e.detail() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsageError;
}
