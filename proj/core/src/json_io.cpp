#include "cga/json_io.hpp"

#include <json.hpp>

#include <utility>

namespace cga {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2); }

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonParseError(e.what(), "byte " + std::to_string(e.byte));
    }
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) {
        throw JsonParseError("expected an object", path);
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw JsonParseError(std::string("missing key \"") + key + "\"", path);
    }
    return *it;
}

Rational rational_at(const Json& j, const std::string& path) {
    if (!j.is_string()) {
        throw JsonParseError("expected a rational string", path);
    }
    try {
        return Rational::parse(j.get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
        throw JsonParseError(e.what(), path);
    }
}

std::size_t index_at(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) {
        throw JsonParseError("expected a non-negative integer", path);
    }
    return j.get<std::size_t>();
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) {
        throw JsonParseError("expected an array of rows", path);
    }
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        const std::string row_path = path + "/" + std::to_string(i);
        if (!row.is_array() || row.size() != cols) {
            throw JsonParseError("ragged or non-array matrix row", row_path);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = rational_at(row[c], row_path + "/" + std::to_string(c));
        }
    }
    return m;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rational& r : v) {
        out.push_back(r.str());
    }
    return out;
}

Vec vec_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) {
        throw JsonParseError("expected an array of rationals", path);
    }
    Vec out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(rational_at(j[i], path + "/" + std::to_string(i)));
    }
    return out;
}

Json subspace_to_json(const Subspace& s) {
    Json out = Json::object();
    out["ambient_dim"] = s.ambient_dim();
    out["dim"] = s.dim();
    Json basis = Json::array();
    for (const Vec& row : s.basis()) {
        basis.push_back(vec_to_json(row));
    }
    out["basis"] = std::move(basis);
    return out;
}

Subspace subspace_from_json(const Json& j, const std::string& path) {
    const std::size_t ambient = index_at(member(j, "ambient_dim", path), path + "/ambient_dim");
    const Json& basis = member(j, "basis", path);
    if (!basis.is_array()) {
        throw JsonParseError("expected an array of basis vectors", path + "/basis");
    }
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        rows.push_back(vec_from_json(basis[i], path + "/basis/" + std::to_string(i)));
    }
    Subspace s = Subspace::span_of(ambient, rows);
    if (s.basis() != rows) {
        throw JsonParseError("basis rows are not a canonical (RREF) subspace basis", path + "/basis");
    }
    if (j.contains("dim") && index_at(j["dim"], path + "/dim") != s.dim()) {
        throw JsonParseError("declared dim does not match basis row count", path + "/dim");
    }
    return s;
}

Json element_to_json(const Element& x) { return vec_to_json(x.coords()); }

Element element_from_json(const Json& j, const LieAlgebra& a, const std::string& path) {
    Vec coords = vec_from_json(j, path);
    if (coords.size() != a.dim()) {
        throw JsonParseError("element length does not match algebra dimension", path);
    }
    return a.element(std::move(coords));
}

Json algebra_to_json(const LieAlgebra& a) {
    Json out = Json::object();
    if (a.l()) {
        out["l"] = a.l()->str();
    }
    out["dim"] = a.dim();
    Json basis = Json::array();
    for (const BasisLabel& label : a.basis()) {
        basis.push_back(label.str());
    }
    out["basis"] = std::move(basis);
    Json brackets = Json::array();
    for (const auto& [key, coeffs] : a.brackets()) {
        Json entry = Json::object();
        entry["i"] = key.first;
        entry["j"] = key.second;
        Json cj = Json::object();
        for (const auto& [target, v] : coeffs) {
            cj[std::to_string(target)] = v.str();
        }
        entry["coeffs"] = std::move(cj);
        brackets.push_back(std::move(entry));
    }
    out["brackets"] = std::move(brackets);
    return out;
}

LieAlgebra algebra_from_json(const Json& j, const std::string& path) {
    const Json& basis_json = member(j, "basis", path);
    if (!basis_json.is_array()) {
        throw JsonParseError("expected an array of basis labels", path + "/basis");
    }
    std::vector<BasisLabel> basis;
    for (std::size_t i = 0; i < basis_json.size(); ++i) {
        const std::string label_path = path + "/basis/" + std::to_string(i);
        if (!basis_json[i].is_string()) {
            throw JsonParseError("expected a basis label string", label_path);
        }
        try {
            basis.push_back(BasisLabel::parse(basis_json[i].get_ref<const std::string&>()));
        } catch (const std::invalid_argument& e) {
            throw JsonParseError(e.what(), label_path);
        }
    }
    if (index_at(member(j, "dim", path), path + "/dim") != basis.size()) {
        throw JsonParseError("declared dim does not match basis length", path + "/dim");
    }

    LieAlgebra::BracketTable table;
    const Json& brackets = member(j, "brackets", path);
    if (!brackets.is_array()) {
        throw JsonParseError("expected an array of bracket entries", path + "/brackets");
    }
    for (std::size_t n = 0; n < brackets.size(); ++n) {
        const std::string entry_path = path + "/brackets/" + std::to_string(n);
        const Json& entry = brackets[n];
        const std::size_t i = index_at(member(entry, "i", entry_path), entry_path + "/i");
        const std::size_t jj = index_at(member(entry, "j", entry_path), entry_path + "/j");
        const Json& coeffs = member(entry, "coeffs", entry_path);
        if (!coeffs.is_object()) {
            throw JsonParseError("expected a coefficient object", entry_path + "/coeffs");
        }
        LieAlgebra::SparseVec sparse;
        for (const auto& [key, value] : coeffs.items()) {
            std::size_t target = 0;
            try {
                target = std::stoul(key);
            } catch (const std::exception&) {
                throw JsonParseError("coefficient key is not an index", entry_path + "/coeffs/" + key);
            }
            sparse[target] = rational_at(value, entry_path + "/coeffs/" + key);
        }
        table[{i, jj}] = std::move(sparse);
    }

    LieAlgebra generic = [&] {
        try {
            return LieAlgebra::from_table(std::move(basis), std::move(table));
        } catch (const std::invalid_argument& e) {
            throw JsonParseError(e.what(), path + "/brackets");
        }
    }();

    if (!j.contains("l")) {
        return generic;
    }
    const Json& lj = j["l"];
    if (!lj.is_string()) {
        throw JsonParseError("expected l as a string like \"3/2\"", path + "/l");
    }
    HalfInt l = [&] {
        try {
            return HalfInt::parse(lj.get_ref<const std::string&>());
        } catch (const std::invalid_argument& e) {
            throw JsonParseError(e.what(), path + "/l");
        }
    }();
    LieAlgebra canonical = LieAlgebra::conformal_galilei(l);
    if (canonical.basis() != generic.basis() || !(canonical.brackets() == generic.brackets())) {
        throw JsonParseError("bracket table does not match the conformal Galilei algebra for this l",
                             path);
    }
    return canonical;
}

Json resolve_report_to_json(const ResolveReport& r) {
    Json out = Json::object();
    out["verdict"] = r.resolved() ? "RESOLVED" : "INCONSISTENT";
    out["lambda_z"] = r.lambda_z.str();
    out["probes_checked"] = r.probes_checked;
    Json mism = Json::array();
    for (const ResolveMismatch& m : r.mismatches) {
        Json entry = Json::object();
        entry["point"] = element_to_json(m.point);
        entry["expected"] = element_to_json(m.expected);
        entry["got"] = element_to_json(m.got);
        mism.push_back(std::move(entry));
    }
    out["mismatches"] = std::move(mism);
    out["recovered"] = matrix_to_json(r.recovered);
    return out;
}

ResolveReport resolve_report_from_json(const Json& j, const LieAlgebra& a, const std::string& path) {
    ResolveReport r{RationalMatrix(), Rational(0), 0, {}, ResolveVerdict::Inconsistent};
    const Json& verdict = member(j, "verdict", path);
    if (!verdict.is_string()) {
        throw JsonParseError("expected a verdict string", path + "/verdict");
    }
    const std::string& v = verdict.get_ref<const std::string&>();
    if (v == "RESOLVED") {
        r.verdict = ResolveVerdict::Resolved;
    } else if (v == "INCONSISTENT") {
        r.verdict = ResolveVerdict::Inconsistent;
    } else {
        throw JsonParseError("unknown verdict \"" + v + "\"", path + "/verdict");
    }
    r.lambda_z = rational_at(member(j, "lambda_z", path), path + "/lambda_z");
    r.probes_checked = index_at(member(j, "probes_checked", path), path + "/probes_checked");
    const Json& mism = member(j, "mismatches", path);
    if (!mism.is_array()) {
        throw JsonParseError("expected an array of mismatches", path + "/mismatches");
    }
    for (std::size_t i = 0; i < mism.size(); ++i) {
        const std::string mp = path + "/mismatches/" + std::to_string(i);
        r.mismatches.push_back(ResolveMismatch{
            element_from_json(member(mism[i], "point", mp), a, mp + "/point"),
            element_from_json(member(mism[i], "expected", mp), a, mp + "/expected"),
            element_from_json(member(mism[i], "got", mp), a, mp + "/got"),
        });
    }
    r.recovered = matrix_from_json(member(j, "recovered", path), path + "/recovered");
    if (r.recovered.rows() != a.dim() || r.recovered.cols() != a.dim()) {
        throw JsonParseError("recovered matrix shape does not match algebra dimension",
                             path + "/recovered");
    }
    return r;
}

Json suite_block_to_json(const SuiteBlock& b) {
    Json out = Json::object();
    out["l"] = b.l_label;
    out["jacobi"] = b.jacobi;
    out["completed"] = b.completed;
    out["dim_der"] = b.dim_der;
    out["outer_dim"] = b.outer_dim;
    out["direct_sum"] = b.direct_sum;
    Json stab = Json::object();
    stab["h"] = b.stabilizer_dims.h;
    stab["e"] = b.stabilizer_dims.e;
    stab["f"] = b.stabilizer_dims.f;
    stab["z"] = b.stabilizer_dims.z;
    out["stabilizer_dims"] = std::move(stab);
    out["stabilizers_exact"] = b.stabilizers_exact;
    Json resolver = Json::object();
    resolver["trials"] = b.resolver_trials;
    resolver["passes"] = b.resolver_passes;
    out["resolver"] = std::move(resolver);
    Json negative = Json::object();
    negative["trials"] = b.negative_trials;
    negative["detections"] = b.negative_detections;
    out["negative"] = std::move(negative);
    out["pass"] = b.pass();
    return out;
}

SuiteBlock suite_block_from_json(const Json& j, const std::string& path) {
    SuiteBlock b;
    const Json& l = member(j, "l", path);
    if (!l.is_string()) {
        throw JsonParseError("expected l label string", path + "/l");
    }
    b.l_label = l.get_ref<const std::string&>();
    try {
        b.l_twice = HalfInt::parse(b.l_label).twice();
    } catch (const std::invalid_argument&) {
        b.l_twice = 0;
    }
    auto flag = [&](const char* key) {
        const Json& v = member(j, key, path);
        if (!v.is_boolean()) {
            throw JsonParseError(std::string("expected a boolean \"") + key + "\"", path);
        }
        return v.get<bool>();
    };
    b.jacobi = flag("jacobi");
    b.completed = flag("completed");
    b.dim_der = index_at(member(j, "dim_der", path), path + "/dim_der");
    b.outer_dim = index_at(member(j, "outer_dim", path), path + "/outer_dim");
    b.direct_sum = flag("direct_sum");
    const Json& stab = member(j, "stabilizer_dims", path);
    b.stabilizer_dims.h = index_at(member(stab, "h", path), path + "/stabilizer_dims/h");
    b.stabilizer_dims.e = index_at(member(stab, "e", path), path + "/stabilizer_dims/e");
    b.stabilizer_dims.f = index_at(member(stab, "f", path), path + "/stabilizer_dims/f");
    b.stabilizer_dims.z = index_at(member(stab, "z", path), path + "/stabilizer_dims/z");
    b.stabilizers_exact = flag("stabilizers_exact");
    const Json& resolver = member(j, "resolver", path);
    b.resolver_trials = index_at(member(resolver, "trials", path), path + "/resolver/trials");
    b.resolver_passes = index_at(member(resolver, "passes", path), path + "/resolver/passes");
    const Json& negative = member(j, "negative", path);
    b.negative_trials = index_at(member(negative, "trials", path), path + "/negative/trials");
    b.negative_detections =
        index_at(member(negative, "detections", path), path + "/negative/detections");
    return b;
}

}  // namespace

std::string encode_matrix(const RationalMatrix& m) { return dump(matrix_to_json(m)); }

RationalMatrix decode_matrix(std::string_view text) { return matrix_from_json(parse_text(text), ""); }

std::string encode_subspace(const Subspace& s) { return dump(subspace_to_json(s)); }

Subspace decode_subspace(std::string_view text) { return subspace_from_json(parse_text(text), ""); }

std::string encode_algebra(const LieAlgebra& a) { return dump(algebra_to_json(a)); }

LieAlgebra decode_algebra(std::string_view text) { return algebra_from_json(parse_text(text), ""); }

std::string encode_resolve_report(const ResolveReport& r) { return dump(resolve_report_to_json(r)); }

ResolveReport decode_resolve_report(std::string_view text, const LieAlgebra& a) {
    return resolve_report_from_json(parse_text(text), a, "");
}

std::string encode_suite_report(const SuiteReport& r) {
    Json out = Json::object();
    Json blocks = Json::array();
    for (const SuiteBlock& b : r.blocks) {
        blocks.push_back(suite_block_to_json(b));
    }
    out["blocks"] = std::move(blocks);
    out["overall"] = r.overall_pass() ? "PASS" : "FAIL";
    return dump(out);
}

SuiteReport decode_suite_report(std::string_view text) {
    const Json j = parse_text(text);
    SuiteReport r;
    const Json& blocks = member(j, "blocks", "");
    if (!blocks.is_array()) {
        throw JsonParseError("expected an array of blocks", "/blocks");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        r.blocks.push_back(suite_block_from_json(blocks[i], "/blocks/" + std::to_string(i)));
    }
    return r;
}

std::string encode_derivation_summary(const DerivationSpace& ders) {
    Json out = Json::object();
    out["dim_der"] = ders.dim();
    out["outer_dim"] = ders.outer_dimension();
    out["delta"] = matrix_to_json(ders.delta());
    Json ads = Json::array();
    for (const RationalMatrix& m : ders.ad_basis()) {
        ads.push_back(matrix_to_json(m));
    }
    out["ad_basis"] = std::move(ads);
    out["direct_sum"] = true;  // construction verifies the split or throws
    return dump(out);
}

}  // namespace cga
