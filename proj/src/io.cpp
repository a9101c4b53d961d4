#include "hombol/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hombol/errors.hpp"

namespace hombol {
namespace io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
    throw FormatError(origin + ": " + what);
}

json parse_json(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad(origin, "invalid JSON");
    return j;
}

Rational rational_field(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_string()) bad(origin, where + ": rationals must be strings");
    const std::string s = j.get<std::string>();
    if (!is_rational_literal(s)) bad(origin, where + ": malformed rational \"" + s + "\"");
    return parse_rational(s);
}

Index index_field(const json& j, Index dim, const std::string& origin, const std::string& where) {
    if (!j.is_number_integer()) bad(origin, where + ": indices must be integers");
    const long long v = j.get<long long>();
    if (v < 0 || v >= dim) bad(origin, where + ": index " + std::to_string(v) + " out of range");
    return static_cast<Index>(v);
}

Index basis_key(const std::string& key, Index dim, const std::string& origin, const std::string& where) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        bad(origin, where + ": basis keys must be decimal indices, got \"" + key + "\"");
    const long long v = std::stoll(key);
    if (v >= dim) bad(origin, where + ": basis index " + key + " out of range");
    return static_cast<Index>(v);
}

Mat matrix_field(const json& j, Index dim, const std::string& origin, const std::string& where) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(dim * dim))
        bad(origin, where + ": expected " + std::to_string(dim * dim) + " row-major entries");
    Mat m(dim, dim);
    for (Index r = 0; r < dim; ++r)
        for (Index c = 0; c < dim; ++c)
            m(r, c) = rational_field(j[static_cast<std::size_t>(r * dim + c)], origin,
                                     where + "[" + std::to_string(r * dim + c) + "]");
    return m;
}

}  // namespace

SuperAlgebra algebra_from_json_text(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    if (!j.is_object()) bad(origin, "top level must be an object");

    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        bad(origin, "missing integer \"dimension\"");
    const long long dim_ll = j["dimension"].get<long long>();
    if (dim_ll < 1 || dim_ll > 64) bad(origin, "dimension out of range");
    const Index dim = static_cast<Index>(dim_ll);

    if (!j.contains("degrees") || !j["degrees"].is_array() ||
        j["degrees"].size() != static_cast<std::size_t>(dim))
        bad(origin, "\"degrees\" must list one degree per basis element");
    std::vector<int> degrees;
    for (const json& d : j["degrees"]) {
        if (!d.is_number_integer() || (d.get<int>() != 0 && d.get<int>() != 1))
            bad(origin, "degrees must be 0 or 1");
        degrees.push_back(d.get<int>());
    }

    std::vector<std::string> labels;
    if (j.contains("basis_labels")) {
        if (!j["basis_labels"].is_array() || j["basis_labels"].size() != static_cast<std::size_t>(dim))
            bad(origin, "\"basis_labels\" must list one label per basis element");
        for (const json& l : j["basis_labels"]) {
            if (!l.is_string()) bad(origin, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    const std::string name = j.value("name", std::string("unnamed"));
    Grading grading(degrees, labels);
    SuperAlgebra a(name, grading);

    if (j.contains("binary")) {
        if (!j["binary"].is_array()) bad(origin, "\"binary\" must be an array");
        BinaryStructure b(grading);
        for (const json& entry : j["binary"]) {
            if (!entry.is_object() || !entry.contains("args") || !entry.contains("value") ||
                !entry["args"].is_array() || entry["args"].size() != 2)
                bad(origin, "binary entries need \"args\" [i,j] and \"value\"");
            const Index i = index_field(entry["args"][0], dim, origin, "binary args");
            const Index jj = index_field(entry["args"][1], dim, origin, "binary args");
            if (!entry["value"].is_object()) bad(origin, "binary value must map basis index to rational");
            for (const auto& [key, val] : entry["value"].items()) {
                const Index k = basis_key(key, dim, origin, "binary value");
                b.set(i, jj, k, rational_field(val, origin, "binary value"));
            }
        }
        a.set_binary(std::move(b));
    }

    if (j.contains("ternary")) {
        if (!j["ternary"].is_array()) bad(origin, "\"ternary\" must be an array");
        TernaryStructure t(grading);
        for (const json& entry : j["ternary"]) {
            if (!entry.is_object() || !entry.contains("args") || !entry.contains("value") ||
                !entry["args"].is_array() || entry["args"].size() != 3)
                bad(origin, "ternary entries need \"args\" [i,j,l] and \"value\"");
            const Index i = index_field(entry["args"][0], dim, origin, "ternary args");
            const Index jj = index_field(entry["args"][1], dim, origin, "ternary args");
            const Index l = index_field(entry["args"][2], dim, origin, "ternary args");
            if (!entry["value"].is_object()) bad(origin, "ternary value must map basis index to rational");
            for (const auto& [key, val] : entry["value"].items()) {
                const Index k = basis_key(key, dim, origin, "ternary value");
                t.set(i, jj, l, k, rational_field(val, origin, "ternary value"));
            }
        }
        a.set_ternary(std::move(t));
    }

    if (j.contains("alpha")) {
        const Mat alpha = matrix_field(j["alpha"], dim, origin, "alpha");
        if (!is_even(alpha, grading)) bad(origin, "alpha is not an even map for the given degrees");
        a.set_twist(alpha);
    }

    const CheckReport compat = check_grading_compat(a);
    if (!compat.pass()) {
        for (const AxiomVerdict& v : compat.verdicts) {
            if (v.pass()) continue;
            const std::vector<Index>& t = v.counterexamples.front().tuple;
            std::string at;
            for (std::size_t p = 0; p < t.size(); ++p) at += (p ? "," : "") + grading.label(t[p]);
            bad(origin, "products violate the grading (" + v.axiom + " at (" + at + "))");
        }
    }
    return a;
}

namespace {

json sparse_binary(const BinaryStructure& b) {
    json out = json::array();
    for (Index i = 0; i < b.dim(); ++i)
        for (Index j = 0; j < b.dim(); ++j) {
            json value = json::object();
            for (Index k = 0; k < b.dim(); ++k)
                if (b.c(i, j, k) != 0) value[std::to_string(k)] = to_string(b.c(i, j, k));
            if (!value.empty()) out.push_back({{"args", {i, j}}, {"value", value}});
        }
    return out;
}

json sparse_ternary(const TernaryStructure& t) {
    json out = json::array();
    for (Index i = 0; i < t.dim(); ++i)
        for (Index j = 0; j < t.dim(); ++j)
            for (Index l = 0; l < t.dim(); ++l) {
                json value = json::object();
                for (Index k = 0; k < t.dim(); ++k)
                    if (t.t(i, j, l, k) != 0) value[std::to_string(k)] = to_string(t.t(i, j, l, k));
                if (!value.empty()) out.push_back({{"args", {i, j, l}}, {"value", value}});
            }
    return out;
}

}  // namespace

std::string algebra_to_json_text(const SuperAlgebra& a) {
    json j;
    j["name"] = a.name();
    j["dimension"] = a.dim();
    j["degrees"] = a.grading().degrees();
    if (a.grading().has_labels()) j["basis_labels"] = a.grading().labels();
    if (a.has_binary()) j["binary"] = sparse_binary(a.binary());
    if (a.has_ternary()) j["ternary"] = sparse_ternary(a.ternary());
    if (a.has_twist()) {
        const Mat alpha = a.twist();
        json rows = json::array();
        for (Index r = 0; r < a.dim(); ++r)
            for (Index c = 0; c < a.dim(); ++c) rows.push_back(to_string(alpha(r, c)));
        j["alpha"] = rows;
    }
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write file: " + path);
    out << content;
    if (!out) throw FormatError("write failed: " + path);
}

SuperAlgebra load_algebra(const std::string& path) {
    return algebra_from_json_text(read_file(path), path);
}

void save_algebra(const SuperAlgebra& a, const std::string& path) {
    write_file(path, algebra_to_json_text(a));
}

Mat morphism_from_json_text(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    if (!j.is_object()) bad(origin, "top level must be an object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        bad(origin, "missing integer \"dimension\"");
    const Index dim = static_cast<Index>(j["dimension"].get<long long>());
    if (dim < 1 || dim > 64) bad(origin, "dimension out of range");
    if (!j.contains("matrix")) bad(origin, "missing \"matrix\"");
    return matrix_field(j["matrix"], dim, origin, "matrix");
}

std::string morphism_to_json_text(const Mat& m, const std::string& name,
                                  const std::vector<int>* degrees) {
    json j;
    j["name"] = name;
    j["dimension"] = m.rows();
    if (degrees) j["degrees"] = *degrees;
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) rows.push_back(to_string(m(r, c)));
    j["matrix"] = rows;
    return j.dump(2) + "\n";
}

Mat load_morphism(const std::string& path) {
    return morphism_from_json_text(read_file(path), path);
}

void save_morphism(const Mat& m, const std::string& name, const std::string& path,
                   const std::vector<int>* degrees) {
    write_file(path, morphism_to_json_text(m, name, degrees));
}

namespace {

std::string tuple_labels(const std::vector<Index>& tuple, const Grading& g) {
    std::string out = "(";
    for (std::size_t p = 0; p < tuple.size(); ++p) out += (p ? "," : "") + g.label(tuple[p]);
    return out + ")";
}

std::string residual_combo(const Vec& r, const Grading& g) {
    std::string out;
    for (Index k = 0; k < r.size(); ++k) {
        if (r[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += to_string(r[k]) + "*" + g.label(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string report_to_json_text(const CheckReport& report, const Grading& grading) {
    json j;
    j["suite"] = report.suite;
    j["algebra"] = report.algebra;
    j["pass"] = report.pass();
    json axioms = json::array();
    for (const AxiomVerdict& v : report.verdicts) {
        json axiom;
        axiom["id"] = v.axiom;
        axiom["pass"] = v.pass();
        json ces = json::array();
        for (const Counterexample& c : v.counterexamples) {
            json ce;
            json tuple = json::array();
            for (Index t : c.tuple) tuple.push_back(grading.label(t));
            ce["tuple"] = tuple;
            json residual = json::array();
            for (Index k = 0; k < c.residual.size(); ++k) residual.push_back(to_string(c.residual[k]));
            ce["residual"] = residual;
            ces.push_back(ce);
        }
        axiom["counterexamples"] = ces;
        axioms.push_back(axiom);
    }
    j["axioms"] = axioms;
    return j.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report, const Grading& grading) {
    std::ostringstream out;
    out << "suite " << report.suite << " on " << report.algebra << "\n";
    for (const AxiomVerdict& v : report.verdicts) {
        if (v.pass()) {
            out << "  PASS " << v.axiom << "\n";
            continue;
        }
        out << "  FAIL " << v.axiom << " (" << v.counterexamples.size() << " counterexample"
            << (v.counterexamples.size() == 1 ? "" : "s") << ")\n";
        const std::size_t shown = std::min<std::size_t>(v.counterexamples.size(), 8);
        for (std::size_t i = 0; i < shown; ++i) {
            const Counterexample& c = v.counterexamples[i];
            out << "       at " << tuple_labels(c.tuple, grading) << ": residual "
                << residual_combo(c.residual, grading) << "\n";
        }
        if (shown < v.counterexamples.size())
            out << "       ... and " << v.counterexamples.size() - shown << " more\n";
    }
    out << (report.pass() ? "overall: PASS" : "overall: FAIL") << "\n";
    return out.str();
}

}  // namespace io
}  // namespace hombol
