#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hombol/acceptance.hpp"
#include "hombol/constructions.hpp"
#include "hombol/dsl/eval.hpp"
#include "hombol/errors.hpp"
#include "hombol/fixtures.hpp"
#include "hombol/identities.hpp"
#include "hombol/io.hpp"
#include "hombol/products.hpp"

namespace {

using namespace hombol;

// 0: overall pass. 1: an axiom failed or a construction hypothesis is
// violated. 2: usage, file format or validation problems.
constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

SuperAlgebra load_scaled(const std::string& path, const std::string& scale) {
    SuperAlgebra a = io::load_algebra(path);
    const Rational lambda = parse_rational(scale);
    if (lambda == 0) throw InvalidParam("--scale must be nonzero");
    if (lambda == 1) return a;
    SuperAlgebra out = a;
    if (a.has_binary()) out.set_binary(scaled(a.binary(), lambda));
    if (a.has_ternary()) out.set_ternary(scaled(a.ternary(), lambda * lambda));
    return out;
}

CheckReport dispatch_suite(const SuperAlgebra& a, const std::string& suite) {
    if (suite == "right-alt") return check_right_hom_alternative(a);
    if (suite == "left-alt") return check_left_hom_alternative(a);
    if (suite == "alt") return check_hom_alternative(a);
    if (suite == "bol") return check_bol_super(a);
    if (suite == "hom-bol") return check_hom_bol_super(a);
    if (suite == "lsts") return check_lie_supertriple(a);
    if (suite == "hlsts") return check_hom_lie_supertriple(a);
    if (suite == "supercomm") return check_supercommutative(a);
    if (suite == "multiplicative") return check_multiplicative(a);
    if (suite == "grading") return check_grading_compat(a);
    throw InvalidParam("unknown suite \"" + suite +
                       "\" (expected right-alt, left-alt, alt, bol, hom-bol, lsts, hlsts, "
                       "supercomm, multiplicative or grading)");
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const std::string& kv : kvs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidParam("--param expects key=value, got \"" + kv + "\"");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

JordanSign parse_jordan_sign(const std::string& s) {
    if (s == "minus") return JordanSign::minus;
    if (s == "plus") return JordanSign::plus;
    throw InvalidParam("--jordan-sign must be minus or plus");
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact structure-constant computations for Z2-graded algebras:\n"
        "axiom suites, derived bracket/triple structures, twistings and a\n"
        "small identity language."};
    app.require_subcommand(1);

    // check
    auto* cmd_check = app.add_subcommand("check", "Run an axiom suite or an identity file");
    std::string check_file, check_suite, check_dsl, check_scale = "1";
    bool check_json = false;
    cmd_check->add_option("--file", check_file, "algebra file (JSON)")->required();
    cmd_check->add_option("--suite", check_suite, "built-in suite name");
    cmd_check->add_option("--dsl", check_dsl, "identity file (.idl)");
    cmd_check->add_option("--scale", check_scale, "rescale products by (lambda, lambda^2)");
    cmd_check->add_flag("--json", check_json, "machine-readable report");

    // construct bol
    auto* cmd_construct = app.add_subcommand("construct", "Run a construction");
    auto* construct_bol = cmd_construct->add_subcommand(
        "bol", "bracket/triple structure of a right alternative algebra");
    std::string cb_file, cb_out, cb_scale = "1", cb_sign = "minus";
    construct_bol->add_option("--file", cb_file, "input algebra file")->required();
    construct_bol->add_option("--out", cb_out, "output algebra file")->required();
    construct_bol->add_option("--scale", cb_scale, "bracket scale lambda");
    construct_bol->add_option("--jordan-sign", cb_sign,
                              "sign inside the Jordan associator (minus|plus); plus does not "
                              "reproduce the published tables");
    cmd_construct->require_subcommand(1);

    // twist yau|power
    auto* cmd_twist = app.add_subcommand("twist", "Twist along a self-morphism");
    std::string ty_file, ty_morphism, ty_out;
    auto* twist_yau = cmd_twist->add_subcommand("yau", "compose products with the morphism");
    twist_yau->add_option("--file", ty_file, "input algebra file")->required();
    twist_yau->add_option("--morphism", ty_morphism, "morphism file")->required();
    twist_yau->add_option("--out", ty_out, "output algebra file")->required();
    std::string tp_file, tp_morphism, tp_out;
    int tp_n = 1;
    auto* twist_power = cmd_twist->add_subcommand("power", "compose with the n-th power");
    twist_power->add_option("--file", tp_file, "input algebra file")->required();
    twist_power->add_option("--morphism", tp_morphism, "morphism file")->required();
    twist_power->add_option("-n", tp_n, "power (default 1)")->check(CLI::NonNegativeNumber);
    twist_power->add_option("--out", tp_out, "output algebra file")->required();
    cmd_twist->require_subcommand(1);

    // derive
    auto* cmd_derive = app.add_subcommand("derive", "n-th derived structure");
    std::string dv_file, dv_out;
    int dv_n = 0;
    cmd_derive->add_option("-n", dv_n, "derivation level")->required()->check(CLI::NonNegativeNumber);
    cmd_derive->add_option("--file", dv_file, "input algebra file")->required();
    cmd_derive->add_option("--out", dv_out, "output algebra file")->required();

    // fixture list | emit
    auto* cmd_fixture = app.add_subcommand("fixture", "Built-in example algebras");
    auto* fixture_list = cmd_fixture->add_subcommand("list", "list fixture names");
    auto* fixture_emit = cmd_fixture->add_subcommand("emit", "write a fixture");
    std::string fe_name, fe_out;
    std::vector<std::string> fe_params;
    fixture_emit->add_option("name", fe_name, "fixture name")->required();
    fixture_emit->add_option("--param", fe_params, "fixture parameter key=value (a, b, degrees)");
    fixture_emit->add_option("--out", fe_out, "output file (stdout when omitted)");
    cmd_fixture->require_subcommand(1);

    // verify-paper
    auto* cmd_verify = app.add_subcommand(
        "verify-paper", "Reproduce every published table and closure property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_check->parsed()) {
        if (check_suite.empty() == check_dsl.empty())
            throw InvalidParam("check needs exactly one of --suite or --dsl");
        const SuperAlgebra a = load_scaled(check_file, check_scale);
        CheckReport report;
        if (!check_suite.empty()) {
            report = dispatch_suite(a, check_suite);
        } else {
            std::string suite = check_dsl;
            if (const std::size_t slash = suite.find_last_of('/'); slash != std::string::npos)
                suite = suite.substr(slash + 1);
            report = dsl::check_axioms(a, dsl::load_axiom_file(check_dsl), suite);
        }
        std::cout << (check_json ? io::report_to_json_text(report, a.grading())
                                 : io::report_to_text(report, a.grading()));
        return report.pass() ? kExitPass : kExitMathFail;
    }

    if (cmd_construct->parsed()) {
        const SuperAlgebra a = io::load_algebra(cb_file);
        const SuperAlgebra out = bol_from_right_alternative(
            a, ScaleConvention(parse_rational(cb_scale)), parse_jordan_sign(cb_sign));
        io::save_algebra(out, cb_out);
        std::cout << "wrote " << cb_out << "\n";
        return kExitPass;
    }

    if (twist_yau->parsed()) {
        const SuperAlgebra a = io::load_algebra(ty_file);
        const Mat beta = io::load_morphism(ty_morphism);
        const SuperAlgebra out =
            a.has_ternary() ? yau_twist_bts(a, beta) : yau_twist_binary(a, beta);
        io::save_algebra(out, ty_out);
        std::cout << "wrote " << ty_out << "\n";
        return kExitPass;
    }

    if (twist_power->parsed()) {
        const SuperAlgebra a = io::load_algebra(tp_file);
        const Mat beta = io::load_morphism(tp_morphism);
        const SuperAlgebra out = beta_n_twist(a, beta, static_cast<unsigned>(tp_n));
        io::save_algebra(out, tp_out);
        std::cout << "wrote " << tp_out << "\n";
        return kExitPass;
    }

    if (cmd_derive->parsed()) {
        const SuperAlgebra a = io::load_algebra(dv_file);
        io::save_algebra(nth_derived(a, static_cast<unsigned>(dv_n)), dv_out);
        std::cout << "wrote " << dv_out << "\n";
        return kExitPass;
    }

    if (fixture_list->parsed()) {
        for (const std::string& name : fixtures::catalogue()) std::cout << name << "\n";
        return kExitPass;
    }

    if (fixture_emit->parsed()) {
        const std::map<std::string, std::string> params = parse_params(fe_params);
        std::string text;
        if (fixtures::is_morphism_fixture(fe_name)) {
            const Mat m = fixtures::make_morphism(fe_name, params);
            const std::vector<int> degrees = {0, 1, 1};
            text = io::morphism_to_json_text(m, fe_name, &degrees);
        } else {
            text = io::algebra_to_json_text(fixtures::make(fe_name, params));
        }
        if (fe_out.empty())
            std::cout << text;
        else
            io::write_file(fe_out, text);
        return kExitPass;
    }

    if (cmd_verify->parsed()) {
        return print_regression(run_paper_regression(), std::cout);
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hombol::HypothesisError& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const hombol::ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what()
                  << " (expected " << e.expected << ")\n";
        return kExitUsage;
    } catch (const hombol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
