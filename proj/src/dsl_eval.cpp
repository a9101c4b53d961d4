#include "hombol/dsl/eval.hpp"

#include <utility>

#include "hombol/errors.hpp"
#include "hombol/linear_map.hpp"

namespace hombol {
namespace dsl {

namespace {

struct EvalContext {
    const SuperAlgebra& algebra;
    const Binding& binding;
    std::map<unsigned, Mat> twist_powers;
    std::vector<Vec> basis;

    EvalContext(const SuperAlgebra& a, const Binding& b) : algebra(a), binding(b) {
        for (Index i = 0; i < a.dim(); ++i) basis.push_back(a.grading().basis(i));
    }

    const Mat& twist_power(unsigned p) {
        auto it = twist_powers.find(p);
        if (it == twist_powers.end())
            it = twist_powers.emplace(p, map_power(algebra.twist(), p)).first;
        return it->second;
    }
};

Vec eval(const ExprPtr& e, EvalContext& ctx) {
    return std::visit(
        [&](const auto& n) -> Vec {
            using T = std::decay_t<decltype(n)>;
            const SuperAlgebra& a = ctx.algebra;
            if constexpr (std::is_same_v<T, Var>) {
                auto it = ctx.binding.find(n.name);
                if (it == ctx.binding.end())
                    throw Error("unbound variable \"" + n.name + "\"");
                return ctx.basis[static_cast<std::size_t>(it->second)];
            } else if constexpr (std::is_same_v<T, Zero>) {
                return Vec::Zero(a.dim());
            } else if constexpr (std::is_same_v<T, Twist>) {
                return ctx.twist_power(n.power) * eval(n.arg, ctx);
            } else if constexpr (std::is_same_v<T, Bracket>) {
                if (!a.has_binary())
                    throw MissingOperation("identity uses a bracket but the algebra has no binary product");
                return a.binary().eval(eval(n.lhs, ctx), eval(n.rhs, ctx));
            } else if constexpr (std::is_same_v<T, Triple>) {
                if (!a.has_ternary())
                    throw MissingOperation("identity uses a triple but the algebra has no ternary product");
                return a.ternary().eval(eval(n.first, ctx), eval(n.second, ctx), eval(n.third, ctx));
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return n.coeff * eval(n.arg, ctx);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                long exponent = 0;
                for (const DegMonomial& mono : n.exponent.monomials) {
                    long value = 1;
                    for (const std::string& v : mono) {
                        auto it = ctx.binding.find(v);
                        if (it == ctx.binding.end())
                            throw Error("unbound degree symbol |" + v + "|");
                        value *= a.grading().degree(it->second);
                    }
                    exponent += value;
                }
                return parity_sign(exponent) * eval(n.arg, ctx);
            } else {
                Vec out = Vec::Zero(a.dim());
                for (const SignedTerm& t : n.terms) {
                    if (t.sign > 0)
                        out += eval(t.term, ctx);
                    else
                        out -= eval(t.term, ctx);
                }
                return out;
            }
        },
        e->node);
}

void require_operations(const Identity& id, const SuperAlgebra& a) {
    const ExprNeeds needs = operations_used(id);
    if (needs.bracket && !a.has_binary())
        throw MissingOperation("identity uses a bracket but the algebra has no binary product");
    if (needs.triple && !a.has_ternary())
        throw MissingOperation("identity uses a triple but the algebra has no ternary product");
}

}  // namespace

Vec evaluate_identity(const Identity& id, const SuperAlgebra& a, const Binding& binding) {
    require_operations(id, a);
    EvalContext ctx(a, binding);
    return Vec(eval(id.lhs, ctx) - eval(id.rhs, ctx));
}

CheckReport check_identity(const SuperAlgebra& a, const NamedIdentity& axiom) {
    return check_axioms(a, {axiom}, "dsl");
}

CheckReport check_axioms(const SuperAlgebra& a, const std::vector<NamedIdentity>& axioms,
                         std::string suite) {
    CheckReport report{std::move(suite), a.name(), {}};
    const Index n = a.dim();
    for (const NamedIdentity& named : axioms) {
        require_operations(named.identity, a);
        const std::vector<std::string> vars = variables(named.identity);
        AxiomVerdict verdict{named.id, {}};
        std::vector<Index> tuple(vars.size(), 0);
        bool done = vars.empty();
        Binding binding;
        EvalContext ctx(a, binding);
        // Same enumeration as the hard-coded suites: lexicographic with
        // the first variable slowest.
        while (!done) {
            for (std::size_t p = 0; p < vars.size(); ++p) binding[vars[p]] = tuple[p];
            Vec residual = eval(named.identity.lhs, ctx) - eval(named.identity.rhs, ctx);
            if (!is_zero(residual)) verdict.counterexamples.push_back({tuple, std::move(residual)});
            done = true;
            for (std::size_t p = tuple.size(); p-- > 0;) {
                if (++tuple[p] < n) {
                    done = false;
                    break;
                }
                tuple[p] = 0;
            }
        }
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

namespace {

struct BuiltinSuite {
    const char* name;
    const char* text;
};

// Kept in sync with the .idl files under data/; a test asserts equality.
const BuiltinSuite kBuiltins[] = {
    {"right-alt",
     "# Right alternativity of the binary product, in both equivalent forms.\n"
     "# The bracket symbol denotes the algebra's binary product; a(...) is the\n"
     "# stored twisting map.\n"
     "RALT-2.1: [[x,y], a(z)] - [a(x), [y,z]] == 0 - (-1)^(|y|*|z|) * ([[x,z], a(y)] - [a(x), "
     "[z,y]])\n"
     "RALT-2.2: [a(x), [y,z] + (-1)^(|y|*|z|) * [z,y]] == [[x,y], a(z)] + (-1)^(|y|*|z|) * [[x,z], "
     "a(y)]\n"},
    {"bol",
     "# Bol axiom system for an untwisted bracket/triple pair.\n"
     "SB1: [x,y] == 0 - (-1)^(|x|*|y|) * [y,x]\n"
     "SB2: {x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}\n"
     "SB3: {x,y,z} + (-1)^(|x|*|y| + |x|*|z|) * {y,z,x} + (-1)^(|z|*|x| + |z|*|y|) * {z,x,y} == 0\n"
     "SB4: {x,y,[u,v]} == [{x,y,u}, v] + (-1)^(|u|*|x| + |u|*|y|) * [u, {x,y,v}] + (-1)^(|x|*|u| + "
     "|x|*|v| + |y|*|u| + |y|*|v|) * ({u,v,[x,y]} - [[u,v], [x,y]])\n"
     "SB5: {x,y,{u,v,w}} == {{x,y,u}, v, w} + (-1)^(|u|*|x| + |u|*|y|) * {u, {x,y,v}, w} + "
     "(-1)^(|x|*|u| + |x|*|v| + |y|*|u| + |y|*|v|) * {u, v, {x,y,w}}\n"},
    {"hom-bol",
     "# Twisted Bol axiom system; a(...) is the quadruple's twisting map.\n"
     "SHB1: a([x,y]) == [a(x), a(y)]\n"
     "SHB2: a({x,y,z}) == {a(x), a(y), a(z)}\n"
     "SHB3: [x,y] == 0 - (-1)^(|x|*|y|) * [y,x]\n"
     "SHB4: {x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}\n"
     "SHB5: {x,y,z} + (-1)^(|x|*|y| + |x|*|z|) * {y,z,x} + (-1)^(|z|*|x| + |z|*|y|) * {z,x,y} == "
     "0\n"
     "SHB6: {a(x), a(y), [u,v]} == [{x,y,u}, a^2(v)] + (-1)^(|u|*|x| + |u|*|y|) * [a^2(u), "
     "{x,y,v}] + (-1)^(|x|*|u| + |x|*|v| + |y|*|u| + |y|*|v|) * ({a(u), a(v), [x,y]} - [[a(u), "
     "a(v)], [a(x), a(y)]])\n"
     "SHB7: {a^2(x), a^2(y), {u,v,w}} == {{x,y,u}, a^2(v), a^2(w)} + (-1)^(|u|*|x| + |u|*|y|) * "
     "{a^2(u), {x,y,v}, a^2(w)} + (-1)^(|x|*|u| + |x|*|v| + |y|*|u| + |y|*|v|) * {a^2(u), a^2(v), "
     "{x,y,w}}\n"},
    {"lsts",
     "# Lie supertriple system: the ternary-only axioms (zero bracket).\n"
     "SB2: {x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}\n"
     "SB3: {x,y,z} + (-1)^(|x|*|y| + |x|*|z|) * {y,z,x} + (-1)^(|z|*|x| + |z|*|y|) * {z,x,y} == 0\n"
     "SB5: {x,y,{u,v,w}} == {{x,y,u}, v, w} + (-1)^(|u|*|x| + |u|*|y|) * {u, {x,y,v}, w} + "
     "(-1)^(|x|*|u| + |x|*|v| + |y|*|u| + |y|*|v|) * {u, v, {x,y,w}}\n"},
    {"hlsts",
     "# Twisted Lie supertriple system. The stored twist of such a system is\n"
     "# already the square of the original map, so a(...) appears here exactly\n"
     "# where the twisted Bol axioms apply the map twice.\n"
     "SHB2: a({x,y,z}) == {a(x), a(y), a(z)}\n"
     "SHB4: {x,y,z} == 0 - (-1)^(|x|*|y|) * {y,x,z}\n"
     "SHB5: {x,y,z} + (-1)^(|x|*|y| + |x|*|z|) * {y,z,x} + (-1)^(|z|*|x| + |z|*|y|) * {z,x,y} == 0\n"
     "SHB7: {a(x), a(y), {u,v,w}} == {{x,y,u}, a(v), a(w)} + (-1)^(|u|*|x| + |u|*|y|) * {a(u), "
     "{x,y,v}, a(w)} + (-1)^(|x|*|u| + |x|*|v| + |y|*|u| + |y|*|v|) * {a(u), a(v), {x,y,w}}\n"},
};

}  // namespace

const std::vector<std::string>& builtin_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const BuiltinSuite& s : kBuiltins) out.push_back(s.name);
        return out;
    }();
    return names;
}

const std::string& builtin_axiom_text(const std::string& suite) {
    static const std::map<std::string, std::string> texts = [] {
        std::map<std::string, std::string> out;
        for (const BuiltinSuite& s : kBuiltins) out[s.name] = s.text;
        return out;
    }();
    auto it = texts.find(suite);
    if (it == texts.end()) throw InvalidParam("unknown built-in axiom suite \"" + suite + "\"");
    return it->second;
}

std::vector<NamedIdentity> builtin_axioms(const std::string& suite) {
    return parse_axiom_collection(builtin_axiom_text(suite));
}

}  // namespace dsl
}  // namespace hombol
