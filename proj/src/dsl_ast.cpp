#include "hombol/dsl/ast.hpp"

#include <algorithm>

namespace hombol {
namespace dsl {

ExprPtr make_var(std::string name) { return std::make_shared<Expr>(Expr{Var{std::move(name)}}); }
ExprPtr make_zero() { return std::make_shared<Expr>(Expr{Zero{}}); }
ExprPtr make_twist(unsigned power, ExprPtr arg) {
    return std::make_shared<Expr>(Expr{Twist{power, std::move(arg)}});
}
ExprPtr make_bracket(ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(Expr{Bracket{std::move(lhs), std::move(rhs)}});
}
ExprPtr make_triple(ExprPtr a, ExprPtr b, ExprPtr c) {
    return std::make_shared<Expr>(Expr{Triple{std::move(a), std::move(b), std::move(c)}});
}
ExprPtr make_scaled(Rational coeff, ExprPtr arg) {
    return std::make_shared<Expr>(Expr{Scaled{std::move(coeff), std::move(arg)}});
}
ExprPtr make_koszul(DegPolynomial exponent, ExprPtr arg) {
    return std::make_shared<Expr>(Expr{KoszulSign{std::move(exponent), std::move(arg)}});
}
ExprPtr make_sum(std::vector<SignedTerm> terms) {
    return std::make_shared<Expr>(Expr{Sum{std::move(terms)}});
}

namespace {

bool poly_equal(const DegPolynomial& a, const DegPolynomial& b) { return a.monomials == b.monomials; }

}  // namespace

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T& nb = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, Var>) {
                return na.name == nb.name;
            } else if constexpr (std::is_same_v<T, Zero>) {
                return true;
            } else if constexpr (std::is_same_v<T, Twist>) {
                return na.power == nb.power && equal(na.arg, nb.arg);
            } else if constexpr (std::is_same_v<T, Bracket>) {
                return equal(na.lhs, nb.lhs) && equal(na.rhs, nb.rhs);
            } else if constexpr (std::is_same_v<T, Triple>) {
                return equal(na.first, nb.first) && equal(na.second, nb.second) &&
                       equal(na.third, nb.third);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return na.coeff == nb.coeff && equal(na.arg, nb.arg);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                return poly_equal(na.exponent, nb.exponent) && equal(na.arg, nb.arg);
            } else {
                const Sum& sa = na;
                const Sum& sb = std::get<Sum>(b->node);
                if (sa.terms.size() != sb.terms.size()) return false;
                for (std::size_t i = 0; i < sa.terms.size(); ++i)
                    if (sa.terms[i].sign != sb.terms[i].sign || !equal(sa.terms[i].term, sb.terms[i].term))
                        return false;
                return true;
            }
        },
        a->node);
}

bool equal(const Identity& a, const Identity& b) { return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs); }

namespace {

void collect_vars(const ExprPtr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
            } else if constexpr (std::is_same_v<T, Twist>) {
                collect_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, Bracket>) {
                collect_vars(n.lhs, out);
                collect_vars(n.rhs, out);
            } else if constexpr (std::is_same_v<T, Triple>) {
                collect_vars(n.first, out);
                collect_vars(n.second, out);
                collect_vars(n.third, out);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                collect_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                collect_vars(n.arg, out);
            } else if constexpr (std::is_same_v<T, Sum>) {
                for (const SignedTerm& t : n.terms) collect_vars(t.term, out);
            }
        },
        e->node);
}

void collect_needs(const ExprPtr& e, ExprNeeds& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Twist>) {
                out.twist = true;
                collect_needs(n.arg, out);
            } else if constexpr (std::is_same_v<T, Bracket>) {
                out.bracket = true;
                collect_needs(n.lhs, out);
                collect_needs(n.rhs, out);
            } else if constexpr (std::is_same_v<T, Triple>) {
                out.triple = true;
                collect_needs(n.first, out);
                collect_needs(n.second, out);
                collect_needs(n.third, out);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                collect_needs(n.arg, out);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                collect_needs(n.arg, out);
            } else if constexpr (std::is_same_v<T, Sum>) {
                for (const SignedTerm& t : n.terms) collect_needs(t.term, out);
            }
        },
        e->node);
}

}  // namespace

std::vector<std::string> variables(const Identity& id) {
    std::vector<std::string> out;
    collect_vars(id.lhs, out);
    collect_vars(id.rhs, out);
    return out;
}

ExprNeeds operations_used(const Identity& id) {
    ExprNeeds out;
    collect_needs(id.lhs, out);
    collect_needs(id.rhs, out);
    return out;
}

}  // namespace dsl
}  // namespace hombol
