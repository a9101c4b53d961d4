#include "hombol/dsl/random.hpp"

#include <algorithm>

namespace hombol {
namespace dsl {

namespace {

const char* kPool[] = {"x", "y", "z", "u", "v", "w"};

std::string pick_var(std::mt19937_64& rng) { return kPool[rng() % 6]; }

Rational pick_coeff(std::mt19937_64& rng) {
    static const int nums[] = {1, 2, 3, -1, -2, 5, 7, -3};
    static const int dens[] = {1, 1, 2, 1, 3, 1, 2, 1};
    const std::size_t i = static_cast<std::size_t>(rng() % 8);
    return Rational(nums[i], dens[i]);
}

// Structure first; Koszul exponents are filled in afterwards from the
// leaves that actually materialized.
ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    if (depth <= 0) return rng() % 5 == 0 ? make_zero() : make_var(pick_var(rng));
    switch (rng() % 8) {
        case 0: return make_var(pick_var(rng));
        case 1: return make_bracket(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2:
            return make_triple(random_expr(rng, depth - 1), random_expr(rng, depth - 1),
                               random_expr(rng, depth - 1));
        case 3: return make_twist(1 + static_cast<unsigned>(rng() % 3), random_expr(rng, depth - 1));
        case 4: return make_scaled(pick_coeff(rng), random_expr(rng, depth - 1));
        case 5: return make_koszul(DegPolynomial{}, random_expr(rng, depth - 1));
        case 6: {
            std::vector<SignedTerm> terms;
            const std::size_t count = 2 + rng() % 2;
            for (std::size_t i = 0; i < count; ++i)
                terms.push_back({i == 0 ? +1 : (rng() % 2 ? +1 : -1), random_expr(rng, depth - 1)});
            return make_sum(std::move(terms));
        }
        default: return make_bracket(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
}

void leaves(const ExprPtr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
            } else if constexpr (std::is_same_v<T, Twist>) {
                leaves(n.arg, out);
            } else if constexpr (std::is_same_v<T, Bracket>) {
                leaves(n.lhs, out);
                leaves(n.rhs, out);
            } else if constexpr (std::is_same_v<T, Triple>) {
                leaves(n.first, out);
                leaves(n.second, out);
                leaves(n.third, out);
            } else if constexpr (std::is_same_v<T, Scaled>) {
                leaves(n.arg, out);
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                leaves(n.arg, out);
            } else if constexpr (std::is_same_v<T, Sum>) {
                for (const SignedTerm& t : n.terms) leaves(t.term, out);
            }
        },
        e->node);
}

DegPolynomial random_exponent(std::mt19937_64& rng, const std::vector<std::string>& vars) {
    DegPolynomial poly;
    const std::size_t monos = 1 + rng() % 2;
    for (std::size_t m = 0; m < monos; ++m) {
        DegMonomial mono;
        const std::size_t factors = 1 + rng() % 2;
        for (std::size_t f = 0; f < factors; ++f)
            mono.push_back(vars[static_cast<std::size_t>(rng() % vars.size())]);
        poly.monomials.push_back(std::move(mono));
    }
    return poly;
}

// Rebuild the tree, assigning exponents over `vars`; Koszul nodes drop
// to their argument when no variable is available.
ExprPtr fill_exponents(const ExprPtr& e, std::mt19937_64& rng, const std::vector<std::string>& vars) {
    return std::visit(
        [&](const auto& n) -> ExprPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Var>) {
                return make_var(n.name);
            } else if constexpr (std::is_same_v<T, Zero>) {
                return make_zero();
            } else if constexpr (std::is_same_v<T, Twist>) {
                return make_twist(n.power, fill_exponents(n.arg, rng, vars));
            } else if constexpr (std::is_same_v<T, Bracket>) {
                return make_bracket(fill_exponents(n.lhs, rng, vars), fill_exponents(n.rhs, rng, vars));
            } else if constexpr (std::is_same_v<T, Triple>) {
                return make_triple(fill_exponents(n.first, rng, vars),
                                   fill_exponents(n.second, rng, vars),
                                   fill_exponents(n.third, rng, vars));
            } else if constexpr (std::is_same_v<T, Scaled>) {
                return make_scaled(n.coeff, fill_exponents(n.arg, rng, vars));
            } else if constexpr (std::is_same_v<T, KoszulSign>) {
                ExprPtr arg = fill_exponents(n.arg, rng, vars);
                if (vars.empty()) return arg;
                return make_koszul(random_exponent(rng, vars), std::move(arg));
            } else {
                std::vector<SignedTerm> terms;
                for (const SignedTerm& t : n.terms)
                    terms.push_back({t.sign, fill_exponents(t.term, rng, vars)});
                return make_sum(std::move(terms));
            }
        },
        e->node);
}

}  // namespace

Identity random_identity(std::mt19937_64& rng, int max_depth) {
    ExprPtr lhs = random_expr(rng, max_depth);
    ExprPtr rhs = random_expr(rng, max_depth);
    std::vector<std::string> vars;
    leaves(lhs, vars);
    leaves(rhs, vars);
    return Identity{fill_exponents(lhs, rng, vars), fill_exponents(rhs, rng, vars)};
}

}  // namespace dsl
}  // namespace hombol
