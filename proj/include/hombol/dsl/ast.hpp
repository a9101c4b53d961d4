#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hombol/scalar.hpp"

namespace hombol {
namespace dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Var {
    std::string name;
};
struct Zero {};
/// a^power(arg); the twist symbol always denotes the algebra's stored
/// twisting map.
struct Twist {
    unsigned power;
    ExprPtr arg;
};
struct Bracket {
    ExprPtr lhs, rhs;
};
struct Triple {
    ExprPtr first, second, third;
};
struct Scaled {
    Rational coeff;
    ExprPtr arg;
};

/// Product of degree symbols |v|; evaluated mod 2.
using DegMonomial = std::vector<std::string>;
/// Sum of monomials; every Koszul exponent in the worked identities has
/// this shape.
struct DegPolynomial {
    std::vector<DegMonomial> monomials;
};

/// (-1)^(exponent) * arg.
struct KoszulSign {
    DegPolynomial exponent;
    ExprPtr arg;
};

struct SignedTerm {
    int sign;  // +1 or -1
    ExprPtr term;
};
struct Sum {
    std::vector<SignedTerm> terms;
};

struct Expr {
    std::variant<Var, Zero, Twist, Bracket, Triple, Scaled, KoszulSign, Sum> node;
};

struct Identity {
    ExprPtr lhs, rhs;
};

ExprPtr make_var(std::string name);
ExprPtr make_zero();
ExprPtr make_twist(unsigned power, ExprPtr arg);
ExprPtr make_bracket(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_triple(ExprPtr a, ExprPtr b, ExprPtr c);
ExprPtr make_scaled(Rational coeff, ExprPtr arg);
ExprPtr make_koszul(DegPolynomial exponent, ExprPtr arg);
ExprPtr make_sum(std::vector<SignedTerm> terms);

bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const Identity& a, const Identity& b);

/// Quantified variables in first-appearance order (lhs before rhs,
/// depth-first). Koszul exponents do not introduce variables.
std::vector<std::string> variables(const Identity& id);

struct ExprNeeds {
    bool bracket = false;
    bool triple = false;
    bool twist = false;
};
ExprNeeds operations_used(const Identity& id);

}  // namespace dsl
}  // namespace hombol
