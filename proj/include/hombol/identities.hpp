#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hombol/algebra.hpp"
#include "hombol/products.hpp"
#include "hombol/report.hpp"

namespace hombol {

/// Residual of one axiom instance: exact LHS - RHS for homogeneous
/// arguments of the given degrees. Basis tuples are the quantified
/// instances; arbitrary homogeneous vectors exercise multilinearity.
using Residual = std::function<Vec(const std::vector<Vec>&, const std::vector<int>&)>;

struct Axiom {
    std::string id;
    int arity;
    Residual residual;
};

enum class RaltForm { eq21, eq22, both };

// Axiom factories. The returned closures reference `a`; keep it alive
// while they run. Factories throw MissingBinary / MissingTernary when
// the algebra lacks a structure the axioms quantify over.
std::vector<Axiom> right_alt_axioms(const SuperAlgebra& a, RaltForm form = RaltForm::both);
std::vector<Axiom> left_alt_axioms(const SuperAlgebra& a);
std::vector<Axiom> bol_axioms(const SuperAlgebra& a);
std::vector<Axiom> hom_bol_axioms(const SuperAlgebra& a);
std::vector<Axiom> lsts_axioms(const SuperAlgebra& a);
std::vector<Axiom> hlsts_axioms(const SuperAlgebra& a);
std::vector<Axiom> supercomm_axioms(const SuperAlgebra& a);

/// Evaluates every axiom on all basis tuples (lexicographic, first
/// variable slowest) and collects all failing instances.
CheckReport run_axioms(const SuperAlgebra& a, std::string suite, const std::vector<Axiom>& axioms);

/// Right Hom-alternativity in one or both of its equivalent forms;
/// with form=both the two failing-tuple sets are asserted identical.
CheckReport check_right_hom_alternative(const SuperAlgebra& a, RaltForm form = RaltForm::both);
CheckReport check_left_hom_alternative(const SuperAlgebra& a);
/// Conjunction of right and left Hom-alternativity.
CheckReport check_hom_alternative(const SuperAlgebra& a);

/// SB1-SB5; requires binary and ternary structure and an identity
/// twist (UnexpectedTwist otherwise).
CheckReport check_bol_super(const SuperAlgebra& a);
/// SHB1-SHB7 with the algebra's stored twist.
CheckReport check_hom_bol_super(const SuperAlgebra& a);

/// Ternary-only systems. The binary structure must be absent or zero
/// (NonzeroBinary otherwise). For the Hom version the stored twist
/// plays the role of the square of the original map, so it replaces
/// every twist occurrence in the SHB7-analogue.
CheckReport check_lie_supertriple(const SuperAlgebra& a);
CheckReport check_hom_lie_supertriple(const SuperAlgebra& a);

/// x*y = (-1)^{|x||y|} y*x on all basis pairs.
CheckReport check_supercommutative(const SuperAlgebra& a);

}  // namespace hombol
