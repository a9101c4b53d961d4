#pragma once

#include <map>
#include <string>
#include <vector>

#include "hombol/algebra.hpp"
#include "hombol/dsl/parser.hpp"
#include "hombol/report.hpp"

namespace hombol {
namespace dsl {

using Binding = std::map<std::string, Index>;

/// Exact LHS - RHS of the identity with every variable bound to a basis
/// index. Koszul exponents evaluate mod 2 from the degrees of the bound
/// basis elements. Throws MissingOperation when the identity uses an
/// operation the algebra does not provide.
Vec evaluate_identity(const Identity& id, const SuperAlgebra& a, const Binding& binding);

/// Quantifies evaluate_identity over all basis bindings, variables in
/// first-appearance order, first variable slowest.
CheckReport check_identity(const SuperAlgebra& a, const NamedIdentity& axiom);

/// One verdict per named identity, same enumeration order as the
/// hard-coded suites.
CheckReport check_axioms(const SuperAlgebra& a, const std::vector<NamedIdentity>& axioms,
                         std::string suite);

/// Built-in axiom collections, keyed by suite name (right-alt, bol,
/// hom-bol, lsts, hlsts). Identical to the .idl files shipped in data/.
const std::vector<std::string>& builtin_suite_names();
const std::string& builtin_axiom_text(const std::string& suite);
std::vector<NamedIdentity> builtin_axioms(const std::string& suite);

}  // namespace dsl
}  // namespace hombol
