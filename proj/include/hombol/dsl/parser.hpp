#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hombol/dsl/ast.hpp"

namespace hombol {
namespace dsl {

// Grammar (whitespace-insensitive):
//   identity := expr "==" expr
//   expr     := term { ("+" | "-") term }
//   term     := { factor "*" } atom
//   factor   := rational | "(-1)^(" degpoly ")"
//   degpoly  := degmono { "+" degmono }
//   degmono  := "|" ident "|" { "*" "|" ident "|" }
//   atom     := ident | "a" ["^" nat] "(" expr ")"
//             | "[" expr "," expr "]" | "{" expr "," expr "," expr "}"
//             | "(" expr ")" | "0"
//   rational := ["-"] nat ["/" nat]
// "a" followed by "(" or "^" is the twist symbol; anywhere else it is an
// ordinary variable. Unary minus is sugar for "0 - term".
Identity parse_identity(std::string_view text);

/// Inverse of parse_identity up to whitespace: parsing the printed form
/// rebuilds a structurally identical tree.
std::string print_identity(const Identity& id);
std::string print_expr(const ExprPtr& e);

struct NamedIdentity {
    std::string id;
    Identity identity;
};

/// Axiom collection: one "NAME: identity" per line, '#' starts a
/// comment, blank lines ignored.
std::vector<NamedIdentity> parse_axiom_collection(std::string_view text);
std::vector<NamedIdentity> load_axiom_file(const std::string& path);

}  // namespace dsl
}  // namespace hombol
