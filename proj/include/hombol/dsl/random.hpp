#pragma once

#include <random>

#include "hombol/dsl/ast.hpp"

namespace hombol {
namespace dsl {

/// Random identity in the parser's canonical image (sums carry at least
/// two terms and lead with a positive one; Koszul exponents only use
/// variables that occur as leaves). Used by the print/parse round-trip
/// property.
Identity random_identity(std::mt19937_64& rng, int max_depth);

}  // namespace dsl
}  // namespace hombol
