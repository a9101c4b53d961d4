#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hombol/algebra.hpp"

namespace hombol {
namespace fixtures {

/// Degrees (0,0,1) over basis (i,j,k), with the bracket sign of the
/// even-odd pair corrected so the skew-symmetry axiom can hold; the
/// published table is kept as example_3_1_printed for negative tests.
SuperAlgebra example_3_1();
SuperAlgebra example_3_1_printed();

/// Degrees (0,1,1) over basis (i,j,k); products i*j=k, j*i=k, j*k=2i,
/// k*j=4i. Right alternative; no twist.
SuperAlgebra example_4_1_star();

/// The bracket/triple structure derived from example_4_1_star.
SuperAlgebra example_4_1_bol();

/// beta(i)=a i, beta(j)=j+b k, beta(k)=a k on the grading of
/// example_4_1_star; requires a != 0.
Mat example_4_1_beta(const Rational& a, const Rational& b);

/// The twisted tables (entries 6a i, 4a^2 i, ...) evaluated at (a,b),
/// with twist beta(a,b).
SuperAlgebra example_4_1_hom_bol(const Rational& a, const Rational& b);

/// All-zero binary and/or ternary products over the given degrees.
SuperAlgebra zero_algebra(const std::vector<int>& degrees, bool with_binary = true,
                          bool with_ternary = true);

/// Replaces exactly one structure constant with a fresh value in the
/// same degree block. Deterministic per seed.
SuperAlgebra mutate(const SuperAlgebra& a, std::uint64_t seed);

/// Catalogue interface used by the CLI.
std::vector<std::string> catalogue();
bool is_morphism_fixture(const std::string& id);
SuperAlgebra make(const std::string& id, const std::map<std::string, std::string>& params);
Mat make_morphism(const std::string& id, const std::map<std::string, std::string>& params);

}  // namespace fixtures
}  // namespace hombol
