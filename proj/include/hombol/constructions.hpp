#pragma once

#include "hombol/algebra.hpp"
#include "hombol/products.hpp"
#include "hombol/report.hpp"

namespace hombol {

/// Every construction verifies its hypotheses up front and throws a
/// HypothesisError on violation. `skip` builds the object anyway; the
/// result then carries no guarantee and callers are expected to have
/// inspected the hypothesis failure themselves (see check_hom_morphism).
enum class HypothesisPolicy { enforce, skip };

/// Bracket and triple structure on a right (Hom-)alternative algebra:
/// binary   lambda-scaled supercommutator,
/// ternary  {x,y,z} = (-1)^{|x|(|y|+|z|)} asJ(y,z,x) over the plus
///          algebra (same lambda, so the triple scales by lambda^2),
/// twist    the square of the input twist.
SuperAlgebra bol_from_right_alternative(const SuperAlgebra& a, const ScaleConvention& scale = {},
                                        JordanSign sign = JordanSign::minus,
                                        HypothesisPolicy policy = HypothesisPolicy::enforce);

/// Ternary system [x,y,z] = 2 (-1)^{|x|(|y|+|z|)} asJ(y,z,x) on a
/// supercommutative algebra with even twist; result is ternary-only
/// with the squared twist. `scale.lambda()^2` is an extra factor on the
/// output (the input plus product already carries its own scale).
SuperAlgebra lie_sts_from_jordan(const SuperAlgebra& plus, const ScaleConvention& scale = {},
                                 HypothesisPolicy policy = HypothesisPolicy::enforce);

/// (x,y,z) = (x o y) o a(z) + (-1)^{|x||y|+|z|(|x|+|y|)} (z o y) o a(x)
///           - (-1)^{|x||y|} a(y) o (x o z)
/// on a supercommutative algebra. Arguments must be homogeneous; the
/// overload with explicit degrees skips the homogeneity inference.
Vec jordan_triple(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z);
Vec jordan_triple(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z,
                  int dx, int dy, int dz);

/// Twist a binary-ternary structure along an even self-morphism beta:
/// bracket composed with beta once, triple with beta twice, twist beta.
/// Input must carry the identity twist.
SuperAlgebra yau_twist_bts(const SuperAlgebra& a, const Mat& beta,
                           HypothesisPolicy policy = HypothesisPolicy::enforce);

/// Binary-only analogue: x *_beta y = beta(x*y), twist beta o (old twist).
SuperAlgebra yau_twist_binary(const SuperAlgebra& a, const Mat& beta,
                              HypothesisPolicy policy = HypothesisPolicy::enforce);

/// Power twist along an even self-morphism commuting with the stored
/// twist: bracket composed with beta^n, triple with beta^{2n}, twist
/// beta^n o alpha.
SuperAlgebra beta_n_twist(const SuperAlgebra& a, const Mat& beta, unsigned n,
                          HypothesisPolicy policy = HypothesisPolicy::enforce);

/// nth derived structure: binary composed with alpha^{2^n - 1}, ternary
/// with alpha^{2^{n+1} - 2}, twist alpha^{2^n}.
SuperAlgebra nth_derived(const SuperAlgebra& a, unsigned n);

/// Product preservation of f on all basis tuples for every structure
/// src carries, plus the intertwining relation f o twist_src = twist_dst o f.
/// Failures are report content.
CheckReport check_hom_morphism(const Mat& f, const SuperAlgebra& src, const SuperAlgebra& dst);

}  // namespace hombol
