#pragma once

#include "hombol/algebra.hpp"

namespace hombol {

/// Scale applied to the derived bracket and Jordan product; the induced
/// ternary products then scale by lambda^2. The default 1 matches the
/// worked tables; 1/2 selects the convention with the halving factor.
class ScaleConvention {
public:
    ScaleConvention() = default;
    explicit ScaleConvention(Rational lambda);
    const Rational& lambda() const { return lambda_; }

private:
    Rational lambda_ = Rational(1);
};

/// Sign in the middle of the Jordan associator. `minus` reproduces the
/// worked ternary tables; `plus` is kept as an experiment knob and does
/// not reproduce them.
enum class JordanSign { minus, plus };

/// Bracket algebra: x*y replaced by lambda * (xy - (-1)^{|x||y|} yx).
/// Grading and twist carry over; the result is super-anticommutative.
SuperAlgebra supercommutator(const SuperAlgebra& a, const ScaleConvention& scale = {});

/// Jordan algebra: x*y replaced by lambda * (xy + (-1)^{|x||y|} yx).
/// The result is supercommutative.
SuperAlgebra super_jordan(const SuperAlgebra& a, const ScaleConvention& scale = {});

/// as_alpha(x,y,z) = (xy) alpha(z) - alpha(x) (yz) in a's binary product.
Vec hom_associator(const SuperAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

/// Jordan associator evaluated in a plus algebra:
/// (x o y) o alpha(z) - alpha(x) o (y o z), the sign selectable.
Vec hom_jordan_associator(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z,
                          JordanSign sign = JordanSign::minus);

}  // namespace hombol
