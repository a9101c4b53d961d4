#include "hombol/products.hpp"

#include "hombol/errors.hpp"

namespace hombol {

ScaleConvention::ScaleConvention(Rational lambda) : lambda_(std::move(lambda)) {
    if (lambda_ == 0) throw InvalidParam("scale convention requires lambda != 0");
}

namespace {

SuperAlgebra symmetrized(const SuperAlgebra& a, const Rational& swap_sign_base, const Rational& lambda,
                         const char* suffix) {
    const BinaryStructure& b = a.binary();
    const Grading& g = a.grading();
    BinaryStructure out(g);
    for (Index i = 0; i < g.dim(); ++i)
        for (Index j = 0; j < g.dim(); ++j) {
            const Rational sign =
                parity_sign(g.degree(i) * g.degree(j)) * swap_sign_base;
            const Vec p = lambda * (b.product(i, j) + sign * b.product(j, i));
            for (Index k = 0; k < g.dim(); ++k)
                if (p[k] != 0) out.set(i, j, k, p[k]);
        }
    SuperAlgebra result(a.name() + suffix, g);
    result.set_binary(std::move(out));
    if (a.has_ternary()) result.set_ternary(a.ternary());
    if (a.has_twist()) result.set_twist(a.twist());
    return result;
}

}  // namespace

SuperAlgebra supercommutator(const SuperAlgebra& a, const ScaleConvention& scale) {
    return symmetrized(a, Rational(-1), scale.lambda(), "/minus");
}

SuperAlgebra super_jordan(const SuperAlgebra& a, const ScaleConvention& scale) {
    return symmetrized(a, Rational(1), scale.lambda(), "/plus");
}

Vec hom_associator(const SuperAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    const BinaryStructure& b = a.binary();
    const Mat alpha = a.twist();
    return b.eval(b.eval(x, y), alpha * z) - b.eval(alpha * x, b.eval(y, z));
}

Vec hom_jordan_associator(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z,
                          JordanSign sign) {
    const BinaryStructure& b = plus.binary();
    const Mat alpha = plus.twist();
    const Vec left = b.eval(b.eval(x, y), alpha * z);
    const Vec right = b.eval(alpha * x, b.eval(y, z));
    return sign == JordanSign::minus ? Vec(left - right) : Vec(left + right);
}

}  // namespace hombol
