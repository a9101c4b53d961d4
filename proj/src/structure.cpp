#include "hombol/structure.hpp"

#include "hombol/errors.hpp"

namespace hombol {

BinaryStructure::BinaryStructure(Grading g) : grading_(std::move(g)) {
    lmul_.assign(static_cast<std::size_t>(grading_.dim()), Mat::Zero(grading_.dim(), grading_.dim()));
}

Vec BinaryStructure::eval(const Vec& x, const Vec& y) const {
    const Index n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("eval_binary: operand size mismatch");
    Vec out = Vec::Zero(n);
    // Operands are usually basis vectors or nearly so; skip zero terms.
    for (Index i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        const Mat& left = lmul_[static_cast<std::size_t>(i)];
        for (Index j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational coeff = x[i] * y[j];
            for (Index k = 0; k < n; ++k)
                if (left(k, j) != 0) out[k] += coeff * left(k, j);
        }
    }
    return out;
}

bool BinaryStructure::all_zero() const {
    for (const Mat& m : lmul_)
        if (!is_zero(m)) return false;
    return true;
}

TernaryStructure::TernaryStructure(Grading g) : grading_(std::move(g)) {
    const Index n = grading_.dim();
    tmul_.assign(static_cast<std::size_t>(n * n), Mat::Zero(n, n));
}

Vec TernaryStructure::eval(const Vec& x, const Vec& y, const Vec& z) const {
    const Index n = dim();
    if (x.size() != n || y.size() != n || z.size() != n)
        throw DimensionMismatch("eval_ternary: operand size mismatch");
    Vec out = Vec::Zero(n);
    for (Index i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (Index j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational xy = x[i] * y[j];
            const Mat& m = slice(i, j);
            for (Index l = 0; l < n; ++l) {
                if (z[l] == 0) continue;
                const Rational coeff = xy * z[l];
                for (Index k = 0; k < n; ++k)
                    if (m(k, l) != 0) out[k] += coeff * m(k, l);
            }
        }
    }
    return out;
}

bool TernaryStructure::all_zero() const {
    for (const Mat& m : tmul_)
        if (!is_zero(m)) return false;
    return true;
}

BinaryStructure scaled(const BinaryStructure& s, const Rational& lambda) {
    BinaryStructure out(s.grading());
    const Index n = s.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                if (s.c(i, j, k) != 0) out.set(i, j, k, lambda * s.c(i, j, k));
    return out;
}

TernaryStructure scaled(const TernaryStructure& s, const Rational& lambda) {
    TernaryStructure out(s.grading());
    const Index n = s.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index l = 0; l < n; ++l)
                for (Index k = 0; k < n; ++k)
                    if (s.t(i, j, l, k) != 0) out.set(i, j, l, k, lambda * s.t(i, j, l, k));
    return out;
}

BinaryStructure post_compose(const BinaryStructure& s, const Mat& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim())
        throw DimensionMismatch("post_compose: map size mismatch");
    BinaryStructure out(s.grading());
    const Index n = s.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const Vec p = m * s.product(i, j);
            for (Index k = 0; k < n; ++k)
                if (p[k] != 0) out.set(i, j, k, p[k]);
        }
    return out;
}

TernaryStructure post_compose(const TernaryStructure& s, const Mat& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim())
        throw DimensionMismatch("post_compose: map size mismatch");
    TernaryStructure out(s.grading());
    const Index n = s.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index l = 0; l < n; ++l) {
                const Vec p = m * s.product(i, j, l);
                for (Index k = 0; k < n; ++k)
                    if (p[k] != 0) out.set(i, j, l, k, p[k]);
            }
    return out;
}

}  // namespace hombol
