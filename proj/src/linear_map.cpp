#include "hombol/linear_map.hpp"

#include "hombol/errors.hpp"

namespace hombol {

bool is_even(const Mat& m, const Grading& g) {
    if (m.rows() != g.dim() || m.cols() != g.dim())
        throw DimensionMismatch("is_even: map size does not match grading");
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0 && g.degree(i) != g.degree(j)) return false;
    return true;
}

Vec apply_map(const Mat& m, const Vec& x) {
    if (m.cols() != x.size()) throw DimensionMismatch("apply_map: size mismatch");
    return m * x;
}

Vec apply_sparse(const Mat& m, const Vec& x) {
    if (m.cols() != x.size()) throw DimensionMismatch("apply_sparse: size mismatch");
    Vec out = Vec::Zero(m.rows());
    for (Index j = 0; j < m.cols(); ++j) {
        if (x[j] == 0) continue;
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) out[i] += x[j] * m(i, j);
    }
    return out;
}

Index unit_index(const Vec& v) {
    Index unit = -1;
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (unit >= 0 || v[i] != Rational(1)) return -1;
        unit = i;
    }
    return unit;
}

MapApplier::MapApplier(Mat m) : m_(std::move(m)) {
    cols_.reserve(static_cast<std::size_t>(m_.cols()));
    for (Index j = 0; j < m_.cols(); ++j) cols_.push_back(m_.col(j));
}

Vec MapApplier::operator()(const Vec& v) const {
    const Index u = unit_index(v);
    if (u >= 0) return cols_[static_cast<std::size_t>(u)];
    return apply_sparse(m_, v);
}

Mat compose(const Mat& f, const Mat& g) {
    if (f.cols() != g.rows()) throw DimensionMismatch("compose: size mismatch");
    return f * g;
}

Mat map_power(const Mat& m, unsigned n) {
    if (m.rows() != m.cols()) throw DimensionMismatch("map_power: square matrix required");
    Mat out = Mat::Identity(m.rows(), m.cols());
    for (unsigned i = 0; i < n; ++i) out = out * m;
    return out;
}

bool commute(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw DimensionMismatch("commute: square matrices of equal size required");
    return equal(Mat(a * b), Mat(b * a));
}

}  // namespace hombol
