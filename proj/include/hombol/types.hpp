#pragma once

#include <Eigen/Dense>

#include "hombol/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<hombol::Rational> {
    using Self = hombol::Rational;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static inline Self epsilon() { return Self(0); }
    static inline Self dummy_precision() { return Self(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hombol {

using Index = Eigen::Index;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const Vec& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

inline bool is_zero(const Mat& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) return false;
    return true;
}

inline bool equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

inline bool is_identity(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

/// (-1)^e for an exponent already reduced over the integers.
inline Rational parity_sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace hombol
