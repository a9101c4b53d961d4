#pragma once

#include <vector>

#include "hombol/grading.hpp"
#include "hombol/types.hpp"

namespace hombol {

/// Structure constants of a bilinear product: c(i,j,k) is the
/// e_k-coefficient of e_i * e_j. Stored as one left-multiplication
/// matrix per basis index, so eval(x, y) = sum_i x_i * (L_i y).
class BinaryStructure {
public:
    BinaryStructure() = default;
    explicit BinaryStructure(Grading g);

    const Grading& grading() const { return grading_; }
    Index dim() const { return grading_.dim(); }

    const Rational& c(Index i, Index j, Index k) const { return lmul_[static_cast<std::size_t>(i)](k, j); }
    void set(Index i, Index j, Index k, Rational v) { lmul_[static_cast<std::size_t>(i)](k, j) = std::move(v); }

    /// Coefficients of e_i * e_j.
    Vec product(Index i, Index j) const { return lmul_[static_cast<std::size_t>(i)].col(j); }

    /// Bilinear extension to arbitrary coefficient vectors.
    Vec eval(const Vec& x, const Vec& y) const;

    bool all_zero() const;

    friend bool operator==(const BinaryStructure& a, const BinaryStructure& b) {
        if (!(a.grading_ == b.grading_)) return false;
        for (std::size_t i = 0; i < a.lmul_.size(); ++i)
            if (!equal(a.lmul_[i], b.lmul_[i])) return false;
        return true;
    }

private:
    Grading grading_;
    std::vector<Mat> lmul_;
};

/// Structure constants of a trilinear product: t(i,j,l,k) is the
/// e_k-coefficient of {e_i, e_j, e_l}.
class TernaryStructure {
public:
    TernaryStructure() = default;
    explicit TernaryStructure(Grading g);

    const Grading& grading() const { return grading_; }
    Index dim() const { return grading_.dim(); }

    const Rational& t(Index i, Index j, Index l, Index k) const { return slice(i, j)(k, l); }
    void set(Index i, Index j, Index l, Index k, Rational v) { slice(i, j)(k, l) = std::move(v); }

    /// Coefficients of {e_i, e_j, e_l}.
    Vec product(Index i, Index j, Index l) const { return slice(i, j).col(l); }

    /// Trilinear extension.
    Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

    bool all_zero() const;

    friend bool operator==(const TernaryStructure& a, const TernaryStructure& b) {
        if (!(a.grading_ == b.grading_)) return false;
        for (std::size_t i = 0; i < a.tmul_.size(); ++i)
            if (!equal(a.tmul_[i], b.tmul_[i])) return false;
        return true;
    }

private:
    Mat& slice(Index i, Index j) { return tmul_[static_cast<std::size_t>(i * grading_.dim() + j)]; }
    const Mat& slice(Index i, Index j) const { return tmul_[static_cast<std::size_t>(i * grading_.dim() + j)]; }

    Grading grading_;
    std::vector<Mat> tmul_;
};

/// Every structure constant multiplied by lambda.
BinaryStructure scaled(const BinaryStructure& s, const Rational& lambda);
TernaryStructure scaled(const TernaryStructure& s, const Rational& lambda);

/// Products post-composed with a linear map: e_i * e_j |-> m(e_i * e_j).
BinaryStructure post_compose(const BinaryStructure& s, const Mat& m);
TernaryStructure post_compose(const TernaryStructure& s, const Mat& m);

}  // namespace hombol
