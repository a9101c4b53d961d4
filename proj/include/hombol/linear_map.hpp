#pragma once

#include "hombol/grading.hpp"
#include "hombol/types.hpp"

namespace hombol {

/// True iff no nonzero entry of m crosses the degree blocks of g.
/// Odd maps are representable as plain matrices but every operation
/// that accepts a twisting map rejects them.
bool is_even(const Mat& m, const Grading& g);

/// m * x with a dimension guard.
Vec apply_map(const Mat& m, const Vec& x);

/// m * x skipping zero coefficients; exact same result as apply_map.
Vec apply_sparse(const Mat& m, const Vec& x);

/// Index i when v is exactly the i-th unit vector, -1 otherwise.
Index unit_index(const Vec& v);

/// Applies a fixed map, answering unit vectors by column lookup.
class MapApplier {
public:
    explicit MapApplier(Mat m);
    const Mat& matrix() const { return m_; }
    Vec operator()(const Vec& v) const;

private:
    Mat m_;
    std::vector<Vec> cols_;
};

/// Composition f after g.
Mat compose(const Mat& f, const Mat& g);

/// n-fold composition; map_power(m, 0) is the identity.
Mat map_power(const Mat& m, unsigned n);

bool commute(const Mat& a, const Mat& b);

}  // namespace hombol
