#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hombol/grading.hpp"
#include "hombol/linear_map.hpp"
#include "hombol/report.hpp"
#include "hombol/structure.hpp"

namespace hombol {

/// A superspace with optional binary and ternary structure constants
/// and an optional even twisting map (absent means the identity).
/// The one container for every algebra kind handled here; which
/// components are present decides what it models.
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(std::string name, Grading grading) : name_(std::move(name)), grading_(std::move(grading)) {}

    const std::string& name() const { return name_; }
    const Grading& grading() const { return grading_; }
    Index dim() const { return grading_.dim(); }

    bool has_binary() const { return binary_.has_value(); }
    const BinaryStructure& binary() const;
    BinaryStructure& binary_mut();
    void set_binary(BinaryStructure s);
    void clear_binary() { binary_.reset(); }

    bool has_ternary() const { return ternary_.has_value(); }
    const TernaryStructure& ternary() const;
    TernaryStructure& ternary_mut();
    void set_ternary(TernaryStructure s);

    /// Whether a twist matrix is stored explicitly.
    bool has_twist() const { return twist_.has_value(); }
    /// The twisting map; the identity when none is stored.
    Mat twist() const;
    bool twist_is_identity() const;
    void set_twist(Mat m);

    SuperAlgebra with_name(std::string name) const;
    SuperAlgebra with_twist(Mat m) const;

private:
    std::string name_;
    Grading grading_;
    std::optional<BinaryStructure> binary_;
    std::optional<TernaryStructure> ternary_;
    std::optional<Mat> twist_;
};

/// Convenience evaluators with dimension guards.
Vec eval_binary(const SuperAlgebra& a, const Vec& x, const Vec& y);
Vec eval_ternary(const SuperAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

/// Verifies alpha(x*y) = alpha(x)*alpha(y) on all basis pairs and the
/// ternary analogue on all basis triples. Failures are report content,
/// never exceptions.
CheckReport check_multiplicative(const SuperAlgebra& a);

/// Verifies that no structure constant lands outside the degree block
/// forced by its arguments. Loaders reject algebras that fail this.
CheckReport check_grading_compat(const SuperAlgebra& a);

/// Structure-constant equality (gradings, presence and values of the
/// binary/ternary tensors). Twists are compared separately.
bool tensors_equal(const SuperAlgebra& a, const SuperAlgebra& b);

}  // namespace hombol
