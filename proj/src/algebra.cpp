#include "hombol/algebra.hpp"

#include "hombol/errors.hpp"

namespace hombol {

const BinaryStructure& SuperAlgebra::binary() const {
    if (!binary_) throw MissingBinary("algebra \"" + name_ + "\" has no binary structure");
    return *binary_;
}

BinaryStructure& SuperAlgebra::binary_mut() {
    if (!binary_) throw MissingBinary("algebra \"" + name_ + "\" has no binary structure");
    return *binary_;
}

void SuperAlgebra::set_binary(BinaryStructure s) {
    if (!(s.grading() == grading_)) throw DimensionMismatch("binary structure grading mismatch");
    binary_ = std::move(s);
}

const TernaryStructure& SuperAlgebra::ternary() const {
    if (!ternary_) throw MissingTernary("algebra \"" + name_ + "\" has no ternary structure");
    return *ternary_;
}

TernaryStructure& SuperAlgebra::ternary_mut() {
    if (!ternary_) throw MissingTernary("algebra \"" + name_ + "\" has no ternary structure");
    return *ternary_;
}

void SuperAlgebra::set_ternary(TernaryStructure s) {
    if (!(s.grading() == grading_)) throw DimensionMismatch("ternary structure grading mismatch");
    ternary_ = std::move(s);
}

Mat SuperAlgebra::twist() const {
    if (twist_) return *twist_;
    return Mat::Identity(dim(), dim());
}

bool SuperAlgebra::twist_is_identity() const {
    return !twist_ || is_identity(*twist_);
}

void SuperAlgebra::set_twist(Mat m) {
    if (m.rows() != dim() || m.cols() != dim()) throw DimensionMismatch("twist size mismatch");
    twist_ = std::move(m);
}

SuperAlgebra SuperAlgebra::with_name(std::string name) const {
    SuperAlgebra out = *this;
    out.name_ = std::move(name);
    return out;
}

SuperAlgebra SuperAlgebra::with_twist(Mat m) const {
    SuperAlgebra out = *this;
    out.set_twist(std::move(m));
    return out;
}

Vec eval_binary(const SuperAlgebra& a, const Vec& x, const Vec& y) {
    return a.binary().eval(x, y);
}

Vec eval_ternary(const SuperAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return a.ternary().eval(x, y, z);
}

CheckReport check_multiplicative(const SuperAlgebra& a) {
    CheckReport report{"multiplicative", a.name(), {}};
    const Mat alpha = a.twist();
    const Index n = a.dim();
    if (a.has_binary()) {
        AxiomVerdict v{"MULT-BINARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                const Vec lhs = alpha * a.binary().product(i, j);
                const Vec rhs = a.binary().eval(alpha.col(i), alpha.col(j));
                if (!equal(lhs, rhs)) v.counterexamples.push_back({{i, j}, lhs - rhs});
            }
        report.verdicts.push_back(std::move(v));
    }
    if (a.has_ternary()) {
        AxiomVerdict v{"MULT-TERNARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index l = 0; l < n; ++l) {
                    const Vec lhs = alpha * a.ternary().product(i, j, l);
                    const Vec rhs = a.ternary().eval(alpha.col(i), alpha.col(j), alpha.col(l));
                    if (!equal(lhs, rhs)) v.counterexamples.push_back({{i, j, l}, lhs - rhs});
                }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

namespace {

// Projection of v onto the block complementary to `degree`.
Vec off_block(const Grading& g, const Vec& v, int degree) {
    Vec out = Vec::Zero(g.dim());
    for (Index k = 0; k < g.dim(); ++k)
        if (g.degree(k) != degree) out[k] = v[k];
    return out;
}

}  // namespace

CheckReport check_grading_compat(const SuperAlgebra& a) {
    CheckReport report{"grading", a.name(), {}};
    const Grading& g = a.grading();
    const Index n = a.dim();
    if (a.has_binary()) {
        AxiomVerdict v{"GRADING-BINARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                const int want = (g.degree(i) + g.degree(j)) % 2;
                const Vec bad = off_block(g, a.binary().product(i, j), want);
                if (!is_zero(bad)) v.counterexamples.push_back({{i, j}, bad});
            }
        report.verdicts.push_back(std::move(v));
    }
    if (a.has_ternary()) {
        AxiomVerdict v{"GRADING-TERNARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index l = 0; l < n; ++l) {
                    const int want = (g.degree(i) + g.degree(j) + g.degree(l)) % 2;
                    const Vec bad = off_block(g, a.ternary().product(i, j, l), want);
                    if (!is_zero(bad)) v.counterexamples.push_back({{i, j, l}, bad});
                }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

bool tensors_equal(const SuperAlgebra& a, const SuperAlgebra& b) {
    if (!(a.grading() == b.grading())) return false;
    if (a.has_binary() != b.has_binary()) return false;
    if (a.has_binary() && !(a.binary() == b.binary())) return false;
    if (a.has_ternary() != b.has_ternary()) return false;
    if (a.has_ternary() && !(a.ternary() == b.ternary())) return false;
    return true;
}

}  // namespace hombol
