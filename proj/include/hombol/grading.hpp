#pragma once

#include <string>
#include <vector>

#include "hombol/types.hpp"

namespace hombol {

/// Z2-grading of a finite basis: one degree in {0,1} per basis index,
/// plus optional display labels.
class Grading {
public:
    Grading() = default;
    explicit Grading(std::vector<int> degrees, std::vector<std::string> labels = {});

    Index dim() const { return static_cast<Index>(degrees_.size()); }
    int degree(Index i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of basis index i; falls back to "e<i>".
    std::string label(Index i) const;

    /// Unit coefficient vector of basis element i.
    Vec basis(Index i) const;
    /// All indices of the given degree block.
    std::vector<Index> block(int degree) const;

    /// Gradings are interchangeable iff the degree sequences agree.
    friend bool operator==(const Grading& a, const Grading& b) { return a.degrees_ == b.degrees_; }

private:
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
};

/// Degree of a homogeneous vector; the zero vector counts as even.
/// Throws NonHomogeneous when both blocks are populated.
int degree_of(const Grading& g, const Vec& v);

}  // namespace hombol
