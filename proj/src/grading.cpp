#include "hombol/grading.hpp"

#include "hombol/errors.hpp"

namespace hombol {

Grading::Grading(std::vector<int> degrees, std::vector<std::string> labels)
    : degrees_(std::move(degrees)), labels_(std::move(labels)) {
    if (degrees_.empty()) throw InvalidParam("grading needs at least one basis element");
    for (int d : degrees_)
        if (d != 0 && d != 1) throw InvalidParam("degrees must be 0 or 1");
    if (!labels_.empty() && labels_.size() != degrees_.size())
        throw InvalidParam("label count does not match dimension");
}

std::string Grading::label(Index i) const {
    if (has_labels()) return labels_[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i);
}

Vec Grading::basis(Index i) const {
    Vec v = Vec::Zero(dim());
    v[i] = 1;
    return v;
}

std::vector<Index> Grading::block(int degree) const {
    std::vector<Index> out;
    for (Index i = 0; i < dim(); ++i)
        if (degrees_[static_cast<std::size_t>(i)] == degree) out.push_back(i);
    return out;
}

int degree_of(const Grading& g, const Vec& v) {
    if (v.size() != g.dim()) throw DimensionMismatch("vector size does not match grading dimension");
    bool even = false, odd = false;
    for (Index i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        (g.degree(i) == 0 ? even : odd) = true;
    }
    if (even && odd) throw NonHomogeneous("vector has support in both degree blocks");
    return odd ? 1 : 0;  // the zero vector counts as even
}

}  // namespace hombol
