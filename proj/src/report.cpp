#include "hombol/report.hpp"

namespace hombol {

std::vector<std::vector<Index>> AxiomVerdict::failing_tuples() const {
    std::vector<std::vector<Index>> out;
    out.reserve(counterexamples.size());
    for (const Counterexample& c : counterexamples) out.push_back(c.tuple);
    return out;
}

bool CheckReport::pass() const {
    for (const AxiomVerdict& v : verdicts)
        if (!v.pass()) return false;
    return true;
}

const AxiomVerdict* CheckReport::find(std::string_view axiom) const {
    for (const AxiomVerdict& v : verdicts)
        if (v.axiom == axiom) return &v;
    return nullptr;
}

}  // namespace hombol
