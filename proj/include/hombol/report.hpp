#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hombol/types.hpp"

namespace hombol {

/// One failing instance of an axiom: the basis indices bound to the
/// quantified variables and the exact residual LHS - RHS.
struct Counterexample {
    std::vector<Index> tuple;
    Vec residual;

    friend bool operator==(const Counterexample& a, const Counterexample& b) {
        return a.tuple == b.tuple && equal(a.residual, b.residual);
    }
};

struct AxiomVerdict {
    std::string axiom;
    std::vector<Counterexample> counterexamples;

    bool pass() const { return counterexamples.empty(); }
    std::vector<std::vector<Index>> failing_tuples() const;
};

struct CheckReport {
    std::string suite;
    std::string algebra;
    std::vector<AxiomVerdict> verdicts;

    bool pass() const;
    const AxiomVerdict* find(std::string_view axiom) const;
};

}  // namespace hombol
