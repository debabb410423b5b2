#pragma once

#include <vector>

#include "knotsurg/verifier.hpp"

namespace knotsurg {

struct Fig8Row {
    long long q = 0;
    Rational lambda_q;
    Int norm5;
    bool ineq_24_holds = false;
};

/// One row per q in [q_min, q_max]: lambda via the 2-bridge surgery formula,
/// the torsion norm via both routes (asserted equal inside), and the
/// square-root inequality gate.
std::vector<Fig8Row> fig8_table(long long q_min, long long q_max);

struct VerifyReport {
    KnotGateInput input;
    bool gate_24 = false;
    std::vector<EliminationTrace> traces;
    std::vector<EliminationTrace> survivors;

    bool no_survivor() const { return survivors.empty(); }
};

VerifyReport verify_knot(const KnotGateInput& input);

}  // namespace knotsurg
