#include "knotsurg/reports.hpp"

#include <stdexcept>

#include "knotsurg/lescop.hpp"
#include "knotsurg/norms.hpp"

namespace knotsurg {

std::vector<Fig8Row> fig8_table(long long q_min, long long q_max) {
    if (q_min > q_max) throw std::domain_error("fig8_table: q_min must be <= q_max");
    std::vector<Fig8Row> rows;
    rows.reserve(static_cast<std::size_t>(q_max - q_min + 1));
    for (long long q = q_min; q <= q_max; ++q) {
        Fig8Row row;
        row.q = q;
        row.lambda_q = lescop_two_bridge(DSequence({1, -q, 1}), Rational(-3), Rational(-3));
        row.norm5 = fig8_torsion_norm(q);
        row.ineq_24_holds = check_inequality_24(row.norm5, row.lambda_q);
        rows.push_back(std::move(row));
    }
    return rows;
}

VerifyReport verify_knot(const KnotGateInput& input) {
    VerifyReport report;
    report.input = input;
    report.gate_24 = check_inequality_24(input.norm5, input.lambda_q);
    report.traces = run_case_analysis(input);
    for (const EliminationTrace& t : report.traces) {
        if (t.verdict == Verdict::survives) report.survivors.push_back(t);
    }
    return report;
}

}  // namespace knotsurg
