#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotsurg/int_types.hpp"
#include "knotsurg/rational.hpp"
#include "knotsurg/seifert.hpp"

namespace knotsurg {

/// Knot-side inputs of the surgery gate: the surgery denominator q of 2/q,
/// lambda_q = lambda of the double cover, norm5 = the order-5 torsion norm,
/// and the two standing assumptions asserted by the caller.
struct KnotGateInput {
    long long q = 0;
    Rational lambda_q;
    Int norm5;
    bool lescop_sigma_zero = true;
    bool alexander_ok = true;
};

enum class Verdict { eliminated, survives };

enum class Rule {
    R1_parity,
    R2_alpha_ge_2,
    R3_beta_bound,
    R4_beta2_q1,
    R5_beta4_lambda,
    R6_exact_inequality,
};

constexpr int kRuleCount = 6;
const char* rule_name(Rule r);
const char* verdict_name(Verdict v);

/// Structured record of how one candidate class was decided, with exact
/// arithmetic witnesses.
struct EliminationTrace {
    SeifertParams candidate;
    Verdict verdict = Verdict::eliminated;
    Rule rule = Rule::R6_exact_inequality;

    std::optional<Rational> lambda_x;    // Lescop value of the candidate
    std::optional<Rational> euler;       // Euler number e
    std::optional<Rational> dedekind_s;  // S, the Dedekind-sum combination
    std::optional<Rational> exact_lhs;   // (alpha*beta)^2
    std::optional<Rational> exact_rhs;   // 4*lambda^2 - 1
    std::optional<bool> exact_holds;
    std::optional<Rational> coarse_lhs;  // branch coarse-chain comparison
    std::optional<Rational> coarse_rhs;
    std::optional<bool> coarse_holds;
    std::optional<Int> coefficient_value;  // 5*beta*q1 + 5*alpha*q2 + 2*alpha*beta*q3
    std::string detail;
};

/// sqrt(norm5) >= 4*lambda_q^2 - 1, decided exactly. A perfect-square norm5
/// is compared through its integer square root; otherwise both sides are
/// squared (with the sign of the right side handled first).
bool check_inequality_24(const Int& norm5, const Rational& lambda_q);

/// alpha = beta = 1 elimination: 5*q1 + 5*q2 + 2*q3 is even for odd q1, q2,
/// hence never +-1. Requires odd q1, q2.
EliminationTrace rule_R1_parity(long long q1, long long q2, long long q3);

/// alpha >= 2 elimination: the coarse chain forces beta < 2, and the exact
/// inequality (alpha*beta)^2 >= 4*lambda^2 - 1 fails. Requires a candidate
/// class with 2 <= alpha < beta and |coefficient_equation| = 1.
EliminationTrace rule_R2_alpha_ge_2(const SeifertParams& params);

/// Admissible beta values for alpha = 1: {2, 4} (beta < 6 by the coarse
/// bound, beta even by the coefficient equation's parity).
std::vector<int> rule_R3_beta_bound();

/// beta = 2 family gate. The residue class is unique per e sign; its branch
/// constant lambda(M) = -e_sign must equal -q, so the class survives exactly
/// when q = e_sign and is eliminated otherwise.
EliminationTrace rule_R4_beta2(long long q, int e_sign = +1);

/// beta = 4 elimination: the unique residue class per e sign has
/// lambda = -+9/2 and fails the exact inequality (16 < 80).
EliminationTrace rule_R5_beta4(const SeifertParams& params, const Int& norm5);

/// Replays the whole case tree for one knot input and returns the trace
/// list (deterministic order). "No survivor" holds exactly when |q| != 1
/// and the square-root inequality gate holds.
std::vector<EliminationTrace> run_case_analysis(const KnotGateInput& input);

struct SweepReport {
    int max_beta = 0;
    long long candidates = 0;  // trace count (residue classes + infeasible pairs)
    std::array<long long, kRuleCount> eliminated_by_rule{};
    std::vector<EliminationTrace> traces;     // lexicographic candidate order
    std::vector<EliminationTrace> survivors;  // subset of traces
    long long coarse_without_exact = 0;       // coarse kills, exact does not: must stay 0
    long long exact_without_coarse = 0;       // exact kills, coarse does not: reported
};

/// Exhaustive residue-class sweep over coprime alpha <= beta <= max_beta,
/// both e signs, knot-agnostic (the beta = 2 families report as the
/// surviving family). Deterministic across worker counts.
SweepReport sweep_parameters(int max_beta, int jobs = 1);

}  // namespace knotsurg
