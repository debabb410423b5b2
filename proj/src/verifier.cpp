#include "knotsurg/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "knotsurg/dedekind.hpp"
#include "knotsurg/lescop.hpp"
#include "knotsurg/presentations.hpp"

namespace knotsurg {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1_parity: return "R1_parity";
        case Rule::R2_alpha_ge_2: return "R2_alpha_ge_2";
        case Rule::R3_beta_bound: return "R3_beta_bound";
        case Rule::R4_beta2_q1: return "R4_beta2_q1";
        case Rule::R5_beta4_lambda: return "R5_beta4_lambda";
        case Rule::R6_exact_inequality: return "R6_exact_inequality";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    return v == Verdict::eliminated ? "eliminated" : "survives";
}

bool check_inequality_24(const Int& norm5, const Rational& lambda_q) {
    if (norm5 < 0) throw std::domain_error("check_inequality_24: norm5 must be nonnegative");
    const Rational rhs = Rational(4) * lambda_q * lambda_q - Rational(1);
    if (is_perfect_square(norm5)) {
        return Rational(exact_sqrt(norm5)) >= rhs;
    }
    // Irrational square root: compare squares once the right side is known
    // nonnegative; a negative right side loses against sqrt(norm5) >= 0.
    if (rhs.sign() <= 0) return true;
    return Rational(norm5) >= rhs * rhs;
}

namespace {

// Residue representative in (-m/2, m/2].
long long balance(long long x, long long m) {
    long long r = mod_floor(x, m);
    if (2 * r > m) r -= m;
    return r;
}

long long div_round(long long n, long long d) {
    long long q = n / d, r = n % d;
    if (r != 0 && 2 * (r < 0 ? -r : r) >= (d < 0 ? -d : d)) q += ((n < 0) == (d < 0)) ? 1 : -1;
    return q;
}

std::tuple<long long, long long, long long, long long, long long, int> trace_key(
    const EliminationTrace& t) {
    const SeifertParams& p = t.candidate;
    return {p.alpha, p.beta, p.q1, p.q2, p.q3, p.e_sign};
}

/// All residue classes of (q1 mod 2*alpha, q2 mod 2*beta, q3 mod 5) that
/// admit an exact solution of 5*beta*q1 + 5*alpha*q2 + 2*alpha*beta*q3 =
/// e_sign, as canonical representatives that solve the equation exactly:
/// q1, q2 balanced units, q3 determined.
std::vector<SeifertParams> enumerate_classes(long long alpha, long long beta) {
    std::vector<SeifertParams> out;
    const long long m1 = 2 * alpha, m2 = 2 * beta, mod = 2 * alpha * beta;
    for (long long ia = 1; ia < m1; ++ia) {
        if (gcd_ll(ia, m1) != 1) continue;
        const long long a = balance(ia, m1);
        for (long long ib = 1; ib < m2; ++ib) {
            if (gcd_ll(ib, m2) != 1) continue;
            const long long b = balance(ib, m2);
            for (int es : {+1, -1}) {
                const long long num = es - 5 * beta * a - 5 * alpha * b;
                if (num % mod != 0) continue;
                const long long q3 = num / mod;
                if (gcd_ll(q3, 5) != 1) continue;  // cannot occur on solutions
                out.push_back(SeifertParams{alpha, beta, a, b, q3, es});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SeifertParams& x, const SeifertParams& y) {
        return std::tuple(x.q1, x.q2, x.q3, x.e_sign) < std::tuple(y.q1, y.q2, y.q3, y.e_sign);
    });
    return out;
}

struct Evaluated {
    Rational S, lambda, e;
    Int coeff;
    Rational exact_lhs, exact_rhs;
    bool exact_holds = false;
    std::optional<Rational> coarse_lhs, coarse_rhs;
    std::optional<bool> coarse_holds;
};

Evaluated evaluate_class(const SeifertParams& p) {
    p.validate();
    Evaluated ev;
    const XPresentation x{p.alpha, p.beta, p.q1, p.q2, p.q3};
    ev.coeff = coefficient_equation(x);
    if (ev.coeff != Int(static_cast<long>(p.e_sign))) {
        throw std::domain_error("verifier: coefficient equation must equal e_sign (+-1)");
    }
    ev.e = euler_e(x);
    ev.S = dedekind_S(p);
    ev.lambda = lescop_seifert_X(p);
    const Rational ab(p.alpha * p.beta);
    ev.exact_lhs = ab * ab;
    ev.exact_rhs = Rational(4) * ev.lambda * ev.lambda - Rational(1);
    ev.exact_holds = ev.exact_lhs >= ev.exact_rhs;

    const long long a = p.alpha, b = p.beta;
    if (a >= 2) {
        ev.coarse_lhs = Rational(3 * a * b, 2);
        ev.coarse_rhs = Rational(-1, 8) + Rational(25 * b, 24 * a) + Rational(25 * a, 24 * b) +
                        Rational(1, 24 * a * b) +
                        Rational(5, 2) * (Rational(b, 6) + Rational(2, 5));
        ev.coarse_holds = *ev.coarse_lhs < *ev.coarse_rhs;
    } else if (b >= 2) {
        ev.coarse_lhs = Rational(3 * b, 2);
        ev.coarse_rhs = Rational(17, 12) + Rational(5 * b, 4);
        ev.coarse_holds = *ev.coarse_lhs < *ev.coarse_rhs;
    }
    return ev;
}

void fill_witnesses(EliminationTrace& t, const Evaluated& ev) {
    t.lambda_x = ev.lambda;
    t.euler = ev.e;
    t.dedekind_s = ev.S;
    t.exact_lhs = ev.exact_lhs;
    t.exact_rhs = ev.exact_rhs;
    t.exact_holds = ev.exact_holds;
    t.coarse_lhs = ev.coarse_lhs;
    t.coarse_rhs = ev.coarse_rhs;
    t.coarse_holds = ev.coarse_holds;
    t.coefficient_value = ev.coeff;
}

// Coarse-chain sides for a pair with no admissible residue class.
void fill_pair_coarse(EliminationTrace& t, long long a, long long b) {
    if (a >= 2) {
        t.coarse_lhs = Rational(3 * a * b, 2);
        t.coarse_rhs = Rational(-1, 8) + Rational(25 * b, 24 * a) + Rational(25 * a, 24 * b) +
                       Rational(1, 24 * a * b) +
                       Rational(5, 2) * (Rational(b, 6) + Rational(2, 5));
        t.coarse_holds = *t.coarse_lhs < *t.coarse_rhs;
    } else if (b >= 2) {
        t.coarse_lhs = Rational(3 * b, 2);
        t.coarse_rhs = Rational(17, 12) + Rational(5 * b, 4);
        t.coarse_holds = *t.coarse_lhs < *t.coarse_rhs;
    }
}

EliminationTrace infeasible_pair_trace(long long alpha, long long beta) {
    EliminationTrace t;
    const long long q3 = div_round(1 - 5 * beta - 5 * alpha, 2 * alpha * beta);
    t.candidate = SeifertParams{alpha, beta, 1, 1, q3, +1};
    t.verdict = Verdict::eliminated;
    t.rule = alpha >= 2 ? Rule::R2_alpha_ge_2 : Rule::R3_beta_bound;
    const XPresentation x{alpha, beta, 1, 1, q3};
    t.coefficient_value = coefficient_equation(x);
    fill_pair_coarse(t, alpha, beta);
    std::ostringstream os;
    os << "no residue class solves |5*beta*q1 + 5*alpha*q2 + 2*alpha*beta*q3| = 1";
    if (alpha % 2 == 1 && beta % 2 == 1) {
        os << " (alpha and beta both odd: the equation is even for odd q1, q2)";
    } else if ((alpha * beta) % 5 == 0) {
        os << " (5 divides alpha*beta: the equation is divisible by 5)";
    }
    os << "; shown at the representative (q1, q2, q3) = (1, 1, " << q3 << ")";
    t.detail = os.str();
    return t;
}

const char* kGateNote =
    "; the square-root torsion-norm gate fails for the supplied input, so "
    "inequality-based elimination is unavailable and the class is "
    "conservatively reported as surviving";

void mark_gate_failure(EliminationTrace& t) {
    t.verdict = Verdict::survives;
    t.detail += kGateNote;
}

EliminationTrace make_r2_trace(const SeifertParams& p, const Evaluated& ev) {
    EliminationTrace t;
    t.candidate = p;
    fill_witnesses(t, ev);
    if (ev.coarse_holds.has_value() && !*ev.coarse_holds) {
        t.rule = Rule::R2_alpha_ge_2;
        t.verdict = Verdict::eliminated;
        t.detail =
            "coarse chain (|S| <= beta/6 + 2/5) forces beta < 2, contradicting "
            "2 <= alpha < beta; the exact inequality fails as well";
    } else if (!ev.exact_holds) {
        t.rule = Rule::R6_exact_inequality;
        t.verdict = Verdict::eliminated;
        t.detail = "exact inequality (alpha*beta)^2 >= 4*lambda^2 - 1 fails";
    } else {
        t.rule = Rule::R2_alpha_ge_2;
        t.verdict = Verdict::survives;
        t.detail = "unexpected: both the coarse chain and the exact inequality hold";
    }
    return t;
}

EliminationTrace make_r3_trace(const SeifertParams& p, const Evaluated& ev) {
    EliminationTrace t;
    t.candidate = p;
    fill_witnesses(t, ev);
    if (ev.coarse_holds.has_value() && !*ev.coarse_holds) {
        t.rule = Rule::R3_beta_bound;
        t.verdict = Verdict::eliminated;
        t.detail = "alpha = 1 chain (3/2)beta < 17/12 + (5/4)beta fails for beta >= 6; "
                   "admissible beta values are {2, 4}";
    } else if (!ev.exact_holds) {
        t.rule = Rule::R6_exact_inequality;
        t.verdict = Verdict::eliminated;
        t.detail = "exact inequality (alpha*beta)^2 >= 4*lambda^2 - 1 fails";
    } else {
        t.rule = Rule::R3_beta_bound;
        t.verdict = Verdict::survives;
        t.detail = "unexpected: both the coarse chain and the exact inequality hold";
    }
    return t;
}

// Knot-agnostic beta = 2 family trace (sweep view): the family gate.
EliminationTrace make_r4_family_trace(const SeifertParams& p, const Evaluated& ev) {
    EliminationTrace t;
    t.candidate = p;
    fill_witnesses(t, ev);
    if (!ev.exact_holds) {
        t.rule = Rule::R6_exact_inequality;
        t.verdict = Verdict::eliminated;
        t.detail = "exact inequality fails for the beta = 2 class";
        return t;
    }
    t.rule = Rule::R4_beta2_q1;
    t.verdict = Verdict::survives;
    std::ostringstream os;
    os << "family gate: lambda(M) = " << (p.e_sign > 0 ? -1 : 1)
       << " on this branch, and lambda(M) = -q, so the class is realizable only when q = "
       << (p.e_sign > 0 ? 1 : -1);
    t.detail = os.str();
    return t;
}

EliminationTrace make_r5_trace(const SeifertParams& p, const Evaluated& ev) {
    EliminationTrace t;
    t.candidate = p;
    fill_witnesses(t, ev);
    const long long q2m = mod_floor(p.q2, 4), q3m = mod_floor(p.q3, 5);
    const long long want_q2 = p.e_sign > 0 ? 1 : 3, want_q3 = p.e_sign > 0 ? 2 : 3;
    if (q2m != want_q2 || q3m != want_q3) {
        throw std::logic_error("beta = 4 class violates its forced congruences");
    }
    if (ev.lambda.abs() != Rational(9, 2)) {
        throw std::logic_error("beta = 4 class must have |lambda| = 9/2");
    }
    std::ostringstream os;
    os << "q2 = " << want_q2 << " (mod 4), q3 = " << want_q3
       << " (mod 5) are forced, so lambda = " << ev.lambda.str()
       << " and the exact inequality fails: 16 < 80";
    t.detail = os.str();
    if (!ev.exact_holds) {
        t.rule = Rule::R5_beta4_lambda;
        t.verdict = Verdict::eliminated;
    } else {
        t.rule = Rule::R5_beta4_lambda;
        t.verdict = Verdict::survives;
        t.detail += "; unexpected: the exact inequality holds";
    }
    return t;
}

struct PairStats {
    long long coarse_without_exact = 0;
    long long exact_without_coarse = 0;
};

void accumulate_stats(PairStats& st, const Evaluated& ev) {
    if (ev.coarse_holds.has_value()) {
        const bool coarse_kills = !*ev.coarse_holds;
        const bool exact_kills = !ev.exact_holds;
        if (coarse_kills && !exact_kills) ++st.coarse_without_exact;
        if (exact_kills && !coarse_kills) ++st.exact_without_coarse;
    }
}

void append_pair_traces(long long alpha, long long beta, std::vector<EliminationTrace>& out,
                        PairStats& st) {
    if (alpha == 1 && beta == 1) {
        EliminationTrace t = rule_R1_parity(1, 1, -5);
        t.detail += " (representative of the whole alpha = beta = 1 family)";
        out.push_back(std::move(t));
        return;
    }
    const auto classes = enumerate_classes(alpha, beta);
    if (classes.empty()) {
        out.push_back(infeasible_pair_trace(alpha, beta));
        return;
    }
    for (const SeifertParams& p : classes) {
        const Evaluated ev = evaluate_class(p);
        accumulate_stats(st, ev);
        if (alpha >= 2) {
            out.push_back(make_r2_trace(p, ev));
        } else if (beta == 2) {
            out.push_back(make_r4_family_trace(p, ev));
        } else if (beta == 4) {
            out.push_back(make_r5_trace(p, ev));
        } else {
            out.push_back(make_r3_trace(p, ev));
        }
    }
}

}  // namespace

EliminationTrace rule_R1_parity(long long q1, long long q2, long long q3) {
    if (mod_floor(q1, 2) != 1 || mod_floor(q2, 2) != 1) {
        throw std::domain_error("rule_R1_parity: q1 and q2 must be odd");
    }
    EliminationTrace t;
    t.candidate = SeifertParams{1, 1, q1, q2, q3, +1};
    t.verdict = Verdict::eliminated;
    t.rule = Rule::R1_parity;
    const Int value = Int(5) * Int(static_cast<long>(q1)) + Int(5) * Int(static_cast<long>(q2)) +
                      Int(2) * Int(static_cast<long>(q3));
    t.coefficient_value = value;
    std::ostringstream os;
    os << "5*q1 + 5*q2 + 2*q3 = " << value.get_str()
       << " is even for odd q1, q2, so it is never +-1 and H1 rules out alpha = beta = 1";
    t.detail = os.str();
    return t;
}

EliminationTrace rule_R2_alpha_ge_2(const SeifertParams& params) {
    if (params.alpha < 2) throw std::domain_error("rule_R2_alpha_ge_2: alpha must be >= 2");
    if (params.alpha >= params.beta) {
        throw std::domain_error("rule_R2_alpha_ge_2: alpha < beta required");
    }
    return make_r2_trace(params, evaluate_class(params));
}

std::vector<int> rule_R3_beta_bound() { return {2, 4}; }

EliminationTrace rule_R4_beta2(long long q, int e_sign) {
    if (e_sign != 1 && e_sign != -1) throw std::domain_error("rule_R4_beta2: bad e_sign");
    SeifertParams family;
    bool found = false;
    for (const SeifertParams& p : enumerate_classes(1, 2)) {
        if (p.e_sign == e_sign) {
            family = p;
            found = true;
        }
    }
    if (!found) throw std::logic_error("rule_R4_beta2: missing beta = 2 class");

    const Evaluated ev = evaluate_class(family);
    const long long q2m = mod_floor(family.q2, 4), q3m = mod_floor(family.q3, 5);
    const long long want_q2 = e_sign > 0 ? 3 : 1, want_q3 = e_sign > 0 ? 4 : 1;
    if (q2m != want_q2 || q3m != want_q3) {
        throw std::logic_error("beta = 2 class violates its forced congruences");
    }
    const long long branch_lambda_m = e_sign > 0 ? -1 : 1;  // lambda(M) on this branch
    if (ev.lambda != Rational(branch_lambda_m)) {
        throw std::logic_error("beta = 2 class must have lambda(X) = -+1");
    }

    EliminationTrace t;
    t.candidate = family;
    fill_witnesses(t, ev);
    t.rule = Rule::R4_beta2_q1;
    const Int lambda_m_contract = lescop_M_from_assumptions(q);
    std::ostringstream os;
    os << "q2 = " << want_q2 << " (mod 4), q3 = " << want_q3
       << " (mod 5) are forced; branch value lambda(M) = " << branch_lambda_m
       << ", contract lambda(M) = -q = " << lambda_m_contract.get_str();
    if (lambda_m_contract == Int(static_cast<long>(branch_lambda_m))) {
        t.verdict = Verdict::survives;
        os << "; consistent, the class survives (q = " << (e_sign > 0 ? 1 : -1) << ")";
    } else {
        t.verdict = Verdict::eliminated;
        os << "; mismatch eliminates the class";
    }
    t.detail = os.str();
    return t;
}

EliminationTrace rule_R5_beta4(const SeifertParams& params, const Int& norm5) {
    if (params.alpha != 1 || params.beta != 4) {
        throw std::domain_error("rule_R5_beta4: alpha = 1, beta = 4 required");
    }
    const Evaluated ev = evaluate_class(params);
    EliminationTrace t = make_r5_trace(params, ev);
    const Int fourth = Int(256);  // (alpha*beta)^4
    if (norm5 >= 0 && norm5 != fourth) {
        t.detail += "; supplied norm5 = " + norm5.get_str() +
                    " also differs from (alpha*beta)^4 = 256";
    }
    return t;
}

std::vector<EliminationTrace> run_case_analysis(const KnotGateInput& input) {
    if (!input.lescop_sigma_zero || !input.alexander_ok) {
        throw std::domain_error(
            "run_case_analysis: the ambient-Lescop and Alexander assumptions must be asserted");
    }
    if (input.norm5 < 0) throw std::domain_error("run_case_analysis: norm5 must be nonnegative");
    const bool gate = check_inequality_24(input.norm5, input.lambda_q);

    std::vector<EliminationTrace> out;

    EliminationTrace r1 = rule_R1_parity(1, 1, -5);
    r1.detail += " (representative of the whole alpha = beta = 1 family)";
    out.push_back(std::move(r1));

    for (const SeifertParams& p : enumerate_classes(2, 3)) {
        EliminationTrace t = make_r2_trace(p, evaluate_class(p));
        t.detail += "; the chain eliminates every alpha >= 2 independently of the residues";
        if (!gate) mark_gate_failure(t);
        out.push_back(std::move(t));
    }

    for (const SeifertParams& p : enumerate_classes(1, 6)) {
        EliminationTrace t = make_r3_trace(p, evaluate_class(p));
        t.detail += "; shown at the representative beta = 6 class";
        if (!gate) mark_gate_failure(t);
        out.push_back(std::move(t));
    }

    for (int es : {+1, -1}) {
        EliminationTrace t = rule_R4_beta2(input.q, es);
        if (t.verdict == Verdict::survives) {
            // A survivor must be torsion-consistent: norm5 = (alpha*beta)^4.
            const Int fourth = Int(16);
            if (input.norm5 != fourth) {
                t.verdict = Verdict::eliminated;
                t.rule = Rule::R6_exact_inequality;
                t.detail += "; eliminated anyway: supplied norm5 = " + input.norm5.get_str() +
                            " != (alpha*beta)^4 = 16";
            } else if (gate && t.exact_holds.has_value() && !*t.exact_holds) {
                t.verdict = Verdict::eliminated;
                t.rule = Rule::R6_exact_inequality;
                t.detail += "; eliminated by the exact inequality";
            }
        }
        out.push_back(std::move(t));
    }

    for (const SeifertParams& p : enumerate_classes(1, 4)) {
        EliminationTrace t = rule_R5_beta4(p, input.norm5);
        if (!gate) mark_gate_failure(t);
        out.push_back(std::move(t));
    }

    std::sort(out.begin(), out.end(), [](const EliminationTrace& x, const EliminationTrace& y) {
        return trace_key(x) < trace_key(y);
    });
    return out;
}

SweepReport sweep_parameters(int max_beta, int jobs) {
    if (max_beta < 4) throw std::domain_error("sweep_parameters: max_beta must be >= 4");
    if (jobs < 1) jobs = 1;

    std::vector<std::pair<long long, long long>> pairs;
    for (long long b = 1; b <= max_beta; ++b) {
        for (long long a = 1; a <= b; ++a) {
            if (gcd_ll(a, b) == 1) pairs.emplace_back(a, b);
        }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<std::vector<EliminationTrace>> results(pairs.size());
    std::vector<PairStats> stats(pairs.size());

    auto work = [&](std::size_t start) {
        for (std::size_t i = start; i < pairs.size(); i += static_cast<std::size_t>(jobs)) {
            append_pair_traces(pairs[i].first, pairs[i].second, results[i], stats[i]);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, static_cast<std::size_t>(j));
        for (auto& th : threads) th.join();
    }

    SweepReport report;
    report.max_beta = max_beta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        report.coarse_without_exact += stats[i].coarse_without_exact;
        report.exact_without_coarse += stats[i].exact_without_coarse;
        for (auto& t : results[i]) report.traces.push_back(std::move(t));
    }
    std::sort(report.traces.begin(), report.traces.end(),
              [](const EliminationTrace& x, const EliminationTrace& y) {
                  return trace_key(x) < trace_key(y);
              });
    report.candidates = static_cast<long long>(report.traces.size());
    for (const EliminationTrace& t : report.traces) {
        if (t.verdict == Verdict::survives) {
            report.survivors.push_back(t);
        } else {
            ++report.eliminated_by_rule[static_cast<std::size_t>(t.rule)];
        }
    }
    return report;
}

}  // namespace knotsurg
