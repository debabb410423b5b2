#include "knotsurg/json_io.hpp"

#include <stdexcept>

namespace knotsurg {

Json int_json(const Int& v) { return v.get_str(); }

Json rational_json(const Rational& r) { return r.str(); }

Json poly_json(const LaurentPoly1& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, c.get_str()}));
    return arr;
}

LaurentPoly1 poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of pairs");
    LaurentPoly1 p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("polynomial JSON entries must be [exponent, coefficient]");
        }
        const long e = pair[0].get<long>();
        const Int c = int_from_string(pair[1].is_string() ? pair[1].get<std::string>()
                                                          : pair[1].dump());
        Int s = p.coeff(e) + c;
        p.set_coeff(e, s);
    }
    return p;
}

Json poly2_json(const LaurentPoly2& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        arr.push_back(Json::array({e.first, e.second, c.get_str()}));
    }
    return arr;
}

Json seifert_json(const SeifertParams& p) {
    return Json{{"alpha", p.alpha}, {"beta", p.beta}, {"q1", p.q1},
                {"q2", p.q2},       {"q3", p.q3},     {"e_sign", p.e_sign}};
}

Json x_presentation_json(const XPresentation& x) {
    return Json{{"alpha", x.alpha}, {"beta", x.beta}, {"q1", x.q1}, {"q2", x.q2}, {"q3", x.q3}};
}

Json m_presentation_json(const MPresentation& m) {
    return Json{{"alpha", m.alpha}, {"beta", m.beta}, {"q1", m.q1}, {"q2", m.q2}, {"q3", m.q3}};
}

Json trace_json(const EliminationTrace& t) {
    Json j;
    j["candidate"] = seifert_json(t.candidate);
    j["verdict"] = verdict_name(t.verdict);
    j["rule"] = rule_name(t.rule);
    Json w = Json::object();
    if (t.lambda_x) w["lambda_x"] = rational_json(*t.lambda_x);
    if (t.euler) w["e"] = rational_json(*t.euler);
    if (t.dedekind_s) w["S"] = rational_json(*t.dedekind_s);
    if (t.exact_lhs) w["exact_lhs"] = rational_json(*t.exact_lhs);
    if (t.exact_rhs) w["exact_rhs"] = rational_json(*t.exact_rhs);
    if (t.exact_holds) w["exact_holds"] = *t.exact_holds;
    if (t.coarse_lhs) w["coarse_lhs"] = rational_json(*t.coarse_lhs);
    if (t.coarse_rhs) w["coarse_rhs"] = rational_json(*t.coarse_rhs);
    if (t.coarse_holds) w["coarse_holds"] = *t.coarse_holds;
    if (t.coefficient_value) w["coefficient_equation"] = int_json(*t.coefficient_value);
    j["witnesses"] = w;
    j["detail"] = t.detail;
    return j;
}

Json two_bridge_json(const DSequence& d, const Rational& c1, const Rational& c2,
                     const TwoBridgeLescop& v) {
    Json j;
    j["dseq"] = d.entries;
    j["c1"] = rational_json(c1);
    j["c2"] = rational_json(c2);
    j["lambda"] = rational_json(v.lambda);
    j["components"] = Json{{"L", rational_json(v.bracket_l)},
                           {"K1", rational_json(v.bracket_k1)},
                           {"K2", rational_json(v.bracket_k2)},
                           {"tr", rational_json(v.trace)},
                           {"det", rational_json(v.det)},
                           {"sigma", v.sigma},
                           {"b_minus", v.b_minus},
                           {"abs_p", int_json(v.abs_p)},
                           {"s1", rational_json(v.s1)},
                           {"s2", rational_json(v.s2)}};
    return j;
}

Json sweep_json(const SweepReport& r) {
    Json j;
    j["max_beta"] = r.max_beta;
    j["candidates"] = r.candidates;
    Json by_rule = Json::object();
    for (int i = 0; i < kRuleCount; ++i) {
        by_rule[rule_name(static_cast<Rule>(i))] = r.eliminated_by_rule[static_cast<std::size_t>(i)];
    }
    j["eliminated_by_rule"] = by_rule;
    Json survivors = Json::array();
    for (const auto& t : r.survivors) survivors.push_back(trace_json(t));
    j["survivors"] = survivors;
    j["coarse_exact"] = Json{{"coarse_without_exact", r.coarse_without_exact},
                             {"exact_without_coarse", r.exact_without_coarse}};
    Json traces = Json::array();
    for (const auto& t : r.traces) traces.push_back(trace_json(t));
    j["traces"] = traces;
    return j;
}

Json fig8_rows_json(const std::vector<Fig8Row>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        arr.push_back(Json{{"q", row.q},
                           {"lambda_q", rational_json(row.lambda_q)},
                           {"norm5", int_json(row.norm5)},
                           {"ineq_24_holds", row.ineq_24_holds}});
    }
    return Json{{"rows", arr}};
}

Json verify_json(const VerifyReport& r) {
    Json j;
    j["input"] = Json{{"q", r.input.q},
                      {"lambda_q", rational_json(r.input.lambda_q)},
                      {"norm5", int_json(r.input.norm5)},
                      {"lescop_sigma_zero", r.input.lescop_sigma_zero},
                      {"alexander_ok", r.input.alexander_ok}};
    j["gate_24"] = r.gate_24;
    j["verdict"] = r.no_survivor() ? "not Seifert-realizable" : "survivors found";
    j["candidates"] = r.traces.size();
    Json by_rule = Json::object();
    for (int i = 0; i < kRuleCount; ++i) by_rule[rule_name(static_cast<Rule>(i))] = 0;
    for (const auto& t : r.traces) {
        if (t.verdict == Verdict::eliminated) {
            auto& slot = by_rule[rule_name(t.rule)];
            slot = slot.get<long long>() + 1;
        }
    }
    j["eliminated_by_rule"] = by_rule;
    Json survivors = Json::array();
    for (const auto& t : r.survivors) survivors.push_back(trace_json(t));
    j["survivors"] = survivors;
    Json traces = Json::array();
    for (const auto& t : r.traces) traces.push_back(trace_json(t));
    j["traces"] = traces;
    return j;
}

}  // namespace knotsurg
