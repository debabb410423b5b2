#pragma once

#include <json.hpp>

#include "knotsurg/laurent.hpp"
#include "knotsurg/lescop.hpp"
#include "knotsurg/presentations.hpp"
#include "knotsurg/reports.hpp"
#include "knotsurg/verifier.hpp"

namespace knotsurg {

/// Insertion-ordered JSON keeps field order deterministic across runs.
using Json = nlohmann::ordered_json;

/// Integers are decimal strings, rationals "num/den" strings; no value is
/// ever rendered through floating point.
Json int_json(const Int& v);
Json rational_json(const Rational& r);

/// Polynomials serialize as ascending [exponent, "coefficient"] pairs;
/// bivariate ones as [i, j, "coefficient"] triples.
Json poly_json(const LaurentPoly1& p);
LaurentPoly1 poly_from_json(const Json& j);
Json poly2_json(const LaurentPoly2& p);

Json seifert_json(const SeifertParams& p);
Json x_presentation_json(const XPresentation& x);
Json m_presentation_json(const MPresentation& m);
Json trace_json(const EliminationTrace& t);
Json two_bridge_json(const DSequence& d, const Rational& c1, const Rational& c2,
                     const TwoBridgeLescop& v);
Json sweep_json(const SweepReport& r);
Json fig8_rows_json(const std::vector<Fig8Row>& rows);
Json verify_json(const VerifyReport& r);

}  // namespace knotsurg
