#pragma once

// Structured reports (JSON with a fixed key order) and plot CSVs.
// The schema is documented in docs/FORMATS.md.

#include <string>

#include "json.hpp"

#include "ffzeta/approx.hpp"
#include "ffzeta/instability.hpp"
#include "ffzeta/nevanlinna.hpp"
#include "ffzeta/zeta.hpp"

namespace ffzeta {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ffzeta-report/1";
inline constexpr const char* kVersion = "0.1.0";

Json complex_json(Complex z);
Json exact_poly_json(const ExactPoly& p);
Json complex_poly_json(const ComplexPoly& p);

Json curve_json(const CurveSpec& c);
Json counts_json(const PointCounts& pc);
Json lpoly_json(const LPolynomial& l);
Json rh_json(const RhCheck& rh);
Json zeta_report_json(const ZetaReport& rep);

Json nevanlinna_json(const NevanlinnaReport& rep);
/// Columns r, alpha, n, N, m, T.
std::string nevanlinna_csv(const NevanlinnaReport& rep);
Json ledger_json(const InequalityLedger& ledger);

Json membership_json(const MembershipReport& rep);
/// A member with its reference L; exact coefficients are strings such as "3/2-1/4i".
Json member_json(const ZetaLikeMember& m);
/// Accepts a member object or any report with a "member" key. Errors: ParseError.
ZetaLikeMember member_from_json(const Json& j);
Json perturbation_json(const PerturbationResult& res);
Json removal_json(const ZeroRemoval& res);

Json translate_sum_json(const TranslateSum& ts, bool with_terms = true);
Json convergence_json(const ConvergenceStudy& study);
/// Columns re_s, im_s, abs_error, re_value, im_value, re_target, im_target.
std::string approx_csv(const TranslateSum& ts);

}  // namespace ffzeta
