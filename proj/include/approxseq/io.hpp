#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "approxseq/certificate.hpp"
#include "approxseq/oracle.hpp"
#include "approxseq/plfunc.hpp"
#include "approxseq/report.hpp"
#include "approxseq/seq.hpp"
#include "approxseq/twist.hpp"

namespace approxseq::io {

using nlohmann::json;

/// Parses sequence text: CSV (one value per line or comma-separated) or
/// a JSON array of numbers / "p/q" strings. Rational tokens force exact
/// mode; decimal tokens default to float mode unless force_exact, in
/// which case they are rationalized exactly.
Seq parse_sequence(const std::string& text, bool force_exact,
                   std::optional<double> tol);

// Scalars render as "p/q" strings (exact) or JSON numbers (float).
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, bool force_exact, std::optional<double> tol);

json seq_to_json(const Seq& u);

json report_to_json(const DeficitReport& r);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json plfunc_to_json(const PLFunc& f);
PLFunc plfunc_from_json(const json& j, bool force_exact, std::optional<double> tol);

json thm11_report_to_json(const Thm11Report& r);

json counterexample_to_json(const oracle::Counterexample& c);

} // namespace approxseq::io
