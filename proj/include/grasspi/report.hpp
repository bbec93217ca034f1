#pragma once

#include <map>
#include <string>

#include "grasspi/decide.hpp"
#include "json.hpp"

namespace grasspi {

using Json = nlohmann::json;

/// [{"coeff": "2", "code": 2, "basis": [1, 2]}, ...]; the empty basis is 1.
Json element_json(const GrassmannElem& g);
GrassmannElem element_from_json(const Json& j, const FieldPtr& field, unsigned m);

/// {"m": m, "images": {"x1": [...], ...}}
Json witness_json(const WitnessMap& w);
WitnessMap witness_from_json(const Json& j, const FieldPtr& field);

struct ReportParams {
  std::string command;
  std::string expr;
  std::uint64_t seed = 0;
};

/// {params, verdict, route, canonical_form, witness, value, quotient, timings}.
Json verdict_json(const FreePoly& f, const Verdict& v, const ReportParams& params,
                  const std::map<std::string, double>& timings_ms);

/// Re-evaluates the stored witness on `f` (or on [f, x_fresh] for centrality
/// reports) and compares with the stored value.
bool reverify_report(const Json& report, const FreePoly& f, const FieldPtr& field);

}  // namespace grasspi
