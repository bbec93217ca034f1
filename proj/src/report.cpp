#include "grasspi/report.hpp"

#include "grasspi/error.hpp"
#include "grasspi/text.hpp"

namespace grasspi {

Json element_json(const GrassmannElem& g) {
  Json out = Json::array();
  const auto& field = g.field();
  for (const auto& [mask, c] : g.terms()) {
    out.push_back({{"coeff", field->format(c)}, {"code", c}, {"basis", mask_indices(mask)}});
  }
  return out;
}

GrassmannElem element_from_json(const Json& j, const FieldPtr& field, unsigned m) {
  std::vector<GrassmannElem::Term> terms;
  for (const auto& t : j) {
    Mask mask = 0;
    for (unsigned i : t.at("basis").get<std::vector<unsigned>>()) {
      if (i < 1 || i > m) throw ConfigError("basis index out of range in report");
      mask |= Mask{1} << (i - 1);
    }
    const auto code = t.at("code").get<Scalar>();
    if (code >= field->order()) throw ConfigError("coefficient code out of range in report");
    terms.push_back({mask, code});
  }
  return GrassmannElem::from_terms(field, m, std::move(terms));
}

Json witness_json(const WitnessMap& w) {
  Json images = Json::object();
  for (const auto& [v, g] : w.images) images["x" + std::to_string(v)] = element_json(g);
  return {{"m", w.m}, {"images", images}};
}

WitnessMap witness_from_json(const Json& j, const FieldPtr& field) {
  WitnessMap w;
  w.field = field;
  w.m = j.at("m").get<unsigned>();
  for (const auto& [name, img] : j.at("images").items()) {
    if (name.size() < 2 || name[0] != 'x') throw ConfigError("bad variable name in report: " + name);
    const Var v = static_cast<Var>(std::stoul(name.substr(1)));
    w.images.insert_or_assign(v, element_from_json(img, field, w.m));
  }
  return w;
}

Json verdict_json(const FreePoly& f, const Verdict& v, const ReportParams& params,
                  const std::map<std::string, double>& timings_ms) {
  const auto& field = f.field();
  Json out;
  out["params"] = {{"command", params.command},
                   {"p", field->characteristic()},
                   {"q", field->order()},
                   {"modulus", field->modulus()},
                   {"expr", params.expr},
                   {"poly", format_poly(f)},
                   {"seed", params.seed}};
  out["verdict"] = v.member() ? "member" : "nonmember";
  out["route"] = v.route;
  out["canonical_form"] = v.canonical ? Json(v.canonical->format()) : Json(nullptr);
  out["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  out["value"] = v.value ? element_json(*v.value) : Json(nullptr);
  out["quotient"] = v.quotient ? Json(format_poly(*v.quotient)) : Json(nullptr);
  out["fresh"] = v.fresh ? Json("x" + std::to_string(*v.fresh)) : Json(nullptr);
  out["timings"] = timings_ms;
  return out;
}

bool reverify_report(const Json& report, const FreePoly& f, const FieldPtr& field) {
  if (report.at("verdict") == "member") return report.at("witness").is_null();
  const WitnessMap w = witness_from_json(report.at("witness"), field);
  const GrassmannElem stored = element_from_json(report.at("value"), field, w.m);
  const auto sigma = w.assignment();
  GrassmannElem value = evaluate(f, sigma);
  if (!report.at("fresh").is_null()) {
    const auto name = report.at("fresh").get<std::string>();
    value = commutator(value, sigma.image(static_cast<Var>(std::stoul(name.substr(1)))));
  }
  return !value.is_zero() && value == stored;
}

}  // namespace grasspi
