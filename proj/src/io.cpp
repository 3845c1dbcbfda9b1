#include "rrloc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rrloc/errors.hpp"

namespace rrloc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

long as_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_number_float()) fail(path, "floating-point numbers are not accepted; use an integer");
  fail(path, "expected an integer");
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) fail(path, "floating-point numbers are not accepted; use an integer or \"p/q\"");
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a \"p/q\" string");
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

PresentationPtr parse_ring(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  std::vector<Generator> gens;
  if (j.contains("generators")) {
    const json& g = j["generators"];
    if (!g.is_array()) fail(path + ".generators", "expected an array");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string gp = path + ".generators[" + std::to_string(i) + "]";
      gens.push_back({as_string(require(g[i], "name", gp), gp + ".name"),
                      static_cast<int>(as_integer(require(g[i], "order", gp), gp + ".order"))});
    }
  }
  const int top = j.contains("top_degree") ? static_cast<int>(as_integer(j["top_degree"], path + ".top_degree")) : 0;
  std::map<std::string, Rational> raw;
  if (j.contains("integrals")) {
    const json& in = j["integrals"];
    if (!in.is_object()) fail(path + ".integrals", "expected an object");
    for (auto it = in.begin(); it != in.end(); ++it) {
      raw[it.key()] = as_rational(it.value(), path + ".integrals." + it.key());
    }
  }
  try {
    // Monomials are parsed against a throwaway presentation carrying the generator names.
    std::vector<Generator> loose = gens;
    for (auto& g : loose) g.order = std::max(g.order, 1 + top);
    const RingPresentation names(loose, top, {});
    std::map<Exponents, Rational> integrals;
    for (const auto& [mono, value] : raw) integrals[names.parse_monomial(mono)] = value;
    return std::make_shared<const RingPresentation>(gens, top, integrals);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

CohomologyClass parse_class(const json& j, const PresentationPtr& ring, const std::string& path) {
  if (j.is_number() || j.is_string()) return CohomologyClass(ring, ExactScalar(as_rational(j, path)));
  if (!j.is_object()) fail(path, "expected a monomial map such as {\"x\": \"1/2\"}");
  std::map<std::string, Rational> terms;
  for (auto it = j.begin(); it != j.end(); ++it) terms[it.key()] = as_rational(it.value(), path + "." + it.key());
  try {
    return CohomologyClass::from_terms(ring, terms);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

FixedComponent parse_component(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  FixedComponent f;
  f.name = as_string(require(j, "name", path), path + ".name");
  f.moment = as_integer(require(j, "moment", path), path + ".moment");
  const json& w = require(j, "weights", path);
  if (!w.is_array()) fail(path + ".weights", "expected an array");
  for (std::size_t i = 0; i < w.size(); ++i) {
    f.weights.push_back(static_cast<int>(as_integer(w[i], path + ".weights[" + std::to_string(i) + "]")));
  }
  f.ring = j.contains("ring") ? parse_ring(j["ring"], path + ".ring") : RingPresentation::point();
  if (j.contains("normal_chern")) {
    const json& c = j["normal_chern"];
    if (!c.is_array()) fail(path + ".normal_chern", "expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) {
      f.normal_chern.push_back(parse_class(c[i], f.ring, path + ".normal_chern[" + std::to_string(i) + "]"));
    }
  } else {
    f.normal_chern.assign(f.weights.size(), CohomologyClass(f.ring));
  }
  f.omega = j.contains("omega") ? parse_class(j["omega"], f.ring, path + ".omega") : CohomologyClass(f.ring);
  if (j.contains("todd")) {
    f.todd = parse_class(j["todd"], f.ring, path + ".todd");
  } else if (f.ring->is_point()) {
    f.todd = CohomologyClass(f.ring, ExactScalar(1));
  } else {
    fail(path, "missing field 'todd' (required when the component is not a point)");
  }
  return f;
}

json rational_json(const Rational& r) { return r.to_string(); }

json class_json(const CohomologyClass& c) {
  json out = json::object();
  for (const auto& [mono, value] : c.rational_terms()) out[mono] = value.to_string();
  return out;
}

json scalar_json(const ExactScalar& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(c.to_string());
  return {{"conductor", x.conductor()}, {"coefficients", coeffs}, {"text", x.to_string()}};
}

ExactScalar scalar_from_json(const json& j, const std::string& path) {
  const int n = static_cast<int>(as_integer(require(j, "conductor", path), path + ".conductor"));
  const json& c = require(j, "coefficients", path);
  if (!c.is_array()) fail(path + ".coefficients", "expected an array");
  RatPoly poly;
  for (std::size_t i = 0; i < c.size(); ++i) poly.push_back(as_rational(c[i], path + ".coefficients"));
  if (n == 1) return poly.empty() ? ExactScalar() : ExactScalar(poly[0]);
  return Cyclotomic::from_coefficients(n, poly);
}

json chart_json(const Chart& c) {
  switch (c.kind()) {
    case Chart::Kind::Zero: return {{"kind", "zero"}, {"label", "0"}};
    case Chart::Kind::Infinity: return {{"kind", "infinity"}, {"label", "inf"}};
    case Chart::Kind::Root: break;
  }
  return {{"kind", "root"}, {"conductor", c.conductor()}, {"exponent", c.exponent()}, {"label", c.to_string()}};
}

Chart chart_from_json(const json& j, const std::string& path) {
  const std::string kind = as_string(require(j, "kind", path), path + ".kind");
  if (kind == "zero") return Chart::zero();
  if (kind == "infinity") return Chart::infinity();
  if (kind == "root") {
    return Chart::root(static_cast<int>(as_integer(require(j, "conductor", path), path + ".conductor")),
                       as_integer(require(j, "exponent", path), path + ".exponent"));
  }
  fail(path + ".kind", "unknown chart kind '" + kind + "'");
}

json character_json(const CharacterPolynomial& c) {
  json out = json::object();
  for (const auto& [m, v] : c.coefficients) out[std::to_string(m)] = v;
  return out;
}

CharacterPolynomial character_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  CharacterPolynomial c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long m = 0;
    try {
      m = std::stol(it.key());
    } catch (const std::exception&) {
      fail(path, "weight '" + it.key() + "' is not an integer");
    }
    c.coefficients[m] = as_integer(it.value(), path + "." + it.key());
  }
  return c;
}

json residues_json(const std::vector<ComponentResidues>& table) {
  json out = json::array();
  for (const auto& row : table) {
    json poles = json::array();
    for (const auto& r : row.poles) poles.push_back({{"pole", chart_json(r.pole)}, {"value", scalar_json(r.value)}});
    out.push_back({{"component", row.component}, {"moment", row.moment}, {"poles", poles}, {"sum", scalar_json(row.sum)}});
  }
  return out;
}

std::vector<ComponentResidues> residues_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<ComponentResidues> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    ComponentResidues row;
    row.component = as_string(require(j[i], "component", rp), rp + ".component");
    row.moment = as_integer(require(j[i], "moment", rp), rp + ".moment");
    const json& poles = require(j[i], "poles", rp);
    for (std::size_t k = 0; k < poles.size(); ++k) {
      const std::string pp = rp + ".poles[" + std::to_string(k) + "]";
      row.poles.push_back({chart_from_json(require(poles[k], "pole", pp), pp + ".pole"),
                           scalar_from_json(require(poles[k], "value", pp), pp + ".value")});
    }
    row.sum = scalar_from_json(require(j[i], "sum", rp), rp + ".sum");
    out.push_back(std::move(row));
  }
  return out;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string approx(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(10);
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  os << "~" << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
  const json j = parse_json_text(text);
  if (!j.is_object()) fail("$", "expected an object");
  ProblemInstance p;
  if (j.contains("group")) {
    const std::string g = as_string(j["group"], "$.group");
    try {
      p.group = parse_group(g);
    } catch (const InputError& e) {
      fail("$.group", e.what());
    }
  }
  const json& comps = require(j, "components", "$");
  if (!comps.is_array()) fail("$.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    p.components.push_back(parse_component(comps[i], "$.components[" + std::to_string(i) + "]"));
  }
  return p;
}

ProblemInstance load_instance(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_instance(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string instance_to_json(const ProblemInstance& p, int indent) {
  json comps = json::array();
  for (const auto& f : p.components) {
    json c = {{"name", f.name}, {"moment", f.moment}, {"weights", f.weights}};
    if (!f.ring->is_point()) {
      json gens = json::array();
      for (const auto& g : f.ring->generators()) gens.push_back({{"name", g.name}, {"order", g.order}});
      json integrals = json::object();
      for (const auto& [e, v] : f.ring->integrals()) integrals[f.ring->format_monomial(e)] = v.to_string();
      c["ring"] = {{"generators", gens}, {"top_degree", f.ring->top_degree()}, {"integrals", integrals}};
    }
    json chern = json::array();
    for (const auto& n : f.normal_chern) chern.push_back(class_json(n));
    c["normal_chern"] = chern;
    c["omega"] = class_json(f.omega);
    c["todd"] = class_json(f.todd);
    comps.push_back(std::move(c));
  }
  return json{{"group", to_string(p.group)}, {"components", comps}}.dump(indent);
}

std::string character_to_json(const CharacterPolynomial& c, int indent) { return character_json(c).dump(indent); }

std::string residues_to_json(const std::vector<ComponentResidues>& table, int indent) {
  return residues_json(table).dump(indent);
}

std::string report_to_json(const Report& r, int indent) {
  json j;
  j["source"] = r.source;
  j["instance"] = {{"group", to_string(r.group)},
                   {"conductor", r.conductor},
                   {"complex_dimension", r.complex_dimension},
                   {"components", r.components}};
  json findings = json::array();
  for (const auto& f : r.findings) {
    findings.push_back({{"severity", to_string(f.severity)}, {"code", f.code}, {"component", f.component}, {"message", f.message}});
  }
  j["findings"] = findings;
  j["lefschetz"] = r.lefschetz ? json(r.lefschetz->to_string()) : json(nullptr);
  if (r.reduction) {
    json corrections = json::array();
    for (const auto& c : r.reduction->corrections) {
      json roots = json::array();
      for (const auto& s : c.roots) roots.push_back({{"pole", chart_json(s.pole)}, {"value", scalar_json(s.value)}});
      corrections.push_back({{"order", c.order}, {"value", rational_json(c.value)}, {"roots", roots}});
    }
    j["reduction"] = {{"main_term", rational_json(r.reduction->main_term)},
                      {"corrections", corrections},
                      {"total", rational_json(r.reduction->total)}};
  } else {
    j["reduction"] = nullptr;
  }
  j["oracle"] = r.oracle ? json(*r.oracle) : json(nullptr);
  j["character"] = r.character ? character_json(*r.character) : json(nullptr);
  j["residues"] = residues_json(r.residues);
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  json errors = json::array();
  for (const auto& e : r.errors) errors.push_back({{"stage", e.stage}, {"kind", e.kind}, {"message", e.message}});
  j["errors"] = errors;
  j["timings_us"] = r.timings_us;
  return j.dump(indent);
}

Report report_from_json(std::string_view text) {
  const json j = parse_json_text(text);
  Report r;
  r.source = as_string(require(j, "source", "$"), "$.source");
  const json& inst = require(j, "instance", "$");
  r.group = parse_group(as_string(require(inst, "group", "$.instance"), "$.instance.group"));
  r.conductor = static_cast<int>(as_integer(require(inst, "conductor", "$.instance"), "$.instance.conductor"));
  r.complex_dimension =
      static_cast<int>(as_integer(require(inst, "complex_dimension", "$.instance"), "$.instance.complex_dimension"));
  for (const auto& c : require(inst, "components", "$.instance")) r.components.push_back(as_string(c, "$.instance.components"));

  const json& findings = require(j, "findings", "$");
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const std::string fp = "$.findings[" + std::to_string(i) + "]";
    const std::string sev = as_string(require(findings[i], "severity", fp), fp + ".severity");
    Finding f;
    f.severity = sev == "ERROR" ? Severity::Error : sev == "WARN" ? Severity::Warn : Severity::Info;
    f.code = as_string(require(findings[i], "code", fp), fp + ".code");
    f.component = as_string(require(findings[i], "component", fp), fp + ".component");
    f.message = as_string(require(findings[i], "message", fp), fp + ".message");
    r.findings.push_back(std::move(f));
  }
  if (const json& l = require(j, "lefschetz", "$"); !l.is_null()) r.lefschetz = as_rational(l, "$.lefschetz");
  if (const json& red = require(j, "reduction", "$"); !red.is_null()) {
    ReducedRR rr;
    rr.main_term = as_rational(require(red, "main_term", "$.reduction"), "$.reduction.main_term");
    rr.total = as_rational(require(red, "total", "$.reduction"), "$.reduction.total");
    const json& corr = require(red, "corrections", "$.reduction");
    for (std::size_t i = 0; i < corr.size(); ++i) {
      const std::string cp = "$.reduction.corrections[" + std::to_string(i) + "]";
      OrbitCorrection oc;
      oc.order = static_cast<int>(as_integer(require(corr[i], "order", cp), cp + ".order"));
      oc.value = as_rational(require(corr[i], "value", cp), cp + ".value");
      const json& roots = require(corr[i], "roots", cp);
      for (std::size_t k = 0; k < roots.size(); ++k) {
        const std::string rp = cp + ".roots[" + std::to_string(k) + "]";
        oc.roots.push_back({chart_from_json(require(roots[k], "pole", rp), rp + ".pole"),
                            scalar_from_json(require(roots[k], "value", rp), rp + ".value")});
      }
      rr.corrections.push_back(std::move(oc));
    }
    r.reduction = std::move(rr);
  }
  if (const json& o = require(j, "oracle", "$"); !o.is_null()) r.oracle = as_integer(o, "$.oracle");
  if (const json& c = require(j, "character", "$"); !c.is_null()) r.character = character_from_json(c, "$.character");
  r.residues = residues_from_json(require(j, "residues", "$"), "$.residues");
  r.verdict = parse_verdict(as_string(require(j, "verdict", "$"), "$.verdict"));
  r.reason = as_string(require(j, "reason", "$"), "$.reason");
  for (const auto& e : require(j, "errors", "$")) {
    r.errors.push_back({as_string(require(e, "stage", "$.errors"), "$.errors.stage"),
                        as_string(require(e, "kind", "$.errors"), "$.errors.kind"),
                        as_string(require(e, "message", "$.errors"), "$.errors.message")});
  }
  const json& t = require(j, "timings_us", "$");
  for (auto it = t.begin(); it != t.end(); ++it) r.timings_us[it.key()] = as_integer(it.value(), "$.timings_us." + it.key());
  return r;
}

std::string format_value(const ExactScalar& x, bool decimal) {
  std::string out = x.conductor() == 1 || x.is_rational() ? x.rational_part().to_string()
                                                           : x.to_string() + " [z = zeta_" + std::to_string(x.conductor()) + "]";
  if (decimal) out += " (" + approx(x.to_complex()) + ")";
  return out;
}

std::string render_residue_table(const std::vector<ComponentResidues>& table, bool decimal) {
  std::ostringstream os;
  for (const auto& row : table) {
    os << "  " << row.component << " (moment " << row.moment << ")\n";
    for (const auto& r : row.poles) {
      os << "    res at " << std::left << std::setw(10) << r.pole.to_string() << " " << format_value(r.value, decimal)
         << "\n";
    }
    os << "    sum           " << format_value(row.sum, decimal) << (row.sum.is_zero() ? "  (ok)" : "  (NONZERO)")
       << "\n";
  }
  std::vector<std::pair<Chart, ExactScalar>> columns;
  for (const auto& row : table) {
    for (const auto& r : row.poles) {
      auto it = std::find_if(columns.begin(), columns.end(), [&](const auto& c) { return c.first == r.pole; });
      if (it == columns.end()) {
        columns.emplace_back(r.pole, r.value);
      } else {
        it->second += r.value;
      }
    }
  }
  if (!columns.empty()) os << "  all components\n";
  for (const auto& [pole, value] : columns) {
    os << "    res at " << std::left << std::setw(10) << pole.to_string() << " " << format_value(value, decimal) << "\n";
  }
  return os.str();
}

std::string render_report(const Report& r, bool decimal) {
  std::ostringstream os;
  if (decimal) os << "note: values marked ~ are decimal approximations; exact values precede them\n";
  os << "instance: " << (r.source.empty() ? "(unnamed)" : r.source) << "  group " << to_string(r.group)
     << ", conductor " << r.conductor << ", complex dimension " << r.complex_dimension << ", "
     << r.components.size() << " components\n";
  os << "findings:";
  if (r.findings.empty()) os << " none";
  os << "\n";
  for (const auto& f : r.findings) {
    os << "  " << to_string(f.severity) << " " << f.code << (f.component.empty() ? "" : " [" + f.component + "]")
       << ": " << f.message << "\n";
  }
  auto dec = [&](const Rational& q) { return format_value(ExactScalar(q), decimal); };
  os << "lefschetz side: " << (r.lefschetz ? dec(*r.lefschetz) : "unavailable") << "\n";
  if (r.reduction) {
    os << "reduction side: " << dec(r.reduction->total) << "\n";
    os << "  main term (t = 1): " << dec(r.reduction->main_term) << "\n";
    for (const auto& c : r.reduction->corrections) {
      os << "  correction, roots of order " << c.order << ": " << dec(c.value) << "\n";
      for (const auto& s : c.roots) os << "    at " << s.pole.to_string() << ": " << format_value(s.value, decimal) << "\n";
    }
    if (r.reduction->corrections.empty()) os << "  no corrections\n";
  } else {
    os << "reduction side: unavailable\n";
  }
  os << "oracle: ";
  if (r.oracle) {
    os << *r.oracle << "  (character " << r.character->to_string() << ")\n";
  } else {
    os << "unavailable\n";
  }
  if (!r.residues.empty()) {
    os << "residues of the Weyl-weighted forms (per component diagnostics):\n" << render_residue_table(r.residues, decimal);
  }
  for (const auto& e : r.errors) os << "error in " << e.stage << " (" << e.kind << "): " << e.message << "\n";
  os << "verdict: " << to_string(r.verdict) << "  " << r.reason << "\n";
  if (!r.timings_us.empty()) {
    os << "timings:";
    for (const auto& [stage, us] : r.timings_us) os << " " << stage << " " << us << "us";
    os << "\n";
  }
  return os.str();
}

}  // namespace rrloc
