#include "jacobi_cli/documents.hpp"

#include <cmath>
#include <cstdio>
#include <variant>

#include "jacobi/errors.hpp"

namespace jacobi::cli {
namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// " (line N)" for the first occurrence of "key" in the source, if any.
std::string where(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return "";
  return " (line " + std::to_string(line_col(text, pos).first) + ")";
}

Rational rational_entry(const json& v, const std::string& name, std::string_view text, std::string_view key) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(name + ": " + e.what() + where(text, key));
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) {
    throw ValidationError(name + ": floating literal; exact values must be strings such as \"3/7\"" + where(text, key));
  }
  throw ValidationError(name + ": expected a rational string" + where(text, key));
}

std::vector<Rational> rational_list(const json& doc, const char* key, std::string_view text) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ValidationError(std::string("pencil document needs an array \"") + key + "\"" + where(text, key));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    out.push_back(rational_entry(doc[key][i], std::string(key) + "[" + std::to_string(i) + "]", text, key));
  }
  return out;
}

std::vector<std::string> strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

double digits15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

json complex_json(const ComplexApprox& z) { return {{"re", digits15(z.real())}, {"im", digits15(z.imag())}}; }

json one_line(const Permutation& p) {
  json out = json::array();
  for (std::size_t v : p) out.push_back(v + 1);
  return out;
}

json list_of(const std::vector<BiPoly>& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

struct DataJson {
  json operator()(const CutData& d) const { return {{"index", d.index}}; }
  json operator()(const ConstantBranchData& d) const { return {{"indices", d.indices}}; }
  json operator()(const PalindromeData& d) const {
    return {{"odd_length", d.odd_length},
            {"half_diagonal", strings(d.half_diagonal)},
            {"half_couplings", strings(d.half_couplings)},
            {"middle_coupling", d.middle_coupling.str()}};
  }
  json operator()(const ScalarBlockData& d) const {
    json sqf = json::array();
    for (const auto& p : d.squarefree) sqf.push_back(to_json(p));
    json rf = json::array();
    for (const auto& p : d.rational_factors) rf.push_back(to_json(p));
    return {{"shift", d.shift.str()},
            {"q", to_json(d.q)},
            {"squarefree", sqf},
            {"rational_factors", rf},
            {"rational_factorization_complete", d.rational_factorization_complete},
            {"absolute_degree_pattern", d.absolute_degree_pattern}};
  }
};

}  // namespace

json parse_text(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ValidationError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": malformed JSON");
  }
}

JacobiPencil pencil_from_json(const json& doc, std::string_view text) {
  if (!doc.is_object()) throw ValidationError("pencil document must be a JSON object");
  std::vector<Rational> a = rational_list(doc, "a", text);
  std::vector<Rational> b = rational_list(doc, "b", text);
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1) {
      throw ValidationError("\"n\" must be a positive integer" + where(text, "n"));
    }
    const auto n = doc["n"].get<std::size_t>();
    if (a.size() != n) {
      throw ValidationError("\"a\" has " + std::to_string(a.size()) + " entries, expected n = " + std::to_string(n) +
                            where(text, "a"));
    }
  }
  if (a.empty() || b.size() + 1 != a.size()) {
    throw ValidationError("\"b\" has " + std::to_string(b.size()) + " entries, expected " +
                          std::to_string(a.empty() ? 0 : a.size() - 1) + where(text, "b"));
  }
  return JacobiPencil(std::move(a), std::move(b));
}

json to_json(const JacobiPencil& p) {
  return {{"n", p.size()}, {"a", strings(p.diagonal())}, {"b", strings(p.couplings())}};
}

json to_json(const UniPoly& p) { return strings(p); }

json to_json(const BiPoly& p) {
  json layers = json::array();
  for (const auto& l : p.layers()) layers.push_back(strings(l));
  return {{"form", form_name(p.form())}, {"coefficients", layers}};
}

BiPoly bipoly_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("form") || !doc.contains("coefficients")) {
    throw ValidationError("polynomial document needs \"form\" and \"coefficients\"");
  }
  const std::string f = doc["form"].get<std::string>();
  if (f != "t" && f != "w") throw ValidationError("form must be \"t\" or \"w\"");
  std::vector<UniPoly> layers;
  for (const auto& row : doc["coefficients"]) {
    std::vector<Rational> c;
    for (const auto& x : row) c.push_back(rational_entry(x, "coefficient", {}, {}));
    layers.emplace_back(std::move(c));
  }
  return BiPoly(f == "t" ? Form::T : Form::W, std::move(layers));
}

json to_json(const Certificate& c) {
  return {{"kind", mechanism_name(c.kind)},
          {"block", {c.block.r, c.block.s}},
          {"target", to_json(c.target)},
          {"factors", list_of(c.factors)},
          {"data", std::visit(DataJson{}, c.data)},
          {"verified", c.verified}};
}

json to_json(const MechanismReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return {{"reducible", r.reducible()},
          {"verified", r.verified},
          {"certificates", certs},
          {"residual_factors", list_of(r.residual_factors)}};
}

json to_json(const Decision& d) {
  json factors = json::array();
  for (std::size_t i = 0; i < d.factors_t.size(); ++i) {
    factors.push_back({{"sites", d.factor_sites[i]}, {"t", to_json(d.factors_t[i])}, {"w", to_json(d.factors_w[i])}});
  }
  return {{"status", d.status == DecisionStatus::Reducible ? "Reducible" : "Irreducible"},
          {"witnesses", d.witnesses},
          {"factors", factors},
          {"subsets_tested", d.subsets_tested}};
}

json to_json(const MonodromyReport& r) {
  json bps = json::array();
  for (const auto& b : r.branch_points) bps.push_back(complex_json(b));
  json perms = json::array();
  for (const auto& p : r.permutations) perms.push_back(one_line(p));
  json out = {{"base_point", complex_json(r.base_point)},
              {"branch_points", bps},
              {"permutations", perms},
              {"sheet_labels", r.sheet_labels},
              {"labels_are_sites", r.labels_are_sites},
              {"group_order", r.group_order ? json(*r.group_order) : json(nullptr)},
              {"orbits", r.orbits},
              {"orbit_sizes", orbit_factor_degrees(r)},
              {"certified_step", digits15(r.certified_step)},
              {"infinity", one_line(r.infinity)},
              {"infinity_consistent", r.infinity_consistent ? json(*r.infinity_consistent) : json(nullptr)}};
  return out;
}

json to_json(const SampleRecord& s, bool full) {
  json out = {{"index", s.index},
              {"pencil", to_json(s.pencil)},
              {"outcome", s.outcome},
              {"method", s.method},
              {"factor_degrees", s.factor_degrees},
              {"note", s.note}};
  if (full) {
    if (s.mechanisms) out["mechanisms"] = to_json(*s.mechanisms);
    if (s.hensel) out["hensel"] = to_json(*s.hensel);
    if (s.orbit_sizes) out["orbit_sizes"] = *s.orbit_sizes;
  }
  return out;
}

json to_json(const CampaignReport& r) {
  json witnesses = json::array();
  for (std::size_t w : r.witnesses) witnesses.push_back(to_json(r.samples[w], true));
  return {{"name", r.name},
          {"samples", r.samples.size()},
          {"counts", r.counts},
          {"witnesses", witnesses},
          {"mismatches", r.mismatches},
          {"notes", r.notes},
          {"runtime_seconds", r.runtime_seconds}};
}

}  // namespace jacobi::cli
