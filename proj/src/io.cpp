#include "subadd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "subadd/error.hpp"

namespace subadd::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, source + ": " + (field.empty() ? "" : "field " + field + ": ") + what);
}

const Json& member(const Json& j, const char* key, const std::string& source, const std::string& path) {
  if (!j.is_object()) fail(source, path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_number_integer()) fail(source, field, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_string()) fail(source, field, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_array()) fail(source, field, "expected an array");
  return j;
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Json curve_names(const surface::ResolutionModel& model, const std::vector<std::size_t>& curves) {
  Json out = Json::array();
  for (auto i : curves) out.push_back(model.curve(i).name);
  return out;
}

Json exponent_json(const toric::Exponent& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(x);
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    fail(source, "", "invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

surface::ModelDescription model_from_json(const Json& j, const std::string& src) {
  surface::ModelDescription d;
  const auto& curves = as_array(member(j, "base_curves", src, ""), src, "base_curves");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string f = idx("base_curves", i);
    surface::CurveSpec c;
    c.name = as_string(member(curves[i], "name", src, f), src, f + ".name");
    c.self_intersection = static_cast<int>(as_int(member(curves[i], "self_intersection", src, f), src, f + ".self_intersection"));
    if (curves[i].contains("kind")) {
      const auto kind = as_string(curves[i]["kind"], src, f + ".kind");
      if (kind == "marked") c.kind = surface::CurveKind::Marked;
      else if (kind != "exceptional") fail(src, f + ".kind", "expected \"exceptional\" or \"marked\"");
    }
    d.base_curves.push_back(c);
  }
  if (j.contains("base_edges")) {
    const auto& edges = as_array(j["base_edges"], src, "base_edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string f = idx("base_edges", i);
      if (!edges[i].is_array() || edges[i].size() != 2) fail(src, f, "expected a pair of curve names");
      d.base_edges.emplace_back(as_string(edges[i][0], src, f + "[0]"), as_string(edges[i][1], src, f + "[1]"));
    }
  }
  if (j.contains("blowups")) {
    const auto& bl = as_array(j["blowups"], src, "blowups");
    for (std::size_t i = 0; i < bl.size(); ++i) {
      const std::string f = idx("blowups", i);
      surface::BlowupSpec b;
      b.name = as_string(member(bl[i], "name", src, f), src, f + ".name");
      const auto& on = as_array(member(bl[i], "center_on", src, f), src, f + ".center_on");
      for (std::size_t k = 0; k < on.size(); ++k) b.center_on.push_back(as_string(on[k], src, idx(f + ".center_on", k)));
      d.blowups.push_back(b);
    }
  }
  return d;
}

Json model_to_json(const surface::ModelDescription& desc) {
  Json curves = Json::array(), edges = Json::array(), blowups = Json::array();
  for (const auto& c : desc.base_curves)
    curves.push_back({{"name", c.name},
                      {"self_intersection", c.self_intersection},
                      {"kind", c.kind == surface::CurveKind::Marked ? "marked" : "exceptional"}});
  for (const auto& [a, b] : desc.base_edges) edges.push_back({a, b});
  for (const auto& b : desc.blowups) blowups.push_back({{"name", b.name}, {"center_on", b.center_on}});
  return {{"base_curves", curves}, {"base_edges", edges}, {"blowups", blowups}};
}

surface::QCycle cycle_from_json(const surface::ResolutionModel& model, const Json& j, const std::string& src) {
  if (!j.is_object()) fail(src, "", "expected an object mapping curve names to rationals");
  surface::QCycle z = model.zero();
  for (const auto& [name, value] : j.items()) {
    const auto i = model.find(name);
    if (!i) fail(src, name, "unknown curve");
    Rational r;
    if (value.is_number_integer()) {
      r = Rational(static_cast<long>(value.get<std::int64_t>()));
    } else {
      try {
        r = Rational::parse(as_string(value, src, name));
      } catch (const Error&) {
        fail(src, name, "expected a rational string such as \"3/2\"");
      }
    }
    z[*i] = r;
  }
  return z;
}

Json cycle_to_json(const surface::ResolutionModel& model, const surface::QCycle& z) {
  Json out = Json::object();
  for (std::size_t i = 0; i < z.size(); ++i) out[model.curve(i).name] = z[i].str();
  return out;
}

Json cycle_to_json(const surface::ResolutionModel& model, const surface::Cycle& z) {
  return cycle_to_json(model, surface::to_q(z));
}

toric::ToricRing ring_from_json(const Json& j, const std::string& src) {
  const auto rank = as_int(member(j, "rank", src, ""), src, "rank");
  if (rank < 1) fail(src, "rank", "must be positive");
  std::vector<toric::Congruence> cs;
  if (j.contains("congruences")) {
    const auto& arr = as_array(j["congruences"], src, "congruences");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string f = idx("congruences", i);
      toric::Congruence c;
      const auto& w = as_array(member(arr[i], "weights", src, f), src, f + ".weights");
      for (std::size_t k = 0; k < w.size(); ++k) c.weights.push_back(as_int(w[k], src, idx(f + ".weights", k)));
      c.modulus = as_int(member(arr[i], "modulus", src, f), src, f + ".modulus");
      if (c.weights.size() != static_cast<std::size_t>(rank)) fail(src, f + ".weights", "length differs from rank");
      if (c.modulus < 1) fail(src, f + ".modulus", "must be positive");
      cs.push_back(c);
    }
  }
  return toric::ToricRing(static_cast<std::size_t>(rank), cs);
}

Json ring_to_json(const toric::ToricRing& ring) {
  Json cs = Json::array();
  for (const auto& c : ring.congruences()) cs.push_back({{"weights", c.weights}, {"modulus", c.modulus}});
  return {{"rank", ring.rank()}, {"congruences", cs}};
}

toric::MonomialIdeal ideal_from_json(const toric::ToricRing& ring, const Json& j, const std::string& src) {
  const auto& arr = as_array(member(j, "generators", src, ""), src, "generators");
  if (arr.empty()) fail(src, "generators", "needs at least one generator");
  std::vector<toric::Exponent> gens;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string f = idx("generators", i);
    const auto& g = as_array(arr[i], src, f);
    if (g.size() != ring.rank()) fail(src, f, "length differs from the ring rank");
    toric::Exponent e;
    for (std::size_t k = 0; k < g.size(); ++k) {
      e.push_back(as_int(g[k], src, idx(f, k)));
      if (e.back() < 0) fail(src, idx(f, k), "must be nonnegative");
    }
    if (!ring.in_semigroup(e)) fail(src, f, "not in the semigroup of the ring");
    gens.push_back(e);
  }
  return toric::MonomialIdeal(ring, gens);
}

Json generators_to_json(const std::vector<toric::Exponent>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(exponent_json(g));
  return out;
}

Json to_json(const surface::ResolutionModel& model, const antinefseq::SubadditivityCertificate& cert) {
  Json out;
  out["holds"] = cert.holds;
  out["witness"] = cert.witness ? Json(model.curve(*cert.witness).name) : Json(nullptr);
  out["strict_at"] = curve_names(model, cert.strict);
  out["j_a"] = cycle_to_json(model, cert.j_a);
  out["j_b"] = cycle_to_json(model, cert.j_b);
  out["j_ab"] = cycle_to_json(model, cert.j_ab);
  out["sequence_checked"] = cert.sequence_checked;
  out["warnings"] = cert.warnings;
  return out;
}

Json to_json(const antinefseq::StrongSubaddReport& r) {
  Json out;
  out["z"] = cycle_to_json(r.model, r.z);
  out["c_small"] = r.c_small.str();
  out["c_big"] = r.c_big.str();
  out["power"] = r.power;
  out["j_small"] = cycle_to_json(r.model, r.small);
  out["j_big"] = cycle_to_json(r.model, r.big);
  out["inclusion_holds"] = r.inclusion_holds;
  out["witnesses"] = curve_names(r.model, r.witnesses);
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  out["checks"] = checks;
  return out;
}

Json to_json(const toric::MonomialCertificate& cert) {
  Json out;
  out["holds"] = cert.holds;
  out["witness"] = cert.witness ? exponent_json(*cert.witness) : Json(nullptr);
  out["j_ab"] = generators_to_json(cert.j_ab);
  out["j_a"] = generators_to_json(cert.j_a);
  out["j_b"] = generators_to_json(cert.j_b);
  return out;
}

Json to_json(const toric::ExploreReport& r) {
  Json out;
  out["trials_run"] = r.trials_run;
  out["filtered"] = r.filtered;
  out["gorenstein_note"] = r.gorenstein_note;
  Json findings = Json::array();
  for (const auto& f : r.findings)
    findings.push_back({{"trial", f.trial},
                        {"ring", ring_to_json(f.ring)},
                        {"ideal_a", generators_to_json(f.a.generators())},
                        {"ideal_b", generators_to_json(f.b.generators())},
                        {"certificate", to_json(f.certificate)}});
  out["violations"] = findings;
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace subadd::io
