#include "subadd/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "subadd/error.hpp"
#include "subadd/instances.hpp"
#include "subadd/surface.hpp"

namespace subadd {

namespace {

using surface::Cycle;
using surface::QCycle;
using surface::ResolutionModel;

// "3*E1 + 2*F" in curve order; "0" for the zero cycle.
std::string show(const ResolutionModel& m, const QCycle& z) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == Rational(0)) continue;
    if (!out.empty()) out += " + ";
    if (z[i] != Rational(1)) out += z[i].str() + "*";
    out += m.curve(i).name;
  }
  return out.empty() ? "0" : out;
}

std::string show(const ResolutionModel& m, const Cycle& z) { return show(m, surface::to_q(z)); }

std::string show(const toric::Exponent& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::string show(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string show(bool b) { return b ? "true" : "false"; }

QCycle named(const ResolutionModel& m, std::initializer_list<std::pair<const char*, Rational>> terms) {
  QCycle z = m.zero();
  for (const auto& [name, c] : terms) z[m.id(name).index] = c;
  return z;
}

Cycle named_int(const ResolutionModel& m, std::initializer_list<std::pair<const char*, long>> terms) {
  Cycle z = m.zero_cycle();
  for (const auto& [name, c] : terms) z[m.id(name).index] = c;
  return z;
}

class Builder {
 public:
  explicit Builder(ReproReport& r) : r_(r) {}
  void check(std::string quantity, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    r_.checks.push_back({std::move(quantity), std::move(expected), std::move(actual), ok});
  }

 private:
  ReproReport& r_;
};

void example_a1_blown_up(Builder& b) {
  const auto m = surface::a1_blown_up_once();
  const auto fa = named_int(m, {{"E1", 2}, {"F", 1}});
  b.check("K", show(m, named_int(m, {{"E1", 1}})), show(m, m.canonical()));
  b.check("F_a anti-nef", "true", show(surface::is_anti_nef(m, fa)));
  b.check("an(F_a - K)", show(m, named_int(m, {{"E1", 1}, {"F", 1}})), show(m, surface::multiplier_cycle(m, fa, Rational(1))));
  b.check("an(2F_a - K)", show(m, named_int(m, {{"E1", 3}, {"F", 2}})), show(m, surface::multiplier_cycle(m, fa, Rational(2))));
  const auto cert = antinefseq::subadditivity_check_2d(m, fa, fa);
  b.check("J(a^2) in J(a)^2", "true", show(cert.holds));
  std::string strict;
  for (auto i : cert.strict) strict += (strict.empty() ? "" : ",") + m.curve(i).name;
  b.check("strict at", "E1", strict);
  b.check("cycle of J(a)^2", show(m, named_int(m, {{"E1", 2}, {"F", 2}})), show(m, cert.j_a + cert.j_b));
  b.check("computation sequence agrees", "true", show(cert.sequence_checked));
}

void example_five_two(Builder& b) {
  const auto m = surface::quotient_five_two_blown_up_twice();
  std::string chain;
  for (const char* c : {"F1", "E1", "E2", "F2"}) {
    const auto i = m.id(c).index;
    chain += (chain.empty() ? "" : ",") + std::to_string(m.meet(i, i));
  }
  b.check("self-intersections F1,E1,E2,F2", "-3,-2,-1,-5", chain);
  b.check("K", show(m, named(m, {{"F1", Rational(-1, 5)}, {"E1", Rational(2, 5)}, {"E2", 1}, {"F2", Rational(-2, 5)}})),
          show(m, m.canonical()));
  const auto z = named_int(m, {{"F1", 1}, {"E1", 3}, {"E2", 5}, {"F2", 1}});
  b.check("Z anti-nef", "true", show(surface::is_anti_nef(m, z)));
  const Cycle zk = z - surface::ceil_cycle(m.canonical());
  const Cycle closure = surface::anti_nef_closure(m, zk);
  b.check("an(Z - ceil K)", show(m, zk + named_int(m, {{"E1", 1}})), show(m, closure));
  const Cycle formula = antinefseq::ceil_closure_formula(m, z);
  b.check("ceil K formula", show(m, zk), show(m, formula));
  b.check("ceil K formula equals closure", "false", show(formula == closure));
  std::string gor = "no error";
  try {
    antinefseq::gorenstein_closure_formula(m, z);
  } catch (const Error& e) {
    gor = std::string(to_string(e.kind()));
  }
  b.check("Gorenstein formula", "NotGorenstein", gor);
}

void example_rulings(Builder& b) {
  const auto m = surface::a1_with_two_rulings();
  const auto d1 = surface::total_transform_marked(m, m.id("D1").index);
  const auto d2 = surface::total_transform_marked(m, m.id("D2").index);
  b.check("f^* D1", show(m, named(m, {{"D1", 1}, {"E", Rational(1, 2)}})), show(m, d1));
  b.check("f^* D2", show(m, named(m, {{"D2", 1}, {"E", Rational(1, 2)}})), show(m, d2));
  const auto cert = antinefseq::subadditivity_check_2d(m, d1, d2);
  b.check("cycle of J(D1 + D2)", show(m, named_int(m, {{"D1", 1}, {"D2", 1}, {"E", 1}})), show(m, cert.j_ab));
  b.check("cycle of J(D1) + cycle of J(D2)", show(m, named_int(m, {{"D1", 1}, {"D2", 1}, {"E", 2}})), show(m, cert.j_a + cert.j_b));
  b.check("J(D1 + D2) in J(D1)J(D2)", "false", show(cert.holds));
  b.check("witness", "E", cert.witness ? m.curve(*cert.witness).name : "none");
}

void example_irreducible(Builder& b) {
  for (int k = 2; k <= 5; ++k) {
    const auto r = antinefseq::strong_subadd_counterexample_irreducible(k);
    const auto& m = r.model;
    const std::string tag = "k=" + std::to_string(k) + ": ";
    b.check(tag + "exponents", Rational(1, k + 1).str() + ", " + Rational(2, k + 1).str(),
            r.c_small.str() + ", " + r.c_big.str());
    b.check(tag + "cycle of J(I^(1/(k+1)))", show(m, named_int(m, {{"E1", 1}, {"E2", 1}})), show(m, r.small));
    b.check(tag + "cycle of J(I^(2/(k+1)))", show(m, named_int(m, {{"E1", 3}, {"E2", 1}})), show(m, r.big));
    b.check(tag + "inclusion holds", "false", show(r.inclusion_holds));
    b.check(tag + "fails at", "E2", r.witnesses.empty() ? "none" : m.curve(r.witnesses.front()).name);
    for (const auto& [name, ok] : r.checks) b.check(tag + name, "true", show(ok));
  }
}

void example_reducible(Builder& b) {
  const auto m = surface::hirzebruch_jung(5, 2);
  const auto r = antinefseq::strong_subadd_counterexample_reducible(m, 2);
  b.check("Z", show(m, named_int(m, {{"E1", 2}, {"E2", 1}})), show(m, r.z));
  b.check("cycle of J(I)", show(m, named_int(m, {{"E1", 2}, {"E2", 1}})), show(m, r.big));
  b.check("cycle of J(I^(1/2))", show(m, named_int(m, {{"E1", 1}, {"E2", 1}})), show(m, r.small));
  b.check("inclusion holds", "false", show(r.inclusion_holds));
  b.check("fails at", "E2", r.witnesses.empty() ? "none" : m.curve(r.witnesses.front()).name);
  for (const auto& [name, ok] : r.checks) b.check(name, "true", show(ok));
}

void example_q41(Builder& b) {
  using namespace toric;
  const auto ring = ToricRing::cyclic_quotient(41, {35, 28, 20});
  const MonomialIdeal ideal(ring, {{410, 0, 0}, {0, 410, 0}, {0, 0, 410}, {8, 1, 1}, {4, 6, 1}, {4, 1, 8}});
  const auto poly = newton_polyhedron(ideal);
  const Facet plane{{35, 28, 20}, 328};
  b.check("facet (35,28,20).x >= 328", "true",
          show(std::find(poly.facets.begin(), poly.facets.end(), plane) != poly.facets.end()));
  const std::vector<Exponent> tri{{8, 1, 1}, {4, 6, 1}, {4, 1, 8}};
  std::string tight;
  for (const auto& g : tri) tight += (tight.empty() ? "" : ",") + std::to_string(35 * g[0] + 28 * g[1] + 20 * g[2]);
  b.check("facet values at the three generators", "328,328,328", tight);

  const auto l1 = barycentric_solve(tri, {11, 4, 8});
  b.check("(11,4,8) in barycentric coordinates", "(245/328, 131/328, 281/328)", show(l1));
  b.check("coefficient sum", "657/328", (l1[0] + l1[1] + l1[2]).str());
  b.check("(11,4,8) in Int(2P(I))", "true", show(in_interior(poly, {11, 4, 8}, Rational(2))));
  const auto j2 = multiplier_monomials(ring, ideal, Rational(2));
  b.check("(10,3,7) in J(I^2)", "true", show(ideal_membership(j2, {10, 3, 7})));

  const auto l2 = barycentric_solve(tri, {3, 3, 7});
  b.check("(3,3,7) in barycentric coordinates", "(-83/328, 131/328, 281/328)", show(l2));
  b.check("(3,3,7) in Int(P(I))", "false", show(in_interior(poly, {3, 3, 7}, Rational(1))));
  const auto j1 = multiplier_monomials(ring, ideal, Rational(1));
  b.check("(8,1,1) in J(I)", "true", show(ideal_membership(j1, {8, 1, 1})));
  b.check("(2,2,6) in J(I)", "false", show(ideal_membership(j1, {2, 2, 6})));
  b.check("(10,3,7) in J(I)^2", "false", show(product_membership(j1, j1, {10, 3, 7})));
  const auto cert = subadditivity_check_monomial(ring, ideal, ideal);
  b.check("J(I^2) in J(I)^2", "false", show(cert.holds));
  b.check("witness", "(10,3,7)", cert.witness ? show(*cert.witness) : "none");
}

struct Entry {
  const char* title;
  std::function<void(Builder&)> run;
};

const std::map<std::string, Entry>& catalog() {
  static const std::map<std::string, Entry> c{
      {"2.6.1", {"A1 blown up once: closures and strict containment", example_a1_blown_up}},
      {"2.6.2", {"1/5(1,2) blown up twice: canonical divisor and the ceiling formula", example_five_two}},
      {"2.3.2", {"A1 with two rulings: divisor subadditivity fails", example_rulings}},
      {"2.4.1", {"single exceptional curve: strong subadditivity fails", example_irreducible}},
      {"2.4.2", {"HJ(5,2): strong subadditivity fails", example_reducible}},
      {"3.2", {"1/41(35,28,20): monomial subadditivity fails", example_q41}},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& reproduce_ids() {
  static const std::vector<std::string> ids{"2.6.1", "2.6.2", "2.3.2", "2.4.1", "2.4.2", "3.2"};
  return ids;
}

ReproReport reproduce(const std::string& id) {
  const auto it = catalog().find(id);
  if (it == catalog().end()) throw Error(ErrorKind::UnknownExample, "no example \"" + id + "\"");
  ReproReport r;
  r.id = id;
  r.title = it->second.title;
  Builder b(r);
  it->second.run(b);
  r.passed = true;
  for (const auto& c : r.checks)
    if (!c.ok) {
      r.passed = false;
      r.first_mismatch = c.quantity;
      break;
    }
  return r;
}

io::Json to_json(const ReproReport& r) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"quantity", c.quantity}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  io::Json out;
  out["id"] = r.id;
  out["title"] = r.title;
  out["passed"] = r.passed;
  out["first_mismatch"] = r.first_mismatch ? io::Json(*r.first_mismatch) : io::Json(nullptr);
  out["checks"] = checks;
  return out;
}

}  // namespace subadd
