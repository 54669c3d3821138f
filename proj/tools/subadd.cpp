// subadd: command-line front end. Reports are JSON; exit status is 0 when
// the checked inclusion holds, 1 when a violation is found, 2 on bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "subadd/antinefseq.hpp"
#include "subadd/error.hpp"
#include "subadd/io.hpp"
#include "subadd/reproduce.hpp"
#include "subadd/surface.hpp"
#include "subadd/toric.hpp"

namespace {

using namespace subadd;
using io::Json;

struct Options {
  std::string model, ideal_a, ideal_b, ring, ideal, id, output;
  std::string c = "1", d = "1";
  std::optional<int> k, n;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::int64_t max_coordinate = 30, max_modulus = 12;
  std::size_t max_generators = 3;
  bool no_filter = false, full_lattice = false, timing = false;
};

struct Outcome {
  Json result;
  bool violation = false;
};

// Collects the command echo and the bytes of every input file read.
class Inputs {
 public:
  explicit Inputs(std::string verb) { echo_["verb"] = std::move(verb); }
  void option(const std::string& key, const Json& value) {
    echo_[key] = value;
    digest_ += key + "=" + value.dump() + "\n";
  }
  Json file(const std::string& key, const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::ParseError, "missing required option --" + key);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    option(key, path);
    digest_ += ss.str() + "\n";
    return io::parse_json(ss.str(), path);
  }
  const Json& echo() const { return echo_; }
  std::string digest() const { return io::fnv1a_hex(digest_); }

 private:
  Json echo_;
  std::string digest_;
};

Rational exponent(const std::string& text, const char* flag) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, std::string("option ") + flag + ": not a rational: \"" + text + "\"");
  }
  if (r.sign() <= 0) throw Error(ErrorKind::InvalidParameters, std::string("option ") + flag + " must be positive");
  return r;
}

surface::ResolutionModel load_model(Inputs& in, const Options& o) {
  return surface::build_model(io::model_from_json(in.file("model", o.model), o.model));
}

Outcome run_check2d(Inputs& in, const Options& o) {
  Outcome out;
  if (o.k) {
    in.option("k", *o.k);
    auto r = antinefseq::strong_subadd_counterexample_irreducible(*o.k);
    out.result = io::to_json(r);
    out.violation = !r.inclusion_holds;
    return out;
  }
  const auto model = load_model(in, o);
  if (o.n) {
    in.option("n", *o.n);
    auto r = antinefseq::strong_subadd_counterexample_reducible(model, *o.n);
    out.result = io::to_json(r);
    out.violation = !r.inclusion_holds;
    return out;
  }
  const auto fa = io::cycle_from_json(model, in.file("ideal-a", o.ideal_a), o.ideal_a);
  const auto fb = io::cycle_from_json(model, in.file("ideal-b", o.ideal_b), o.ideal_b);
  const auto cert = antinefseq::subadditivity_check_2d(model, fa, fb);
  out.result = io::to_json(model, cert);
  out.violation = !cert.holds;
  return out;
}

Outcome run_multiplier(Inputs& in, const Options& o) {
  const Rational c = exponent(o.c, "-c");
  in.option("c", c.str());
  Outcome out;
  if (!o.model.empty()) {
    const auto model = load_model(in, o);
    const auto z = io::cycle_from_json(model, in.file("ideal", o.ideal), o.ideal);
    out.result["cycle"] = io::cycle_to_json(model, surface::multiplier_cycle(model, z, c));
    return out;
  }
  const auto ring = io::ring_from_json(in.file("ring", o.ring), o.ring);
  const auto ideal = io::ideal_from_json(ring, in.file("ideal", o.ideal), o.ideal);
  out.result["generators"] = io::generators_to_json(toric::multiplier_monomials(ring, ideal, c).generators());
  return out;
}

Outcome run_mono(Inputs& in, const Options& o, bool strong) {
  const auto ring = io::ring_from_json(in.file("ring", o.ring), o.ring);
  const auto a = io::ideal_from_json(ring, in.file("ideal-a", o.ideal_a), o.ideal_a);
  const auto b = io::ideal_from_json(ring, in.file("ideal-b", o.ideal_b), o.ideal_b);
  toric::MonomialCertificate cert;
  if (strong) {
    const Rational c = exponent(o.c, "-c"), d = exponent(o.d, "-d");
    in.option("c", c.str());
    in.option("d", d.str());
    cert = toric::strong_subadd_check_monomial(ring, a, b, c, d);
  } else {
    cert = toric::subadditivity_check_monomial(ring, a, b);
  }
  return {io::to_json(cert), !cert.holds};
}

Outcome run_reproduce(Inputs& in, const Options& o) {
  if (o.id.empty()) throw Error(ErrorKind::ParseError, "missing required option --id");
  in.option("id", o.id);
  Outcome out;
  if (o.id == "all") {
    out.result = Json::array();
    for (const auto& id : reproduce_ids()) {
      const auto r = reproduce(id);
      out.result.push_back(to_json(r));
      out.violation = out.violation || !r.passed;
    }
    return out;
  }
  const auto r = reproduce(o.id);
  return {to_json(r), !r.passed};
}

Outcome run_explore(Inputs& in, const Options& o) {
  toric::ExploreConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.max_coordinate = o.max_coordinate;
  cfg.max_modulus = o.max_modulus;
  cfg.max_generators = o.max_generators;
  cfg.gorenstein_only = !o.no_filter;
  cfg.full_lattice = o.full_lattice;
  in.option("trials", o.trials);
  in.option("seed", o.seed);
  in.option("max_coordinate", o.max_coordinate);
  in.option("max_modulus", o.max_modulus);
  in.option("max_generators", o.max_generators);
  in.option("gorenstein_filter", !o.no_filter);
  in.option("full_lattice", o.full_lattice);
  if (!o.ring.empty()) {
    cfg.ring = io::ring_from_json(in.file("ring", o.ring), o.ring);
    cfg.rank = cfg.ring->rank();
  }
  if (!o.ideal_a.empty() || !o.ideal_b.empty()) {
    if (!cfg.ring) throw Error(ErrorKind::ParseError, "--ideal-a/--ideal-b need --ring");
    cfg.ideal_a = io::ideal_from_json(*cfg.ring, in.file("ideal-a", o.ideal_a), o.ideal_a).generators();
    cfg.ideal_b = io::ideal_from_json(*cfg.ring, in.file("ideal-b", o.ideal_b), o.ideal_b).generators();
  }
  const auto r = toric::explore_question33(cfg);
  return {io::to_json(r), !r.findings.empty()};
}

int emit(const Json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "subadd: cannot write " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier ideals and the subadditivity inclusion J(ab) in J(a)J(b)"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--output", o.output, "Write the JSON report here instead of standard output");
    s->add_flag("--timing", o.timing, "Add wall time to the report");
  };
  auto* check2d = app.add_subcommand("check2d", "Subadditivity on a resolution graph");
  check2d->add_option("--model", o.model, "Model file");
  check2d->add_option("--ideal-a", o.ideal_a, "Cycle file for a");
  check2d->add_option("--ideal-b", o.ideal_b, "Cycle file for b");
  check2d->add_option("-k", o.k, "Strong subadditivity on a single -k curve blown up once");
  check2d->add_option("-n", o.n, "Strong subadditivity J(I) in J(I^(1/n))^n on --model");
  auto* mult = app.add_subcommand("multiplier", "Multiplier ideal J(I^c) of a cycle or a monomial ideal");
  mult->add_option("--model", o.model, "Model file (cycle input)");
  mult->add_option("--ring", o.ring, "Ring file (monomial input)");
  mult->add_option("--ideal", o.ideal, "Cycle file or ideal file");
  mult->add_option("-c", o.c, "Exponent, e.g. 3/2");
  auto* mono = app.add_subcommand("checkmono", "Monomial subadditivity on a toric ring");
  auto* strong = app.add_subcommand("strongmono", "J(a^c b^d) in J(a^c)J(b^d) on a toric ring");
  for (auto* s : {mono, strong}) {
    s->add_option("--ring", o.ring, "Ring file");
    s->add_option("--ideal-a", o.ideal_a, "Ideal file for a");
    s->add_option("--ideal-b", o.ideal_b, "Ideal file for b");
  }
  strong->add_option("-c", o.c, "Exponent of a");
  strong->add_option("-d", o.d, "Exponent of b");
  auto* repro = app.add_subcommand("reproduce", "Recompute a built-in worked example");
  repro->add_option("--id", o.id, "Example id or \"all\"");
  auto* explore = app.add_subcommand("explore", "Random search for monomial violations on Gorenstein quotients");
  explore->add_option("--seed", o.seed, "Master seed");
  explore->add_option("--trials", o.trials, "Number of trials");
  explore->add_option("--ring", o.ring, "Pin the ring");
  explore->add_option("--ideal-a", o.ideal_a, "Pin a (needs --ring)");
  explore->add_option("--ideal-b", o.ideal_b, "Pin b (needs --ring)");
  explore->add_option("--max-coordinate", o.max_coordinate, "Largest generator coordinate");
  explore->add_option("--max-modulus", o.max_modulus, "Largest quotient order r");
  explore->add_option("--max-generators", o.max_generators, "Most generators per ideal");
  explore->add_flag("--no-gorenstein-filter", o.no_filter, "Also sample non-Gorenstein rings");
  explore->add_flag("--full-lattice", o.full_lattice, "Sample over Z^n only");
  for (auto* s : {check2d, mult, mono, strong, repro, explore}) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Inputs in(verb);
  Json report;
  report["command"] = nullptr;
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    Outcome out;
    if (verb == "check2d") out = run_check2d(in, o);
    else if (verb == "multiplier") out = run_multiplier(in, o);
    else if (verb == "checkmono") out = run_mono(in, o, false);
    else if (verb == "strongmono") out = run_mono(in, o, true);
    else if (verb == "reproduce") out = run_reproduce(in, o);
    else out = run_explore(in, o);
    report["command"] = in.echo();
    report["inputs_digest"] = in.digest();
    report["result"] = out.result;
    report["status"] = out.violation ? "violation" : "pass";
    status = out.violation ? 1 : 0;
  } catch (const Error& e) {
    report["command"] = in.echo();
    report["inputs_digest"] = in.digest();
    report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    report["status"] = "error";
    std::cerr << "subadd: " << e.what() << "\n";
    status = 2;
  }
  if (o.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["wall_time_ms"] = ms;
  }
  const int written = emit(report, o.output);
  return written ? written : status;
}
