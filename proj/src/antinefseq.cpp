#include "subadd/antinefseq.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "subadd/error.hpp"
#include "subadd/instances.hpp"

namespace subadd::antinefseq {

using surface::ceil_cycle;
using surface::to_q;

std::int64_t ProximityData::row(std::size_t j, const DVector& d) const {
  std::int64_t r = d[j];
  for (std::size_t i = j + 1; i < d.size(); ++i)
    if (proximate[i][j]) r -= d[i];
  return r;
}

ProximityData proximity_matrix(const ResolutionModel& model) {
  const std::size_t n = model.blowup_count();
  ProximityData out;
  out.p = QMatrix::identity(n);
  out.proximate.assign(n, std::vector<bool>(n, false));
  out.base_centers.assign(model.base_count(), {});
  for (std::size_t t = 0; t < n; ++t) {
    out.pullbacks.push_back(surface::pullback(model, t + 1, model.unit(model.blowup_curve(t + 1))));
    for (auto c : model.blowup_center(t + 1)) {
      if (c < model.base_count()) {
        out.base_centers[c].push_back(t);
      } else {
        const std::size_t j = c - model.base_count();
        out.proximate[t][j] = true;
        out.p(j, t) = Rational(-1);
      }
    }
  }
  // The same relation from intersection numbers: E_i is proximate to E_j iff
  // pullback(E_i) . strict(E_j) > 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::int64_t m = model.dot_curve(out.pullbacks[i], model.blowup_curve(j + 1));
      if ((m > 0) != out.proximate[i][j] || m < 0 || m > 1)
        throw std::logic_error("proximity from history disagrees with intersection numbers");
    }
  out.infinitely_near = out.proximate;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (out.infinitely_near[i][k] && out.infinitely_near[k][j]) out.infinitely_near[i][j] = true;
  return out;
}

DCoordinates d_coordinates(const ResolutionModel& model, const Cycle& z) {
  const std::size_t n = model.blowup_count();
  DCoordinates dc;
  dc.base_part = surface::pushforward(model, to_q(z), 0);
  dc.d.assign(n, 0);
  // (pi_t)_*Z . E_t = -d_t on X_t.
  for (std::size_t t = 1; t <= n; ++t) {
    const std::size_t e = model.blowup_curve(t);
    std::int64_t s = 0;
    for (std::size_t j = 0; j < model.curves_at_stage(t); ++j) s += model.meet_at(t, e, j) * z[j];
    dc.d[t - 1] = -s;
  }
  if (from_d_coordinates(model, dc) != to_q(z)) throw std::logic_error("d-coordinates do not reconstruct the cycle");
  return dc;
}

QCycle from_d_coordinates(const ResolutionModel& model, const DCoordinates& dc) {
  QCycle out = surface::pullback(model, 0, dc.base_part);
  for (std::size_t t = 0; t < dc.d.size(); ++t) {
    if (dc.d[t] == 0) continue;
    const auto pb = surface::pullback(model, t + 1, model.unit(model.blowup_curve(t + 1)));
    out += to_q(dc.d[t] * pb);
  }
  return out;
}

namespace {

bool pd_nonnegative(const ProximityData& prox, const DVector& d) {
  for (std::size_t j = 0; j < d.size(); ++j)
    if (prox.row(j, d) < 0) return false;
  return true;
}

Rational base_row(const ResolutionModel& model, const QCycle& base, std::size_t f) {
  Rational s;
  for (std::size_t j = 0; j < model.base_count(); ++j)
    if (!base[j].is_zero()) s += Rational(static_cast<long>(model.meet_at(0, f, j))) * base[j];
  return s;
}

}  // namespace

bool anti_nef_test_d(const ResolutionModel& model, const ProximityData& prox, const DCoordinates& dc) {
  bool ok = pd_nonnegative(prox, dc.d);
  for (std::size_t f = 0; ok && f < model.base_count(); ++f) {
    if (!model.is_exceptional(f)) {
      ok = dc.base_part[f].sign() >= 0;
      continue;
    }
    Rational r = base_row(model, dc.base_part, f);
    for (auto t : prox.base_centers[f]) r += Rational(static_cast<long>(dc.d[t]));
    ok = r.sign() <= 0;
  }
  if (ok != surface::is_anti_nef(model, from_d_coordinates(model, dc)))
    throw std::logic_error("d-coordinate anti-nef test disagrees with the intersection test");
  return ok;
}

bool anti_nef_test_d(const ResolutionModel& model, const DCoordinates& dc) {
  return anti_nef_test_d(model, proximity_matrix(model), dc);
}

bool anti_nef_test_d_base_only(const ResolutionModel& model, const ProximityData& prox, const DCoordinates& dc) {
  if (!pd_nonnegative(prox, dc.d)) return false;
  for (std::size_t f = 0; f < model.base_count(); ++f) {
    if (dc.base_part[f].sign() < 0) return false;
    if (model.is_exceptional(f) && base_row(model, dc.base_part, f).sign() > 0) return false;
  }
  return true;
}

std::vector<std::size_t> lambda_set(const ResolutionModel& model) {
  const auto dc = d_coordinates(model, ceil_cycle(model.canonical()));
  if (!dc.base_part.is_zero())
    throw Error(ErrorKind::NoLambda, "ceil(K) has a nonzero part on the minimal resolution");
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < dc.d.size(); ++t) {
    if (dc.d[t] == 1) out.push_back(t);
    else if (dc.d[t] != 0)
      throw Error(ErrorKind::NoLambda, "ceil(K) has coefficient " + std::to_string(dc.d[t]) + " on pullback of " +
                                           model.curve(model.blowup_curve(t + 1)).name);
  }
  return out;
}

DVector sequence_start(const DVector& d, const std::vector<std::size_t>& lambda) {
  DVector out = d;
  for (auto i : lambda)
    if (out[i] > 0) --out[i];
  return out;
}

DVector sequence_step(const ProximityData& prox, const DVector& d, std::size_t j) {
  DVector out = d;
  ++out[j];
  for (std::size_t i = j + 1; i < d.size(); ++i)
    if (prox.proximate[i][j] && d[i] > 0) --out[i];
  return out;
}

namespace {

std::vector<std::size_t> negative_rows(const ProximityData& prox, const DVector& d) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (prox.row(j, d) < 0) out.push_back(j);
  return out;
}

// Runs steps from the last vector in `trace` until P d >= 0.
void run_to_end(const ProximityData& prox, ComputationTrace& trace, const RowChooser& choose) {
  for (std::size_t guard = 0; guard < 10'000'000; ++guard) {
    const auto neg = negative_rows(prox, trace.d.back());
    if (neg.empty()) return;
    const std::size_t j = choose ? choose(neg) : neg.front();
    if (std::find(neg.begin(), neg.end(), j) == neg.end())
      throw std::logic_error("row chooser returned a row that is not negative");
    trace.steps.push_back(j);
    trace.d.push_back(sequence_step(prox, trace.d.back(), j));
  }
  throw std::logic_error("computation sequence did not terminate");
}

Cycle finish(const ResolutionModel& model, const ProximityData& prox, ComputationTrace& trace) {
  DCoordinates dc{trace.base_part, trace.d.back()};
  if (!anti_nef_test_d(model, prox, dc)) throw std::logic_error("computation sequence ended on a cycle that is not anti-nef");
  const QCycle q = from_d_coordinates(model, dc);
  Cycle out(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) out[i] = q[i].to_int64();
  trace.final_cycle = out;
  return out;
}

}  // namespace

ComputationTrace computation_sequence(const ResolutionModel& model, const Cycle& z, const RowChooser& choose) {
  if (!surface::is_anti_nef(model, z)) throw Error(ErrorKind::NotAntiNef, "computation sequence needs an anti-nef cycle");
  const auto lambda = lambda_set(model);
  const auto prox = proximity_matrix(model);
  const auto dc = d_coordinates(model, z);
  ComputationTrace trace;
  trace.base_part = dc.base_part;
  trace.d.push_back(sequence_start(dc.d, lambda));
  run_to_end(prox, trace, choose);
  finish(model, prox, trace);
  return trace;
}

std::string to_string(TripleForm f) {
  switch (f) {
    case TripleForm::Unchanged: return "(a, b, a+b)";
    case TripleForm::BothLowered: return "(a-1, b-1, a+b-1)";
    case TripleForm::OnlyALowered: return "(a-1, 0, a-1)";
    case TripleForm::OnlyBLowered: return "(0, b-1, b-1)";
  }
  return "?";
}

PairedSequences paired_sequences(const ResolutionModel& model, const Cycle& f_a, const Cycle& f_b) {
  if (!surface::is_anti_nef(model, f_a) || !surface::is_anti_nef(model, f_b))
    throw Error(ErrorKind::NotAntiNef, "paired sequences need anti-nef cycles");
  PairedSequences out;
  out.c = computation_sequence(model, f_a + f_b);
  const auto lambda = lambda_set(model);
  const auto prox = proximity_matrix(model);
  const auto da = d_coordinates(model, f_a), db = d_coordinates(model, f_b);

  auto mirror = [&](const DCoordinates& dc) {
    ComputationTrace t;
    t.base_part = dc.base_part;
    t.d.push_back(sequence_start(dc.d, lambda));
    for (auto j : out.c.steps) {
      t.steps.push_back(j);
      t.d.push_back(dc.d[j] > 0 ? sequence_step(prox, t.d.back(), j) : t.d.back());
    }
    return t;
  };
  out.a = mirror(da);
  out.b = mirror(db);
  out.mirrored = out.c.steps.size();

  const auto& ak = out.a.d.back();
  const auto& bk = out.b.d.back();
  const auto& ck = out.c.d.back();
  for (std::size_t i = 0; i < ck.size(); ++i) {
    const std::int64_t a = da.d[i], b = db.d[i];
    const std::array<std::int64_t, 3> t{ak[i], bk[i], ck[i]};
    using F = TripleForm;
    const std::pair<F, std::array<std::int64_t, 3>> forms[] = {
        {F::Unchanged, {a, b, a + b}},
        {F::BothLowered, {a - 1, b - 1, a + b - 1}},
        {F::OnlyALowered, {a - 1, 0, a - 1}},
        {F::OnlyBLowered, {0, b - 1, b - 1}},
    };
    auto it = std::find_if(std::begin(forms), std::end(forms), [&](const auto& f) { return f.second == t; });
    if (it == std::end(forms))
      throw Error(ErrorKind::ClassificationViolation,
                  "triple (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
                      ") at blowup " + std::to_string(i + 1) + " matches no allowed form");
    out.forms.push_back(it->first);
  }

  run_to_end(prox, out.a, {});
  run_to_end(prox, out.b, {});
  finish(model, prox, out.a);
  finish(model, prox, out.b);

  out.d_inequality = true;
  for (std::size_t i = 0; i < ck.size(); ++i)
    if (out.a.d.back()[i] + out.b.d.back()[i] > ck[i]) out.d_inequality = false;
  out.cycle_inequality = (out.a.final_cycle + out.b.final_cycle).leq(out.c.final_cycle);
  return out;
}

SubadditivityCertificate subadditivity_check_2d(const ResolutionModel& model, const QCycle& f_a, const QCycle& f_b) {
  if (!surface::is_anti_nef(model, f_a) || !surface::is_anti_nef(model, f_b))
    throw Error(ErrorKind::NotAntiNef, "subadditivity check needs anti-nef cycles");
  SubadditivityCertificate cert;
  const bool lt = surface::is_log_terminal(model);
  if (!lt) cert.warnings.push_back("model is not log terminal: J(A) != A, so the inclusion is not expected");
  cert.j_a = surface::multiplier_cycle(model, f_a, Rational(1));
  cert.j_b = surface::multiplier_cycle(model, f_b, Rational(1));
  cert.j_ab = surface::multiplier_cycle(model, f_a + f_b, Rational(1));
  const Cycle sum = cert.j_a + cert.j_b;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (sum[i] > cert.j_ab[i] && !cert.witness) cert.witness = i;
    if (sum[i] < cert.j_ab[i]) cert.strict.push_back(i);
  }
  cert.holds = !cert.witness;

  auto integral = [](const QCycle& z) {
    return std::all_of(z.coefficients().begin(), z.coefficients().end(), [](const Rational& r) { return r.is_integer(); });
  };
  if (lt && integral(f_a) && integral(f_b)) {
    try {
      const auto pair = paired_sequences(model, surface::floor_cycle(f_a), surface::floor_cycle(f_b));
      if (pair.c.final_cycle != cert.j_ab || pair.a.final_cycle != cert.j_a || pair.b.final_cycle != cert.j_b)
        throw std::logic_error("computation sequences disagree with the closure");
      cert.sequence_checked = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoLambda) throw;
      cert.warnings.push_back(std::string("computation sequence not run: ") + e.what());
    }
  }
  return cert;
}

SubadditivityCertificate subadditivity_check_2d(const ResolutionModel& model, const Cycle& f_a, const Cycle& f_b) {
  return subadditivity_check_2d(model, to_q(f_a), to_q(f_b));
}

namespace {

// (pi_t)_*Z . E_t on X_t.
std::int64_t stage_row(const ResolutionModel& model, const Cycle& z, std::size_t t) {
  const std::size_t e = model.blowup_curve(t);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < model.curves_at_stage(t); ++j) s += model.meet_at(t, e, j) * z[j];
  return s;
}

Cycle to_cycle(const QCycle& q) {
  Cycle out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i].to_int64();
  return out;
}

}  // namespace

Cycle gorenstein_closure_formula(const ResolutionModel& model, const Cycle& z) {
  const QCycle& k = model.canonical();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!k[i].is_integer()) throw Error(ErrorKind::NotGorenstein, "K has coefficient " + k[i].str());
  if (!surface::is_anti_nef(model, z)) throw Error(ErrorKind::NotAntiNef, "formula needs an anti-nef cycle");
  Cycle out = z - to_cycle(k);
  for (std::size_t t = 1; t <= model.blowup_count(); ++t)
    if (stage_row(model, z, t) == 0) out += surface::pullback(model, t, model.unit(model.blowup_curve(t)));
  return out;
}

Cycle ceil_closure_formula(const ResolutionModel& model, const Cycle& z) {
  if (!surface::is_anti_nef(model, z)) throw Error(ErrorKind::NotAntiNef, "formula needs an anti-nef cycle");
  auto stage_ceil_k = [&](std::size_t t) {
    const QCycle kt = model.stage_model(t).canonical();
    QCycle out(model.size());
    for (std::size_t i = 0; i < kt.size(); ++i) out[i] = Rational(kt[i].ceil());
    return out;
  };
  Cycle out = z - ceil_cycle(model.canonical());
  QCycle prev = stage_ceil_k(0);
  for (std::size_t t = 1; t <= model.blowup_count(); ++t) {
    QCycle cur = stage_ceil_k(t);
    QCycle expected = surface::pullback(model, t - 1, t, prev);
    expected[model.blowup_curve(t)] += 1;
    if (cur == expected && stage_row(model, z, t) == 0)
      out += surface::pullback(model, t, model.unit(model.blowup_curve(t)));
    prev = cur;
  }
  return out;
}

namespace {

void compare(StrongSubaddReport& r) {
  r.inclusion_holds = true;
  for (std::size_t i = 0; i < r.small.size(); ++i)
    if (r.power * r.small[i] > r.big[i]) {
      r.inclusion_holds = false;
      r.witnesses.push_back(i);
    }
}

}  // namespace

StrongSubaddReport strong_subadd_counterexample_irreducible(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidParameters, "k must be at least 2");
  StrongSubaddReport r;
  r.model = surface::single_curve_blown_up_once(k);
  const auto& m = r.model;
  r.z = m.zero_cycle();
  r.z[m.id("E1").index] = 2 * (k + 1);
  r.z[m.id("E2").index] = 2;
  r.checks.emplace_back("Z is anti-nef", surface::is_anti_nef(m, r.z));
  r.c_small = Rational(1, k + 1);
  r.c_big = Rational(2, k + 1);
  r.power = 2;
  r.small = surface::multiplier_cycle(m, r.z, r.c_small);
  r.big = surface::multiplier_cycle(m, r.z, r.c_big);
  compare(r);
  return r;
}

StrongSubaddReport strong_subadd_counterexample_reducible(const ResolutionModel& model, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "n must be at least 2");
  if (model.blowup_count() != 0) throw Error(ErrorKind::InvalidParameters, "expected a minimal resolution without blowups");
  if (!surface::is_log_terminal(model)) throw Error(ErrorKind::InvalidParameters, "model is not log terminal");
  const Cycle zf = surface::fundamental_cycle(model);
  const auto& exc = model.exceptional();
  const Cycle top = n * zf;

  auto qualifies = [&](const Cycle& z) {
    if (z == top || !surface::is_anti_nef(model, z)) return false;
    for (auto i : exc)
      if (z[i] >= n) return true;  // floor(Z/n) != 0
    return false;
  };

  std::optional<Cycle> found;
  std::int64_t lo = 0, hi = 0;
  for (auto i : exc) {
    lo += zf[i];
    hi += top[i];
  }
  // Coefficient sum s ascending; within s, lexicographically descending.
  Cycle z = model.zero_cycle();
  std::function<bool(std::size_t, std::int64_t)> fill = [&](std::size_t k, std::int64_t rest) {
    if (k == exc.size()) return rest == 0 && qualifies(z);
    std::int64_t tail_lo = 0, tail_hi = 0;
    for (std::size_t l = k + 1; l < exc.size(); ++l) {
      tail_lo += zf[exc[l]];
      tail_hi += top[exc[l]];
    }
    const std::size_t c = exc[k];
    for (std::int64_t v = std::min(top[c], rest - tail_lo); v >= zf[c]; --v) {
      if (rest - v > tail_hi) break;
      z[c] = v;
      if (fill(k + 1, rest - v)) return true;
    }
    return false;
  };
  for (std::int64_t s = lo; s <= hi && !found; ++s)
    if (fill(0, s)) found = z;
  if (!found) throw Error(ErrorKind::NoQualifyingCycle, "no cycle between Z_f and n Z_f qualifies");

  StrongSubaddReport r;
  r.model = model;
  r.z = *found;
  r.c_small = Rational(1, n);
  r.c_big = Rational(1);
  r.power = n;
  r.small = surface::multiplier_cycle(model, r.z, r.c_small);
  r.big = surface::multiplier_cycle(model, r.z, r.c_big);
  r.checks.emplace_back("J(I^(1/n)) cycle >= Z_f", zf.leq(r.small));
  r.checks.emplace_back("J(I) cycle = Z", r.big == r.z);
  compare(r);
  return r;
}

}  // namespace subadd::antinefseq
