#include "subadd/surface.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>
#include <vector>

#include "subadd/error.hpp"

namespace subadd::surface {

const QCycle& relative_canonical(const ResolutionModel& model) { return model.canonical(); }

bool is_log_terminal(const ResolutionModel& model) {
  bool by_discrepancy = true;
  for (auto i : model.exceptional())
    if (!(model.canonical()[i] > Rational(-1))) by_discrepancy = false;
  const bool by_unit_ideal = multiplier_cycle(model, model.zero_cycle(), Rational(1)).is_zero();
  if (by_discrepancy != by_unit_ideal)
    throw std::logic_error("discrepancy test and J(A) = A test disagree");
  return by_discrepancy;
}

bool is_anti_nef(const ResolutionModel& model, const QCycle& z) {
  if (!z.is_effective()) return false;
  const auto& m = model.intersection_matrix();
  for (auto i : model.exceptional()) {
    Rational row;
    for (std::size_t j = 0; j < model.size(); ++j)
      if (!m(i, j).is_zero() && !z[j].is_zero()) row += m(i, j) * z[j];
    if (row.sign() > 0) return false;
  }
  return true;
}

bool is_anti_nef(const ResolutionModel& model, const Cycle& z) {
  if (!z.is_effective()) return false;
  for (auto i : model.exceptional())
    if (model.dot_curve(z, i) > 0) return false;
  return true;
}

Cycle anti_nef_closure(const ResolutionModel& model, const Cycle& z, const RowChooser& choose) {
  const std::size_t n = model.size();
  Cycle w = z;
  for (std::size_t i = 0; i < n; ++i) {
    if (model.is_exceptional(i)) {
      if (w[i] < 0) w[i] = 0;
    } else if (w[i] < 0) {
      throw Error(ErrorKind::NegativeMarked, "marked curve " + model.curve(i).name + " has negative coefficient");
    }
  }
  const auto& exc = model.exceptional();
  std::vector<std::int64_t> row(n, 0);
  for (auto i : exc) row[i] = model.dot_curve(w, i);
  std::vector<std::size_t> positive;
  // Each increment stays below every anti-nef cycle >= z, so this terminates;
  // the cap only guards against corrupted input.
  for (std::size_t step = 0; step < 100'000'000; ++step) {
    positive.clear();
    for (auto i : exc)
      if (row[i] > 0) positive.push_back(i);
    if (positive.empty()) return w;
    const std::size_t pick = choose ? choose(positive) : positive.front();
    ++w[pick];
    for (auto i : exc) row[i] += model.meet(i, pick);
  }
  throw std::logic_error("anti-nef closure did not terminate");
}

Cycle anti_nef_closure(const ResolutionModel& model, const QCycle& z, const RowChooser& choose) {
  Cycle w(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (!z[i].is_integer())
      throw Error(ErrorKind::NonIntegral, "coefficient " + z[i].str() + " on " + model.curve(i).name);
    w[i] = z[i].to_int64();
  }
  return anti_nef_closure(model, w, choose);
}

Cycle fundamental_cycle(const ResolutionModel& model) {
  if (model.exceptional().empty())
    throw Error(ErrorKind::InvalidParameters, "model has no exceptional curves");
  Cycle start(model.size());
  for (auto i : model.exceptional()) start[i] = 1;
  return anti_nef_closure(model, start);
}

QCycle pushforward(const ResolutionModel& model, const QCycle& z, std::size_t stage) {
  if (stage > model.blowup_count())
    throw Error(ErrorKind::StageOutOfRange, "stage " + std::to_string(stage));
  QCycle out = z;
  for (std::size_t i = model.curves_at_stage(stage); i < model.size(); ++i) out[i] = 0;
  return out;
}

namespace {

template <class C>
C pullback_impl(const ResolutionModel& model, std::size_t from, std::size_t to, const C& z) {
  if (from > to || to > model.blowup_count())
    throw Error(ErrorKind::StageOutOfRange, "pullback from stage " + std::to_string(from) + " to " + std::to_string(to));
  C out = z;
  for (std::size_t i = model.curves_at_stage(from); i < model.size(); ++i) {
    if (!(z[i] == 0))
      throw Error(ErrorKind::InvalidParameters, "cycle is not supported on stage " + std::to_string(from));
  }
  for (std::size_t t = from + 1; t <= to; ++t) {
    auto& e = out[model.blowup_curve(t)];
    for (auto c : model.blowup_center(t)) e += out[c];
  }
  return out;
}

}  // namespace

QCycle pullback(const ResolutionModel& model, std::size_t from, std::size_t to, const QCycle& z) {
  return pullback_impl(model, from, to, z);
}

Cycle pullback(const ResolutionModel& model, std::size_t stage, const Cycle& z) {
  return pullback_impl(model, stage, model.blowup_count(), z);
}

QCycle total_transform_marked(const ResolutionModel& model, std::size_t d) {
  if (d >= model.size() || model.is_exceptional(d))
    throw Error(ErrorKind::InvalidParameters, "total transform needs a marked curve");
  const auto& exc = model.exceptional();
  QVector rhs;
  for (auto i : exc) rhs.push_back(Rational(static_cast<long>(-model.meet(i, d))));
  QVector c = exc.empty() ? QVector{} : solve_linear(model.intersection_matrix().principal(exc), rhs);
  QCycle out(model.size());
  out[d] = 1;
  for (std::size_t r = 0; r < exc.size(); ++r) out[exc[r]] = c[r];
  for (auto i : exc) {
    Rational s;
    for (std::size_t j = 0; j < model.size(); ++j) s += Rational(static_cast<long>(model.meet(i, j))) * out[j];
    if (!s.is_zero()) throw std::logic_error("total transform is not orthogonal to exceptional curves");
  }
  return out;
}

Cycle multiplier_cycle(const ResolutionModel& model, const QCycle& z, const Rational& c) {
  if (c.sign() <= 0) throw Error(ErrorKind::InvalidParameters, "exponent must be positive");
  if (!is_anti_nef(model, z)) throw Error(ErrorKind::NotAntiNef, "cycle is not anti-nef");
  const QCycle& k = model.canonical();
  Cycle w(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    w[i] = to_int64((c * z[i] - k[i]).floor());
    if (!model.is_exceptional(i) && w[i] < 0)
      throw Error(ErrorKind::NegativeMarked, "marked curve " + model.curve(i).name + " floors below 0");
  }
  return anti_nef_closure(model, w);
}

Cycle multiplier_cycle(const ResolutionModel& model, const Cycle& z, const Rational& c) {
  return multiplier_cycle(model, to_q(z), c);
}

namespace {

ResolutionModel chain_model(const std::vector<int>& weights) {
  ModelDescription d;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    d.base_curves.push_back({"E" + std::to_string(i + 1), -weights[i], CurveKind::Exceptional});
    if (i > 0) d.base_edges.emplace_back("E" + std::to_string(i), "E" + std::to_string(i + 1));
  }
  return build_model(d);
}

}  // namespace

ResolutionModel hirzebruch_jung(int r, int a) {
  if (!(r > a && a >= 1) || std::gcd(r, a) != 1)
    throw Error(ErrorKind::InvalidParameters, "HJ(r,a) needs r > a >= 1 coprime");
  std::vector<int> weights;
  long num = r, den = a;
  while (den != 0) {
    const long b = (num + den - 1) / den;
    weights.push_back(static_cast<int>(b));
    const long next = b * den - num;
    num = den;
    den = next;
  }
  return chain_model(weights);
}

ResolutionModel ade(const std::string& label) {
  static const std::regex re(R"(([ADE])(\d+))");
  std::smatch m;
  if (!std::regex_match(label, m, re)) throw Error(ErrorKind::InvalidParameters, "bad ADE label \"" + label + "\"");
  const char type = m[1].str()[0];
  const int n = std::stoi(m[2].str());
  auto name = [](int i) { return "E" + std::to_string(i); };
  ModelDescription d;
  auto chain = [&](int len) {
    for (int i = 1; i <= len; ++i) {
      d.base_curves.push_back({name(i), -2, CurveKind::Exceptional});
      if (i > 1) d.base_edges.emplace_back(name(i - 1), name(i));
    }
  };
  switch (type) {
    case 'A':
      if (n < 1) throw Error(ErrorKind::InvalidParameters, "A_n needs n >= 1");
      chain(n);
      break;
    case 'D':
      if (n < 4) throw Error(ErrorKind::InvalidParameters, "D_n needs n >= 4");
      chain(n - 1);
      d.base_curves.push_back({name(n), -2, CurveKind::Exceptional});
      d.base_edges.emplace_back(name(n - 2), name(n));
      break;
    case 'E':
      if (n < 6 || n > 8) throw Error(ErrorKind::InvalidParameters, "E_n needs 6 <= n <= 8");
      chain(n - 1);
      d.base_curves.push_back({name(n), -2, CurveKind::Exceptional});
      d.base_edges.emplace_back(name(3), name(n));
      break;
  }
  return build_model(d);
}

ResolutionModel catalog_model(const std::string& spec) {
  static const std::regex hj(R"(HJ\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(spec, m, hj)) return hirzebruch_jung(std::stoi(m[1].str()), std::stoi(m[2].str()));
  return ade(spec);
}

}  // namespace subadd::surface
