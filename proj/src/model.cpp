#include "subadd/model.hpp"

#include <unordered_map>

#include "subadd/error.hpp"

namespace subadd::surface {

std::optional<std::size_t> ResolutionModel::find(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  return std::nullopt;
}

CurveId ResolutionModel::id(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorKind::InvalidParameters, "unknown curve \"" + name + "\"");
  return {name, *i};
}

std::int64_t ResolutionModel::meet_at(std::size_t stage, std::size_t i, std::size_t j) const {
  if (stage > blowup_count()) throw Error(ErrorKind::StageOutOfRange, "stage " + std::to_string(stage));
  return stage_int_[stage][i * size() + j];
}

Rational ResolutionModel::dot_at(std::size_t stage, const QCycle& a, const QCycle& b) const {
  if (stage > blowup_count()) throw Error(ErrorKind::StageOutOfRange, "stage " + std::to_string(stage));
  const auto& m = stage_int_[stage];
  const std::size_t n = size();
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < n; ++j)
      if (m[i * n + j] != 0 && !b[j].is_zero()) row += Rational(static_cast<long>(m[i * n + j])) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

std::int64_t ResolutionModel::dot_curve(const Cycle& z, std::size_t i) const {
  const auto& m = stage_int_.back();
  const std::size_t n = size();
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) acc += m[i * n + j] * z[j];
  return acc;
}

Cycle ResolutionModel::unit(std::size_t i) const {
  Cycle z(size());
  z[i] = 1;
  return z;
}

ResolutionModel ResolutionModel::stage_model(std::size_t stage) const {
  if (stage > blowup_count()) throw Error(ErrorKind::StageOutOfRange, "stage " + std::to_string(stage));
  ModelDescription d = desc_;
  d.blowups.resize(stage);
  return build_model(d);
}

ResolutionModel build_model(const ModelDescription& desc) {
  ResolutionModel m;
  m.desc_ = desc;
  std::unordered_map<std::string, std::size_t> index;
  auto add_curve = [&](const std::string& name, CurveKind kind, std::size_t stage) {
    if (name.empty()) throw Error(ErrorKind::InvalidParameters, "empty curve name");
    if (!index.emplace(name, m.curves_.size()).second)
      throw Error(ErrorKind::InvalidParameters, "duplicate curve name \"" + name + "\"");
    m.curves_.push_back({name, kind, stage});
  };
  for (const auto& c : desc.base_curves) add_curve(c.name, c.kind, 0);
  m.base_count_ = m.curves_.size();
  for (std::size_t i = 0; i < desc.blowups.size(); ++i)
    add_curve(desc.blowups[i].name, CurveKind::Exceptional, i + 1);

  const std::size_t n = m.curves_.size();
  std::vector<std::int64_t> cur(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return cur[i * n + j]; };
  for (std::size_t i = 0; i < m.base_count_; ++i) at(i, i) = desc.base_curves[i].self_intersection;
  for (const auto& [a, b] : desc.base_edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end() || ia->second >= m.base_count_ || ib->second >= m.base_count_)
      throw Error(ErrorKind::InvalidParameters, "edge names an unknown base curve: " + a + "-" + b);
    if (ia->second == ib->second) throw Error(ErrorKind::InvalidParameters, "self edge on " + a);
    ++at(ia->second, ib->second);
    ++at(ib->second, ia->second);
  }
  m.stage_int_.push_back(cur);

  for (std::size_t t = 0; t < desc.blowups.size(); ++t) {
    const auto& b = desc.blowups[t];
    const std::size_t e = m.base_count_ + t;
    if (b.center_on.empty() || b.center_on.size() > 2)
      throw Error(ErrorKind::InvalidCenter, b.name + ": center must name 1 or 2 curves");
    std::vector<std::size_t> center;
    for (const auto& name : b.center_on) {
      auto it = index.find(name);
      if (it == index.end() || it->second >= e)
        throw Error(ErrorKind::InvalidCenter, b.name + ": \"" + name + "\" does not exist at this stage");
      center.push_back(it->second);
    }
    if (center.size() == 2) {
      if (center[0] == center[1])
        throw Error(ErrorKind::InvalidCenter, b.name + ": repeated center curve");
      if (at(center[0], center[1]) < 1)
        throw Error(ErrorKind::InvalidCenter, b.name + ": " + b.center_on[0] + " and " + b.center_on[1] +
                                                   " do not meet at this stage");
      --at(center[0], center[1]);
      --at(center[1], center[0]);
    }
    at(e, e) = -1;
    for (auto c : center) {
      --at(c, c);
      at(c, e) = 1;
      at(e, c) = 1;
    }
    m.centers_.push_back(center);
    m.stage_int_.push_back(cur);
  }

  m.final_ = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.final_(i, j) = Rational(static_cast<long>(at(i, j)));
  for (std::size_t i = 0; i < n; ++i)
    (m.curves_[i].kind == CurveKind::Exceptional ? m.exceptional_ : m.marked_).push_back(i);

  const QMatrix exc = m.final_.principal(m.exceptional_);
  if (!is_negative_definite(exc))
    throw Error(ErrorKind::NotNegativeDefinite, "exceptional intersection form is not negative definite");

  // Adjunction for rational curves: K . E_i = -E_i^2 - 2.
  QVector rhs;
  for (auto i : m.exceptional_) rhs.push_back(Rational(static_cast<long>(-at(i, i) - 2)));
  QVector k = solve_linear(exc, rhs);
  m.canonical_ = QCycle(n);
  for (std::size_t r = 0; r < m.exceptional_.size(); ++r) m.canonical_[m.exceptional_[r]] = k[r];
  return m;
}

}  // namespace subadd::surface
