#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subadd/cycle.hpp"
#include "subadd/matrix.hpp"

namespace subadd::surface {

enum class CurveKind { Exceptional, Marked };

struct CurveSpec {
  std::string name;
  int self_intersection = 0;
  CurveKind kind = CurveKind::Exceptional;
};

/// One point blowup. `center_on` names one curve (a general point of it)
/// or two curves (their intersection point) existing at that stage.
struct BlowupSpec {
  std::string name;
  std::vector<std::string> center_on;
};

/// Input form of a model: minimal-resolution dual graph plus an ordered
/// blowup history.
struct ModelDescription {
  std::vector<CurveSpec> base_curves;
  std::vector<std::pair<std::string, std::string>> base_edges;
  std::vector<BlowupSpec> blowups;
};

struct CurveId {
  std::string name;
  std::size_t index = 0;
};

struct Curve {
  std::string name;
  CurveKind kind = CurveKind::Exceptional;
  /// 0 for base curves, i for the curve created by the i-th blowup.
  std::size_t stage = 0;
};

/// A resolution X = X_n -> ... -> X_0 -> Spec A. Curves are indexed base
/// curves first, then blowup curves in creation order; a cycle on stage i
/// is a cycle on the final model with zero coefficients on curves created
/// after stage i. Immutable once built.
class ResolutionModel {
 public:
  const ModelDescription& description() const { return desc_; }

  std::size_t size() const { return curves_.size(); }
  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(std::size_t i) const { return curves_[i]; }
  bool is_exceptional(std::size_t i) const { return curves_[i].kind == CurveKind::Exceptional; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws Error{InvalidParameters} for unknown names.
  CurveId id(const std::string& name) const;

  std::size_t base_count() const { return base_count_; }
  std::size_t blowup_count() const { return curves_.size() - base_count_; }
  /// Curve index of the i-th blowup curve, i in 1..blowup_count().
  std::size_t blowup_curve(std::size_t i) const { return base_count_ + i - 1; }
  /// Curve indices of the center of the i-th blowup (1 or 2 entries).
  const std::vector<std::size_t>& blowup_center(std::size_t i) const { return centers_[i - 1]; }
  /// Number of curves alive at the given stage.
  std::size_t curves_at_stage(std::size_t stage) const { return base_count_ + stage; }

  const std::vector<std::size_t>& exceptional() const { return exceptional_; }
  const std::vector<std::size_t>& marked() const { return marked_; }

  /// Final intersection matrix over all curves.
  const QMatrix& intersection_matrix() const { return final_; }
  std::int64_t meet(std::size_t i, std::size_t j) const { return stage_int_.back()[i * size() + j]; }
  std::int64_t meet_at(std::size_t stage, std::size_t i, std::size_t j) const;

  /// Relative canonical divisor K (adjunction on exceptional curves).
  const QCycle& canonical() const { return canonical_; }

  Rational dot(const QCycle& a, const QCycle& b) const { return dot_at(blowup_count(), a, b); }
  Rational dot_at(std::size_t stage, const QCycle& a, const QCycle& b) const;
  /// z · (curve i) on the final model, integer version.
  std::int64_t dot_curve(const Cycle& z, std::size_t i) const;

  QCycle zero() const { return QCycle(size()); }
  Cycle zero_cycle() const { return Cycle(size()); }
  /// Unit cycle on curve i.
  Cycle unit(std::size_t i) const;

  /// Model truncated after the given number of blowups.
  ResolutionModel stage_model(std::size_t stage) const;

 private:
  friend ResolutionModel build_model(const ModelDescription& desc);

  ModelDescription desc_;
  std::vector<Curve> curves_;
  std::size_t base_count_ = 0;
  std::vector<std::vector<std::size_t>> centers_;
  std::vector<std::size_t> exceptional_;
  std::vector<std::size_t> marked_;
  // Intersection matrices after 0..n blowups, each padded to size()^2.
  std::vector<std::vector<std::int64_t>> stage_int_;
  QMatrix final_;
  QCycle canonical_;
};

/// Builds and validates a model. Errors: InvalidCenter, NotNegativeDefinite,
/// InvalidParameters (duplicate or unknown names).
ResolutionModel build_model(const ModelDescription& desc);

}  // namespace subadd::surface
