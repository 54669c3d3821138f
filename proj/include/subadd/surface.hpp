#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "subadd/model.hpp"

namespace subadd::surface {

/// Picks which positive row the closure loop raises next; receives the
/// candidate curve indices in increasing order. The default takes the first.
using RowChooser = std::function<std::size_t(std::span<const std::size_t>)>;

const QCycle& relative_canonical(const ResolutionModel& model);

/// True iff every coefficient of K exceeds -1. Cross-checked against the
/// multiplier cycle of the unit ideal.
bool is_log_terminal(const ResolutionModel& model);

/// z >= 0 and z . E <= 0 for every exceptional curve E.
bool is_anti_nef(const ResolutionModel& model, const QCycle& z);
bool is_anti_nef(const ResolutionModel& model, const Cycle& z);

/// Minimal anti-nef cycle W >= max(z, 0) with the marked coefficients of z
/// kept fixed. Exceptional coefficients of z must be integers
/// (Error{NonIntegral}); marked ones nonnegative integers.
Cycle anti_nef_closure(const ResolutionModel& model, const QCycle& z, const RowChooser& choose = {});
Cycle anti_nef_closure(const ResolutionModel& model, const Cycle& z, const RowChooser& choose = {});

/// Closure of the reduced exceptional divisor: the fundamental cycle when
/// the exceptional locus is connected.
Cycle fundamental_cycle(const ResolutionModel& model);

/// Drops the curves created after `stage`.
QCycle pushforward(const ResolutionModel& model, const QCycle& z, std::size_t stage);
/// Total transform to stage `to` of a cycle living on stage `from`.
QCycle pullback(const ResolutionModel& model, std::size_t from, std::size_t to, const QCycle& z);
/// Total transform to the final model.
inline QCycle pullback(const ResolutionModel& model, std::size_t stage, const QCycle& z) {
  return pullback(model, stage, model.blowup_count(), z);
}
Cycle pullback(const ResolutionModel& model, std::size_t stage, const Cycle& z);

/// Numerical pullback f*D of a marked curve: coefficient 1 on D, orthogonal
/// to every exceptional curve.
QCycle total_transform_marked(const ResolutionModel& model, std::size_t marked_curve);

/// Cycle of J(I^c) for the integrally closed ideal I with cycle z:
/// the anti-nef closure of floor(c z - K).
Cycle multiplier_cycle(const ResolutionModel& model, const QCycle& z, const Rational& c);
Cycle multiplier_cycle(const ResolutionModel& model, const Cycle& z, const Rational& c);

// Catalog of minimal resolutions of log terminal surface singularities.

/// Chain of -b_i curves from the continued fraction r/a = b1 - 1/(b2 - ...).
ResolutionModel hirzebruch_jung(int r, int a);
/// Dynkin dual graph of -2 curves: "A<n>", "D<n>" (n >= 4), "E6", "E7", "E8".
ResolutionModel ade(const std::string& label);
/// "HJ(r,a)" or an ADE label.
ResolutionModel catalog_model(const std::string& spec);

}  // namespace subadd::surface
