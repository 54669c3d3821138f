#pragma once

// Proximity data and computation sequences for anti-nef closures of Z - ceil(K)
// on a resolution factored into point blowups.
//
// Blowup-indexed vectors are 0-based: entry t refers to the (t+1)-th blowup
// and its curve E_{t+1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subadd/surface.hpp"

namespace subadd::antinefseq {

using surface::Cycle;
using surface::QCycle;
using surface::ResolutionModel;
using surface::RowChooser;

using DVector = std::vector<std::int64_t>;

struct ProximityData {
  /// n x n, P(j,j) = 1 and P(j,i) = -1 when E_i is proximate to E_j.
  QMatrix p;
  /// Total transforms of the blowup curves on the final model.
  std::vector<Cycle> pullbacks;
  /// proximate[i][j]: E_i is proximate to E_j (E_i was blown up on E_j).
  std::vector<std::vector<bool>> proximate;
  /// Transitive closure of `proximate`.
  std::vector<std::vector<bool>> infinitely_near;
  /// For each base curve index, the blowups whose center lies on it.
  std::vector<std::vector<std::size_t>> base_centers;

  std::size_t size() const { return pullbacks.size(); }
  /// (P d)_j = d_j - sum over E_i proximate to E_j of d_i.
  std::int64_t row(std::size_t j, const DVector& d) const;
};

/// Proximity computed from the blowup history and cross-checked against the
/// intersection numbers of the total transforms with the strict transforms.
ProximityData proximity_matrix(const ResolutionModel& model);

/// Z = pullback(base_part) + sum d_i * pullback(E_i).
struct DCoordinates {
  QCycle base_part;
  DVector d;
};

DCoordinates d_coordinates(const ResolutionModel& model, const Cycle& z);
QCycle from_d_coordinates(const ResolutionModel& model, const DCoordinates& dc);

/// Anti-nefness read off d-coordinates. The strict transform of a base curve F
/// meets Z in pi_0_*Z . F + (sum of d_i over blowups centered on F), so the
/// base rows include those terms. Cross-checked against surface::is_anti_nef.
bool anti_nef_test_d(const ResolutionModel& model, const ProximityData& prox, const DCoordinates& dc);
bool anti_nef_test_d(const ResolutionModel& model, const DCoordinates& dc);

/// The weaker test that only asks pi_0_*Z to be anti-nef on the base model
/// and P d >= 0. Not equivalent to anti-nefness in general; kept so callers
/// can compare the two.
bool anti_nef_test_d_base_only(const ResolutionModel& model, const ProximityData& prox, const DCoordinates& dc);

/// Blowup indices L with ceil(K) = sum over L of pullback(E_i).
/// Error{NoLambda} when ceil(K) has a base part or coefficients outside {0,1}.
std::vector<std::size_t> lambda_set(const ResolutionModel& model);

struct ComputationTrace {
  QCycle base_part;
  /// d^(0), ..., d^(k0).
  std::vector<DVector> d;
  /// Blowup index raised at each step; steps.size() == d.size() - 1.
  std::vector<std::size_t> steps;
  Cycle final_cycle;
};

/// One step of the update rule: raise d_j, lower every proximate d_i > 0.
DVector sequence_step(const ProximityData& prox, const DVector& d, std::size_t j);
/// Initial vector: lower d_i by one for i in lambda with d_i > 0.
DVector sequence_start(const DVector& d, const std::vector<std::size_t>& lambda);

/// Computation sequence for Z - ceil(K). Steps pick the smallest negative row
/// of P d unless `choose` is given (it receives the negative rows).
/// Errors: NotAntiNef, NoLambda.
ComputationTrace computation_sequence(const ResolutionModel& model, const Cycle& z, const RowChooser& choose = {});

enum class TripleForm { Unchanged, BothLowered, OnlyALowered, OnlyBLowered };
std::string to_string(TripleForm f);

struct PairedSequences {
  /// c runs on F_a + F_b; a and b mirror its first steps and are then
  /// extended to full computation sequences.
  ComputationTrace a, b, c;
  /// Number of mirrored steps (k_c).
  std::size_t mirrored = 0;
  /// Form of (a_i, b_i, c_i) at step k_c for each blowup index.
  std::vector<TripleForm> forms;
  bool d_inequality = false;      // final a + final b <= final c in d-coordinates
  bool cycle_inequality = false;  // the same for the cycles
};

/// Errors: NotAntiNef, NoLambda, ClassificationViolation.
PairedSequences paired_sequences(const ResolutionModel& model, const Cycle& f_a, const Cycle& f_b);

struct SubadditivityCertificate {
  Cycle j_a, j_b, j_ab;  // cycles of J(a), J(b), J(ab)
  bool holds = false;    // j_a + j_b <= j_ab
  /// First curve with j_a + j_b > j_ab.
  std::optional<std::size_t> witness;
  /// Curves with j_a + j_b < j_ab (the inclusion J(ab) ⊆ J(a)J(b) is strict there).
  std::vector<std::size_t> strict;
  /// Whether the closures were also recomputed by computation sequences.
  bool sequence_checked = false;
  std::vector<std::string> warnings;
};

/// f_a, f_b anti-nef; they may carry rational coefficients (e.g. total
/// transforms of marked divisors). Error{NotAntiNef}.
SubadditivityCertificate subadditivity_check_2d(const ResolutionModel& model, const QCycle& f_a, const QCycle& f_b);
SubadditivityCertificate subadditivity_check_2d(const ResolutionModel& model, const Cycle& f_a, const Cycle& f_b);

/// Z - K + sum of pullback(E_i) over i with (pi_i)_*Z . E_i = 0 on X_i.
/// Error{NotGorenstein} if K is not integral; Error{NotAntiNef}.
Cycle gorenstein_closure_formula(const ResolutionModel& model, const Cycle& z);

/// Z - ceil(K) + sum of pullback(E_i) over i with (pi_i)_*Z . E_i = 0 and
/// ceil(K_i) = f_i^* ceil(K_{i-1}) + E_i, where K_i is the relative canonical
/// divisor of X_i over the singularity. Not the closure in general.
Cycle ceil_closure_formula(const ResolutionModel& model, const Cycle& z);

/// Outcome of testing J(I^{c_big}) ⊆ J(I^{c_small})^power at cycle level:
/// the inclusion holds iff power * small <= big.
struct StrongSubaddReport {
  ResolutionModel model;
  Cycle z;
  Rational c_small, c_big;
  int power = 0;
  Cycle small, big;
  bool inclusion_holds = false;
  std::vector<std::size_t> witnesses;  // curves where power * small > big
  /// Extra facts checked along the way (name, value).
  std::vector<std::pair<std::string, bool>> checks;
};

/// A -k curve blown up at a general point, Z = 2(k+1)E1 + 2E2, exponents
/// 1/(k+1) and 2/(k+1). Error{InvalidParameters} for k < 2.
StrongSubaddReport strong_subadd_counterexample_irreducible(int k);

/// Minimal resolution with reducible exceptional locus: finds Z with
/// Z_f <= Z <= n Z_f, Z != n Z_f, floor(Z/n) != 0, Z anti-nef, and tests
/// J(I) ⊆ J(I^{1/n})^n. Candidates go by coefficient sum, then
/// lexicographically descending. Error{NoQualifyingCycle},
/// Error{InvalidParameters} for models with blowups or n < 2.
StrongSubaddReport strong_subadd_counterexample_reducible(const ResolutionModel& model, int n);

}  // namespace subadd::antinefseq
