#pragma once

// Monomial ideals on simplicial toric rings given by congruence lattices
// M = { v in Z^n : w_k . v = 0 mod r_k for every k }, semigroup M ∩ Z_{>=0}^n.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subadd/matrix.hpp"
#include "subadd/rational.hpp"

namespace subadd::toric {

using Exponent = std::vector<std::int64_t>;

struct Congruence {
  std::vector<std::int64_t> weights;
  std::int64_t modulus = 1;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

class ToricRing {
 public:
  /// Error{InvalidParameters} on rank 0, nonpositive moduli or weight
  /// vectors of the wrong length.
  ToricRing(std::size_t rank, std::vector<Congruence> congruences);
  static ToricRing full_lattice(std::size_t rank);
  /// 1/r(w_1, ..., w_n): the single congruence w . v = 0 mod r.
  static ToricRing cyclic_quotient(std::int64_t r, std::vector<std::int64_t> weights);

  std::size_t rank() const { return d_->rank; }
  const std::vector<Congruence>& congruences() const { return d_->congruences; }
  bool in_lattice(const Exponent& v) const;
  bool in_semigroup(const Exponent& v) const;
  /// Order of e_j in Z^n / M.
  std::int64_t order(std::size_t j) const { return d_->orders[j]; }
  /// [Z^n : M].
  std::int64_t index() const { return d_->index; }
  /// Irreducible nonzero elements of the semigroup.
  const std::vector<Exponent>& hilbert_basis() const { return d_->hilbert; }

  friend bool operator==(const ToricRing& a, const ToricRing& b) {
    return a.d_ == b.d_ || (a.rank() == b.rank() && a.congruences() == b.congruences());
  }

 private:
  struct Data {
    std::size_t rank;
    std::vector<Congruence> congruences;
    std::vector<std::int64_t> orders;
    std::int64_t index;
    std::vector<Exponent> hilbert;
  };
  std::shared_ptr<const Data> d_;
};

/// Standard toric fact, not derived here: a cyclic quotient 1/r(w) whose
/// weights are all prime to r is Gorenstein iff sum(w) = 0 mod r.
bool is_gorenstein_cyclic_quotient(const ToricRing& ring);

class MonomialIdeal {
 public:
  /// Generators must lie in the semigroup (Error{InvalidParameters}); they
  /// are minimalized and sorted.
  MonomialIdeal(ToricRing ring, std::vector<Exponent> generators);
  static MonomialIdeal unit(const ToricRing& ring);

  const ToricRing& ring() const { return ring_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  ToricRing ring_;
  std::vector<Exponent> gens_;
};

/// Drops duplicates and every g with g - h in the semigroup for another h.
std::vector<Exponent> minimalize(const ToricRing& ring, std::vector<Exponent> gens);

bool ideal_membership(const MonomialIdeal& ideal, const Exponent& v);
/// Error{RingMismatch}.
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int p);

struct Facet {
  /// Primitive nonnegative integer normal a and right-hand side b of a . x >= b.
  Exponent normal;
  std::int64_t rhs = 0;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

struct NewtonPolyhedron {
  std::size_t rank = 0;
  std::vector<Facet> facets;  // sorted
  std::vector<Exponent> vertices;  // sorted
};

/// conv(points) + R_{>=0}^n. Needs at least one point.
NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& points, std::size_t rank);
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// <a_f, v> > c b_f for every facet.
bool in_interior(const NewtonPolyhedron& poly, const Exponent& v, const Rational& c);
/// <a_f, v> >= c b_f for every facet.
bool in_polyhedron(const NewtonPolyhedron& poly, const Exponent& v, const Rational& c);

/// Ideal generated by the vertices of the Newton polyhedron. Same
/// polyhedron, hence same multiplier ideals and integral closure.
MonomialIdeal newton_reduce(const MonomialIdeal& ideal);

/// J(I^c): semigroup elements v with v + (1,...,1) in the interior of cP(I).
/// `box_factor` widens the enumeration box beyond the proven bound (for
/// testing that the bound is not too tight). Error{RingMismatch}.
MonomialIdeal multiplier_monomials(const ToricRing& ring, const MonomialIdeal& ideal, const Rational& c,
                                   int box_factor = 1);

/// Semigroup elements in P(I).
MonomialIdeal integral_closure_monomial(const ToricRing& ring, const MonomialIdeal& ideal, int box_factor = 1);

/// Membership of v in the product a·b of two ideals.
bool product_membership(const MonomialIdeal& a, const MonomialIdeal& b, const Exponent& v);

struct MonomialCertificate {
  bool holds = false;
  std::optional<Exponent> witness;
  /// Left side J(a^c b^d) and the two factors J(a^c), J(b^d).
  std::vector<Exponent> j_ab, j_a, j_b;
};

/// J(ab) ⊆ J(a) J(b). Error{RingMismatch}.
MonomialCertificate subadditivity_check_monomial(const ToricRing& ring, const MonomialIdeal& a, const MonomialIdeal& b);
/// J(a^c b^d) ⊆ J(a^c) J(b^d), with J(a^c b^d) computed as J((a^p b^q)^{1/m})
/// for c = p/m, d = q/m. Error{RingMismatch}, Error{InvalidParameters}.
MonomialCertificate strong_subadd_check_monomial(const ToricRing& ring, const MonomialIdeal& a, const MonomialIdeal& b,
                                                 const Rational& c, const Rational& d);

/// lambda with sum lambda_i points_i = target. Error{SingularMatrix}.
QVector barycentric_solve(const std::vector<Exponent>& points, const Exponent& target);

struct ExploreConfig {
  std::size_t rank = 3;
  std::int64_t max_modulus = 12;
  std::int64_t max_coordinate = 30;
  std::size_t max_generators = 3;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool gorenstein_only = true;
  bool full_lattice = false;
  /// Pin the ring and/or the ideal pair instead of sampling them.
  std::optional<ToricRing> ring;
  std::optional<std::vector<Exponent>> ideal_a, ideal_b;
};

struct ExploreFinding {
  std::size_t trial = 0;
  ToricRing ring;
  MonomialIdeal a, b;
  MonomialCertificate certificate;
};

struct ExploreReport {
  std::size_t trials_run = 0;
  /// Trials skipped because a pinned ring failed the Gorenstein filter.
  std::size_t filtered = 0;
  std::vector<ExploreFinding> findings;
  std::string gorenstein_note;
};

/// Samples rings and ideal pairs and runs the subadditivity check; the same
/// config (including seed) always gives the same report.
ExploreReport explore_question33(const ExploreConfig& config);

}  // namespace subadd::toric
