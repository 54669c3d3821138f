#include "subadd/toric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "subadd/error.hpp"

namespace subadd::toric {

namespace {

using i128 = __int128;

std::int64_t mod(std::int64_t a, std::int64_t r) {
  a %= r;
  return a < 0 ? a + r : a;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in toric computation");
  return static_cast<std::int64_t>(v);
}

bool leq(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Determinant of a small integer matrix by Bareiss elimination.
i128 det(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank_of(std::vector<std::vector<i128>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const i128 a = m[rank][c], b = m[i][c];
      i128 g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = m[i][j] * a - m[rank][j] * b;
        const i128 x = m[i][j] < 0 ? -m[i][j] : m[i][j];
        g = std::gcd(static_cast<std::int64_t>(g), static_cast<std::int64_t>(x));
      }
      if (g > 1)
        for (auto& x : m[i]) x /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// ---- rings -----------------------------------------------------------------

ToricRing::ToricRing(std::size_t rank, std::vector<Congruence> congruences) {
  if (rank == 0) throw Error(ErrorKind::InvalidParameters, "rank must be positive");
  auto d = std::make_shared<Data>();
  d->rank = rank;
  for (auto& c : congruences) {
    if (c.modulus <= 0) throw Error(ErrorKind::InvalidParameters, "congruence modulus must be positive");
    if (c.weights.size() != rank) throw Error(ErrorKind::InvalidParameters, "congruence weight vector has wrong length");
    for (auto& w : c.weights) w = mod(w, c.modulus);
  }
  d->congruences = std::move(congruences);

  for (std::size_t j = 0; j < rank; ++j) {
    std::int64_t ord = 1;
    for (const auto& c : d->congruences) ord = std::lcm(ord, c.modulus / std::gcd(c.weights[j], c.modulus));
    d->orders.push_back(ord);
  }

  // Index: size of the image of Z^n in the product of the residue groups.
  std::int64_t group = 1;
  for (const auto& c : d->congruences) {
    group *= c.modulus;
    if (group > 50'000'000) throw Error(ErrorKind::InvalidParameters, "congruence moduli too large");
  }
  {
    const std::size_t k = d->congruences.size();
    auto encode = [&](const std::vector<std::int64_t>& r) {
      std::int64_t code = 0;
      for (std::size_t i = 0; i < k; ++i) code = code * d->congruences[i].modulus + r[i];
      return code;
    };
    std::vector<bool> seen(static_cast<std::size_t>(group), false);
    std::deque<std::vector<std::int64_t>> queue{std::vector<std::int64_t>(k, 0)};
    seen[0] = true;
    std::int64_t count = 1;
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < rank; ++j) {
        auto next = cur;
        for (std::size_t i = 0; i < k; ++i) next[i] = mod(next[i] + d->congruences[i].weights[j], d->congruences[i].modulus);
        const auto code = encode(next);
        if (!seen[code]) {
          seen[code] = true;
          ++count;
          queue.push_back(next);
        }
      }
    }
    d->index = count;
  }
  d_ = d;

  // Hilbert basis: every irreducible element lies in the box [0, ord_j].
  std::vector<Exponent> box;
  Exponent v(rank, 0);
  for (;;) {
    if (in_lattice(v) && std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) box.push_back(v);
    std::size_t j = 0;
    while (j < rank && v[j] == d->orders[j]) v[j++] = 0;
    if (j == rank) break;
    ++v[j];
  }
  std::stable_sort(box.begin(), box.end(), [](const Exponent& a, const Exponent& b) {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0}) < std::accumulate(b.begin(), b.end(), std::int64_t{0});
  });
  for (const auto& e : box) {
    bool reducible = std::any_of(d->hilbert.begin(), d->hilbert.end(), [&](const Exponent& h) { return leq(h, e); });
    if (!reducible) d->hilbert.push_back(e);
  }
  std::sort(d->hilbert.begin(), d->hilbert.end());
}

ToricRing ToricRing::full_lattice(std::size_t rank) { return ToricRing(rank, {}); }

ToricRing ToricRing::cyclic_quotient(std::int64_t r, std::vector<std::int64_t> weights) {
  const std::size_t n = weights.size();
  return ToricRing(n, {Congruence{std::move(weights), r}});
}

bool ToricRing::in_lattice(const Exponent& v) const {
  if (v.size() != rank()) return false;
  for (const auto& c : congruences()) {
    i128 s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<i128>(c.weights[j]) * v[j];
    if (s % c.modulus != 0) return false;
  }
  return true;
}

bool ToricRing::in_semigroup(const Exponent& v) const {
  if (v.size() != rank()) return false;
  for (auto x : v)
    if (x < 0) return false;
  return in_lattice(v);
}

bool is_gorenstein_cyclic_quotient(const ToricRing& ring) {
  if (ring.congruences().size() != 1) return ring.congruences().empty();
  const auto& c = ring.congruences()[0];
  std::int64_t s = 0;
  for (auto w : c.weights) {
    if (std::gcd(w, c.modulus) != 1) return false;
    s += w;
  }
  return s % c.modulus == 0;
}

// ---- ideals ----------------------------------------------------------------

std::vector<Exponent> minimalize(const ToricRing& ring, std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && leq(gens[j], gens[i]) && ring.in_lattice(minus(gens[i], gens[j]));
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(ToricRing ring, std::vector<Exponent> generators) : ring_(std::move(ring)) {
  if (generators.empty()) throw Error(ErrorKind::InvalidParameters, "an ideal needs at least one generator");
  for (const auto& g : generators)
    if (!ring_.in_semigroup(g)) throw Error(ErrorKind::InvalidParameters, "generator is not in the semigroup");
  gens_ = minimalize(ring_, std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(const ToricRing& ring) { return MonomialIdeal(ring, {Exponent(ring.rank(), 0)}); }

bool ideal_membership(const MonomialIdeal& ideal, const Exponent& v) {
  if (!ideal.ring().in_semigroup(v)) return false;
  for (const auto& g : ideal.generators())
    if (leq(g, v) && ideal.ring().in_lattice(minus(v, g))) return true;
  return false;
}

namespace {

void same_ring(const ToricRing& a, const ToricRing& b) {
  if (!(a == b)) throw Error(ErrorKind::RingMismatch, "ideals live on different rings");
}

}  // namespace

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ring(a.ring(), b.ring());
  std::vector<Exponent> out;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      Exponent s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
      out.push_back(std::move(s));
    }
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int p) {
  if (p < 1) throw Error(ErrorKind::InvalidParameters, "power must be positive");
  MonomialIdeal out = a;
  for (int i = 1; i < p; ++i) out = ideal_product(out, a);
  return out;
}

bool product_membership(const MonomialIdeal& a, const MonomialIdeal& b, const Exponent& v) {
  same_ring(a.ring(), b.ring());
  if (!a.ring().in_semigroup(v)) return false;
  for (const auto& g : a.generators())
    if (leq(g, v) && ideal_membership(b, minus(v, g))) return true;
  return false;
}

// ---- Newton polyhedra ------------------------------------------------------

namespace {

// Facets of conv(pts) + R_{>=0}^n from every n-subset of points and rays.
std::set<Facet> facets_of(const std::vector<Exponent>& pts, std::size_t n) {
  const std::size_t m = pts.size() + n;  // points, then coordinate rays
  auto row_of = [&](std::size_t item) {
    std::vector<i128> r(n + 1, 0);
    if (item < pts.size()) {
      for (std::size_t i = 0; i < n; ++i) r[i] = pts[item][i];
      r[n] = -1;
    } else {
      r[item - pts.size()] = 1;
    }
    return r;
  };

  std::set<Facet> facets;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    if (pick[0] < pts.size()) {
      std::vector<std::vector<i128>> rows;
      for (auto it : pick) rows.push_back(row_of(it));
      // Null vector of the n x (n+1) system from signed maximal minors.
      std::vector<i128> x(n + 1);
      bool nonzero = false;
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::vector<i128>> minor(n, std::vector<i128>(n));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0, cc = 0; c <= n; ++c)
            if (c != k) minor[r][cc++] = rows[r][c];
        x[k] = ((k % 2) ? -1 : 1) * det(minor);
        nonzero = nonzero || x[k] != 0;
      }
      bool has_pos = false, has_neg = false;
      for (std::size_t i = 0; i < n; ++i) {
        has_pos = has_pos || x[i] > 0;
        has_neg = has_neg || x[i] < 0;
      }
      if (nonzero && has_pos != has_neg) {
        if (has_neg)
          for (auto& v : x) v = -v;
        bool valid = true;
        for (const auto& p : pts) {
          i128 s = 0;
          for (std::size_t i = 0; i < n; ++i) s += x[i] * p[i];
          if (s < x[n]) {
            valid = false;
            break;
          }
        }
        if (valid) {
          std::int64_t g = 0;
          for (auto v : x) g = std::gcd(g, narrow(v < 0 ? -v : v));
          Facet f;
          for (std::size_t i = 0; i < n; ++i) f.normal.push_back(narrow(x[i] / g));
          f.rhs = narrow(x[n] / g);
          facets.insert(f);
        }
      }
    }
    // Next n-subset of {0..m-1} in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }

  return facets;
}

i128 facet_value(const Facet& f, const Exponent& p) {
  i128 s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<i128>(f.normal[i]) * p[i];
  return s;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const std::vector<Exponent>& input, std::size_t n) {
  if (input.empty()) throw Error(ErrorKind::InvalidParameters, "Newton polyhedron needs a point");
  // Points dominated by another point lie in its orthant and can be dropped.
  std::vector<Exponent> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  {
    std::vector<Exponent> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < pts.size() && !dominated; ++j) dominated = j != i && leq(pts[j], pts[i]);
      if (!dominated) keep.push_back(pts[i]);
    }
    pts = std::move(keep);
  }
  for (const auto& p : pts)
    if (p.size() != n) throw Error(ErrorKind::InvalidParameters, "point of wrong dimension");

  // Grow a working set until its polyhedron contains every point; the full
  // subset enumeration is only ever run on a handful of points.
  std::vector<bool> used(pts.size(), false);
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      auto key = [&](std::size_t t) {
        std::int64_t sum = 0;
        for (auto x : pts[t]) sum += x;
        return std::make_pair(i < n ? pts[t][i] : sum, sum);
      };
      if (key(k) < key(best)) best = k;
    }
    used[best] = true;
  }
  std::set<Facet> facets;
  for (;;) {
    std::vector<Exponent> work;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (used[k]) work.push_back(pts[k]);
    facets = facets_of(work, n);
    bool grew = false;
    for (const auto& f : facets) {
      std::size_t worst = pts.size();
      i128 worst_gap = 0;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const i128 gap = f.rhs - facet_value(f, pts[k]);
        if (gap > worst_gap) worst_gap = gap, worst = k;
      }
      if (worst < pts.size() && !used[worst]) used[worst] = grew = true;
    }
    if (!grew) break;
  }

  NewtonPolyhedron poly;
  poly.rank = n;
  poly.facets.assign(facets.begin(), facets.end());
  for (const auto& p : pts) {
    std::vector<std::vector<i128>> tight;
    for (const auto& f : poly.facets) {
      i128 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<i128>(f.normal[i]) * p[i];
      if (s == f.rhs) tight.emplace_back(f.normal.begin(), f.normal.end());
    }
    if (rank_of(tight) == n) poly.vertices.push_back(p);
  }
  return poly;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  return newton_polyhedron(ideal.generators(), ideal.ring().rank());
}

namespace {

// Membership in c*P (non-strict, no shift) or in the interior of c*P after
// shifting by (1,...,1) (strict), with c = p/q.
class Region {
 public:
  Region(const NewtonPolyhedron& poly, const Rational& c, bool strict)
      : poly_(poly), p_(to_int64(c.numerator())), q_(to_int64(c.denominator())), strict_(strict) {}

  bool member(const Exponent& v) const {
    for (const auto& f : poly_.facets) {
      i128 s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<i128>(f.normal[i]) * (v[i] + shift());
      if (!satisfied(s, f.rhs)) return false;
    }
    return true;
  }

  static constexpr std::int64_t kNone = INT64_MAX;

  // Smallest v[col] >= 0 that makes v a member, the other coordinates fixed.
  std::int64_t column_min(const Exponent& v, std::size_t col) const {
    i128 lo = 0;
    for (const auto& f : poly_.facets) {
      i128 s = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (i != col) s += static_cast<i128>(f.normal[i]) * (v[i] + shift());
      const i128 a = f.normal[col];
      if (a == 0) {
        if (!satisfied(s, f.rhs)) return kNone;
        continue;
      }
      const i128 num = static_cast<i128>(p_) * f.rhs - static_cast<i128>(q_) * s;
      const i128 need = strict_ ? floor_div(num, q_ * a) : ceil_div(num, q_ * a);
      lo = std::max(lo, need);
    }
    return narrow(lo);
  }

  // Exclusive per-axis bound on the minimal members.
  std::int64_t axis_bound(std::size_t j, std::int64_t ord) const {
    i128 best = 0;
    for (const auto& f : poly_.facets) {
      const i128 a = f.normal[j];
      if (a == 0) continue;
      i128 rest = 0;
      for (std::size_t i = 0; i < f.normal.size(); ++i)
        if (i != j) rest += f.normal[i];
      const i128 x = strict_ ? floor_div(static_cast<i128>(p_) * f.rhs - q_ * rest, q_ * a)
                             : ceil_div(static_cast<i128>(p_) * f.rhs, q_ * a);
      best = std::max(best, x);
    }
    return narrow(ord + best);
  }

 private:
  std::int64_t shift() const { return strict_ ? 1 : 0; }
  bool satisfied(i128 s, std::int64_t rhs) const {
    const i128 lhs = static_cast<i128>(q_) * s, r = static_cast<i128>(p_) * rhs;
    return strict_ ? lhs > r : lhs >= r;
  }

  const NewtonPolyhedron& poly_;
  std::int64_t p_, q_;
  bool strict_;
};

// Minimal elements (semigroup order) of the members of `reg` in the semigroup.
// A minimal member v with v_j >= ord_j must fail membership at v - ord_j e_j,
// which bounds every axis; columns along the widest axis are scanned between
// their analytic lower end and the first point reducible along some axis.
std::vector<Exponent> minimal_members(const ToricRing& ring, const Region& reg, int box_factor) {
  const std::size_t n = ring.rank();
  std::vector<std::int64_t> bound(n);
  for (std::size_t j = 0; j < n; ++j) bound[j] = reg.axis_bound(j, ring.order(j)) * box_factor;
  const std::size_t col = static_cast<std::size_t>(std::max_element(bound.begin(), bound.end()) - bound.begin());
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != col) others.push_back(j);

  const auto& hilbert = ring.hilbert_basis();
  auto minimal = [&](const Exponent& v) {
    for (const auto& h : hilbert)
      if (leq(h, v) && reg.member(minus(v, h))) return false;
    return true;
  };

  std::vector<Exponent> out;
  Exponent v(n, 0);
  const std::int64_t ord_col = ring.order(col);
  for (;;) {
    bool inner_exhausted = false;
    v[col] = 0;
    const std::int64_t lo = reg.column_min(v, col);
    std::int64_t hi = lo == Region::kNone ? lo : std::min(lo + ord_col, bound[col]);
    for (std::size_t j : others) {
      if (v[j] < ring.order(j) || lo == Region::kNone) continue;
      v[j] -= ring.order(j);
      const std::int64_t shifted = reg.column_min(v, col);
      v[j] += ring.order(j);
      hi = std::min(hi, shifted);
      // Column minima only shrink as v[j] grows: nothing further along the
      // innermost axis can be minimal.
      if (!others.empty() && j == others.back() && shifted == 0) inner_exhausted = true;
    }
    for (std::int64_t x = lo; lo != Region::kNone && x < hi; ++x) {
      v[col] = x;
      if (ring.in_lattice(v) && minimal(v)) out.push_back(v);
    }
    v[col] = 0;
    // Advance the odometer over the other axes.
    std::size_t k = others.size();
    if (k == 0) break;
    std::size_t pos = k - 1;
    if (inner_exhausted) v[others[pos]] = bound[others[pos]] - 1;
    for (;;) {
      const std::size_t axis = others[pos];
      if (++v[axis] < bound[axis]) break;
      v[axis] = 0;
      if (pos == 0) return out;
      --pos;
    }
  }
  return out;
}

void check_exponent(const Rational& c) {
  if (c.sign() <= 0) throw Error(ErrorKind::InvalidParameters, "exponent must be positive");
}

}  // namespace

bool in_interior(const NewtonPolyhedron& poly, const Exponent& v, const Rational& c) {
  check_exponent(c);
  Exponent w = v;
  for (auto& x : w) --x;  // Region::member shifts by one
  return Region(poly, c, true).member(w);
}

bool in_polyhedron(const NewtonPolyhedron& poly, const Exponent& v, const Rational& c) {
  check_exponent(c);
  return Region(poly, c, false).member(v);
}

MonomialIdeal newton_reduce(const MonomialIdeal& ideal) {
  return MonomialIdeal(ideal.ring(), newton_polyhedron(ideal).vertices);
}

MonomialIdeal multiplier_monomials(const ToricRing& ring, const MonomialIdeal& ideal, const Rational& c, int box_factor) {
  same_ring(ring, ideal.ring());
  check_exponent(c);
  const auto poly = newton_polyhedron(ideal);
  return MonomialIdeal(ring, minimal_members(ring, Region(poly, c, true), box_factor));
}

MonomialIdeal integral_closure_monomial(const ToricRing& ring, const MonomialIdeal& ideal, int box_factor) {
  same_ring(ring, ideal.ring());
  const auto poly = newton_polyhedron(ideal);
  MonomialIdeal out(ring, minimal_members(ring, Region(poly, Rational(1), false), box_factor));
  if (newton_polyhedron(out).facets != poly.facets)
    throw std::logic_error("integral closure changed the Newton polyhedron");
  return out;
}

// ---- subadditivity ---------------------------------------------------------

namespace {

MonomialCertificate certify(const MonomialIdeal& lhs, const MonomialIdeal& ja, const MonomialIdeal& jb) {
  MonomialCertificate cert;
  cert.j_ab = lhs.generators();
  cert.j_a = ja.generators();
  cert.j_b = jb.generators();
  for (const auto& v : cert.j_ab)
    if (!product_membership(ja, jb, v)) {
      cert.witness = v;
      break;
    }
  cert.holds = !cert.witness;
  return cert;
}

}  // namespace

MonomialCertificate subadditivity_check_monomial(const ToricRing& ring, const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ring(ring, a.ring());
  same_ring(ring, b.ring());
  const Rational one(1);
  return certify(multiplier_monomials(ring, ideal_product(a, b), one), multiplier_monomials(ring, a, one),
                 multiplier_monomials(ring, b, one));
}

MonomialCertificate strong_subadd_check_monomial(const ToricRing& ring, const MonomialIdeal& a, const MonomialIdeal& b,
                                                 const Rational& c, const Rational& d) {
  same_ring(ring, a.ring());
  same_ring(ring, b.ring());
  check_exponent(c);
  check_exponent(d);
  const Integer m = lcm(c.denominator(), d.denominator());
  const std::int64_t p = to_int64(c.numerator() * (m / c.denominator()));
  const std::int64_t q = to_int64(d.numerator() * (m / d.denominator()));
  // Only the Newton polyhedron of a^p b^q matters, so products keep vertices.
  MonomialIdeal mixed = MonomialIdeal::unit(ring);
  for (std::int64_t i = 0; i < p; ++i) mixed = newton_reduce(ideal_product(mixed, a));
  for (std::int64_t i = 0; i < q; ++i) mixed = newton_reduce(ideal_product(mixed, b));
  return certify(multiplier_monomials(ring, mixed, Rational(Integer(1), m)), multiplier_monomials(ring, a, c),
                 multiplier_monomials(ring, b, d));
}

QVector barycentric_solve(const std::vector<Exponent>& points, const Exponent& target) {
  const std::size_t n = target.size();
  if (points.size() != n) throw Error(ErrorKind::SingularMatrix, "need as many points as coordinates");
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (points[k].size() != n) throw Error(ErrorKind::SingularMatrix, "point of wrong dimension");
    for (std::size_t i = 0; i < n; ++i) m(i, k) = Rational(static_cast<long>(points[k][i]));
  }
  QVector rhs;
  for (auto x : target) rhs.push_back(Rational(static_cast<long>(x)));
  return solve_linear(m, rhs);
}

// ---- explorer --------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Bounded draws by rejection, so results do not depend on the standard
// library's distribution implementations.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 eng_;
};

ToricRing sample_ring(const ExploreConfig& cfg, TrialRng& rng) {
  if (cfg.full_lattice) return ToricRing::full_lattice(cfg.rank);
  for (;;) {
    const std::int64_t r = rng.range(2, std::max<std::int64_t>(2, cfg.max_modulus));
    std::vector<std::int64_t> w;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < cfg.rank; ++i) {
      std::int64_t x = rng.range(1, r - 1);
      if (cfg.gorenstein_only && i + 1 == cfg.rank) x = mod(-sum, r);
      if (x == 0 || std::gcd(x, r) != 1) break;
      w.push_back(x);
      sum += x;
    }
    if (w.size() == cfg.rank) return ToricRing::cyclic_quotient(r, w);
  }
}

std::vector<Exponent> sample_generators(const ExploreConfig& cfg, const ToricRing& ring, TrialRng& rng) {
  const std::size_t k = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(std::max<std::size_t>(1, cfg.max_generators))));
  std::vector<Exponent> out;
  while (out.size() < k) {
    Exponent v(ring.rank());
    for (auto& x : v) x = rng.range(0, cfg.max_coordinate);
    if (ring.in_semigroup(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

ExploreReport explore_question33(const ExploreConfig& cfg) {
  if (cfg.rank == 0 || cfg.max_coordinate < 0) throw Error(ErrorKind::InvalidParameters, "invalid explorer configuration");
  ExploreReport report;
  if (!cfg.full_lattice)
    report.gorenstein_note =
        "Gorenstein filter uses the standard toric criterion for 1/r(w) with every w_i prime to r: "
        "sum(w) = 0 mod r. It is assumed, not derived.";
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    TrialRng rng(splitmix64(cfg.seed ^ splitmix64(t)));
    ToricRing ring = cfg.ring ? *cfg.ring : sample_ring(cfg, rng);
    if (cfg.ring && cfg.gorenstein_only && !is_gorenstein_cyclic_quotient(ring)) {
      ++report.filtered;
      continue;
    }
    MonomialIdeal a(ring, cfg.ideal_a ? *cfg.ideal_a : sample_generators(cfg, ring, rng));
    MonomialIdeal b(ring, cfg.ideal_b ? *cfg.ideal_b : sample_generators(cfg, ring, rng));
    ++report.trials_run;
    auto cert = subadditivity_check_monomial(ring, a, b);
    if (!cert.holds) report.findings.push_back({t, ring, a, b, std::move(cert)});
  }
  return report;
}

}  // namespace subadd::toric
