#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "subadd/rational.hpp"

namespace subadd::surface {

/// Formal sum of the curves of one model, stored densely by curve index.
/// Absent curves have coefficient zero; comparisons are componentwise.
template <class Coef>
class BasicCycle {
 public:
  BasicCycle() = default;
  explicit BasicCycle(std::size_t n) : c_(n, Coef(0)) {}
  explicit BasicCycle(std::vector<Coef> coefficients) : c_(std::move(coefficients)) {}

  std::size_t size() const { return c_.size(); }
  Coef& operator[](std::size_t i) { return c_[i]; }
  const Coef& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Coef>& coefficients() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coef& x) { return x == Coef(0); });
  }
  bool is_effective() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coef& x) { return !(x < Coef(0)); });
  }

  BasicCycle& operator+=(const BasicCycle& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  BasicCycle& operator-=(const BasicCycle& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend BasicCycle operator+(BasicCycle a, const BasicCycle& b) { return a += b; }
  friend BasicCycle operator-(BasicCycle a, const BasicCycle& b) { return a -= b; }
  friend BasicCycle operator*(const Coef& s, BasicCycle a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }

  friend bool operator==(const BasicCycle&, const BasicCycle&) = default;

  /// Componentwise partial order.
  bool leq(const BasicCycle& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (o.c_[i] < c_[i]) return false;
    return true;
  }

 private:
  std::vector<Coef> c_;
};

using QCycle = BasicCycle<Rational>;
using Cycle = BasicCycle<std::int64_t>;

inline QCycle to_q(const Cycle& z) {
  QCycle out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = Rational(static_cast<long>(z[i]));
  return out;
}

inline Cycle floor_cycle(const QCycle& z) {
  Cycle out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = to_int64(z[i].floor());
  return out;
}

inline Cycle ceil_cycle(const QCycle& z) {
  Cycle out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = to_int64(z[i].ceil());
  return out;
}

}  // namespace subadd::surface
