#pragma once

// Shared gtest helpers; generators and oracles live in generators.hpp.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subadd/error.hpp"
#include "subadd/surface.hpp"
#include "generators.hpp"

namespace subadd::testing {

using surface::Cycle;
using surface::QCycle;
using surface::ResolutionModel;

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline Cycle make_cycle(const ResolutionModel& m, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  Cycle z(m.size());
  for (const auto& [name, c] : terms) z[m.id(name).index] = c;
  return z;
}

inline QCycle make_qcycle(const ResolutionModel& m, std::initializer_list<std::pair<const char*, Rational>> terms) {
  QCycle z(m.size());
  for (const auto& [name, c] : terms) z[m.id(name).index] = c;
  return z;
}

}  // namespace subadd::testing
