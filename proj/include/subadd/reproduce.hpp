#pragma once

// Built-in worked examples with their expected values. Each id rebuilds its
// inputs, recomputes every quantity and compares the printed forms.

#include <optional>
#include <string>
#include <vector>

#include "subadd/io.hpp"

namespace subadd {

struct ReproCheck {
  std::string quantity;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ReproReport {
  std::string id;
  std::string title;
  std::vector<ReproCheck> checks;
  bool passed = false;
  /// Name of the first check that failed.
  std::optional<std::string> first_mismatch;
};

const std::vector<std::string>& reproduce_ids();

/// Error{UnknownExample} for ids outside reproduce_ids().
ReproReport reproduce(const std::string& id);

io::Json to_json(const ReproReport& report);

}  // namespace subadd
