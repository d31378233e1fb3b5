#pragma once

#include "extremal/word.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace extremal {

struct Counterexample {
  std::string context;  // the input word(s) and what was being checked
  std::optional<Occurrence> witness;
  std::string note;  // e.g. "no repetition reaching 17/7"
};

/// Outcome of one named finite check. passed ⇔ counterexamples.empty().
struct Report {
  std::string check_id;
  bool passed = true;
  std::size_t items_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
  /// Free-form facts worth printing, e.g. a discovered anchor.
  std::vector<std::string> details;

  void fail(Counterexample c) {
    passed = false;
    counterexamples.push_back(std::move(c));
  }
  /// Folds another report's counts and failures into this one.
  void absorb(const Report& other);
};

/// One line per report plus indented counterexamples and details.
void write_human(std::ostream& os, const Report& r);

/// Structured record. `elapsed_ms` is omitted when `with_timing` is false so
/// output is byte-for-byte deterministic.
nlohmann::json to_json(const Report& r, bool with_timing = true);

nlohmann::json to_json(const Occurrence& o);

}  // namespace extremal
