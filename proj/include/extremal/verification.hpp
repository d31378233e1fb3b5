#pragma once

// Registered finite checks. Each one reproduces a computer verification that
// a construction or nonexistence claim rests on, and returns an auditable
// Report.

#include "extremal/morphism.hpp"
#include "extremal/report.hpp"
#include "extremal/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// Registered check identifiers, in run order.
const std::vector<std::string>& check_ids();

/// Runs one registered check. Unknown ids throw PreconditionError.
Report verify(const std::string& check_id);

std::vector<Report> verify_all();

/// A factor occurring once near a flank; used to bound the period of any
/// repetition that starts in the flank's head (or ends in its tail).
struct Anchor {
  Word word;
  /// Offset in r·f(c) (left anchor) or distance of the anchor's start from
  /// the end of f(c)·s (right anchor).
  std::size_t offset;
  /// Largest period a repetition touching the flank can have.
  std::size_t period_bound;
};

/// Every insertion that is not a left or right extension of a whole
/// assembly (and every flank-side insertion) reaches the level's beta.
Report check_level_blocks(const LevelData& level);

/// Anchor uniqueness and bounded-period exclusion near both flanks.
Report check_level_anchors(const LevelData& level);

/// certify_image_freeness(f, 2, alpha).
Report check_level_certify(const LevelData& level);

/// Direct is_pair_extremal on r·f(v)·s for v_length 1..max_v_length.
Report check_level_instances(const LevelData& level, std::size_t max_v_length = 8);

/// Structural self-check plus the four checks above; the id of each report
/// is "P4.2<level>-<kind>".
std::vector<Report> verify_level(const LevelData& level);

/// Left anchor of a level: the fixed t_r = 00110010011 for level b, otherwise the
/// shortest admissible factor found by search. Nothing when none exists.
std::optional<Anchor> left_anchor(const LevelData& level);
/// Right anchor, expressed on the mirrored data (see Anchor::offset).
std::optional<Anchor> right_anchor(const LevelData& level);

}  // namespace extremal
