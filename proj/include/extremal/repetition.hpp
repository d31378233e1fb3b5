#pragma once

#include "extremal/word.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace extremal {

/// β reduced to machine integers for the inner loops. A factor of length L
/// with period p reaches β iff L·den ≥ num·p (strict when β carries a plus).
class Threshold {
 public:
  explicit Threshold(const ExtReal& beta);

  bool met(std::size_t length, std::size_t period) const {
    auto lhs = static_cast<unsigned __int128>(length) * den_;
    auto rhs = static_cast<unsigned __int128>(period) * num_;
    return plus_ ? lhs > rhs : lhs >= rhs;
  }

  /// Shortest length at which a factor of period p reaches β.
  std::size_t min_length(std::size_t period) const;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
  bool plus_;
};

/// Smallest p ≥ 1 such that w has period p.
std::size_t minimal_period(const Word& w);

/// |w| / minimal_period(w).
Rational exponent(const Word& w);

/// Leftmost repetition reaching β: smallest start, then smallest period,
/// extended to the longest factor with that start and period.
std::optional<Occurrence> find_repetition(const Word& w, const ExtReal& beta);

/// As find_repetition, restricted to witness periods ≤ p_max.
std::optional<Occurrence> find_repetition_bounded(const Word& w, const ExtReal& beta,
                                                  std::size_t p_max);

bool is_beta_free(const Word& w, const ExtReal& beta);
bool is_overlap_free(const Word& w);
bool is_square_free(const Word& w);

/// Early-exit yes/no on raw letters. Periods are tried in increasing order,
/// which makes the common case (a short-period repetition) cheap.
bool has_repetition(std::span<const Letter> w, const Threshold& t,
                    std::size_t p_max = std::numeric_limits<std::size_t>::max());

/// Whether some factor ending at the last letter reaches the threshold.
/// Used to prune backtracking: if w minus its last letter is free, w is free
/// iff this returns false.
bool has_suffix_repetition(std::span<const Letter> w, const Threshold& t);

enum class Visit { descend, prune, stop };

/// Depth-first, lexicographic walk over every β-free word over Σ_k of
/// length ≤ max_length, starting with ε. Children are grown one letter at a
/// time and rejected as soon as a new suffix reaches β. Words of one length
/// are therefore visited in lexicographic order.
template <typename Visitor>
void walk_beta_free(unsigned k, const ExtReal& beta, std::size_t max_length, Visitor&& visit) {
  const Threshold t(beta);
  std::vector<Letter> w;
  w.reserve(max_length);
  if (visit(std::span<const Letter>(w)) != Visit::descend) return;
  // next[d] is the next letter to try at depth d.
  std::vector<Letter> next(max_length + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == max_length || next[depth] == k) {
      if (depth == 0) return;
      next[depth] = 0;
      w.pop_back();
      --depth;
      continue;
    }
    w.push_back(next[depth]++);
    if (has_suffix_repetition(w, t)) {
      w.pop_back();
      continue;
    }
    switch (visit(std::span<const Letter>(w))) {
      case Visit::stop:
        return;
      case Visit::prune:
        w.pop_back();
        continue;
      case Visit::descend:
        ++depth;
        break;
    }
  }
}

}  // namespace extremal
