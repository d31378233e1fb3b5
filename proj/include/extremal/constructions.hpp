#pragma once

#include "extremal/morphism.hpp"
#include "extremal/word.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace extremal {

/// Where n sits in the set of lengths admitting extremal overlap-free binary
/// words: {10, 12} ∪ {2k : k ≥ 10} ∪ {2^k + 1 : k ≥ 5} ∪ {3·2^k + 1 : k ≥ 3}.
enum class LengthClassTag {
  small_even,         // 10, 12
  even_general,       // even n ≥ 20, not a power of two
  power_of_two,       // 2^k, k ≥ 5
  pow2_plus_1,        // 2^k + 1, k ≥ 5
  three_pow2_plus_1,  // 3·2^k + 1, k ≥ 3
  not_in_set,
};

struct LengthClass {
  LengthClassTag tag;
  unsigned k = 0;  // exponent for the power-of-two classes
};

std::string to_string(const LengthClass& c);

LengthClass classify_length(std::size_t n);
bool in_length_set(std::size_t n);

/// Overlap-free, starts with 0010 or 1101, ends with 0100.
bool is_earmarked(const Word& w);

/// μ(u) with its first and last letters complemented. For earmarked u with
/// |u| ≥ 8 the result is earmarked and extremal overlap-free.
Word earmarked_double(const Word& u);

/// Earmarked u·0100 of length n with u a factor of the Thue–Morse word,
/// taking the factor with the smallest start. n ≥ 10, n ≢ 0 (mod 4).
Word find_earmarked_tm(std::size_t n);

/// Earmarked word of any length n ≥ 10 that is not a power of two.
Word construct_earmarked(std::size_t n);

Word construct_extremal_even(std::size_t n);
Word construct_extremal_odd(std::size_t n);

/// Extremal overlap-free binary word of length n, for any n in the length
/// set; dispatches on parity.
Word construct_extremal(std::size_t n);

/// Length-n prefix of the fixed point of 0 → 012, 1 → 02, 2 → 1. The prefix
/// is re-verified square-free before it is returned.
Word squarefree_ternary(std::size_t n);

/// A (2⁺, 7/3)-extremal word 00·μ²(11·v·11)·00 of length ≥ target, where
/// 011·v·110 is the earliest Thue–Morse factor of the shortest usable |v|.
Word construct_level_a(std::size_t target_min_length);

/// r·f(v)·s for level 'b'..'e', with v the middle of a square-free ternary
/// word of length v_length + 2.
Word construct_level(char level, std::size_t v_length);
Word construct_level(const LevelData& level, std::size_t v_length);

/// Smallest instance of a level whose length is at least min_length. Level
/// 'a' is accepted as well.
Word construct_level_at_least(char level, std::size_t min_length);

}  // namespace extremal
