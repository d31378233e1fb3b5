#include "extremal/constructions.hpp"

#include "extremal/morphism.hpp"
#include "extremal/repetition.hpp"

#include <array>
#include <bit>

namespace extremal {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && std::has_single_bit(n); }

unsigned log2_exact(std::size_t n) { return static_cast<unsigned>(std::countr_zero(n)); }

const Word& earmark_suffix() {
  static const Word w = bin("0100");
  return w;
}

struct BaseEntry {
  std::size_t length;
  const char* word;
};

// Earmarked words for the lengths the doubling recursion cannot reach.
constexpr std::array<BaseEntry, 4> kEarmarkedBases = {{
    {12, "001001100100"},
    {20, "00100110100101100100"},
    {24, "110110010110100101100100"},
    {28, "1101100110100101101001100100"},
}};

const std::array<Word, 4>& earmarked_bases() {
  static const std::array<Word, 4> bases = [] {
    std::array<Word, 4> out;
    for (std::size_t i = 0; i < kEarmarkedBases.size(); ++i) {
      out[i] = bin(kEarmarkedBases[i].word);
      if (out[i].size() != kEarmarkedBases[i].length || !is_earmarked(out[i])) {
        throw InternalInconsistency("embedded base word " + out[i].str() + " is not earmarked");
      }
    }
    return out;
  }();
  return bases;
}

}  // namespace

std::string to_string(const LengthClass& c) {
  switch (c.tag) {
    case LengthClassTag::small_even:
      return "small-even";
    case LengthClassTag::even_general:
      return "even-general";
    case LengthClassTag::power_of_two:
      return "power-of-two(k=" + std::to_string(c.k) + ")";
    case LengthClassTag::pow2_plus_1:
      return "pow2-plus-1(k=" + std::to_string(c.k) + ")";
    case LengthClassTag::three_pow2_plus_1:
      return "three-pow2-plus-1(k=" + std::to_string(c.k) + ")";
    case LengthClassTag::not_in_set:
      return "not-in-set";
  }
  return "?";
}

LengthClass classify_length(std::size_t n) {
  if (n == 10 || n == 12) return {LengthClassTag::small_even};
  if (n % 2 == 0) {
    if (is_power_of_two(n) && n >= 32) return {LengthClassTag::power_of_two, log2_exact(n)};
    if (n >= 20 && !is_power_of_two(n)) return {LengthClassTag::even_general};
    return {LengthClassTag::not_in_set};
  }
  const std::size_t m = n - 1;
  if (is_power_of_two(m) && m >= 32) return {LengthClassTag::pow2_plus_1, log2_exact(m)};
  if (m % 3 == 0 && is_power_of_two(m / 3) && m / 3 >= 8) {
    return {LengthClassTag::three_pow2_plus_1, log2_exact(m / 3)};
  }
  return {LengthClassTag::not_in_set};
}

bool in_length_set(std::size_t n) { return classify_length(n).tag != LengthClassTag::not_in_set; }

bool is_earmarked(const Word& w) {
  if (w.alphabet_size() != 2 || w.size() < 4) return false;
  const Word head = w.prefix(4);
  if (head != bin("0010") && head != bin("1101")) return false;
  if (!w.ends_with(earmark_suffix())) return false;
  return is_overlap_free(w);
}

Word earmarked_double(const Word& u) {
  if (u.size() < 8) {
    throw PreconditionError("earmarked_double needs |u| >= 8, got " + std::to_string(u.size()));
  }
  if (!is_earmarked(u)) throw PreconditionError(u.str() + " is not earmarked");
  Word v = apply(thue_morse_morphism(), u);
  return complement_at(complement_at(v, 0), v.size() - 1);
}

Word find_earmarked_tm(std::size_t n) {
  if (n < 10) throw PreconditionError("find_earmarked_tm needs n >= 10");
  if (n % 4 == 0) throw PreconditionError("find_earmarked_tm needs n not divisible by 4");
  const std::size_t window = 16 * n;
  const std::size_t u_len = n - 4;
  const Word t = thue_morse_prefix(window + u_len + 1);
  for (std::size_t s = 0; s <= window; ++s) {
    Word candidate = t.factor(s, u_len) + earmark_suffix();
    if (is_earmarked(candidate)) return candidate;
  }
  throw InternalInconsistency("no earmarked Thue-Morse word of length " + std::to_string(n) +
                              " within start window " + std::to_string(window));
}

Word construct_earmarked(std::size_t n) {
  if (n < 10) throw PreconditionError("construct_earmarked needs n >= 10");
  if (is_power_of_two(n)) {
    throw PreconditionError("construct_earmarked: " + std::to_string(n) + " is a power of two");
  }
  for (const auto& base : earmarked_bases()) {
    if (base.size() == n) return base;
  }
  if (n % 4 != 0) return find_earmarked_tm(n);
  return earmarked_double(construct_earmarked(n / 2));
}

Word construct_extremal_even(std::size_t n) {
  const auto cls = classify_length(n);
  if (n % 2 != 0) throw PreconditionError(std::to_string(n) + " is odd");
  switch (cls.tag) {
    case LengthClassTag::small_even:
      return n == 10 ? bin("0010011011") : bin("001001100100");
    case LengthClassTag::power_of_two:
      // (00101101)² = 0·μ(0011001)·1
      return iterate(thue_morse_morphism(), cls.k - 4, bin("0010110100101101"));
    case LengthClassTag::even_general:
      return earmarked_double(construct_earmarked(n / 2));
    default:
      throw PreconditionError("no extremal overlap-free binary word of length " +
                              std::to_string(n));
  }
}

Word construct_extremal_odd(std::size_t n) {
  const auto cls = classify_length(n);
  if (n % 2 == 0) throw PreconditionError(std::to_string(n) + " is even");
  if (cls.tag == LengthClassTag::three_pow2_plus_1 && cls.k == 3) {
    // The 010010-seeded word of length 25 begins with the overlap 0010010.
    // Rotating the complementary square instead gives 0·(010011001011)².
    const Word square = iterate(thue_morse_morphism(), 2, bin("101101"));
    return bin("0") + left_quotient(bin("1001011"), square) + bin("1001011");
  }
  Word seed;
  if (cls.tag == LengthClassTag::pow2_plus_1) {
    seed = bin("00");
  } else if (cls.tag == LengthClassTag::three_pow2_plus_1) {
    seed = bin("010010");
  } else {
    throw PreconditionError("no extremal overlap-free binary word of length " +
                            std::to_string(n));
  }
  const Word square = iterate(thue_morse_morphism(), cls.k - 1, seed);
  return bin("0") + left_quotient(bin("011"), square) + bin("011");
}

Word construct_extremal(std::size_t n) {
  return n % 2 == 0 ? construct_extremal_even(n) : construct_extremal_odd(n);
}

Word squarefree_ternary(std::size_t n) {
  std::vector<Letter> w = {0};
  while (w.size() < n) {
    std::vector<Letter> next;
    next.reserve(w.size() * 3);
    for (auto c : w) {
      switch (c) {
        case 0:
          next.insert(next.end(), {0, 1, 2});
          break;
        case 1:
          next.insert(next.end(), {0, 2});
          break;
        default:
          next.push_back(1);
          break;
      }
    }
    w = std::move(next);
  }
  w.resize(n);
  Word out(std::move(w), 3);
  if (!is_square_free(out)) {
    throw InternalInconsistency("ternary source word of length " + std::to_string(n) +
                                " is not square-free");
  }
  return out;
}

Word construct_level_a(std::size_t target_min_length) {
  if (target_min_length < 36) {
    throw PreconditionError("construct_level_a needs target >= 36");
  }
  // |x| = 4|v| + 20.
  std::size_t v_len = (target_min_length - 20 + 3) / 4;
  const Word head = bin("011");
  const Word tail = bin("110");
  for (;; ++v_len) {
    const std::size_t u_len = v_len + 6;
    const Word t = thue_morse_prefix(64 * u_len + u_len);
    for (std::size_t s = 0; s + u_len <= t.size(); ++s) {
      Word u = t.factor(s, u_len);
      if (!u.starts_with(head) || !u.ends_with(tail)) continue;
      const Word v = u.factor(3, v_len);
      return bin("00") + iterate(thue_morse_morphism(), 2, bin("11") + v + bin("11")) +
             bin("00");
    }
  }
}

Word construct_level(char level_name, std::size_t v_length) {
  return construct_level(level(level_name), v_length);
}

Word construct_level(const LevelData& lv, std::size_t v_length) {
  if (v_length < 1) throw PreconditionError("construct_level needs v_length >= 1");
  const Word u = squarefree_ternary(v_length + 2);
  const Word v = u.factor(1, v_length);
  return lv.r + apply(lv.f, v) + lv.s;
}

Word construct_level_at_least(char level_name, std::size_t min_length) {
  if (level_name == 'a') return construct_level_a(std::max<std::size_t>(min_length, 36));
  const auto& lv = level(level_name);
  const std::size_t fixed = lv.r.size() + lv.s.size();
  const std::size_t q = lv.f.uniform_length();
  std::size_t v_length = 1;
  if (min_length > fixed + q) v_length = (min_length - fixed + q - 1) / q;
  return construct_level(level_name, v_length);
}

}  // namespace extremal
