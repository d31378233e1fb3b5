#pragma once

// Words over small alphabets, exact rationals, extended reals, and the
// elementary word surgery everything else is built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

using Letter = std::uint8_t;

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position` is the 0-based offset of the offending
/// character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation contradicted a fact that is known to hold. Never a user
/// error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// A finite word over Σ_k = {0, ..., k-1}, k ∈ {2, 3}. Value type; surgery
/// returns new words.
class Word {
 public:
  static constexpr unsigned kMaxAlphabet = 3;

  explicit Word(unsigned alphabet_size = 2);
  Word(std::vector<Letter> letters, unsigned alphabet_size);
  Word(std::initializer_list<Letter> letters, unsigned alphabet_size);

  /// Parses one ASCII digit per letter, e.g. "0010011011".
  static Word parse(std::string_view text, unsigned alphabet_size = 2);

  unsigned alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// w[start, start+length).
  Word factor(std::size_t start, std::size_t length) const;
  Word prefix(std::size_t length) const { return factor(0, length); }
  Word suffix(std::size_t length) const;
  Word reversed() const;

  Word operator+(const Word& other) const;
  Word operator+(Letter letter) const;
  /// Same word with `letter` inserted before index `position`.
  Word inserted(std::size_t position, Letter letter) const;

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  /// Lexicographic; agrees with comparing str().
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_size_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Shorthand for binary literals in code and tests.
inline Word bin(std::string_view text) { return Word::parse(text, 2); }
inline Word ter(std::string_view text) { return Word::parse(text, 3); }

/// Exact non-negative rational in lowest terms.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long value);  // NOLINT: integers convert implicitly
  Rational(Int numerator, Int denominator);

  /// "p/q" or "p".
  static Rational parse(std::string_view text);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  /// Largest integer ≤ value.
  Int floor() const { return num_ / den_; }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  void normalize();

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// An extended real: x or x⁺, where x⁺ covers x. The threshold type of
/// β-freeness.
struct ExtReal {
  Rational value;
  bool plus = false;

  static ExtReal exact(Rational v) { return {std::move(v), false}; }
  static ExtReal above(Rational v) { return {std::move(v), true}; }
  /// "2", "2+", "7/3", "7/3+".
  static ExtReal parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const ExtReal&, const ExtReal&) = default;
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.plus <=> b.plus;
  }
};

std::ostream& operator<<(std::ostream& os, const ExtReal& e);

/// True iff an exponent `e` reaches the threshold: e ≥ β for plain β,
/// e > x for β = x⁺.
bool ext_meets(const Rational& e, const ExtReal& beta);

/// A witnessed repetition inside some host word.
struct Occurrence {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 0;
  Rational exponent;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

std::ostream& operator<<(std::ostream& os, const Occurrence& o);

/// Flips letter i of a binary word.
Word complement_at(const Word& w, std::size_t i);

/// Letterwise complement of a binary word.
Word complement(const Word& w);

/// All rotations yx of w = xy, deduplicated.
std::set<Word> conjugates(const Word& w);

/// w with `prefix` removed from the front.
Word left_quotient(const Word& prefix, const Word& w);

/// Number of (possibly overlapping) occurrences of `factor` in `w`.
std::size_t count_occurrences(const Word& factor, const Word& w);

}  // namespace extremal

template <>
struct std::hash<extremal::Word> {
  std::size_t operator()(const extremal::Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto c : w) h = h * 31 + c + 1;
    return h;
  }
};
