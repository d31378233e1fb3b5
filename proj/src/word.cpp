#include "extremal/word.hpp"

#include <algorithm>
#include <charconv>

namespace extremal {

namespace {

void check_alphabet(unsigned k) {
  if (k < 2 || k > Word::kMaxAlphabet) {
    throw PreconditionError("alphabet size must be 2 or 3, got " +
                            std::to_string(k));
  }
}

void require_binary(const Word& w, const char* op) {
  if (w.alphabet_size() != 2) {
    throw PreconditionError(std::string(op) + " requires a binary word");
  }
}

}  // namespace

Word::Word(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
}

Word::Word(std::vector<Letter> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= alphabet_size) {
      throw PreconditionError("letter " + std::to_string(letters_[i]) +
                              " at position " + std::to_string(i) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_size));
    }
  }
}

Word::Word(std::initializer_list<Letter> letters, unsigned alphabet_size)
    : Word(std::vector<Letter>(letters), alphabet_size) {}

Word Word::parse(std::string_view text, unsigned alphabet_size) {
  check_alphabet(alphabet_size);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c >= static_cast<char>('0' + alphabet_size)) {
      throw ParseError("invalid letter '" + std::string(1, c) +
                           "' at position " + std::to_string(i) +
                           " for alphabet of size " +
                           std::to_string(alphabet_size),
                       i);
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  Word w(alphabet_size);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start) {
    throw PreconditionError("factor [" + std::to_string(start) + ", +" +
                            std::to_string(length) + ") out of range for word of length " +
                            std::to_string(size()));
  }
  Word w(alphabet_size_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                    letters_.begin() + static_cast<std::ptrdiff_t>(start + length));
  return w;
}

Word Word::suffix(std::size_t length) const {
  if (length > size()) throw PreconditionError("suffix longer than word");
  return factor(size() - length, length);
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w(std::max(alphabet_size_, other.alphabet_size_));
  w.letters_.reserve(size() + other.size());
  w.letters_ = letters_;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  return w;
}

Word Word::operator+(Letter letter) const {
  if (letter >= alphabet_size_) throw PreconditionError("letter outside alphabet");
  Word w = *this;
  w.letters_.push_back(letter);
  return w;
}

Word Word::inserted(std::size_t position, Letter letter) const {
  if (position > size()) throw PreconditionError("insertion position out of range");
  if (letter >= alphabet_size_) throw PreconditionError("letter outside alphabet");
  Word w(alphabet_size_);
  w.letters_.reserve(size() + 1);
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(position));
  w.letters_.push_back(letter);
  w.letters_.insert(w.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(position),
                    letters_.end());
  return w;
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const {
  return s.size() <= size() &&
         std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (auto c : letters_) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

// ---------------------------------------------------------------------------

Rational::Rational(long long value) : num_(value), den_(1) {
  if (value < 0) throw PreconditionError("rationals here are non-negative");
}

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) throw PreconditionError("denominator must be positive");
  if (num_ < 0) throw PreconditionError("rationals here are non-negative");
  normalize();
}

void Rational::normalize() {
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

Rational::Int parse_digits(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits at position " + std::to_string(offset), offset);
  Rational::Int v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                           std::to_string(offset + i),
                       offset + i);
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_digits(text, 0), 1);
  auto num = parse_digits(text.substr(0, slash), 0);
  auto den = parse_digits(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational::Int n = a.num_ * b.den_ - b.num_ * a.den_;
  if (n < 0) throw PreconditionError("negative rational difference");
  return Rational(n, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw PreconditionError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Rational::Int lhs = a.num_ * b.den_;
  Rational::Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ExtReal ExtReal::parse(std::string_view text) {
  bool plus = !text.empty() && text.back() == '+';
  if (plus) text.remove_suffix(1);
  return {Rational::parse(text), plus};
}

std::string ExtReal::str() const { return value.str() + (plus ? "+" : ""); }

std::ostream& operator<<(std::ostream& os, const ExtReal& e) { return os << e.str(); }

bool ext_meets(const Rational& e, const ExtReal& beta) {
  return beta.plus ? e > beta.value : e >= beta.value;
}

std::ostream& operator<<(std::ostream& os, const Occurrence& o) {
  return os << "start=" << o.start << " length=" << o.length << " period=" << o.period
            << " exponent=" << o.exponent;
}

// ---------------------------------------------------------------------------

Word complement_at(const Word& w, std::size_t i) {
  require_binary(w, "complement_at");
  if (i >= w.size()) {
    throw PreconditionError("index " + std::to_string(i) + " out of range for word of length " +
                            std::to_string(w.size()));
  }
  std::vector<Letter> letters(w.begin(), w.end());
  letters[i] ^= 1;
  return Word(std::move(letters), 2);
}

Word complement(const Word& w) {
  require_binary(w, "complement");
  std::vector<Letter> letters(w.begin(), w.end());
  for (auto& c : letters) c ^= 1;
  return Word(std::move(letters), 2);
}

std::set<Word> conjugates(const Word& w) {
  std::set<Word> out;
  if (w.empty()) {
    out.insert(w);
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.insert(w.suffix(w.size() - i) + w.prefix(i));
  }
  return out;
}

Word left_quotient(const Word& prefix, const Word& w) {
  if (!w.starts_with(prefix)) {
    throw PreconditionError(prefix.str() + " is not a prefix of " + w.str());
  }
  return w.suffix(w.size() - prefix.size());
}

std::size_t count_occurrences(const Word& factor, const Word& w) {
  if (factor.empty()) throw PreconditionError("count_occurrences: empty factor");
  if (factor.size() > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    if (std::equal(factor.begin(), factor.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++count;
    }
  }
  return count;
}

}  // namespace extremal
