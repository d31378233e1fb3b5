#include "extremal/morphism.hpp"

#include "extremal/repetition.hpp"

#include <algorithm>
#include <chrono>

namespace extremal {

UniformMorphism::UniformMorphism(std::vector<Word> images, unsigned codomain_size)
    : images_(std::move(images)), codomain_size_(codomain_size) {
  if (images_.empty()) throw PreconditionError("morphism needs at least one image");
  if (images_.front().empty()) throw PreconditionError("morphism images must be nonempty");
  for (const auto& img : images_) {
    if (img.size() != images_.front().size()) {
      throw PreconditionError("morphism is not uniform: image lengths " +
                              std::to_string(images_.front().size()) + " and " +
                              std::to_string(img.size()));
    }
    for (auto c : img) {
      if (c >= codomain_size) throw PreconditionError("image letter outside codomain");
    }
  }
}

Word apply(const UniformMorphism& f, std::span<const Letter> w) {
  std::vector<Letter> out;
  out.reserve(w.size() * f.uniform_length());
  for (auto c : w) {
    if (c >= f.domain_size()) {
      throw PreconditionError("letter " + std::to_string(c) + " outside morphism domain");
    }
    const auto& img = f.image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), f.codomain_size());
}

Word apply(const UniformMorphism& f, const Word& w) { return apply(f, w.letters()); }

Word iterate(const UniformMorphism& f, std::size_t n, const Word& w) {
  if (f.domain_size() != f.codomain_size()) {
    throw PreconditionError("iterate needs a morphism from an alphabet to itself");
  }
  Word out = w;
  for (std::size_t i = 0; i < n; ++i) out = apply(f, out);
  return out;
}

const UniformMorphism& thue_morse_morphism() {
  static const UniformMorphism mu({bin("01"), bin("10")}, 2);
  return mu;
}

Word thue_morse_prefix(std::size_t n) {
  // t[i] is the parity of the number of ones in the binary expansion of i.
  std::vector<Letter> letters(n);
  for (std::size_t i = 0; i < n; ++i) {
    letters[i] = static_cast<Letter>(__builtin_popcountll(i) & 1);
  }
  return Word(std::move(letters), 2);
}

bool is_synchronizing(const UniformMorphism& f) {
  const auto& imgs = f.images();
  for (std::size_t a = 0; a < imgs.size(); ++a) {
    for (std::size_t b = a + 1; b < imgs.size(); ++b) {
      if (imgs[a] == imgs[b]) return false;
    }
  }
  const std::size_t q = f.uniform_length();
  for (const auto& left : imgs) {
    for (const auto& right : imgs) {
      const Word pair = left + right;
      for (const auto& c : imgs) {
        for (std::size_t d = 1; d < q; ++d) {
          if (std::equal(c.begin(), c.end(), pair.begin() + static_cast<std::ptrdiff_t>(d))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Rational ochem_bound(const Rational& a, const Rational& b, std::size_t q) {
  if (!(Rational(1) < a && a < b)) {
    throw PreconditionError("ochem_bound needs 1 < a < b, got a=" + a.str() + " b=" + b.str());
  }
  if (q < 2) throw PreconditionError("ochem_bound needs q >= 2");
  const Rational qr(static_cast<long long>(q));
  const Rational first = Rational(2) * b / (b - a);
  const Rational second = Rational(2) * (qr - Rational(1)) * (Rational(2) * b - Rational(1)) /
                          (qr * (b - Rational(1)));
  return std::max(first, second);
}

Report certify_image_freeness(const UniformMorphism& f, const ExtReal& alpha,
                              const ExtReal& beta) {
  const auto started = std::chrono::steady_clock::now();
  if (!is_synchronizing(f)) {
    throw PreconditionError("certification refused: morphism is not synchronizing");
  }
  if (!(alpha.value < beta.value)) {
    throw PreconditionError("certification needs alpha < beta as rationals");
  }
  const auto bound = ochem_bound(alpha.value, beta.value, f.uniform_length());
  const auto max_len = static_cast<std::size_t>(bound.floor());

  Report report;
  report.check_id = "certify";
  report.details.push_back("bound=" + bound.str() + " max_length=" + std::to_string(max_len));

  const Threshold t(beta);
  const std::size_t q = f.uniform_length();
  std::vector<Letter> image;
  image.reserve(max_len * q);
  walk_beta_free(f.domain_size(), alpha, max_len, [&](std::span<const Letter> w) {
    ++report.items_checked;
    if (w.empty()) return Visit::descend;
    // The image of w minus its last letter was already verified; any new
    // repetition must end inside the last block.
    image.resize((w.size() - 1) * q);
    const auto& block = f.image(w.back());
    for (std::size_t i = 0; i < q; ++i) {
      image.push_back(block[i]);
      if (has_suffix_repetition(image, t)) {
        Word ww(std::vector<Letter>(w.begin(), w.end()), f.domain_size());
        Word img = apply(f, ww);
        report.fail({"w=" + ww.str() + " f(w)=" + img.str(), find_repetition(img, beta),
                     "image not " + beta.str() + "-free"});
        return Visit::prune;
      }
    }
    return Visit::descend;
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

UniformMorphism ternary_to_binary(const char* i0, const char* i1, const char* i2) {
  return UniformMorphism({bin(i0), bin(i1), bin(i2)}, 2);
}

std::vector<LevelData> build_levels() {
  std::vector<LevelData> out;
  out.push_back({'b',
                 ternary_to_binary("001011001101100100110100110110010011",
                                   "001011001101100100110110010110010011",
                                   "001011001101100101100100110110010011"),
                 bin("1100110010011"), bin("001001"),
                 ExtReal::above(Rational(7, 3)), ExtReal::exact(Rational(17, 7)), 36});
  out.push_back({'c',
                 ternary_to_binary("001001100101100100110010110100110010110011011",
                                   "001001100101100110100101100110110010110011011",
                                   "001001100101100110100110110011010010110011011"),
                 bin("00110110011011"), bin("00100110010011"),
                 ExtReal::above(Rational(17, 7)), ExtReal::exact(Rational(5, 2)), 45});
  out.push_back({'d',
                 ternary_to_binary("0011011001001100101100110110010011",
                                   "0011011001001101001101100110010011",
                                   "0011011001001101100110100110010011"),
                 bin("00110110011011001010011"), bin("00110101100100110010011"),
                 ExtReal::above(Rational(5, 2)), ExtReal::exact(Rational(18, 7)), 34});
  out.push_back({'e',
                 ternary_to_binary("0011011001001100101100110110010011",
                                   "0011011001001101100110100110010011",
                                   "0011011001101001100100110110010011"),
                 bin("01101100110110011001010011"), bin("00110101100110010011001001"),
                 ExtReal::above(Rational(18, 7)), ExtReal::exact(Rational(8, 3)), 34});
  return out;
}

}  // namespace

std::vector<std::string> level_problems(const LevelData& level) {
  std::vector<std::string> problems;
  const std::string tag = std::string("level ") + level.name + ": ";
  if (level.f.domain_size() != 3) problems.push_back(tag + "morphism domain is not ternary");
  if (level.f.codomain_size() != 2) problems.push_back(tag + "morphism codomain is not binary");
  if (level.f.uniform_length() != level.expected_q) {
    problems.push_back(tag + "image length " + std::to_string(level.f.uniform_length()) +
                       ", expected " + std::to_string(level.expected_q));
  }
  if (!is_synchronizing(level.f)) problems.push_back(tag + "morphism is not synchronizing");
  if (!(level.alpha < level.beta)) problems.push_back(tag + "alpha must be below beta");
  return problems;
}

const std::vector<LevelData>& levels() {
  static const std::vector<LevelData> data = [] {
    auto d = build_levels();
    for (const auto& l : d) {
      if (auto p = level_problems(l); !p.empty()) throw InternalInconsistency(p.front());
    }
    return d;
  }();
  return data;
}

const LevelData& level(char name) {
  for (const auto& l : levels()) {
    if (l.name == name) return l;
  }
  throw PreconditionError(std::string("unknown level '") + name + "'");
}

}  // namespace extremal
