#pragma once

#include "extremal/report.hpp"
#include "extremal/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace extremal {

/// A q-uniform morphism Σ_k* → Σ_m*: every letter maps to a word of length q.
class UniformMorphism {
 public:
  UniformMorphism(std::vector<Word> images, unsigned codomain_size);

  unsigned domain_size() const { return static_cast<unsigned>(images_.size()); }
  unsigned codomain_size() const { return codomain_size_; }
  std::size_t uniform_length() const { return images_.front().size(); }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;

 private:
  std::vector<Word> images_;
  unsigned codomain_size_;
};

Word apply(const UniformMorphism& f, const Word& w);
Word apply(const UniformMorphism& f, std::span<const Letter> w);

/// f applied n times; requires equal domain and codomain.
Word iterate(const UniformMorphism& f, std::size_t n, const Word& w);

/// μ: 0 → 01, 1 → 10.
const UniformMorphism& thue_morse_morphism();

/// Length-n prefix of the Thue–Morse word μ^ω(0).
Word thue_morse_prefix(std::size_t n);

/// No image f(c) occurs inside f(ab) at an offset strictly between 0 and q,
/// and the images are pairwise distinct.
bool is_synchronizing(const UniformMorphism& f);

/// max{2b/(b−a), 2(q−1)(2b−1)/(q(b−1))}. Checking every α-free word up to
/// floor of this length suffices to certify β-freeness of all images under a
/// synchronizing q-uniform morphism.
Rational ochem_bound(const Rational& a, const Rational& b, std::size_t q);

/// Enumerates every alpha-free word w over the domain with |w| ≤
/// floor(ochem_bound) and checks that f(w) is beta-free. Throws
/// PreconditionError when f is not synchronizing: the certificate would be
/// meaningless, so it is refused rather than failed.
Report certify_image_freeness(const UniformMorphism& f, const ExtReal& alpha,
                              const ExtReal& beta);

/// One row of the (α,β)-extremal families: w = r·f(v)·s is (α,β)-extremal
/// for every v such that a·v·b is square-free for some letters a, b.
struct LevelData {
  char name;  // 'b' .. 'e'
  UniformMorphism f;
  Word r;
  Word s;
  ExtReal alpha;
  ExtReal beta;
  std::size_t expected_q;
};

/// Structural problems with a level's data (wrong lengths, non-synchronizing
/// morphism, duplicate images). Empty when the data is sound.
std::vector<std::string> level_problems(const LevelData& level);

/// The embedded levels b, c, d, e. Validated on first access; a transcription
/// defect throws InternalInconsistency.
const std::vector<LevelData>& levels();
const LevelData& level(char name);

}  // namespace extremal
