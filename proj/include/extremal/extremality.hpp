#pragma once

#include "extremal/repetition.hpp"
#include "extremal/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace extremal {

enum class ExtensionSide { left, internal, right };

const char* to_string(ExtensionSide side);

/// w[0, position) · letter · w[position, |w|).
struct Extension {
  std::size_t position;
  Letter letter;
  Word word;
  ExtensionSide side;
};

/// Every insertion of every letter, ordered by (position, letter). Equal
/// resulting words are kept.
std::vector<Extension> extensions(const Word& w);

/// First extension (in extensions() order) that does NOT contain a factor
/// reaching beta, or nothing when every extension does.
std::optional<Extension> first_free_extension(const Word& w, const ExtReal& beta);

/// β-free and every extension contains a factor reaching β.
bool is_extremal(const Word& w, const ExtReal& beta);

/// α-free and every extension contains a factor reaching β. Needs α ≤ β.
bool is_pair_extremal(const Word& w, const ExtReal& alpha, const ExtReal& beta);

/// All β-free words of length n over Σ_k in lexicographic order.
std::vector<Word> enumerate_beta_free(unsigned k, const ExtReal& beta, std::size_t n);

/// Number of β-free words of length n over Σ_k.
std::size_t count_beta_free(unsigned k, const ExtReal& beta, std::size_t n);

class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultSearchCap = 10'000'000;

/// For each n in [0, n_max], the lexicographically least extremal β-free word
/// of length n over Σ_k, or nothing. Throws CapExceeded when more than `cap`
/// β-free words of a single length are met.
std::map<std::size_t, std::optional<Word>> search_extremal_lengths(
    unsigned k, const ExtReal& beta, std::size_t n_max, std::size_t cap = kDefaultSearchCap);

/// Overlap-free binary squares of length ≤ max_len, found by filtering all
/// squares xx. The result is also compared with the conjugate closure of
/// square_catalog_generators(); disagreement throws InternalInconsistency.
std::set<Word> overlap_free_squares(std::size_t max_len);

/// {00, 11, 010010, 101101} and all their μ-images, up to max_len.
std::set<Word> square_catalog_generators(std::size_t max_len);

/// Conjugate closure of square_catalog_generators(max_len).
std::set<Word> square_catalog(std::size_t max_len);

struct Factorization {
  Word u;
  Word y;
  Word v;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Every x = u·μ(y)·v with u, v ∈ {ε, 0, 1, 00, 11} and y overlap-free.
/// Requires x overlap-free.
std::vector<Factorization> restivo_salemi_factorizations(const Word& x);

}  // namespace extremal
