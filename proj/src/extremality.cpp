#include "extremal/extremality.hpp"

#include "extremal/morphism.hpp"

#include <array>

namespace extremal {

const char* to_string(ExtensionSide side) {
  switch (side) {
    case ExtensionSide::left:
      return "left";
    case ExtensionSide::internal:
      return "internal";
    case ExtensionSide::right:
      return "right";
  }
  return "?";
}

namespace {

ExtensionSide side_of(std::size_t position, std::size_t length) {
  if (position == 0) return ExtensionSide::left;
  if (position == length) return ExtensionSide::right;
  return ExtensionSide::internal;
}

}  // namespace

std::vector<Extension> extensions(const Word& w) {
  std::vector<Extension> out;
  out.reserve((w.size() + 1) * w.alphabet_size());
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (Letter a = 0; a < w.alphabet_size(); ++a) {
      out.push_back({pos, a, w.inserted(pos, a), side_of(pos, w.size())});
    }
  }
  return out;
}

std::optional<Extension> first_free_extension(const Word& w, const ExtReal& beta) {
  const Threshold t(beta);
  std::vector<Letter> buf(w.size() + 1);
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    std::copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos), buf.begin());
    std::copy(w.begin() + static_cast<std::ptrdiff_t>(pos), w.end(),
              buf.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    for (Letter a = 0; a < w.alphabet_size(); ++a) {
      buf[pos] = a;
      if (!has_repetition(buf, t)) {
        return Extension{pos, a, w.inserted(pos, a), side_of(pos, w.size())};
      }
    }
  }
  return std::nullopt;
}

bool is_extremal(const Word& w, const ExtReal& beta) {
  return is_beta_free(w, beta) && !first_free_extension(w, beta);
}

bool is_pair_extremal(const Word& w, const ExtReal& alpha, const ExtReal& beta) {
  if (beta < alpha) {
    throw PreconditionError("pair extremality needs alpha <= beta, got " + alpha.str() + " > " +
                            beta.str());
  }
  return is_beta_free(w, alpha) && !first_free_extension(w, beta);
}

std::vector<Word> enumerate_beta_free(unsigned k, const ExtReal& beta, std::size_t n) {
  std::vector<Word> out;
  walk_beta_free(k, beta, n, [&](std::span<const Letter> w) {
    if (w.size() < n) return Visit::descend;
    out.emplace_back(std::vector<Letter>(w.begin(), w.end()), k);
    return Visit::prune;
  });
  return out;
}

std::size_t count_beta_free(unsigned k, const ExtReal& beta, std::size_t n) {
  std::size_t count = 0;
  walk_beta_free(k, beta, n, [&](std::span<const Letter> w) {
    if (w.size() < n) return Visit::descend;
    ++count;
    return Visit::prune;
  });
  return count;
}

std::map<std::size_t, std::optional<Word>> search_extremal_lengths(unsigned k,
                                                                   const ExtReal& beta,
                                                                   std::size_t n_max,
                                                                   std::size_t cap) {
  std::map<std::size_t, std::optional<Word>> found;
  for (std::size_t n = 0; n <= n_max; ++n) found[n] = std::nullopt;
  std::vector<std::size_t> seen(n_max + 1, 0);
  const Threshold t(beta);
  std::vector<Letter> buf;
  buf.reserve(n_max + 1);

  // Depth-first order visits the words of each length lexicographically, so
  // the first extremal word met at a length is the least one.
  walk_beta_free(k, beta, n_max, [&](std::span<const Letter> w) {
    const std::size_t n = w.size();
    if (++seen[n] > cap) {
      throw CapExceeded("more than " + std::to_string(cap) + " " + beta.str() +
                        "-free words of length " + std::to_string(n));
    }
    if (found[n]) return Visit::descend;
    buf.resize(n + 1);
    for (std::size_t pos = 0; pos <= n; ++pos) {
      std::copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos), buf.begin());
      std::copy(w.begin() + static_cast<std::ptrdiff_t>(pos), w.end(),
                buf.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      for (Letter a = 0; a < k; ++a) {
        buf[pos] = a;
        if (!has_repetition(buf, t)) return Visit::descend;
      }
    }
    found[n] = Word(std::vector<Letter>(w.begin(), w.end()), k);
    return Visit::descend;
  });
  return found;
}

std::set<Word> square_catalog_generators(std::size_t max_len) {
  std::set<Word> out;
  for (const char* a : {"00", "11", "010010", "101101"}) {
    for (Word w = bin(a); w.size() <= max_len; w = apply(thue_morse_morphism(), w)) {
      out.insert(w);
    }
  }
  return out;
}

std::set<Word> square_catalog(std::size_t max_len) {
  std::set<Word> out;
  for (const auto& g : square_catalog_generators(max_len)) {
    auto c = conjugates(g);
    out.insert(c.begin(), c.end());
  }
  return out;
}

std::set<Word> overlap_free_squares(std::size_t max_len) {
  if (max_len < 2) throw PreconditionError("overlap_free_squares needs max_len >= 2");
  // xx is overlap-free only if its factor x is, so it is enough to square the
  // overlap-free words of length ≤ max_len/2.
  std::set<Word> squares;
  const Threshold overlap(ExtReal::above(2));
  std::vector<Letter> xx;
  walk_beta_free(2, ExtReal::above(2), max_len / 2, [&](std::span<const Letter> x) {
    if (x.empty()) return Visit::descend;
    xx.assign(x.begin(), x.end());
    xx.insert(xx.end(), x.begin(), x.end());
    if (!has_repetition(xx, overlap)) squares.emplace(xx, 2);
    return Visit::descend;
  });

  const auto catalog = square_catalog(max_len);
  if (catalog != squares) {
    std::string diff;
    for (const auto& w : squares) {
      if (!catalog.count(w)) diff += " +" + w.str();
    }
    for (const auto& w : catalog) {
      if (!squares.count(w)) diff += " -" + w.str();
    }
    throw InternalInconsistency("overlap-free squares disagree with the catalog:" + diff);
  }
  return squares;
}

std::vector<Factorization> restivo_salemi_factorizations(const Word& x) {
  if (x.alphabet_size() != 2) throw PreconditionError("factorization needs a binary word");
  if (!is_overlap_free(x)) {
    throw PreconditionError("factorization needs an overlap-free word, got " + x.str());
  }
  static const std::array<Word, 5> flanks = {Word(2), bin("0"), bin("1"), bin("00"), bin("11")};
  std::vector<Factorization> out;
  for (const auto& u : flanks) {
    for (const auto& v : flanks) {
      if (u.size() + v.size() > x.size()) continue;
      const std::size_t middle = x.size() - u.size() - v.size();
      if (middle % 2 != 0 || !x.starts_with(u) || !x.ends_with(v)) continue;
      std::vector<Letter> y;
      bool decodes = true;
      for (std::size_t i = u.size(); i < u.size() + middle; i += 2) {
        if (x[i] == x[i + 1]) {
          decodes = false;
          break;
        }
        y.push_back(x[i]);
      }
      if (!decodes) continue;
      Word yw(std::move(y), 2);
      if (is_overlap_free(yw)) out.push_back({u, yw, v});
    }
  }
  return out;
}

}  // namespace extremal
