#include "extremal/extremality.hpp"
#include "extremal/morphism.hpp"
#include "extremal/repetition.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace extremal;

namespace {

const UniformMorphism& mu() { return thue_morse_morphism(); }

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(mu(), bin("0")) == bin("01"));
  CHECK(apply(mu(), bin("")).empty());
  CHECK(apply(level('b').f, ter("")).empty());
  CHECK(apply(mu(), bin("0011001")) == bin("01011010010110"));
  CHECK(bin("0") + apply(mu(), bin("0011001")) + bin("1") == bin("0010110100101101"));
  CHECK(bin("0010110100101101") == bin("00101101") + bin("00101101"));
  CHECK_THROWS_AS(apply(mu(), ter("2")), PreconditionError);
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937 rng(3);
  const auto& f = level('c').f;
  for (int i = 0; i < 200; ++i) {
    std::string x, y;
    for (int j = rng() % 6; j > 0; --j) x += static_cast<char>('0' + rng() % 3);
    for (int j = rng() % 6; j > 0; --j) y += static_cast<char>('0' + rng() % 3);
    CHECK(apply(f, ter(x + y)) == apply(f, ter(x)) + apply(f, ter(y)));
    CHECK(apply(f, ter(x)).size() == 45 * x.size());
  }
}

TEST_CASE("iterate and the Thue-Morse prefix") {
  CHECK(iterate(mu(), 3, bin("0")) == bin("01101001"));
  CHECK(iterate(mu(), 0, bin("0")) == bin("0"));
  CHECK(iterate(mu(), 4, bin("0")) == bin("0110100110010110"));
  CHECK_THROWS_AS(iterate(level('b').f, 1, ter("0")), PreconditionError);

  CHECK(thue_morse_prefix(8) == bin("01101001"));
  CHECK(thue_morse_prefix(0).empty());
  CHECK(thue_morse_prefix(16) == bin("0110100110010110"));
  const Word t12 = iterate(mu(), 12, bin("0"));
  for (std::size_t n : {1, 5, 100, 1000, 4096}) CHECK(thue_morse_prefix(n) == t12.prefix(n));
}

TEST_CASE("decoding mu-blocks of the Thue-Morse prefix recovers the shorter prefix") {
  for (std::size_t n = 0; n <= 1024; n += 37) {
    const Word t = thue_morse_prefix(2 * n);
    std::vector<Letter> decoded;
    for (std::size_t i = 0; i < t.size(); i += 2) {
      REQUIRE(t[i] != t[i + 1]);
      decoded.push_back(t[i]);
    }
    CHECK(Word(decoded, 2) == thue_morse_prefix(n));
  }
}

TEST_CASE("iterates of mu are overlap-free") {
  for (std::size_t k = 0; k <= 10; ++k) CHECK(is_overlap_free(iterate(mu(), k, bin("0"))));
}

TEST_CASE("is_synchronizing") {
  CHECK_FALSE(is_synchronizing(mu()));
  for (char name : {'b', 'c', 'd', 'e'}) CHECK(is_synchronizing(level(name).f));
  // Duplicate images are never synchronizing.
  CHECK_FALSE(is_synchronizing(UniformMorphism({bin("0011"), bin("0011")}, 2)));
}

TEST_CASE("is_synchronizing agrees with the definition on random small morphisms") {
  // f(ab) = u f(c) v forces (u = ε and a = c) or (v = ε and b = c).
  auto by_definition = [](const std::vector<std::string>& imgs) {
    const std::size_t q = imgs[0].size();
    for (std::size_t a = 0; a < imgs.size(); ++a) {
      for (std::size_t b = 0; b < imgs.size(); ++b) {
        const std::string pair = imgs[a] + imgs[b];
        for (std::size_t c = 0; c < imgs.size(); ++c) {
          for (std::size_t d = 0; d <= q; ++d) {
            if (pair.compare(d, q, imgs[c]) != 0) continue;
            if (!((d == 0 && a == c) || (d == q && b == c))) return false;
          }
        }
      }
    }
    return true;
  };
  std::mt19937 rng(17);
  int positives = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::size_t q = 2 + rng() % 6;
    const unsigned k = 2 + rng() % 2;
    std::vector<std::string> imgs(k);
    std::vector<Word> words;
    for (auto& s : imgs) {
      for (std::size_t j = 0; j < q; ++j) s += static_cast<char>('0' + rng() % 2);
      words.push_back(bin(s));
    }
    const bool want = by_definition(imgs);
    positives += want;
    CHECK(is_synchronizing(UniformMorphism(words, 2)) == want);
  }
  CHECK(positives > 0);
}

TEST_CASE("registry data") {
  const std::size_t q[] = {36, 45, 34, 34};
  int i = 0;
  for (char name : {'b', 'c', 'd', 'e'}) {
    const auto& lv = level(name);
    CHECK(lv.f.uniform_length() == q[i++]);
    CHECK(lv.f.domain_size() == 3);
    CHECK(level_problems(lv).empty());
  }
  const auto& b = level('b');
  CHECK(b.r == bin("1100110010011"));
  CHECK(b.s == bin("001001"));
  CHECK(b.f.image(0) == bin("001011001101100100110100110110010011"));
  for (const auto& img : b.f.images()) {
    CHECK(img.starts_with(bin("00")));
    CHECK(img.ends_with(bin("11")));
  }
  // For c, d, e the blocks all start with 00 and end with 11 as well.
  for (char name : {'c', 'd', 'e'}) {
    for (const auto& img : level(name).f.images()) {
      CHECK(img.starts_with(bin("00")));
      CHECK(img.ends_with(bin("11")));
    }
  }
  CHECK_THROWS_AS(level('z'), PreconditionError);
}

TEST_CASE("ochem_bound") {
  CHECK(ochem_bound(2, Rational(7, 3), 36) == Rational(14));
  CHECK(ochem_bound(2, Rational(17, 7), 45) == Rational(34, 3));
  CHECK(ochem_bound(2, Rational(17, 7), 45).floor() == 11);
  CHECK(ochem_bound(2, Rational(8, 3), 34) == Rational(8));
  CHECK_THROWS_AS(ochem_bound(2, 2, 36), PreconditionError);
  CHECK_THROWS_AS(ochem_bound(1, 2, 36), PreconditionError);
  CHECK_THROWS_AS(ochem_bound(2, 3, 1), PreconditionError);
}

TEST_CASE("ochem_bound shrinks as the gap b - a grows") {
  for (std::size_t q : {2, 10, 36, 45}) {
    for (int bn = 5; bn <= 12; ++bn) {
      const Rational b(bn, 2);
      std::optional<Rational> prev;
      for (int an = 3; an < bn; ++an) {
        const Rational a(an, 2);
        // Larger a means a smaller gap, so the bound must not decrease.
        const auto cur = ochem_bound(a, b, q);
        if (prev) CHECK(*prev <= cur);
        prev = cur;
      }
    }
  }
}

TEST_CASE("certify_image_freeness") {
  const auto rb = certify_image_freeness(level('b').f, ExtReal::exact(2),
                                         ExtReal::above(Rational(7, 3)));
  CHECK(rb.passed);
  // ε plus every square-free ternary word of length 1..14.
  std::size_t expected = 0;
  for (std::size_t n = 0; n <= 14; ++n) expected += count_beta_free(3, ExtReal::exact(2), n);
  CHECK(rb.items_checked == expected);

  const auto rc = certify_image_freeness(level('c').f, ExtReal::exact(2),
                                         ExtReal::above(Rational(17, 7)));
  CHECK(rc.passed);

  CHECK_THROWS_AS(certify_image_freeness(mu(), ExtReal::exact(2), ExtReal::above(Rational(7, 3))),
                  PreconditionError);
  CHECK_THROWS_AS(certify_image_freeness(level('b').f, ExtReal::exact(3), ExtReal::exact(2)),
                  PreconditionError);
}

TEST_CASE("certification catches a bad image") {
  // Level b images against a threshold they do not meet.
  const auto r = certify_image_freeness(level('b').f, ExtReal::exact(2), ExtReal::exact(Rational(9, 4)));
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.counterexamples.empty());
  REQUIRE(r.counterexamples.front().witness);
}
