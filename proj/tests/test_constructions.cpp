#include "extremal/constructions.hpp"
#include "extremal/extremality.hpp"
#include "extremal/morphism.hpp"
#include "extremal/repetition.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace extremal;

namespace {

const ExtReal kOverlap = ExtReal::above(2);

// Membership written straight from the definition of the length set.
bool in_set_by_definition(std::size_t n) {
  if (n == 10 || n == 12) return true;
  if (n % 2 == 0 && n >= 20) return true;
  for (unsigned k = 5; k < 20; ++k) {
    if (n == (std::size_t{1} << k) + 1) return true;
  }
  for (unsigned k = 3; k < 20; ++k) {
    if (n == 3 * (std::size_t{1} << k) + 1) return true;
  }
  return false;
}

// Extremality decided by the string-based brute force, fast enough for
// words of a few hundred letters because only the extensions are rebuilt.
bool independent_extremal(const Word& w) {
  const std::string s = w.str();
  const oracle::Beta b{2, 1, true};
  if (!oracle::brute_free(s, b)) return false;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    for (char c : {'0', '1'}) {
      const std::string e = s.substr(0, i) + c + s.substr(i);
      // Only factors through position i can be new.
      bool hit = false;
      for (std::size_t a = 0; a <= i && !hit; ++a) {
        for (std::size_t p = 1; !hit && a + 2 * p < e.size(); ++p) {
          std::size_t len = 0;
          while (a + len + p < e.size() && e[a + len] == e[a + len + p]) ++len;
          len += p;
          if (a + len > i && len > 2 * p) hit = true;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("length set") {
  CHECK_FALSE(in_length_set(16));
  CHECK(in_length_set(33));
  CHECK(in_length_set(25));
  CHECK(in_length_set(10));
  CHECK_FALSE(in_length_set(14));
  CHECK_FALSE(in_length_set(17));
  for (std::size_t n = 0; n <= 2000; ++n) CHECK(in_length_set(n) == in_set_by_definition(n));

  CHECK(classify_length(10).tag == LengthClassTag::small_even);
  CHECK(classify_length(22).tag == LengthClassTag::even_general);
  CHECK(classify_length(64).tag == LengthClassTag::power_of_two);
  CHECK(classify_length(64).k == 6);
  CHECK(classify_length(33).tag == LengthClassTag::pow2_plus_1);
  CHECK(classify_length(33).k == 5);
  CHECK(classify_length(25).tag == LengthClassTag::three_pow2_plus_1);
  CHECK(classify_length(25).k == 3);
  CHECK(classify_length(16).tag == LengthClassTag::not_in_set);
}

TEST_CASE("is_earmarked") {
  CHECK(is_earmarked(bin("001001100100")));
  CHECK_FALSE(is_earmarked(bin("0010011011")));
  CHECK_FALSE(is_earmarked(bin("0000100")));
}

TEST_CASE("earmarked_double") {
  const Word u = bin("001001100100");
  const Word d = earmarked_double(u);
  CHECK(d == bin("110110010110100101100100"));
  CHECK(d.size() == 24);
  CHECK(is_earmarked(d));
  CHECK(is_extremal(d, kOverlap));

  const Word twenty = construct_earmarked(20);
  const Word forty = earmarked_double(twenty);
  CHECK(forty.size() == 40);
  CHECK(is_earmarked(forty));
  CHECK(is_extremal(forty, kOverlap));

  CHECK_THROWS_AS(earmarked_double(bin("0010100")), PreconditionError);
  CHECK_THROWS_AS(earmarked_double(bin("0010011011")), PreconditionError);
}

TEST_CASE("find_earmarked_tm") {
  const Word w = find_earmarked_tm(10);
  CHECK(w.size() == 10);
  CHECK(is_earmarked(w));
  CHECK(w.ends_with(bin("0100")));
  const Word t = thue_morse_prefix(200);
  CHECK(count_occurrences(w.prefix(6), t) > 0);
  CHECK_THROWS_AS(find_earmarked_tm(12), PreconditionError);
  CHECK_THROWS_AS(find_earmarked_tm(9), PreconditionError);
  for (std::size_t n = 10; n <= 90; ++n) {
    if (n % 4 == 0) continue;
    const Word e = find_earmarked_tm(n);
    CHECK(e.size() == n);
    CHECK(is_earmarked(e));
  }
}

TEST_CASE("construct_earmarked") {
  for (std::size_t n : {12, 20, 24, 28}) {
    const Word w = construct_earmarked(n);
    CHECK(w.size() == n);
    CHECK(is_earmarked(w));
  }
  CHECK_THROWS_AS(construct_earmarked(32), PreconditionError);
  CHECK_THROWS_AS(construct_earmarked(8), PreconditionError);
  for (std::size_t n = 10; n <= 150; ++n) {
    if ((n & (n - 1)) == 0) continue;
    const Word w = construct_earmarked(n);
    CHECK(w.size() == n);
    CHECK(is_earmarked(w));
  }
}

TEST_CASE("even and odd constructions") {
  CHECK(construct_extremal_even(10) == bin("0010011011"));
  CHECK(construct_extremal_even(12) == bin("001001100100"));
  CHECK(construct_extremal(32) == iterate(thue_morse_morphism(), 1, bin("0010110100101101")));
  CHECK_THROWS_AS(construct_extremal(14), PreconditionError);
  CHECK_THROWS_AS(construct_extremal(17), PreconditionError);
  CHECK_THROWS_AS(construct_extremal_even(33), PreconditionError);
  CHECK_THROWS_AS(construct_extremal_odd(22), PreconditionError);

  const Word w25 = construct_extremal(25);
  CHECK(w25.size() == 25);
  CHECK(is_extremal(w25, kOverlap));
  const Word w33 = construct_extremal(33);
  CHECK(w33.size() == 33);
  CHECK(w33[0] == 0);
  CHECK(w33.ends_with(bin("011")));
}

TEST_CASE("every length in the set up to 200 is covered") {
  for (std::size_t n = 0; n <= 200; ++n) {
    if (!in_set_by_definition(n)) continue;
    const Word w = construct_extremal(n);
    REQUIRE(w.size() == n);
    CHECK(independent_extremal(w));
  }
}

TEST_CASE("no extremal word exists off the length set up to 40") {
  const auto found = search_extremal_lengths(2, kOverlap, 40);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(found.at(n).has_value() == in_set_by_definition(n));
}

TEST_CASE("squarefree_ternary") {
  CHECK(squarefree_ternary(3) == ter("012"));
  CHECK(squarefree_ternary(1) == ter("0"));
  CHECK(squarefree_ternary(0).empty());
  const Word w = squarefree_ternary(5000);
  CHECK(w.size() == 5000);
  CHECK(oracle::brute_free(w.prefix(300).str(), {2, 1, false}));
  CHECK(is_square_free(w));
}

TEST_CASE("level a") {
  const Word x = construct_level_a(36);
  CHECK(x.size() == 36);
  // v = 0100: 00 μ²(11 0100 11) 00
  CHECK(x == bin("00") + iterate(thue_morse_morphism(), 2, bin("11010011")) + bin("00"));
  CHECK(is_pair_extremal(x, kOverlap, ExtReal::exact(Rational(7, 3))));
  for (std::size_t target : {40, 60, 90}) {
    const Word y = construct_level_a(target);
    CHECK(y.size() >= target);
    CHECK(y.size() % 4 == 0);
    CHECK(is_pair_extremal(y, kOverlap, ExtReal::exact(Rational(7, 3))));
  }
  CHECK_THROWS_AS(construct_level_a(35), PreconditionError);
}

TEST_CASE("levels b to e") {
  const Word b1 = construct_level('b', 1);
  CHECK(b1.size() == 13 + 36 + 6);
  CHECK(b1 == level('b').r + level('b').f.image(1) + level('b').s);
  CHECK_THROWS_AS(construct_level('a', 3), PreconditionError);
  CHECK_THROWS_AS(construct_level('q', 3), PreconditionError);

  for (char name : {'b', 'c', 'd', 'e'}) {
    const auto& lv = level(name);
    for (std::size_t m = 1; m <= 12; ++m) {
      const Word x = construct_level(name, m);
      CHECK(x.size() == lv.r.size() + m * lv.f.uniform_length() + lv.s.size());
      CHECK(is_pair_extremal(x, lv.alpha, lv.beta));
      // Raising alpha to beta gives plain extremality.
      CHECK(is_beta_free(x, lv.alpha));
      CHECK(is_extremal(x, lv.beta));
    }
    const Word big = construct_level_at_least(name, 500);
    CHECK(big.size() >= 500);
    CHECK(is_pair_extremal(big, lv.alpha, lv.beta));
  }
}
