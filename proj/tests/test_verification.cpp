#include "extremal/constructions.hpp"
#include "extremal/extremality.hpp"
#include "extremal/morphism.hpp"
#include "extremal/repetition.hpp"
#include "extremal/verification.hpp"

#include <doctest.h>

#include <algorithm>

using namespace extremal;

namespace {

bool all_pass(const std::vector<Report>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.passed; });
}

LevelData with_image(const LevelData& lv, Letter c, const Word& img) {
  auto images = lv.f.images();
  images[c] = img;
  LevelData out = lv;
  out.f = UniformMorphism(images, 2);
  return out;
}

}  // namespace

TEST_CASE("registered checks") {
  const auto& ids = check_ids();
  CHECK(ids.front() == "registry");
  for (const char* id : {"L2.1", "L2.5-bases", "P2.9-nonexistence", "P3.7-nonexistence",
                         "P4.2a-instances", "P4.2b-blocks", "P4.2b-anchors", "P4.2b-certify",
                         "P4.2e-instances", "T3.1-uniqueness", "T3.2-oracle", "THM1.1-desk"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK_THROWS_AS(verify("no-such-check"), PreconditionError);
}

TEST_CASE("examples") {
  const Report bases = verify("L2.5-bases");
  CHECK(bases.passed);
  CHECK(bases.items_checked == 4);

  const Report p29 = verify("P2.9-nonexistence");
  CHECK(p29.passed);
  CHECK(p29.items_checked == 8);

  const Report cert = verify("P4.2b-certify");
  CHECK(cert.passed);
  std::size_t expected = 0;
  for (std::size_t n = 0; n <= 14; ++n) expected += count_beta_free(3, ExtReal::exact(2), n);
  CHECK(cert.items_checked == expected);

  const Report l21 = verify("L2.1");
  CHECK(l21.passed);
  CHECK(l21.items_checked == 2 * count_beta_free(2, ExtReal::above(2), 10));
}

TEST_CASE("every registered check passes") {
  const auto reports = verify_all();
  CHECK(reports.size() == check_ids().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].check_id);
    CHECK(reports[i].check_id == check_ids()[i]);
    CHECK(reports[i].passed);
    CHECK(reports[i].items_checked > 0);
  }
}

TEST_CASE("reports are reproducible") {
  for (const char* id : {"P4.2c-anchors", "T3.1-uniqueness", "P3.7-nonexistence"}) {
    const auto a = to_json(verify(id), false);
    const auto b = to_json(verify(id), false);
    CHECK(a == b);
  }
  // Running a later check first changes nothing.
  const auto late = to_json(verify("P4.2d-blocks"), false);
  verify("registry");
  CHECK(to_json(verify("P4.2d-blocks"), false) == late);
}

TEST_CASE("level anchors") {
  const auto b = left_anchor(level('b'));
  REQUIRE(b);
  CHECK(b->word == bin("00110010011"));
  CHECK(b->period_bound > 0);
  const auto br = right_anchor(level('b'));
  REQUIRE(br);
  CHECK(br->word == bin("001001100100").reversed());
  for (char name : {'c', 'd', 'e'}) {
    CHECK(left_anchor(level(name)));
    CHECK(right_anchor(level(name)));
  }
}

TEST_CASE("a corrupted level fails and its counterexamples replay") {
  const auto& b = level('b');
  // Flip the last letter of the first image: blocks stop ending in 11.
  const LevelData bad = with_image(b, 0, complement_at(b.f.image(0), 35));
  const auto reports = verify_level(bad);
  CHECK_FALSE(all_pass(reports));

  bool replayed = false;
  for (const auto& r : reports) {
    for (const auto& c : r.counterexamples) {
      if (!c.witness) continue;
      // The context names the word the witness lives in.
      const auto pos = c.context.find_last_of(' ');
      const std::string word = c.context.substr(pos == std::string::npos ? 0 : pos + 1);
      if (word.empty() || word.find_first_not_of("01") != std::string::npos) continue;
      const Word w = bin(word);
      REQUIRE(c.witness->start + c.witness->length <= w.size());
      const Word f = w.factor(c.witness->start, c.witness->length);
      CHECK(minimal_period(f) <= c.witness->period);
      replayed = true;
    }
  }
  CHECK(replayed);

  LevelData bad_flank = b;
  bad_flank.r = complement_at(b.r, 0);
  CHECK_FALSE(all_pass(verify_level(bad_flank)));
  CHECK(all_pass(verify_level(b)));
}
