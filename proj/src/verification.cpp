#include "extremal/verification.hpp"

#include "extremal/constructions.hpp"
#include "extremal/extremality.hpp"
#include "extremal/repetition.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace extremal {

namespace {

const ExtReal kOverlap = ExtReal::above(2);
const ExtReal kSquare = ExtReal::exact(2);

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report timed(const std::string& id, const std::function<void(Report&)>& body) {
  Stopwatch sw;
  Report r;
  r.check_id = id;
  body(r);
  r.elapsed = sw.elapsed();
  return r;
}

std::vector<Word> all_overlap_free(std::size_t n) { return enumerate_beta_free(2, kOverlap, n); }

std::string mu_power_label(std::size_t l, const Word& seed) {
  return "mu^" + std::to_string(l) + "(" + seed.str() + ")";
}

void expect_extremal(Report& r, const Word& w, const std::string& label) {
  ++r.items_checked;
  if (auto occ = find_repetition(w, kOverlap)) {
    r.fail({label + "=" + w.str(), occ, "not overlap-free"});
    return;
  }
  if (auto ext = first_free_extension(w, kOverlap)) {
    r.fail({label + "=" + w.str(), std::nullopt,
            "extension " + ext->word.str() + " (insert " + std::to_string(ext->letter) + " at " +
                std::to_string(ext->position) + ") is overlap-free"});
  }
}

// Lengths with no extremal overlap-free word, searched exhaustively.
void expect_no_extremal(Report& r, const std::vector<std::size_t>& lengths) {
  const std::size_t n_max = *std::max_element(lengths.begin(), lengths.end());
  const auto found = search_extremal_lengths(2, kOverlap, n_max);
  for (auto n : lengths) {
    ++r.items_checked;
    if (const auto& w = found.at(n)) {
      r.fail({"length " + std::to_string(n) + ": " + w->str(), std::nullopt,
              "unexpected extremal overlap-free word"});
    }
  }
}

// ---------------------------------------------------------------------------

Report check_l21() {
  return timed("L2.1", [](Report& r) {
    for (const auto& w : all_overlap_free(10)) {
      for (Letter a = 0; a < 2; ++a) {
        ++r.items_checked;
        const Word ext = w.inserted(5, a);
        if (!find_repetition_bounded(ext, kOverlap, 3)) {
          r.fail({"w=" + w.str() + " ext=" + ext.str(), std::nullopt,
                  "no overlap of period <= 3"});
        }
      }
    }
  });
}

Report check_l25_bases() {
  return timed("L2.5-bases", [](Report& r) {
    for (std::size_t n : {12, 20, 24, 28}) {
      ++r.items_checked;
      const Word w = construct_earmarked(n);
      if (w.size() != n || !is_earmarked(w)) {
        r.fail({"length " + std::to_string(n) + ": " + w.str(), std::nullopt, "not earmarked"});
      }
    }
  });
}

const Word& pow2_seed() {
  static const Word s = bin("0010110100101101");
  return s;
}

Report check_l28(const std::string& id, std::size_t max_l) {
  return timed(id, [max_l](Report& r) {
    if (bin("0") + apply(thue_morse_morphism(), bin("0011001")) + bin("1") != pow2_seed()) {
      r.fail({"s", std::nullopt, "0 mu(0011001) 1 != (00101101)^2"});
    }
    for (std::size_t l = 1; l <= max_l; ++l) {
      expect_extremal(r, iterate(thue_morse_morphism(), l, pow2_seed()),
                      mu_power_label(l, pow2_seed()));
    }
  });
}

Report check_p29() {
  return timed("P2.9-nonexistence",
               [](Report& r) { expect_no_extremal(r, {0, 2, 4, 6, 8, 14, 16, 18}); });
}

Report check_p37() {
  return timed("P3.7-nonexistence", [](Report& r) {
    std::vector<std::size_t> lengths;
    for (unsigned k = 0; k <= 4; ++k) lengths.push_back((std::size_t{1} << k) + 1);
    for (unsigned k = 0; k <= 2; ++k) lengths.push_back(3 * (std::size_t{1} << k) + 1);
    expect_no_extremal(r, lengths);
  });
}

Report check_odd_family() {
  return timed("L3.5/L3.6-family", [](Report& r) {
    for (unsigned k = 5; k <= 8; ++k) {
      const std::size_t n = (std::size_t{1} << k) + 1;
      const Word v = construct_extremal_odd(n);
      if (v.size() != n) r.fail({"length " + std::to_string(n), std::nullopt, "wrong length"});
      expect_extremal(r, v, "2^" + std::to_string(k) + "+1");
    }
    for (unsigned k = 3; k <= 8; ++k) {
      const std::size_t n = 3 * (std::size_t{1} << k) + 1;
      const Word v = construct_extremal_odd(n);
      if (v.size() != n) r.fail({"length " + std::to_string(n), std::nullopt, "wrong length"});
      expect_extremal(r, v, "3*2^" + std::to_string(k) + "+1");
    }
  });
}

Report check_level_a() {
  return timed("P4.2a-instances", [](Report& r) {
    const ExtReal alpha = kOverlap;
    const ExtReal beta = ExtReal::exact(Rational(7, 3));
    for (std::size_t target : {36, 44, 52, 60, 68, 100, 132}) {
      ++r.items_checked;
      const Word x = construct_level_a(target);
      if (x.size() < target) {
        r.fail({"target " + std::to_string(target), std::nullopt, "too short"});
        continue;
      }
      if (!is_pair_extremal(x, alpha, beta)) {
        r.fail({"x=" + x.str(), find_repetition(x, alpha), "not (2+,7/3)-extremal"});
      }
    }
  });
}

Report check_t31() {
  return timed("T3.1-uniqueness", [](Report& r) {
    for (std::size_t n = 7; n <= 20; ++n) {
      for (const auto& x : all_overlap_free(n)) {
        ++r.items_checked;
        const auto fs = restivo_salemi_factorizations(x);
        if (fs.size() != 1) {
          r.fail({"x=" + x.str(), std::nullopt,
                  std::to_string(fs.size()) + " factorizations, expected 1"});
        }
      }
    }
  });
}

Report check_t32() {
  return timed("T3.2-oracle", [](Report& r) {
    try {
      const auto squares = overlap_free_squares(64);
      r.items_checked = squares.size();
      r.details.push_back(std::to_string(squares.size()) +
                          " overlap-free squares of length <= 64 match the catalog");
    } catch (const InternalInconsistency& e) {
      ++r.items_checked;
      r.fail({"max_len=64", std::nullopt, e.what()});
    }
  });
}

Report check_theorem_desk() {
  return timed("THM1.1-desk", [](Report& r) {
    const auto found = search_extremal_lengths(2, kOverlap, 40);
    for (const auto& [n, w] : found) {
      ++r.items_checked;
      if (w.has_value() != in_length_set(n)) {
        r.fail({"search length " + std::to_string(n), std::nullopt,
                w ? "witness " + w->str() + " outside the length set"
                  : "no witness although in the length set"});
      }
    }
    for (std::size_t n = 0; n <= 200; ++n) {
      if (!in_length_set(n)) continue;
      const Word w = construct_extremal(n);
      if (w.size() != n) {
        r.fail({"construct " + std::to_string(n), std::nullopt, "wrong length"});
      }
      expect_extremal(r, w, "construct(" + std::to_string(n) + ")");
    }
  });
}

Report check_registry() {
  return timed("registry", [](Report& r) {
    for (const auto& lv : levels()) {
      ++r.items_checked;
      for (auto& p : level_problems(lv)) r.fail({std::string("level ") + lv.name, std::nullopt, p});
    }
  });
}

// ---------------------------------------------------------------------------
// Level b..e machinery. The right flank is handled by mirroring: reversing
// every image and swapping (and reversing) the flanks turns it into a left
// flank.

LevelData mirrored(const LevelData& lv) {
  std::vector<Word> imgs;
  for (const auto& img : lv.f.images()) imgs.push_back(img.reversed());
  return {lv.name, UniformMorphism(std::move(imgs), lv.f.codomain_size()), lv.s.reversed(),
          lv.r.reversed(), lv.alpha, lv.beta, lv.expected_q};
}

std::vector<std::pair<Letter, Letter>> squarefree_pairs(unsigned k) {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a = 0; a < k; ++a) {
    for (Letter b = 0; b < k; ++b) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t common_prefix(const std::vector<Word>& ws) {
  std::size_t n = ws.front().size();
  for (const auto& w : ws) {
    std::size_t i = 0;
    while (i < n && i < w.size() && w[i] == ws.front()[i]) ++i;
    n = i;
  }
  return n;
}

std::size_t common_suffix(const std::vector<Word>& ws) {
  std::vector<Word> rev;
  for (const auto& w : ws) rev.push_back(w.reversed());
  return common_prefix(rev);
}

// Letters of the left flank that are not covered by the common suffix of the
// images. A repetition that breaks alpha-freeness of r·f(v)·s but not of f(u)
// must start inside this head.
std::size_t head_length(const LevelData& lv) {
  const std::size_t cs = common_suffix(lv.f.images());
  const Word& img = lv.f.image(0);
  std::size_t core = 0;
  while (core < lv.r.size() && core < cs &&
         lv.r[lv.r.size() - 1 - core] == img[img.size() - 1 - core]) {
    ++core;
  }
  return lv.r.size() - core;
}

bool anchor_admissible(const LevelData& lv, const Word& t, std::size_t offset) {
  const auto& f = lv.f;
  if (t.size() > f.uniform_length() + 1) return false;
  for (Letter c = 0; c < f.domain_size(); ++c) {
    const Word left = lv.r + f.image(c);
    if (count_occurrences(t, left) != 1) return false;
    if (offset + t.size() > left.size() || left.factor(offset, t.size()) != t) return false;
    if (count_occurrences(t, f.image(c) + lv.s) != 0) return false;
  }
  for (auto [a, b] : squarefree_pairs(f.domain_size())) {
    if (count_occurrences(t, f.image(a) + f.image(b)) != 0) return false;
  }
  return true;
}

std::size_t period_bound(const ExtReal& alpha, std::size_t anchor_end) {
  // A repetition starting at or before the anchor and running P letters past
  // its end would produce a second occurrence, so its length is at most
  // anchor_end + P - 1.
  const Threshold t(alpha);
  std::size_t p = 0;
  while (t.met(anchor_end + p, p + 1)) ++p;
  return p;
}

std::optional<Anchor> find_anchor(const LevelData& lv, const std::optional<Word>& fixed) {
  const std::size_t h = head_length(lv);
  if (h == 0) return std::nullopt;
  const std::size_t lo = h - 1;
  if (fixed) {
    const Word left = lv.r + lv.f.image(0);
    for (std::size_t ts = lo; ts + fixed->size() <= left.size(); ++ts) {
      if (left.factor(ts, fixed->size()) == *fixed && anchor_admissible(lv, *fixed, ts)) {
        return Anchor{*fixed, ts, period_bound(lv.alpha, ts + fixed->size())};
      }
    }
    return std::nullopt;
  }
  const std::size_t region = lv.r.size() + common_prefix(lv.f.images());
  const Word left = lv.r + lv.f.image(0);
  for (std::size_t te = h; te <= region; ++te) {
    for (std::size_t ts = te; ts-- > lo;) {
      const Word t = left.factor(ts, te - ts);
      if (anchor_admissible(lv, t, ts)) return Anchor{t, ts, period_bound(lv.alpha, te)};
    }
  }
  return std::nullopt;
}

std::optional<Word> fixed_left_anchor(const LevelData& lv) {
  if (lv.name == 'b') return bin("00110010011");
  return std::nullopt;
}

std::optional<Word> fixed_right_anchor(const LevelData& lv) {
  if (lv.name == 'b') return bin("001001100100").reversed();
  return std::nullopt;
}

// Anchor facts plus bounded-period exclusion for one (possibly mirrored) side.
void check_side(Report& r, const LevelData& lv, const std::optional<Word>& fixed,
                std::size_t fixed_period, const std::string& side) {
  const std::size_t h = head_length(lv);
  ++r.items_checked;
  if (h == 0) {
    r.details.push_back(side + ": flank is covered by the block suffix, nothing to anchor");
    return;
  }
  const auto anchor = find_anchor(lv, fixed);
  if (!anchor) {
    r.fail({side + " flank " + lv.r.str(), std::nullopt,
            fixed ? "anchor " + fixed->str() + " is not unique" : "no admissible anchor"});
    return;
  }
  const std::size_t period = std::max(anchor->period_bound, fixed_period);
  const std::size_t reach = anchor->offset + anchor->word.size() + period - 1;
  r.details.push_back(side + ": head=" + std::to_string(h) + " anchor=" + anchor->word.str() +
                      " offset=" + std::to_string(anchor->offset) +
                      " period_bound=" + std::to_string(anchor->period_bound) +
                      " checked_periods<=" + std::to_string(period));
  ++r.items_checked;
  if (reach > lv.r.size() + lv.f.uniform_length()) {
    r.fail({side + " flank " + lv.r.str(), std::nullopt,
            "bounded-period window exceeds r f(c)"});
    return;
  }
  for (Letter c = 0; c < lv.f.domain_size(); ++c) {
    ++r.items_checked;
    const Word left = lv.r + lv.f.image(c);
    if (auto occ = find_repetition_bounded(left, lv.alpha, std::max<std::size_t>(period, 1))) {
      r.fail({side + " r f(" + std::to_string(c) + ")=" + left.str(), occ,
              "repetition reaching " + lv.alpha.str()});
    }
  }
}

void expect_extensions_reach(Report& r, const Word& w, const ExtReal& beta, std::size_t pos_lo,
                             std::size_t pos_hi, const std::string& label) {
  const Threshold t(beta);
  for (std::size_t pos = pos_lo; pos <= pos_hi; ++pos) {
    for (Letter a = 0; a < w.alphabet_size(); ++a) {
      ++r.items_checked;
      const Word ext = w.inserted(pos, a);
      if (!has_repetition(ext.letters(), t)) {
        r.fail({label + "=" + w.str() + " ext=" + ext.str(), std::nullopt,
                "no factor reaching " + beta.str()});
      }
    }
  }
}

std::string level_id(const LevelData& lv, const char* kind) {
  return std::string("P4.2") + lv.name + "-" + kind;
}

}  // namespace

Report check_level_blocks(const LevelData& lv) {
  return timed(level_id(lv, "blocks"), [&](Report& r) {
    const auto& f = lv.f;
    const std::size_t q = f.uniform_length();
    for (Letter c = 0; c < f.domain_size(); ++c) {
      const std::string cs = std::to_string(c);
      expect_extensions_reach(r, f.image(c), lv.beta, 1, q - 1, "f(" + cs + ")");
      const Word left = lv.r + f.image(c);
      expect_extensions_reach(r, left, lv.beta, 0, left.size() - 1, "r f(" + cs + ")");
      const Word right = f.image(c) + lv.s;
      expect_extensions_reach(r, right, lv.beta, 1, right.size(), "f(" + cs + ") s");
    }
    // Insertions between two blocks.
    for (auto [a, b] : squarefree_pairs(f.domain_size())) {
      const Word pair = f.image(a) + f.image(b);
      expect_extensions_reach(r, pair, lv.beta, q, q,
                              "f(" + std::to_string(a) + std::to_string(b) + ")");
    }
    const std::size_t cp = common_prefix(f.images());
    const std::size_t cs = common_suffix(f.images());
    r.details.push_back("blocks share prefix " + f.image(0).prefix(cp).str() + " and suffix " +
                        f.image(0).suffix(cs).str());
  });
}

Report check_level_anchors(const LevelData& lv) {
  return timed(level_id(lv, "anchors"), [&](Report& r) {
    // Level b has a hand-derived period bound of 13.
    const std::size_t fixed_period = lv.name == 'b' ? 13 : 0;
    check_side(r, lv, fixed_left_anchor(lv), fixed_period, "left");
    check_side(r, mirrored(lv), fixed_right_anchor(lv), fixed_period, "right");
  });
}

Report check_level_certify(const LevelData& lv) {
  return timed(level_id(lv, "certify"), [&](Report& r) {
    try {
      Report c = certify_image_freeness(lv.f, kSquare, lv.alpha);
      r.absorb(c);
    } catch (const PreconditionError& e) {
      ++r.items_checked;
      r.fail({"f", std::nullopt, e.what()});
    }
  });
}

Report check_level_instances(const LevelData& lv, std::size_t max_v_length) {
  return timed(level_id(lv, "instances"), [&](Report& r) {
    for (std::size_t m = 1; m <= max_v_length; ++m) {
      ++r.items_checked;
      const Word w = construct_level(lv, m);
      if (auto occ = find_repetition(w, lv.alpha)) {
        r.fail({"v_length " + std::to_string(m) + ": " + w.str(), occ,
                "not " + lv.alpha.str() + "-free"});
      } else if (auto ext = first_free_extension(w, lv.beta)) {
        r.fail({"v_length " + std::to_string(m) + ": " + w.str(), std::nullopt,
                "extension at " + std::to_string(ext->position) + " with letter " +
                    std::to_string(ext->letter) + " avoids " + lv.beta.str()});
      }
    }
  });
}

std::vector<Report> verify_level(const LevelData& lv) {
  std::vector<Report> out;
  out.push_back(timed(level_id(lv, "registry"), [&](Report& r) {
    ++r.items_checked;
    for (auto& p : level_problems(lv)) r.fail({"level data", std::nullopt, p});
  }));
  if (!out.back().passed) return out;
  out.push_back(check_level_blocks(lv));
  out.push_back(check_level_anchors(lv));
  out.push_back(check_level_certify(lv));
  out.push_back(check_level_instances(lv));
  return out;
}

std::optional<Anchor> left_anchor(const LevelData& lv) {
  return find_anchor(lv, fixed_left_anchor(lv));
}

std::optional<Anchor> right_anchor(const LevelData& lv) {
  return find_anchor(mirrored(lv), fixed_right_anchor(lv));
}

// ---------------------------------------------------------------------------

namespace {

using CheckFn = std::function<Report()>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = [] {
    std::vector<std::pair<std::string, CheckFn>> c;
    c.emplace_back("registry", check_registry);
    c.emplace_back("L2.1", check_l21);
    c.emplace_back("L2.5-bases", check_l25_bases);
    c.emplace_back("L2.8-small", [] { return check_l28("L2.8-small", 2); });
    c.emplace_back("L2.8-family", [] { return check_l28("L2.8-family", 6); });
    c.emplace_back("P2.9-nonexistence", check_p29);
    c.emplace_back("P3.7-nonexistence", check_p37);
    c.emplace_back("L3.5/L3.6-family", check_odd_family);
    c.emplace_back("P4.2a-instances", check_level_a);
    for (char name : {'b', 'c', 'd', 'e'}) {
      const std::string p = std::string("P4.2") + name + "-";
      c.emplace_back(p + "blocks", [name] { return check_level_blocks(level(name)); });
      c.emplace_back(p + "anchors", [name] { return check_level_anchors(level(name)); });
      c.emplace_back(p + "certify", [name] { return check_level_certify(level(name)); });
      c.emplace_back(p + "instances", [name] { return check_level_instances(level(name)); });
    }
    c.emplace_back("T3.1-uniqueness", check_t31);
    c.emplace_back("T3.2-oracle", check_t32);
    c.emplace_back("THM1.1-desk", check_theorem_desk);
    return c;
  }();
  return checks;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Report verify(const std::string& check_id) {
  for (const auto& [id, fn] : registry()) {
    if (id == check_id) return fn();
  }
  throw PreconditionError("unknown check id '" + check_id + "'");
}

std::vector<Report> verify_all() {
  std::vector<Report> out;
  for (const auto& [id, fn] : registry()) out.push_back(fn());
  return out;
}

}  // namespace extremal
