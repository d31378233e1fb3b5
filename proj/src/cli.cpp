#include "extremal/cli.hpp"

#include "extremal/constructions.hpp"
#include "extremal/extremality.hpp"
#include "extremal/repetition.hpp"
#include "extremal/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

namespace extremal::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "human";
  std::size_t length = 0;
  std::string beta;
  std::string alpha;
  std::string word;
  unsigned alphabet = 0;
  std::size_t max = 0;
  std::size_t cap = kDefaultSearchCap;
  bool count_only = false;
  std::size_t max_len = 0;
  std::string check_id;
  bool list = false;
};

bool machine(const Options& o) { return o.format == "machine"; }

unsigned infer_alphabet(const std::string& word, unsigned given) {
  if (given != 0) return given;
  char top = '1';
  for (char c : word) top = std::max(top, c);
  return top >= '2' ? 3u : 2u;
}

json occurrence_json(const std::optional<Occurrence>& o) {
  return o ? to_json(*o) : json(nullptr);
}

// Which (alpha, beta)-extremal family covers a given beta. The families'
// intervals [alpha, beta] tile [2+, 8/3].
char level_for(const ExtReal& beta) {
  struct Span {
    char level;
    ExtReal lo, hi;
  };
  const Span spans[] = {
      {'a', ExtReal::above(2), ExtReal::exact(Rational(7, 3))},
      {'b', ExtReal::above(Rational(7, 3)), ExtReal::exact(Rational(17, 7))},
      {'c', ExtReal::above(Rational(17, 7)), ExtReal::exact(Rational(5, 2))},
      {'d', ExtReal::above(Rational(5, 2)), ExtReal::exact(Rational(18, 7))},
      {'e', ExtReal::above(Rational(18, 7)), ExtReal::exact(Rational(8, 3))},
  };
  for (const auto& s : spans) {
    if (s.lo <= beta && beta <= s.hi) return s.level;
  }
  throw PreconditionError("no construction for beta=" + beta.str() +
                          "; supported range is 2+ <= beta <= 8/3");
}

void do_construct(const Options& o, std::ostream& out) {
  Word w;
  std::string how;
  if (o.beta.empty()) {
    const auto cls = classify_length(o.length);
    if (cls.tag == LengthClassTag::not_in_set) {
      throw PreconditionError("no extremal overlap-free binary word of length " +
                              std::to_string(o.length));
    }
    w = construct_extremal(o.length);
    how = to_string(cls);
  } else {
    const char lv = level_for(ExtReal::parse(o.beta));
    w = construct_level_at_least(lv, o.length);
    how = std::string("level-") + lv;
  }
  if (machine(o)) {
    out << json{{"word", w.str()}, {"length", w.size()}, {"construction", how}}.dump() << '\n';
  } else {
    out << w << '\n';
  }
}

void do_check(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.word, infer_alphabet(o.word, o.alphabet));
  const ExtReal beta = ExtReal::parse(o.beta);
  const std::optional<ExtReal> alpha =
      o.alpha.empty() ? std::nullopt : std::optional(ExtReal::parse(o.alpha));
  const ExtReal freeness = alpha.value_or(beta);
  if (alpha && beta < *alpha) throw PreconditionError("--alpha must not exceed --beta");

  const auto witness = find_repetition(w, freeness);
  const auto free_ext = witness ? std::nullopt : first_free_extension(w, beta);
  const bool extremal = !witness && !free_ext;
  const std::string kind = alpha ? "pair-extremal" : "extremal";

  if (machine(o)) {
    json j = {{"word", w.str()},
              {"beta", beta.str()},
              {"free", !witness},
              {"witness", occurrence_json(witness)},
              {kind, extremal}};
    if (alpha) j["alpha"] = alpha->str();
    if (free_ext) {
      j["free_extension"] = {{"position", free_ext->position},
                             {"letter", free_ext->letter},
                             {"side", to_string(free_ext->side)},
                             {"word", free_ext->word.str()}};
    }
    out << j.dump() << '\n';
    return;
  }
  out << freeness.str() << "-free: " << (witness ? "false" : "true") << '\n';
  if (witness) out << "witness: " << *witness << '\n';
  out << kind << ": " << (extremal ? "true" : "false") << '\n';
  if (free_ext) {
    out << "free extension: " << free_ext->word << " (" << to_string(free_ext->side)
        << ", letter " << int(free_ext->letter) << " at " << free_ext->position << ")\n";
  }
}

void do_search(const Options& o, std::ostream& out) {
  const auto found = search_extremal_lengths(o.alphabet, ExtReal::parse(o.beta), o.max, o.cap);
  for (const auto& [n, w] : found) {
    if (machine(o)) {
      out << json{{"length", n}, {"witness", w ? json(w->str()) : json(nullptr)}}.dump() << '\n';
    } else if (w) {
      out << n << ' ' << *w << '\n';
    }
  }
}

void do_enumerate(const Options& o, std::ostream& out) {
  const ExtReal beta = ExtReal::parse(o.beta);
  if (o.count_only) {
    const auto n = count_beta_free(o.alphabet, beta, o.length);
    if (machine(o)) {
      out << json{{"length", o.length}, {"count", n}}.dump() << '\n';
    } else {
      out << n << '\n';
    }
    return;
  }
  for (const auto& w : enumerate_beta_free(o.alphabet, beta, o.length)) {
    if (machine(o)) {
      out << json{{"word", w.str()}}.dump() << '\n';
    } else {
      out << w << '\n';
    }
  }
}

void do_factorize(const Options& o, std::ostream& out) {
  for (const auto& f : restivo_salemi_factorizations(bin(o.word))) {
    if (machine(o)) {
      out << json{{"u", f.u.str()}, {"y", f.y.str()}, {"v", f.v.str()}}.dump() << '\n';
    } else {
      auto show = [](const Word& w) { return w.empty() ? std::string("ε") : w.str(); };
      out << "u=" << show(f.u) << " y=" << show(f.y) << " v=" << show(f.v) << '\n';
    }
  }
}

void do_squares(const Options& o, std::ostream& out) {
  const auto squares = overlap_free_squares(o.max_len);
  std::vector<Word> sorted(squares.begin(), squares.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& w : sorted) {
    if (machine(o)) {
      out << json{{"word", w.str()}, {"length", w.size()}}.dump() << '\n';
    } else {
      out << w << '\n';
    }
  }
}

bool do_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& id : check_ids()) out << id << '\n';
    return true;
  }
  std::vector<Report> reports;
  if (o.check_id.empty()) {
    reports = verify_all();
  } else {
    reports.push_back(verify(o.check_id));
  }
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (machine(o)) {
      out << to_json(r, false).dump() << '\n';
    } else {
      write_human(out, r);
    }
  }
  if (!machine(o) && reports.size() > 1) {
    out << (ok ? "ALL PASS" : "FAILURES") << " (" << reports.size() << " checks)\n";
  }
  return ok;
}

}  // namespace

Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify extremal power-free binary words", "extremal"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "human or machine (one JSON record per line)")
      ->check(CLI::IsMember({"human", "machine"}));

  auto* construct = app.add_subcommand("construct", "extremal word of a given length");
  construct->add_option("--length", o.length, "word length (minimum length with --beta)")
      ->required();
  construct->add_option("--beta", o.beta, "construct an extremal beta-free word, 2+ <= beta <= 8/3");

  auto* check = app.add_subcommand("check", "beta-freeness and extremality of a word");
  check->add_option("--word", o.word, "the word, one digit per letter")->required();
  check->add_option("--beta", o.beta, "threshold, e.g. 2+, 7/3, 17/7+")->required();
  check->add_option("--alpha", o.alpha, "check (alpha,beta)-extremality instead");
  check->add_option("--alphabet", o.alphabet, "alphabet size (default: inferred)")
      ->check(CLI::Range(2, 3));

  auto* search = app.add_subcommand("search", "least extremal word at each length");
  search->add_option("--alphabet", o.alphabet)->required()->check(CLI::Range(2, 3));
  search->add_option("--beta", o.beta)->required();
  search->add_option("--max", o.max, "largest length searched")->required();
  search->add_option("--cap", o.cap, "refuse when more beta-free words of one length exist");

  auto* enumerate = app.add_subcommand("enumerate", "all beta-free words of a length");
  enumerate->add_option("--alphabet", o.alphabet)->required()->check(CLI::Range(2, 3));
  enumerate->add_option("--beta", o.beta)->required();
  enumerate->add_option("--length", o.length)->required();
  enumerate->add_flag("--count-only", o.count_only);

  auto* factorize = app.add_subcommand("factorize", "x = u mu(y) v factorizations");
  factorize->add_option("--word", o.word)->required();

  auto* squares = app.add_subcommand("squares", "overlap-free binary squares");
  squares->add_option("--max-len", o.max_len)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--check", o.check_id, "run a single check");
  verify_cmd->add_flag("--list", o.list, "list check ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Status::success;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Status::usage_error;
  }

  try {
    if (*construct) {
      do_construct(o, out);
    } else if (*check) {
      do_check(o, out);
    } else if (*search) {
      do_search(o, out);
    } else if (*enumerate) {
      do_enumerate(o, out);
    } else if (*factorize) {
      do_factorize(o, out);
    } else if (*squares) {
      do_squares(o, out);
    } else if (*verify_cmd) {
      if (!do_verify(o, out)) return Status::domain_error;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Status::usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return Status::domain_error;
  }
  return Status::success;
}

}  // namespace extremal::cli
