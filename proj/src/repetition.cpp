#include "extremal/repetition.hpp"

#include <vector>

namespace extremal {

namespace {

std::uint64_t to_u64(const Rational::Int& v) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw PreconditionError("threshold component too large: " + v.str());
  }
  return static_cast<std::uint64_t>(v);
}

void require_above_one(const ExtReal& beta) {
  if (beta.value <= Rational(1)) {
    throw PreconditionError("beta must exceed 1, got " + beta.str());
  }
}

std::optional<Occurrence> leftmost(std::span<const Letter> w, const Threshold& t,
                                   std::size_t p_max) {
  const std::size_t n = w.size();
  std::optional<Occurrence> best;
  std::size_t best_start = n;  // exclusive bound on starts still worth scanning
  for (std::size_t p = 1; p < n && p <= p_max; ++p) {
    const std::size_t need = t.min_length(p);
    if (need > n) break;  // min_length grows with p
    const std::size_t need_run = need - p;
    // Maximal runs of j with w[j] == w[j+p]; run [a, a+len) gives the
    // factor [a, a+len+p) with period p.
    std::size_t run_start = 0;
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      if (run == 0 && j >= best_start) break;
      if (w[j] == w[j + p]) {
        if (run++ == 0) run_start = j;
        continue;
      }
      if (run >= need_run && run_start < best_start) {
        best_start = run_start;
        best = Occurrence{run_start, run + p, p, Rational(static_cast<long long>(run + p), p)};
      }
      run = 0;
    }
    if (run >= need_run && run > 0 && run_start < best_start) {
      best_start = run_start;
      best = Occurrence{run_start, run + p, p, Rational(static_cast<long long>(run + p), p)};
    }
  }
  return best;
}

}  // namespace

Threshold::Threshold(const ExtReal& beta)
    : num_(to_u64(beta.value.numerator())),
      den_(to_u64(beta.value.denominator())),
      plus_(beta.plus) {
  require_above_one(beta);
}

std::size_t Threshold::min_length(std::size_t period) const {
  auto q = static_cast<unsigned __int128>(period) * num_;
  auto l = q / den_;
  if (plus_ || q % den_ == 0) {
    return static_cast<std::size_t>(plus_ ? l + 1 : l);
  }
  return static_cast<std::size_t>(l + 1);
}

std::size_t minimal_period(const Word& w) {
  if (w.empty()) throw PreconditionError("minimal_period of the empty word");
  // Failure function: the longest proper border has length n - period.
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return n - border[n];
}

Rational exponent(const Word& w) {
  if (w.empty()) throw PreconditionError("exponent of the empty word");
  return Rational(static_cast<long long>(w.size()), minimal_period(w));
}

std::optional<Occurrence> find_repetition(const Word& w, const ExtReal& beta) {
  return leftmost(w.letters(), Threshold(beta), std::numeric_limits<std::size_t>::max());
}

std::optional<Occurrence> find_repetition_bounded(const Word& w, const ExtReal& beta,
                                                  std::size_t p_max) {
  if (p_max < 1) throw PreconditionError("p_max must be at least 1");
  return leftmost(w.letters(), Threshold(beta), p_max);
}

bool is_beta_free(const Word& w, const ExtReal& beta) {
  return !has_repetition(w.letters(), Threshold(beta));
}

bool is_overlap_free(const Word& w) { return is_beta_free(w, ExtReal::above(2)); }

bool is_square_free(const Word& w) { return is_beta_free(w, ExtReal::exact(2)); }

bool has_repetition(std::span<const Letter> w, const Threshold& t, std::size_t p_max) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n && p <= p_max; ++p) {
    const std::size_t need = t.min_length(p);
    if (need > n) return false;
    const std::size_t need_run = need - p;
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      if (w[j] == w[j + p]) {
        if (++run >= need_run) return true;
      } else {
        run = 0;
      }
    }
  }
  return false;
}

bool has_suffix_repetition(std::span<const Letter> w, const Threshold& t) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t need = t.min_length(p);
    if (need > n) return false;
    std::size_t len = p;
    for (std::size_t j = n - p; j-- > 0 && w[j] == w[j + p];) {
      if (++len >= need) return true;
    }
  }
  return false;
}

}  // namespace extremal
