#pragma once

// Shared randomized-test helpers.

#include <optional>
#include <random>
#include <string>

#include "fim/cutpaste.hpp"
#include "fim/element.hpp"
#include "fim/rataut.hpp"

namespace fim::test {

inline MonoWord random_mono_word(std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> bit(0, 1);
  MonoWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(bit(rng) ? 'a' : 'A');
  return w;
}

inline std::string random_gen_word(std::mt19937& rng, int alphabet, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    char c = static_cast<char>('a' + letter(rng));
    w.push_back(bit(rng) ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return w;
}

/// Random valid triple with norm <= maxnorm.
inline Element random_element(std::mt19937& rng, std::int64_t maxnorm) {
  std::uniform_int_distribution<std::int64_t> nd(0, maxnorm);
  std::int64_t n = nd(rng);
  std::uniform_int_distribution<std::int64_t> ld(-n, 0);
  std::int64_t lam = ld(rng);
  std::int64_t rho = lam + n;
  if (rho < 0) rho = 0;
  std::uniform_int_distribution<std::int64_t> pd(lam, rho);
  return make_element(lam, pd(rng), rho);
}

/// Random trimmed nonempty automaton with at most maxq states.
inline Automaton random_automaton(std::mt19937& rng, int maxq) {
  std::uniform_int_distribution<int> qd(1, maxq);
  std::uniform_int_distribution<int> bit(0, 1);
  for (;;) {
    Automaton a;
    a.states = qd(rng);
    std::uniform_int_distribution<int> sd(0, a.states - 1);
    std::uniform_int_distribution<int> ed(1, 2 * a.states);
    int m = ed(rng);
    for (int i = 0; i < m; ++i)
      a.edges.emplace_back(sd(rng), bit(rng) ? 1 : -1, sd(rng));
    a.initial = {sd(rng)};
    a.terminal = {sd(rng)};
    if (bit(rng)) a.terminal.push_back(sd(rng));
    Automaton t = trim(a);
    if (t.states > 0) return t;
  }
}

/// Random automaton whose harmonized (with inverse) constants satisfy
/// n' <= cap; regenerates until found.
inline Automaton random_automaton_small_constants(std::mt19937& rng, int maxq,
                                                  std::int64_t cap,
                                                  Constants* out = nullptr) {
  for (;;) {
    Automaton a = random_automaton(rng, maxq);
    try {
      Constants c = harmonize(
          {constants(a, cap * 100), constants(trim(inverse_automaton(a)), cap * 100)});
      if (c.nprime > cap) continue;
      if (out) *out = c;
      return a;
    } catch (const constant_overflow&) {
      continue;
    }
  }
}

/// Random element of G_{threshold,i} with norm <= maxnorm (requires
/// maxnorm >= threshold).
inline Element random_in_G(std::mt19937& rng, std::int64_t threshold, int i,
                           std::int64_t maxnorm) {
  std::uniform_int_distribution<std::int64_t> d(0, maxnorm);
  for (;;) {
    std::int64_t lam, pi, rho;
    switch (i) {
      case 1:  // pi >= 0, lambda <= -threshold
        lam = -threshold - d(rng) % (maxnorm - threshold + 1);
        rho = lam + std::max(threshold, d(rng) % (maxnorm + 1));
        if (rho < 0) continue;
        pi = d(rng) % (rho + 1);
        break;
      case 2:  // pi >= threshold
        pi = threshold + d(rng) % (maxnorm - threshold + 1);
        rho = pi + d(rng) % (maxnorm - pi + 1);
        lam = rho - maxnorm <= 0 ? -(d(rng) % (maxnorm - rho + 1)) : 0;
        break;
      default:  // pi >= 0, rho - pi >= threshold
        pi = d(rng) % (maxnorm - threshold + 1);
        rho = pi + threshold + d(rng) % (maxnorm - pi - threshold + 1);
        lam = rho - maxnorm <= 0 ? -(d(rng) % (maxnorm - rho + 1)) : 0;
        break;
    }
    Element u{lam, pi, rho};
    if (valid(u) && norm(u) <= maxnorm && in_G(u, threshold, i)) return u;
  }
}

/// Random small expression over the CLI grammar.
inline std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 0);
  switch (kind(rng)) {
    case 1: return "(" + random_expr(rng, depth - 1) + "|" +
                   random_expr(rng, depth - 1) + ")";
    case 2: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 3: return "(" + random_expr(rng, depth - 1) + ")*";
    default: {
      static const char* lits[] = {"a", "A", "1", "aA", "Aa", "aa"};
      std::uniform_int_distribution<int> l(0, 5);
      return lits[l(rng)];
    }
  }
}

}  // namespace fim::test
