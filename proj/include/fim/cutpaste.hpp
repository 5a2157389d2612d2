#pragma once

// Cut-and-paste constants (n, n') for a rational subset L of F: membership
// in L is invariant under the surgery xi_{n,i} on all of G_{n',i}. Three
// cases by the shape of pi(L); constants can be harmonized across several
// subsets and adjusted to meet divisibility / size side conditions.

#include <cstdint>
#include <string>
#include <vector>

#include "fim/checked.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/membership.hpp"
#include "fim/rataut.hpp"

namespace fim {

struct Constants {
  std::int64_t n = 1;
  std::int64_t nprime = 1;  // always >= n
  int sign_case = 1;        // 1, 2 or 3
  // metadata
  std::int64_t m = 0;                     // trimmed state count
  std::vector<std::int64_t> lcm_inputs;   // Case 3: the loop weights
  std::int64_t r = 0;                     // Case 3: norm bound of pumped loops
};

/// Default ceiling on n' before enumeration is refused. Ball sweeps cost
/// roughly n'^3 states per automaton state; past this they are hopeless.
inline constexpr std::int64_t kDefaultCeiling = 1'000'000'000;

/// Constants of the cut-and-paste lemma for L(A). The automaton is trimmed
/// internally (callers may also shrink it by any language-preserving
/// reduction first; the constants only get smaller).
inline Constants constants(const Automaton& a0,
                           std::int64_t ceiling = kDefaultCeiling) {
  Automaton a = trim(a0);
  if (a.states == 0)
    throw precondition_error("constants: empty language has no constants");
  Constants c;
  c.m = a.states;
  SemilinearSet s = pi_image(a);
  c.sign_case = sign_case(s);
  switch (c.sign_case) {
    case 1:
      c.n = checked_mul(2, c.m);
      c.nprime = checked_mul(4, c.m);
      break;
    case 2: {
      std::int64_t fact = 1;
      for (std::int64_t i = 2; i <= c.m; ++i) {
        fact = checked_mul(fact, i);
        if (fact > ceiling)
          throw constant_overflow("constants: n = m! with m = " +
                                  std::to_string(c.m) +
                                  " exceeds the ceiling; refusing to enumerate");
      }
      c.n = fact;
      c.nprime = checked_mul(checked_add(c.m, 3), fact);
      break;
    }
    case 3: {
      LoopWitnesses lw = loop_states(a);
      std::vector<std::pair<MonoWord, int>> loops;  // (word, sign)
      for (int p = 0; p < a.states; ++p) {
        if (lw.positive[p]) loops.emplace_back(*lw.positive[p], +1);
        if (lw.negative[p]) loops.emplace_back(*lw.negative[p], -1);
      }
      c.n = 1;
      for (auto& [w, sg] : loops) {
        std::int64_t weight = eval_word(w).pi;
        std::int64_t mag = weight < 0 ? -weight : weight;
        c.lcm_inputs.push_back(mag);
        c.n = lcm64(c.n, mag);
        if (c.n > ceiling)
          throw constant_overflow("constants: lcm of loop weights exceeds ceiling");
      }
      c.r = c.m;
      for (auto& [w, sg] : loops) {
        Element e = eval_word(w);
        std::int64_t mag = e.pi < 0 ? -e.pi : e.pi;
        Element z = power(e, c.n / mag);  // z_pi = +-n
        c.r = std::max(c.r, norm(z));
      }
      std::int64_t m4 = checked_mul(checked_mul(c.m, c.m), checked_mul(c.m, c.m));
      c.nprime = checked_mul(2, checked_add(checked_mul(m4, c.n), c.r));
      break;
    }
  }
  if (c.nprime > ceiling)
    throw constant_overflow("constants: n' = " + std::to_string(c.nprime) +
                            " exceeds the ceiling; refusing to enumerate");
  return c;
}

/// Common constants valid for several subsets at once: n = lcm of the n_i
/// (each subset's constant is scaled by an integer factor), n' = max + n.
inline Constants harmonize(const std::vector<Constants>& cs) {
  if (cs.empty()) throw precondition_error("harmonize: empty list");
  Constants out;
  out.n = 1;
  std::int64_t maxp = 0;
  for (const Constants& c : cs) {
    out.n = lcm64(out.n, c.n);
    maxp = std::max(maxp, c.nprime);
    out.m = std::max(out.m, c.m);
    out.sign_case = std::max(out.sign_case, c.sign_case);
  }
  out.nprime = checked_add(maxp, out.n);
  return out;
}

struct AdjustRequirements {
  std::int64_t divisor = 1;      // require divisor | n
  std::int64_t min_nprime = 0;   // require n' at least this large
};

/// Scale (n, n') so that `divisor` divides n and n' clears `min_nprime`.
/// The scaling factor k is forced to be at least 2 even when the divisor
/// already divides n (the k = 1 case of the rescaling lemma is not relied
/// upon); then n' = max(min_nprime, n') + n.
inline Constants adjust(Constants c, const AdjustRequirements& req) {
  if (req.divisor < 1) throw precondition_error("adjust: divisor must be >= 1");
  std::int64_t nn = lcm64(c.n, req.divisor);
  if (nn == c.n) nn = checked_mul(nn, 2);
  c.n = nn;
  c.nprime = checked_add(std::max(req.min_nprime, c.nprime), c.n);
  return c;
}

}  // namespace fim
